use thiserror::Error;

/// Errors raised by the rod-set algebra.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("rod length must be at least 1 (position {pos})")]
    ZeroLength { pos: usize },

    #[error("rod count must be at least 1 (position {pos})")]
    ZeroCount { pos: usize },

    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("constant term must be +1 or -1 to invert a series, found {0}")]
    NonUnitConstant(String),

    #[error("sequence must start with 1 at index 0")]
    BadInitialTerm,

    #[error("sequence has {available} terms but {needed} are required")]
    HorizonExceeded { needed: usize, available: usize },

    #[error("enumeration exceeded the cap of {cap} trains")]
    CapExceeded { cap: usize },

    #[error("rod set must be nonempty")]
    EmptyRodSet,

    #[error("rod set has shape of size {0}, expected 2")]
    NotTwoShape(usize),

    #[error("invalid argument: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
