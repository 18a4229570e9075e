//! Exact arithmetic for signed rod sets and their net train counts.
//!
//! A rod set `R` assigns a signed multiplicity to each positive length. Its
//! net train count `F(n, R)` is the signed number of ordered sequences of
//! rods with total length `n`, and satisfies
//! `F(n) = Σ C(ℓ, R)·F(n - ℓ)` with `F(0) = 1`. The crate computes these
//! counts, relates rod sets through expansions `R →Q S` characterised by
//! `(1 - C(x,S)) = (1 - C(x,R))(1 + C(x,Q))`, and detects periodicity and
//! two-term recursions.

pub mod counts;
pub mod error;
pub mod expansion;
pub mod json;
pub mod rodset;
pub mod series;
pub mod structure;

pub use counts::{
    binomial_count, discrepancies, enumerate_net_counts, enumerate_trains, finite_train_counts,
    sequence_discrepancies, train_counts, ColoredRod, CountSeq, Enumeration, RodSource, Train,
    DEFAULT_CAP,
};
pub use error::{Error, Result};
pub use expansion::{
    check_identity, compose, dual, expand, expand_minimal, finite_quotient, rodset_from_counts,
    solve_q, solve_r, Dual, Expansion, Finiteness,
};
pub use json::ToJson;
pub use rodset::{format_rodset, parse_rodset, parse_rodset_lines, Rod, RodSet, ShapeReport, Sign};
pub use series::{
    char_poly, cyclotomic, poly_divexact, poly_mul, rod_poly, series_inverse, totient, Poly,
    TruncatedSeries,
};
pub use structure::{
    borwein_classify, detect_period, lucas_check, lucas_two_shapes, scan_one_expansions,
    scan_two_expansions, PeriodReport, ScalingHit, ShapeKind,
};
