//! Periodicity, one- and two-length expansion scans, Lucas rod sets and Borwein trinomials.

pub mod borwein;
pub mod lucas;
pub mod period;
pub mod scaling;

pub use borwein::{borwein_classify, class_key, pair_rodset, BorweinFamily, BorweinTable, SignedPair};
pub use lucas::{lucas_check, lucas_rodset, lucas_two_shapes, LucasReport, ShapeKind};
pub use period::{detect_period, window_period, PeriodReport};
pub use scaling::{scan_one_expansions, scan_two_expansions, scaling_at, ScalingHit};
