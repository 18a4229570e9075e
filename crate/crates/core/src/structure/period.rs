//! Exact periodicity of net train counts.
//!
//! `F(·, R)` is periodic from `n = 0` exactly when `1 - C(x, R)` is a product
//! of distinct cyclotomic polynomials (up to sign); the least period is the lcm
//! of their indices.

use num_integer::Integer;
use num_traits::{One, Signed};

use crate::counts::finite_train_counts;
use crate::error::{Error, Result};
use crate::expansion::finite_quotient;
use crate::rodset::RodSet;
use crate::series::{char_poly, cyclotomic, totient};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PeriodReport {
    pub periodic: bool,
    pub least_period: Option<usize>,
    /// Indices `d` of the cyclotomic factors `Φ_d`, ascending.
    pub cyclotomic_factors: Vec<usize>,
    /// The finite `Q` with `R →Q [p]`.
    pub q_to_period: Option<RodSet>,
    /// The window scan over the counts agreed with the algebraic verdict.
    pub window_confirmed: bool,
}

/// Largest `d` that can satisfy `φ(d) ≤ m`, using `φ(d) ≥ √(d/2)`.
pub fn cyclotomic_bound(m: usize) -> usize {
    2 * m * m
}

/// Smallest `p ≥ 1` with `F(p..p+max R) = F(0..max R)`, searching `p + max R ≤ horizon + 1`.
///
/// A match repeats the whole initial window, so the counts are periodic with period `p`.
pub fn window_period(r: &RodSet, horizon: usize) -> Option<usize> {
    let m = r.max_len()?;
    let f = finite_train_counts(r, horizon);
    (1..=(horizon + 1).checked_sub(m)?).find(|&p| f[p..p + m] == f[..m])
}

pub fn detect_period(r: &RodSet) -> Result<PeriodReport> {
    let m = r.max_len().ok_or(Error::EmptyRodSet)?;
    let mut rest = char_poly(r);
    let mut factors = Vec::new();
    for d in 1..=cyclotomic_bound(m) {
        let deg = rest.degree().unwrap_or(0);
        if deg == 0 {
            break;
        }
        let phi = totient(d);
        if phi > deg {
            continue;
        }
        if let Some(q) = rest.div_exact(&cyclotomic(d))? {
            rest = q;
            factors.push(d);
        }
    }
    let periodic = rest.degree() == Some(0) && rest.coeff(0).abs().is_one();
    if !periodic {
        // a period would make the window repeat within 3·bound terms
        let horizon = 3 * cyclotomic_bound(m) + m;
        return Ok(PeriodReport {
            periodic,
            least_period: None,
            cyclotomic_factors: factors,
            q_to_period: None,
            window_confirmed: window_period(r, horizon).is_none(),
        });
    }
    let p = factors.iter().fold(1usize, |acc, d| acc.lcm(d));
    let f = finite_train_counts(r, 3 * p);
    let repeats = (0..=2 * p).all(|n| f[n] == f[n + p]);
    let window_confirmed = repeats && window_period(r, 3 * p) == Some(p);
    let target = RodSet::from_pairs([(p, 1)]);
    Ok(PeriodReport {
        periodic,
        least_period: Some(p),
        cyclotomic_factors: factors,
        q_to_period: finite_quotient(r, &target),
        window_confirmed,
    })
}
