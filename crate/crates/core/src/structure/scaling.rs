//! Scans for expansions of a rod set into one- and two-length shapes.
//!
//! `R` expands to `[a^m]` exactly when `F(a - i, R) = 0` for `1 ≤ i < max R`
//! and `m = F(a, R) ≠ 0`. It expands to `[a^α, b^β]` exactly when the counts
//! scale by `α` at `(b - a, b)`: `F(b - i) = α·F(b - a - i)` for `1 ≤ i < max R`,
//! and then `β = F(b) - α·F(b - a)`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::counts::finite_train_counts;
use crate::error::{Error, Result};
use crate::expansion::finite_quotient;
use crate::rodset::RodSet;

/// A verified expansion of `R` into `S = [a^mult_a]` or `S = [a^mult_a, b^mult_b]` via `Q`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScalingHit {
    pub a: usize,
    /// Equal to `a` for a one-length shape.
    pub b: usize,
    pub alpha: BigInt,
    pub mult_a: BigInt,
    pub mult_b: BigInt,
    pub s: RodSet,
    pub q: RodSet,
}

/// `F(n)`, zero for negative `n`.
fn at(f: &[BigInt], n: isize) -> BigInt {
    usize::try_from(n).map(|n| f[n].clone()).unwrap_or_default()
}

/// All `a ≤ bound` with `R →Q [a^F(a)]`, excluding `S = R`.
pub fn scan_one_expansions(r: &RodSet, bound: usize) -> Result<Vec<ScalingHit>> {
    let m = r.max_len().ok_or(Error::EmptyRodSet)?;
    let f = finite_train_counts(r, bound);
    let mut hits = Vec::new();
    for a in 1..=bound {
        let mult = &f[a];
        if mult.is_zero() || (1..m).any(|i| !at(&f, a as isize - i as isize).is_zero()) {
            continue;
        }
        let s = RodSet::from_pairs([(a, mult.clone())]);
        if s == *r {
            continue;
        }
        let Some(q) = finite_quotient(r, &s) else {
            debug_assert!(false, "window test passed but {r} does not expand to {s}");
            continue;
        };
        hits.push(ScalingHit {
            a,
            b: a,
            alpha: mult.clone(),
            mult_a: mult.clone(),
            mult_b: BigInt::zero(),
            s,
            q,
        });
    }
    Ok(hits)
}

/// The scaling test at `(b - a, b)` on precomputed counts `f` (at least through `b`).
pub fn scaling_at(r: &RodSet, f: &[BigInt], a: usize, b: usize) -> Option<ScalingHit> {
    let m = r.max_len()?;
    if a == 0 || a >= b || m < 2 {
        return None;
    }
    let c = (b - a) as isize;
    let b_i = b as isize;
    let pivot = (1..m as isize).rev().find(|&i| !at(f, c - i).is_zero())?;
    let (alpha, rem) = at(f, b_i - pivot).div_rem(&at(f, c - pivot));
    if !rem.is_zero() || alpha.is_zero() {
        return None;
    }
    if (1..m as isize).any(|i| at(f, b_i - i) != &alpha * at(f, c - i)) {
        return None;
    }
    let mult_b = &f[b] - &alpha * &f[b - a];
    if mult_b.is_zero() {
        return None;
    }
    let s = RodSet::from_pairs([(a, alpha.clone()), (b, mult_b.clone())]);
    if s == *r {
        return None;
    }
    let q = finite_quotient(r, &s);
    debug_assert!(q.is_some(), "scaling passed but {r} does not expand to {s}");
    Some(ScalingHit {
        a,
        b,
        mult_a: alpha.clone(),
        alpha,
        mult_b,
        s,
        q: q?,
    })
}

/// All two-length expansions `R →Q [a^α, b^β]` with `a < b ≤ bound`, ordered by `(b, a)`.
///
/// `S = R` itself is not reported.
pub fn scan_two_expansions(r: &RodSet, bound: usize) -> Result<Vec<ScalingHit>> {
    match r.max_len() {
        None => return Err(Error::EmptyRodSet),
        Some(1) => return Err(Error::Invalid("two-length scan needs max R >= 2".into())),
        _ => {}
    }
    let f = finite_train_counts(r, bound);
    Ok((2..=bound)
        .flat_map(|b| (1..b).map(move |a| (a, b)))
        .filter_map(|(a, b)| scaling_at(r, &f, a, b))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(s: &str) -> RodSet {
        s.parse().unwrap()
    }

    fn shapes(hits: &[ScalingHit]) -> Vec<String> {
        hits.iter().map(|h| h.s.to_string()).collect()
    }

    #[test]
    fn one_length_hits() {
        let hits = scan_one_expansions(&rs("[-1^2,-2^2]"), 8).unwrap();
        let found: Vec<(usize, BigInt)> = hits.iter().map(|h| (h.a, h.mult_a.clone())).collect();
        assert!(found.contains(&(4, BigInt::from(-4))));
        assert!(found.contains(&(8, BigInt::from(16))));
        let hits = scan_one_expansions(&rs("[1,-2]"), 7).unwrap();
        assert_eq!(shapes(&hits), ["[-3]", "[6]"]);
        assert_eq!(hits[1].q, rs("[1,-3,-4]"));
        assert!(scan_one_expansions(&rs("[1,2]"), 20).unwrap().is_empty());
    }

    #[test]
    fn one_length_with_unit_max() {
        // max R = 1: every a qualifies; [a] is reached from [1] via [1,...,a-1]
        let hits = scan_one_expansions(&rs("[1]"), 4).unwrap();
        assert_eq!(shapes(&hits), ["[2]", "[3]", "[4]"]);
        assert_eq!(hits[1].q, rs("[1,2]"));
    }

    #[test]
    fn two_three_scan() {
        let hits = scan_two_expansions(&rs("[2,3]"), 16).unwrap();
        assert_eq!(shapes(&hits), ["[1,5]", "[2^2,-7]", "[3^2,7]", "[4^3,13]", "[5^4,14]", "[7^7,16^2]"]);
        assert_eq!(hits[0].q, rs("[-1,2]"));
        assert_eq!(hits[3].q, rs("[2,3,-4^2,5^2,-6,8,-9,10]"));
    }

    #[test]
    fn selected_hits() {
        let hits = scan_two_expansions(&rs("[1,2]"), 12).unwrap();
        let h = hits.iter().find(|h| (h.a, h.b) == (8, 12)).unwrap();
        assert_eq!(h.alpha, BigInt::from(48));
        assert_eq!(h.s, rs("[8^48,-12^7]"));
        let hits = scan_two_expansions(&rs("[1,-4]"), 13).unwrap();
        let h = hits.iter().find(|h| (h.a, h.b) == (6, 13)).unwrap();
        assert_eq!((h.s.clone(), h.q.clone()), (rs("[-6^3,-13]"), rs("[1,2,3,-5,6,9]")));
    }

    #[test]
    fn scan_rejects_degenerate_input() {
        assert!(scan_two_expansions(&rs("[]"), 5).is_err());
        assert!(scan_two_expansions(&rs("[1^2]"), 5).is_err());
    }
}
