//! Rod sets `[1^s, 2^t]` and `[-1^s, 2^t]` with `gcd(s, t) = 1`.
//!
//! Their shifted counts `L(n) = F(n - 1)` form a divisibility sequence, and
//! `s | F(n)` exactly for odd `n` when `s > 1`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::counts::finite_train_counts;
use crate::error::{Error, Result};
use crate::expansion::expand_minimal;
use crate::rodset::{RodSet, Sign};
use crate::structure::scaling::{scaling_at, ScalingHit};

pub fn lucas_rodset(s: u64, t: u64, sign: Sign) -> Result<RodSet> {
    if s == 0 || t == 0 {
        return Err(Error::Invalid("s and t must be positive".into()));
    }
    if s.gcd(&t) != 1 {
        return Err(Error::Invalid(format!("gcd({s}, {t}) must be 1")));
    }
    Ok(RodSet::from_pairs([(1, sign.to_bigint() * s), (2, BigInt::from(t))]))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LucasReport {
    pub rodset: RodSet,
    pub horizon: usize,
    /// `F(0..=horizon)`.
    pub counts: Vec<BigInt>,
    pub passed: bool,
    pub counterexample: Option<String>,
}

pub fn lucas_check(s: u64, t: u64, sign: Sign, horizon: usize) -> Result<LucasReport> {
    let r = lucas_rodset(s, t, sign)?;
    let f = finite_train_counts(&r, horizon);
    let mut counterexample = None;
    if s > 1 {
        let s_big = BigInt::from(s);
        counterexample = (0..=horizon)
            .find(|&n| f[n].is_multiple_of(&s_big) != (n % 2 == 1))
            .map(|n| format!("s | F({n}) fails to match the parity of {n}: F({n}) = {}", f[n]));
    }
    if counterexample.is_none() {
        // L(n) = F(n - 1)
        'outer: for n in 1..=horizon + 1 {
            let ln = &f[n - 1];
            for m in (1..n).filter(|m| n % m == 0) {
                let lm = &f[m - 1];
                let divides = if lm.is_zero() { ln.is_zero() } else { ln.is_multiple_of(lm) };
                if !divides {
                    counterexample = Some(format!("L({m}) = {lm} does not divide L({n}) = {ln}"));
                    break 'outer;
                }
            }
        }
    }
    Ok(LucasReport {
        passed: counterexample.is_none(),
        rodset: r,
        horizon,
        counts: f,
        counterexample,
    })
}

/// Which family of two-length shapes to produce.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ShapeKind {
    /// `⟨a, a+1⟩` for `from ≤ a ≤ to`.
    Adjacent { from: usize, to: usize },
    /// `⟨a, a+2⟩` for `from ≤ a ≤ to`; needs `s = 1` or `a` even.
    Skip { from: usize, to: usize },
    /// `⟨kd, (k+1)d⟩` for `1 ≤ k ≤ kmax`; needs `d > 2`.
    Multiple { d: usize, kmax: usize },
}

/// The predicted two-length expansions of a Lucas rod set, each verified by the scaling test.
pub fn lucas_two_shapes(s: u64, t: u64, sign: Sign, kind: ShapeKind) -> Result<Vec<ScalingHit>> {
    let r = lucas_rodset(s, t, sign)?;
    let pairs: Vec<(usize, usize)> = match kind {
        ShapeKind::Adjacent { from, to } => {
            if from == 0 {
                return Err(Error::Invalid("shapes start at a = 1".into()));
            }
            (from..=to).map(|a| (a, a + 1)).collect()
        }
        ShapeKind::Skip { from, to } => {
            if from == 0 {
                return Err(Error::Invalid("shapes start at a = 1".into()));
            }
            if let Some(a) = (from..=to).find(|a| s != 1 && a % 2 == 1) {
                return Err(Error::Invalid(format!("shape <{a},{}> needs s = 1 or a even", a + 2)));
            }
            (from..=to).map(|a| (a, a + 2)).collect()
        }
        ShapeKind::Multiple { d, kmax } => {
            if d <= 2 {
                return Err(Error::Invalid("multiple shapes need d > 2".into()));
            }
            (1..=kmax).map(|k| (k * d, (k + 1) * d)).collect()
        }
    };
    let top = pairs.iter().map(|p| p.1).max().unwrap_or(0);
    let f = finite_train_counts(&r, top);
    let mut hits = Vec::with_capacity(pairs.len());
    for (a, b) in pairs {
        let hit = if (a, b) == (1, 2) {
            // R itself: the scan excludes S = R
            ScalingHit {
                a,
                b,
                alpha: r.count(1),
                mult_a: r.count(1),
                mult_b: r.count(2),
                s: r.clone(),
                q: RodSet::new(),
            }
        } else {
            scaling_at(&r, &f, a, b)
                .ok_or_else(|| Error::Invalid(format!("{r} does not scale at ({}, {b})", b - a)))?
        };
        hits.push(hit);
    }
    if let ShapeKind::Adjacent { .. } = kind {
        check_adjacent(&r, &f, &hits)?;
    }
    Ok(hits)
}

/// Adjacent shapes are `[a^F(a), (a+1)^(t·F(a-1))]`, and `⟨2,3⟩` is the result of
/// expanding the length-1 rods of `R`.
fn check_adjacent(r: &RodSet, f: &[BigInt], hits: &[ScalingHit]) -> Result<()> {
    let t = r.count(2);
    let fail = |what: String| Err(Error::Invalid(format!("adjacent shape check failed: {what}")));
    for h in hits {
        let predicted = RodSet::from_pairs([(h.a, f[h.a].clone()), (h.b, &t * &f[h.a - 1])]);
        if predicted != h.s {
            return fail(format!("{} != {predicted}", h.s));
        }
        if h.a == 2 && expand_minimal(r)?.1 != h.s {
            return fail(format!("expanding the rods of length 1 does not give {}", h.s));
        }
    }
    Ok(())
}
