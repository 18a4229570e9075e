//! Expansions `R →Q S`, where `S ≡ R ∪ -Q ∪ QR`.
//!
//! Given any two of `R`, `Q`, `S` the third is determined. The rod counts of
//! `Q` are the discrepancies `D(n, R, S)`, and the whole relation is the
//! polynomial identity `(1 - C(x,S)) = (1 - C(x,R))(1 + C(x,Q))`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::counts::{
    counts_from_rods, discrepancy_values, finite_train_counts, train_counts, CountSeq, RodSource,
};
use crate::error::{Error, Result};
use crate::rodset::RodSet;
use crate::series::{augment_poly, char_poly, rodset_from_augment_poly, series_mul};

/// Whether a rod source has finitely many rods.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Finiteness {
    Finite,
    Infinite,
    /// Not decidable from the data; `trailing_zeros` zero counts end the computed prefix.
    Undecided { trailing_zeros: usize },
}

impl Finiteness {
    /// `Some(true)`, `Some(false)`, or `None` when undecided.
    pub fn as_bool(&self) -> Option<bool> {
        match self {
            Finiteness::Finite => Some(true),
            Finiteness::Infinite => Some(false),
            Finiteness::Undecided { .. } => None,
        }
    }
}

impl RodSource {
    pub fn finiteness(&self) -> Finiteness {
        match self {
            RodSource::Finite(_) => Finiteness::Finite,
            RodSource::Arithmetic { .. } => Finiteness::Infinite,
            // F(n, base) is eventually zero only for the empty base
            RodSource::TrainsOf { base, .. } if base.is_empty() => Finiteness::Finite,
            RodSource::TrainsOf { .. } => Finiteness::Infinite,
            RodSource::Counts(seq) => Finiteness::Undecided {
                trailing_zeros: seq.trailing_zeros(),
            },
        }
    }
}

/// A verified triple `R →Q S` up to `horizon`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Expansion {
    pub r: RodSource,
    pub q: RodSource,
    pub s: RodSource,
    pub horizon: usize,
    pub r_finite: Finiteness,
    pub q_finite: Finiteness,
    pub s_finite: Finiteness,
    /// The generating-function identity held: exactly when all three sets are
    /// finite, modulo `x^(horizon+1)` otherwise.
    pub identity_checked: bool,
}

/// Checks `(1 - C_S) = (1 - C_R)(1 + C_Q)`, exactly for finite sets and through `x^n` otherwise.
pub fn check_identity(r: &RodSource, q: &RodSource, s: &RodSource, n: usize) -> Result<bool> {
    if let (Some(r), Some(q), Some(s)) = (r.as_finite(), q.as_finite(), s.as_finite()) {
        return Ok(char_poly(s) == char_poly(r).mul(&augment_poly(q)));
    }
    let one_minus = |c: Vec<BigInt>| -> Vec<BigInt> {
        c.into_iter()
            .enumerate()
            .map(|(i, v)| if i == 0 { BigInt::one() } else { -v })
            .collect()
    };
    let mut cq = q.counts_upto(n)?;
    cq[0] = BigInt::one();
    let lhs = one_minus(s.counts_upto(n)?);
    let rhs = series_mul(&one_minus(r.counts_upto(n)?), &cq);
    Ok(lhs == rhs)
}

fn build(r: RodSource, q: RodSource, s: RodSource, horizon: usize, q_finite: Finiteness) -> Result<Expansion> {
    let identity_checked = check_identity(&r, &q, &s, horizon)?;
    debug_assert!(identity_checked, "expansion identity failed for {r} -> {q} -> {s}");
    Ok(Expansion {
        r_finite: r.finiteness(),
        s_finite: s.finiteness(),
        r,
        q,
        s,
        horizon,
        q_finite,
        identity_checked,
    })
}

/// `S = R ∪ -Q ∪ QR`.
pub fn expand(r: &RodSet, q: &RodSet, horizon: usize) -> Expansion {
    let s = r.union(&q.negate()).union(&q.concat(r));
    build(r.clone().into(), q.clone().into(), s.into(), horizon, Finiteness::Finite)
        .expect("finite sources never run out of terms")
}

/// The finite `Q` with `R →Q S`, if there is one.
///
/// `h = (1 - C_S)·G_R` satisfies the recursion of `R` beyond `max S`, so it is a
/// polynomial exactly when it vanishes on the `max R` indices ending at `max S`.
/// In that case `h = 1 + C_Q` and `max Q = max S - max R`.
pub fn finite_quotient(r: &RodSet, s: &RodSet) -> Option<RodSet> {
    let Some(max_r) = r.max_len() else {
        return Some(s.negate());
    };
    let max_s = s.max_len().unwrap_or(0);
    let max_q = max_s.checked_sub(max_r)?;
    let f = finite_train_counts(r, max_s);
    let c = RodSource::Finite(s.clone()).counts_upto(max_s).expect("finite");
    let d = discrepancy_values(&f, &c, max_s);
    if d[max_q..].iter().any(|v| !v.is_zero()) {
        return None;
    }
    Some(RodSet::from_counts(&d[..max_q]))
}

/// `1 + C_Q = (1 - C_S) / (1 - C_R)` when all sources have rational generating functions.
fn rational_quotient(r: &RodSource, s: &RodSource) -> Result<Option<Option<RodSet>>> {
    let (Some((nr, dr)), Some((ns, ds))) = (r.rational_gf(), s.rational_gf()) else {
        return Ok(None);
    };
    let num = ds.sub(&ns).mul(&dr);
    let den = ds.mul(&dr.sub(&nr));
    match num.div_exact(&den)? {
        Some(p) => Ok(Some(Some(rodset_from_augment_poly(&p)?))),
        None => Ok(Some(None)),
    }
}

/// Finds `Q` with `R →Q S`: its counts are `D(n, R, S)` for `1 ≤ n ≤ horizon`.
///
/// Finiteness of `Q` is decided exactly when both sources have rational
/// generating functions, and is undecided for explicit count sequences.
pub fn solve_q(r: &RodSource, s: &RodSource, horizon: usize) -> Result<Expansion> {
    if let (Some(rf), Some(sf)) = (r.as_finite(), s.as_finite()) {
        return Ok(match finite_quotient(rf, sf) {
            Some(q) => build(r.clone(), q.into(), s.clone(), horizon, Finiteness::Finite)?,
            None => {
                let f = finite_train_counts(rf, horizon);
                let c = s.counts_upto(horizon)?;
                let q = RodSource::counts(discrepancy_values(&f, &c, horizon));
                build(r.clone(), q, s.clone(), horizon, Finiteness::Infinite)?
            }
        });
    }
    let d = crate::counts::discrepancies(r, s, horizon)?;
    let (q, verdict) = match rational_quotient(r, s)? {
        Some(Some(q)) => {
            debug_assert_eq!(RodSource::Finite(q.clone()).counts_upto(horizon)?[1..], d.values[..]);
            (RodSource::Finite(q), Finiteness::Finite)
        }
        Some(None) => (RodSource::Counts(d), Finiteness::Infinite),
        None => {
            let trailing_zeros = d.trailing_zeros();
            (RodSource::Counts(d), Finiteness::Undecided { trailing_zeros })
        }
    };
    build(r.clone(), q, s.clone(), horizon, verdict)
}

/// Finds `R` with `R →Q S`, via the exchange `-Q →(-R) S`.
pub fn solve_r(q: &RodSource, s: &RodSource, horizon: usize) -> Result<Expansion> {
    let swapped = solve_q(&q.negate(), s, horizon)?;
    let r = swapped.q.negate();
    let r_finite = swapped.q_finite;
    let mut e = build(r, q.clone(), s.clone(), horizon, q.finiteness())?;
    e.r_finite = r_finite;
    Ok(e)
}

/// The dual `Q*`, with `1 + C(x, Q*) = 1 / (1 + C(x, Q))`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dual {
    pub q: RodSource,
    pub dual: RodSource,
    pub horizon: usize,
    pub finite: Finiteness,
    /// `(1 + C_Q)(1 + C_Q*) = 1` held, exactly for a finite dual, through `x^horizon` otherwise.
    pub identity_checked: bool,
}

/// `Q*`: its count at `n` is `F(n, -Q)`.
pub fn dual(q: &RodSource, horizon: usize) -> Result<Dual> {
    let f = train_counts(&q.negate(), horizon)?;
    let counts = CountSeq::new(1, f.values[1..].to_vec());
    let exact = match q.rational_gf() {
        Some((num, den)) => {
            let sum = den.add(&num);
            match den.div_exact(&sum)? {
                Some(p) => Some(Some((rodset_from_augment_poly(&p)?, sum.mul(&p) == den))),
                None => Some(None),
            }
        }
        None => None,
    };
    let (dual, finite, identity_checked) = match exact {
        Some(Some((d, holds))) => (RodSource::Finite(d), Finiteness::Finite, holds),
        other => {
            let mut cq = q.counts_upto(horizon)?;
            cq[0] = BigInt::one();
            let mut cd = f.values.clone();
            cd[0] = BigInt::one();
            let product = series_mul(&cq, &cd);
            let holds = product.iter().enumerate().all(|(i, v)| *v == BigInt::from(u8::from(i == 0)));
            let finite = match other {
                Some(_) => Finiteness::Infinite,
                None => Finiteness::Undecided {
                    trailing_zeros: counts.trailing_zeros(),
                },
            };
            (RodSource::Counts(counts), finite, holds)
        }
    };
    Ok(Dual {
        q: q.clone(),
        dual,
        horizon,
        finite,
        identity_checked,
    })
}

/// `Q_PR ∪ Q_RS ∪ Q_PR·Q_RS`: the set `Q` of the composite `P →Q S` of `P →Q_PR R →Q_RS S`.
pub fn compose(q_pr: &RodSet, q_rs: &RodSet) -> RodSet {
    q_pr.union(q_rs).union(&q_pr.concat(q_rs))
}

/// Rod counts `C(1..=horizon)` of the unique rod set whose train counts begin with `seq`.
pub fn rodset_from_counts(seq: &CountSeq, horizon: usize) -> Result<CountSeq> {
    if seq.start != 0 || !seq.values.first().is_some_and(One::is_one) {
        return Err(Error::BadInitialTerm);
    }
    let available = seq.values.len() - 1;
    if horizon > available {
        return Err(Error::HorizonExceeded { needed: horizon, available });
    }
    let f = &seq.values;
    let mut c: Vec<BigInt> = vec![BigInt::zero()];
    for n in 1..=horizon {
        let mut v = f[n].clone();
        for (len, m) in c.iter().enumerate().take(n).skip(1) {
            if !m.is_zero() {
                v -= m * &f[n - len];
            }
        }
        c.push(v);
    }
    debug_assert_eq!(counts_from_rods(&c, horizon), f[..=horizon]);
    Ok(CountSeq::new(1, c.split_off(1)))
}

/// Expands every rod of minimal length: `Q` is those rods, `S` the result.
pub fn expand_minimal(r: &RodSet) -> Result<(RodSet, RodSet)> {
    let min = r.min_len().ok_or(Error::EmptyRodSet)?;
    let q = r.restrict_to(min);
    let s = r.union(&q.negate()).union(&q.concat(r));
    Ok((q, s))
}
