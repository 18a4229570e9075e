//! Net train counts, discrepancies and the brute-force train enumerator.

use std::fmt;

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::{One, Pow, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::rodset::{RodSet, Sign};
use crate::series::{rod_poly, Poly};

pub(crate) fn write_csv(f: &mut fmt::Formatter<'_>, values: &[BigInt]) -> fmt::Result {
    for (i, v) in values.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{v}")?;
    }
    Ok(())
}

/// An integer sequence indexed from `start` (0 for train counts, 1 for rod counts).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountSeq {
    pub start: usize,
    pub values: Vec<BigInt>,
}

impl CountSeq {
    pub fn new(start: usize, values: Vec<BigInt>) -> CountSeq {
        CountSeq { start, values }
    }

    pub fn from_i64(start: usize, values: &[i64]) -> CountSeq {
        CountSeq::new(start, values.iter().map(|&v| BigInt::from(v)).collect())
    }

    /// Value at index `n`; `None` outside the stored range.
    pub fn get(&self, n: usize) -> Option<&BigInt> {
        n.checked_sub(self.start).and_then(|i| self.values.get(i))
    }

    /// Last stored index, or `None` when empty.
    pub fn last_index(&self) -> Option<usize> {
        (self.start + self.values.len()).checked_sub(1).filter(|_| !self.values.is_empty())
    }

    /// Number of consecutive zeros at the end of the stored values.
    pub fn trailing_zeros(&self) -> usize {
        self.values.iter().rev().take_while(|v| v.is_zero()).count()
    }

    /// The stored rod counts as a rod set (counts past the end are treated as absent).
    pub fn to_rodset(&self) -> RodSet {
        RodSet::from_pairs(
            self.values
                .iter()
                .enumerate()
                .map(|(i, v)| (i + self.start, v.clone()))
                .filter(|(len, _)| *len >= 1),
        )
    }
}

impl fmt::Display for CountSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_csv(f, &self.values)
    }
}

/// A rod set that may be infinite, described procedurally.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RodSource {
    Finite(RodSet),
    /// One rod of each length `first, first + step, ...`, all with sign `sign`.
    Arithmetic { first: usize, step: usize, sign: Sign },
    /// `sign·F(n, base)` rods of each length `n ≥ 1`.
    TrainsOf { base: RodSet, sign: Sign },
    /// Explicit rod counts, starting at length 1.
    Counts(CountSeq),
}

impl From<RodSet> for RodSource {
    fn from(r: RodSet) -> RodSource {
        RodSource::Finite(r)
    }
}

impl RodSource {
    pub fn arithmetic(first: usize, step: usize, sign: Sign) -> Result<RodSource> {
        if first == 0 || step == 0 {
            return Err(Error::Invalid("arithmetic rods need first >= 1 and step >= 1".into()));
        }
        Ok(RodSource::Arithmetic { first, step, sign })
    }

    pub fn counts(values: Vec<BigInt>) -> RodSource {
        RodSource::Counts(CountSeq::new(1, values))
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, RodSource::Finite(_))
    }

    pub fn as_finite(&self) -> Option<&RodSet> {
        match self {
            RodSource::Finite(r) => Some(r),
            _ => None,
        }
    }

    pub fn negate(&self) -> RodSource {
        match self {
            RodSource::Finite(r) => RodSource::Finite(r.negate()),
            RodSource::Arithmetic { first, step, sign } => RodSource::Arithmetic {
                first: *first,
                step: *step,
                sign: sign.flip(),
            },
            RodSource::TrainsOf { base, sign } => RodSource::TrainsOf {
                base: base.clone(),
                sign: sign.flip(),
            },
            RodSource::Counts(seq) => {
                RodSource::Counts(CountSeq::new(seq.start, seq.values.iter().map(|v| -v).collect()))
            }
        }
    }

    /// Rod counts `C(0..=n)` with `C(0) = 0`.
    pub fn counts_upto(&self, n: usize) -> Result<Vec<BigInt>> {
        let mut out = vec![BigInt::zero(); n + 1];
        match self {
            RodSource::Finite(r) => {
                for (len, m) in r.entries().take_while(|(len, _)| *len <= n) {
                    out[len] = m.clone();
                }
            }
            RodSource::Arithmetic { first, step, sign } => {
                for len in (*first..=n).step_by(*step) {
                    out[len] = sign.to_bigint();
                }
            }
            RodSource::TrainsOf { base, sign } => {
                let f = finite_train_counts(base, n);
                for len in 1..=n {
                    out[len] = &f[len] * sign.to_bigint();
                }
            }
            RodSource::Counts(seq) => {
                let available = seq.last_index().unwrap_or(0);
                if n > available {
                    return Err(Error::HorizonExceeded { needed: n, available });
                }
                for (len, slot) in out.iter_mut().enumerate().skip(1) {
                    *slot = seq.get(len).cloned().unwrap_or_default();
                }
            }
        }
        Ok(out)
    }

    /// `C(n)` for a single length.
    pub fn count(&self, n: usize) -> Result<BigInt> {
        match self {
            RodSource::Finite(r) => Ok(r.count(n)),
            RodSource::Arithmetic { first, step, sign } => {
                Ok(if n >= *first && (n - first).is_multiple_of(*step) { sign.to_bigint() } else { BigInt::zero() })
            }
            _ => Ok(self.counts_upto(n)?.pop().unwrap_or_default()),
        }
    }

    /// The rod count generating function as `numerator / denominator`, when it is rational.
    pub fn rational_gf(&self) -> Option<(Poly, Poly)> {
        match self {
            RodSource::Finite(r) => Some((rod_poly(r), Poly::one())),
            RodSource::Arithmetic { first, step, sign } => Some((
                Poly::monomial(sign.to_bigint(), *first),
                Poly::one().sub(&Poly::monomial(BigInt::one(), *step)),
            )),
            RodSource::TrainsOf { base, sign } => {
                let c = rod_poly(base);
                Some((c.mul(&Poly::constant(sign.to_bigint())), Poly::one().sub(&c)))
            }
            RodSource::Counts(_) => None,
        }
    }
}

impl fmt::Display for RodSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RodSource::Finite(r) => write!(f, "{r}"),
            RodSource::Arithmetic { first, step, sign } => {
                let m = if *sign == Sign::Minus { "-" } else { "" };
                write!(f, "[{m}{first},{m}{},{m}{},...]", first + step, first + 2 * step)
            }
            RodSource::TrainsOf { base, sign } => {
                let m = if *sign == Sign::Minus { "-" } else { "" };
                write!(f, "{m}rods(trains({base}))")
            }
            RodSource::Counts(seq) => write!(f, "counts({seq})"),
        }
    }
}

/// `F(0..=n)` from rod counts `c[1..]` (entries of `c` past `n` are ignored).
pub(crate) fn counts_from_rods(c: &[BigInt], n: usize) -> Vec<BigInt> {
    let rods: Vec<(usize, &BigInt)> = c
        .iter()
        .enumerate()
        .skip(1)
        .take(n)
        .filter(|(_, m)| !m.is_zero())
        .collect();
    recurse(&rods, n)
}

fn recurse(rods: &[(usize, &BigInt)], n: usize) -> Vec<BigInt> {
    let mut f: Vec<BigInt> = Vec::with_capacity(n + 1);
    f.push(BigInt::one());
    for k in 1..=n {
        let mut acc = BigInt::zero();
        for &(len, m) in rods {
            if len > k {
                break;
            }
            let prev = &f[k - len];
            if !prev.is_zero() {
                acc += m * prev;
            }
        }
        f.push(acc);
    }
    f
}

/// `F(0..=n, R)` for a finite rod set.
pub fn finite_train_counts(r: &RodSet, n: usize) -> Vec<BigInt> {
    let rods: Vec<(usize, &BigInt)> = r.entries().take_while(|(len, _)| *len <= n).collect();
    recurse(&rods, n)
}

/// Net train counts `F(0..=n)` of any rod source.
pub fn train_counts(src: &RodSource, n: usize) -> Result<CountSeq> {
    let values = match src {
        RodSource::Finite(r) => finite_train_counts(r, n),
        _ => counts_from_rods(&src.counts_upto(n)?, n),
    };
    Ok(CountSeq::new(0, values))
}

/// `D(n) = F(n,R) - Σ C(ℓ,S)·F(n-ℓ,R)` from precomputed `F(·,R)` and `C(·,S)`, for `1..=n`.
pub(crate) fn discrepancy_values(f: &[BigInt], s: &[BigInt], n: usize) -> Vec<BigInt> {
    let rods: Vec<(usize, &BigInt)> = s
        .iter()
        .enumerate()
        .skip(1)
        .take(n)
        .filter(|(_, m)| !m.is_zero())
        .collect();
    (1..=n)
        .map(|k| {
            let mut d = f[k].clone();
            for &(len, m) in &rods {
                if len > k {
                    break;
                }
                d -= m * &f[k - len];
            }
            d
        })
        .collect()
}

/// Discrepancies `D(1..=n, R, S)`.
pub fn discrepancies(r: &RodSource, s: &RodSource, n: usize) -> Result<CountSeq> {
    let f = train_counts(r, n)?.values;
    let c = s.counts_upto(n)?;
    Ok(CountSeq::new(1, discrepancy_values(&f, &c, n)))
}

/// Discrepancies of an arbitrary sequence against the recursion of `s`, for `1..=n`.
pub fn sequence_discrepancies(seq: &CountSeq, s: &RodSet, n: usize) -> Result<CountSeq> {
    if seq.start != 0 || !seq.values.first().is_some_and(One::is_one) {
        return Err(Error::BadInitialTerm);
    }
    let available = seq.values.len() - 1;
    if n > available {
        return Err(Error::HorizonExceeded { needed: n, available });
    }
    let c = RodSource::Finite(s.clone()).counts_upto(n)?;
    Ok(CountSeq::new(1, discrepancy_values(&seq.values, &c, n)))
}

/// One rod in a train: its length, color index (1-based within its length) and sign.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ColoredRod {
    pub length: usize,
    pub color: usize,
    pub sign: Sign,
}

/// An ordered sequence of colored rods.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Train {
    pub rods: Vec<ColoredRod>,
}

impl Train {
    pub fn length(&self) -> usize {
        self.rods.iter().map(|r| r.length).sum()
    }

    pub fn sign(&self) -> Sign {
        self.rods.iter().fold(Sign::Plus, |s, r| s * r.sign)
    }
}

impl fmt::Display for Train {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rods.is_empty() {
            return f.write_str("()");
        }
        for (i, rod) in self.rods.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            let m = if rod.sign == Sign::Minus { "-" } else { "" };
            write!(f, "{m}{}.{}", rod.length, rod.color)?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Enumeration {
    pub trains: Vec<Train>,
    pub net: BigInt,
}

pub const DEFAULT_CAP: usize = 1_000_000;

/// `(length, colors, sign)` for every length present, ascending.
fn palette(r: &RodSet, n: usize, cap: usize) -> Result<Vec<(usize, usize, Sign)>> {
    r.entries()
        .take_while(|(len, _)| *len <= n)
        .map(|(len, m)| {
            let colors = m.abs().to_usize().filter(|&c| c <= cap).ok_or(Error::CapExceeded { cap })?;
            let sign = if m.is_negative() { Sign::Minus } else { Sign::Plus };
            Ok((len, colors, sign))
        })
        .collect()
}

/// Total number of trains of length `n`, ignoring signs.
fn total_trains(r: &RodSet, n: usize) -> BigInt {
    let abs = RodSet::from_pairs(r.entries().map(|(len, m)| (len, m.abs())));
    finite_train_counts(&abs, n).pop().unwrap_or_default()
}

/// Lists every train of length `n`, in lexicographic order of `(length, color)`.
pub fn enumerate_trains(r: &RodSet, n: usize, cap: usize) -> Result<Enumeration> {
    if total_trains(r, n) > BigInt::from(cap) {
        return Err(Error::CapExceeded { cap });
    }
    let palette = palette(r, n, cap)?;
    let mut trains = Vec::new();
    let mut stack = Vec::new();
    fn walk(
        palette: &[(usize, usize, Sign)],
        left: usize,
        stack: &mut Vec<ColoredRod>,
        out: &mut Vec<Train>,
    ) {
        if left == 0 {
            out.push(Train { rods: stack.clone() });
            return;
        }
        for &(length, colors, sign) in palette {
            if length > left {
                break;
            }
            for color in 1..=colors {
                stack.push(ColoredRod { length, color, sign });
                walk(palette, left - length, stack, out);
                stack.pop();
            }
        }
    }
    walk(&palette, n, &mut stack, &mut trains);
    let net = trains
        .iter()
        .map(|t| if t.sign() == Sign::Plus { 1i64 } else { -1 })
        .sum::<i64>()
        .into();
    Ok(Enumeration { trains, net })
}

/// Net train counts for every length `0..=n` by visiting each train once, without storing them.
///
/// Intended as an independent check on the recursion at small sizes.
pub fn enumerate_net_counts(r: &RodSet, n: usize, cap: usize) -> Result<Vec<i64>> {
    let total: BigInt = (0..=n).map(|k| total_trains(r, k)).sum();
    if total > BigInt::from(cap) {
        return Err(Error::CapExceeded { cap });
    }
    let palette = palette(r, n, cap)?;
    let mut net = vec![0i64; n + 1];
    fn walk(palette: &[(usize, usize, Sign)], len: usize, sign: i64, max: usize, net: &mut [i64]) {
        net[len] += sign;
        for &(length, colors, s) in palette {
            if len + length > max {
                break;
            }
            let s = if s == Sign::Minus { -sign } else { sign };
            for _ in 0..colors {
                walk(palette, len + length, s, max, net);
            }
        }
    }
    walk(&palette, 0, 1, n, &mut net);
    Ok(net)
}

/// `Σ binom(i+j, j)·mA^i·mB^j` over `i·a + j·b = n`, for a rod set of shape `⟨a, b⟩`.
pub fn binomial_count(r: &RodSet, n: usize) -> Result<BigInt> {
    if r.shape_len() != 2 {
        return Err(Error::NotTwoShape(r.shape_len()));
    }
    let mut it = r.entries();
    let (a, ma) = it.next().expect("two entries");
    let (b, mb) = it.next().expect("two entries");
    let mut total = BigInt::zero();
    for i in 0..=n / a {
        let rest = n - i * a;
        if !rest.is_multiple_of(b) {
            continue;
        }
        let j = rest / b;
        let ways = binomial(BigInt::from(i + j), BigInt::from(j));
        total += ways * Pow::pow(ma, i) * Pow::pow(mb, j);
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(s: &str) -> RodSet {
        s.parse().unwrap()
    }

    fn fin(s: &str) -> RodSource {
        RodSource::Finite(rs(s))
    }

    fn csv(src: &RodSource, n: usize) -> String {
        train_counts(src, n).unwrap().to_string()
    }

    #[test]
    fn train_count_examples() {
        assert_eq!(csv(&fin("[1,2]"), 11), "1,1,2,3,5,8,13,21,34,55,89,144");
        assert_eq!(csv(&fin("[1,-2]"), 5), "1,1,0,-1,-1,0");
        let odds = RodSource::arithmetic(1, 2, Sign::Plus).unwrap();
        assert_eq!(csv(&odds, 6), "1,1,1,2,3,5,8");
        assert_eq!(csv(&fin("[1,1,-2]"), 5), "1,2,3,4,5,6");
        assert_eq!(csv(&fin("[]"), 3), "1,0,0,0");
        assert_eq!(csv(&fin("[1,2]"), 0), "1");
    }

    #[test]
    fn typo_sequences_follow_recursion() {
        assert_eq!(csv(&fin("[1,1]"), 4), "1,2,4,8,16");
        assert_eq!(csv(&fin("[1,3]"), 10), "1,1,1,2,3,4,6,9,13,19,28");
    }

    #[test]
    fn procedural_sources() {
        let trains = RodSource::TrainsOf { base: rs("[1,2]"), sign: Sign::Plus };
        assert_eq!(trains.counts_upto(5).unwrap(), [0, 1, 2, 3, 5, 8].map(BigInt::from));
        let evens = RodSource::arithmetic(2, 2, Sign::Minus).unwrap();
        assert_eq!(evens.counts_upto(4).unwrap(), [0, 0, -1, 0, -1].map(BigInt::from));
        assert_eq!(evens.count(6).unwrap(), BigInt::from(-1));
        assert!(RodSource::arithmetic(0, 2, Sign::Plus).is_err());
        let short = RodSource::counts(vec![1.into(), 2.into()]);
        assert_eq!(short.counts_upto(2).unwrap(), [0, 1, 2].map(BigInt::from));
        assert_eq!(short.counts_upto(3), Err(Error::HorizonExceeded { needed: 3, available: 2 }));
        assert!(!short.is_finite() && fin("[1]").is_finite());
    }

    #[test]
    fn discrepancy_examples() {
        let d = |r: &str, s: &str, n| discrepancies(&fin(r), &fin(s), n).unwrap().to_string();
        assert_eq!(d("[1,2]", "[1,3,4]", 6), "0,1,0,0,0,0");
        assert_eq!(d("[2,3]", "[2,3]", 5), "0,0,0,0,0");
        assert_eq!(d("[1,-2]", "[6]", 6), "1,0,-1,-1,0,0");
    }

    #[test]
    fn sequence_discrepancy_examples() {
        let lucas = CountSeq::from_i64(0, &[1, 2, 1, 3, 4, 7, 11]);
        let q = sequence_discrepancies(&lucas, &rs("[1,2]"), 6).unwrap();
        assert_eq!(q.to_string(), "1,-2,0,0,0,0");
        assert_eq!(q.to_rodset(), rs("[1,-2^2]"));
        let fib = train_counts(&fin("[1,2]"), 10).unwrap();
        assert!(sequence_discrepancies(&fib, &rs("[1,2]"), 10).unwrap().values.iter().all(Zero::is_zero));
        let delta = CountSeq::from_i64(0, &[1, 0, 0, 0]);
        assert_eq!(sequence_discrepancies(&delta, &rs("[1]"), 3).unwrap().to_string(), "-1,0,0");
        let bad = CountSeq::from_i64(0, &[2, 0]);
        assert_eq!(sequence_discrepancies(&bad, &rs("[1]"), 1), Err(Error::BadInitialTerm));
        assert!(sequence_discrepancies(&delta, &rs("[1]"), 4).is_err());
    }

    #[test]
    fn enumeration_examples() {
        let e = enumerate_trains(&rs("[2,3,5]"), 10, DEFAULT_CAP).unwrap();
        assert_eq!((e.trains.len(), e.net), (14, BigInt::from(14)));
        let e = enumerate_trains(&rs("[1,-2]"), 4, DEFAULT_CAP).unwrap();
        assert_eq!((e.trains.len(), e.net), (5, BigInt::from(-1)));
        let e = enumerate_trains(&rs("[]"), 3, DEFAULT_CAP).unwrap();
        assert_eq!((e.trains.len(), e.net), (0, BigInt::zero()));
        let e = enumerate_trains(&rs("[1,2]"), 0, DEFAULT_CAP).unwrap();
        assert_eq!(e.trains, vec![Train::default()]);
        assert_eq!(e.net, BigInt::one());
    }

    #[test]
    fn enumeration_order_and_colors() {
        let e = enumerate_trains(&rs("[1^2,-2]"), 2, DEFAULT_CAP).unwrap();
        let listed: Vec<String> = e.trains.iter().map(ToString::to_string).collect();
        assert_eq!(listed, ["1.1 1.1", "1.1 1.2", "1.2 1.1", "1.2 1.2", "-2.1"]);
        assert_eq!(e.net, BigInt::from(3));
        assert!(e.trains.iter().all(|t| t.length() == 2));
    }

    #[test]
    fn enumeration_cap() {
        assert_eq!(enumerate_trains(&rs("[1,2]"), 30, 1000), Err(Error::CapExceeded { cap: 1000 }));
        assert!(enumerate_net_counts(&rs("[1,2]"), 30, 1000).is_err());
    }

    #[test]
    fn net_counts_by_enumeration_match() {
        let r = rs("[1^2,-2,3,-5^2]");
        let walked = enumerate_net_counts(&r, 10, DEFAULT_CAP).unwrap();
        let rec = finite_train_counts(&r, 10);
        assert_eq!(walked.into_iter().map(BigInt::from).collect::<Vec<_>>(), rec);
    }

    #[test]
    fn binomial_examples() {
        assert_eq!(binomial_count(&rs("[3,5]"), 70).unwrap(), BigInt::from(63862));
        assert_eq!(binomial_count(&rs("[-1,-2]"), 4).unwrap(), BigInt::from(-1));
        assert_eq!(binomial_count(&rs("[1,2]"), 0).unwrap(), BigInt::one());
        assert_eq!(binomial_count(&rs("[1,2,3]"), 3), Err(Error::NotTwoShape(3)));
        assert_eq!(binomial_count(&rs("[1^2,2^3]"), 5).unwrap(), finite_train_counts(&rs("[1^2,2^3]"), 5)[5]);
    }
}
