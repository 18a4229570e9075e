//! Reduced rod sets and their algebra.
//!
//! A rod set is a signed multiset of positive lengths. Only the net count per
//! length matters for every quantity computed in this crate, so a [`RodSet`]
//! stores exactly that: a map from length to a nonzero multiplicity. Rod/antirod
//! pairs cancel on construction, which makes equivalence structural equality.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn from_i64(v: i64) -> Result<Sign> {
        match v {
            1 => Ok(Sign::Plus),
            -1 => Ok(Sign::Minus),
            _ => Err(Error::Invalid(format!("sign must be +1 or -1, got {v}"))),
        }
    }

    pub fn to_i64(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn to_bigint(self) -> BigInt {
        BigInt::from(self.to_i64())
    }
}

impl std::ops::Mul for Sign {
    type Output = Sign;

    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

impl FromStr for Sign {
    type Err = Error;

    fn from_str(s: &str) -> Result<Sign> {
        match s.trim() {
            "+" | "+1" | "1" | "plus" | "pos" => Ok(Sign::Plus),
            "-" | "-1" | "minus" | "neg" => Ok(Sign::Minus),
            other => Err(Error::Invalid(format!("unrecognized sign {other:?}"))),
        }
    }
}

/// A single rod: a positive length with a sign. An antirod has `Sign::Minus`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Rod {
    length: usize,
    sign: Sign,
}

impl Rod {
    pub fn new(length: usize, sign: Sign) -> Result<Rod> {
        if length == 0 {
            return Err(Error::ZeroLength { pos: 0 });
        }
        Ok(Rod { length, sign })
    }

    pub fn length(&self) -> usize {
        self.length
    }

    pub fn sign(&self) -> Sign {
        self.sign
    }
}

/// Reduced rod set: length → nonzero net multiplicity.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct RodSet {
    entries: BTreeMap<usize, BigInt>,
}

/// Summary of a rod set's shape and sign structure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShapeReport {
    pub shape: Vec<usize>,
    pub multiplicities: Vec<BigInt>,
    pub min: Option<usize>,
    pub max: Option<usize>,
    pub size: BigInt,
    pub primitive: bool,
    pub positive: bool,
    pub empty: bool,
}

impl RodSet {
    pub fn new() -> RodSet {
        RodSet::default()
    }

    /// Builds a rod set from `(length, multiplicity)` pairs, summing repeats.
    ///
    /// Panics if a nonzero multiplicity is given for length 0.
    pub fn from_pairs<I, M>(pairs: I) -> RodSet
    where
        I: IntoIterator<Item = (usize, M)>,
        M: Into<BigInt>,
    {
        let mut out = RodSet::new();
        for (len, m) in pairs {
            out.add(len, m.into());
        }
        out
    }

    /// Rod set whose count at length `i + 1` is `values[i]`.
    pub fn from_counts(values: &[BigInt]) -> RodSet {
        RodSet::from_pairs(values.iter().enumerate().map(|(i, v)| (i + 1, v.clone())))
    }

    /// Rod set whose count at length `n` is `coeffs[n]` for `n >= 1`; `coeffs[0]` is ignored.
    pub fn from_coefficients(coeffs: &[BigInt]) -> RodSet {
        RodSet::from_pairs(coeffs.iter().enumerate().skip(1).map(|(i, v)| (i, v.clone())))
    }

    fn add(&mut self, len: usize, m: BigInt) {
        if m.is_zero() {
            return;
        }
        assert!(len >= 1, "rod length must be positive");
        let slot = self.entries.entry(len).or_insert_with(BigInt::zero);
        *slot += m;
        if slot.is_zero() {
            self.entries.remove(&len);
        }
    }

    /// Net rod count `C(n, R)`.
    pub fn count(&self, n: usize) -> BigInt {
        self.entries.get(&n).cloned().unwrap_or_default()
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, &BigInt)> + '_ {
        self.entries.iter().map(|(&k, v)| (k, v))
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Number of distinct lengths (the cardinality of the shape).
    pub fn shape_len(&self) -> usize {
        self.entries.len()
    }

    pub fn min_len(&self) -> Option<usize> {
        self.entries.keys().next().copied()
    }

    pub fn max_len(&self) -> Option<usize> {
        self.entries.keys().next_back().copied()
    }

    /// Total number of rods, counting antirods by absolute multiplicity.
    pub fn size(&self) -> BigInt {
        self.entries.values().map(|m| m.abs()).sum()
    }

    /// Rods of one length, as a rod set.
    pub fn restrict_to(&self, len: usize) -> RodSet {
        RodSet::from_pairs([(len, self.count(len))])
    }

    pub fn union(&self, other: &RodSet) -> RodSet {
        let mut out = self.clone();
        for (len, m) in other.entries() {
            out.add(len, m.clone());
        }
        out
    }

    pub fn negate(&self) -> RodSet {
        RodSet {
            entries: self.entries.iter().map(|(&k, v)| (k, -v)).collect(),
        }
    }

    /// Concatenation `RS`: counts convolve.
    pub fn concat(&self, other: &RodSet) -> RodSet {
        let mut out = RodSet::new();
        for (i, a) in self.entries() {
            for (j, b) in other.entries() {
                out.add(i + j, a * b);
            }
        }
        out
    }

    pub fn equivalent(&self, other: &RodSet) -> bool {
        self == other
    }

    pub fn odd_sign_swap(&self) -> RodSet {
        RodSet {
            entries: self
                .entries
                .iter()
                .map(|(&k, v)| (k, if k % 2 == 1 { -v } else { v.clone() }))
                .collect(),
        }
    }

    /// `true` when every multiplicity of `sub` is dominated by this set's, same sign.
    pub fn contains(&self, sub: &RodSet) -> bool {
        sub.entries().all(|(len, m)| {
            let mine = self.count(len);
            mine.signum() == m.signum() && mine.abs() >= m.abs()
        })
    }

    pub fn describe(&self) -> ShapeReport {
        let shape: Vec<usize> = self.entries.keys().copied().collect();
        let gcd = shape.iter().fold(0usize, |g, &l| g.gcd(&l));
        ShapeReport {
            multiplicities: self.entries.values().cloned().collect(),
            min: self.min_len(),
            max: self.max_len(),
            size: self.size(),
            primitive: gcd == 1,
            positive: self.entries.values().all(|m| m.is_positive()),
            empty: self.is_empty(),
            shape,
        }
    }
}

impl std::ops::Neg for &RodSet {
    type Output = RodSet;

    fn neg(self) -> RodSet {
        self.negate()
    }
}

impl fmt::Display for RodSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, (len, m)) in self.entries().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            if m.is_negative() {
                f.write_str("-")?;
            }
            write!(f, "{len}")?;
            let abs = m.abs();
            if !abs.is_one() {
                write!(f, "^{abs}")?;
            }
        }
        f.write_str("]")
    }
}

impl FromStr for RodSet {
    type Err = Error;

    fn from_str(text: &str) -> Result<RodSet> {
        Parser::new(text).rodset()
    }
}

pub fn parse_rodset(text: &str) -> Result<RodSet> {
    text.parse()
}

pub fn format_rodset(r: &RodSet) -> String {
    r.to_string()
}

/// Reads one rod-set literal per line; blank lines and lines starting with `#` are skipped.
pub fn parse_rodset_lines(text: &str) -> Result<Vec<RodSet>> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(str::parse)
        .collect()
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Self {
        Parser {
            src: text.as_bytes(),
            pos: 0,
        }
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(b' ' | b'\t' | b'\n' | b'\r')) {
            self.pos += 1;
        }
    }

    fn fail<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Syntax {
            pos: self.pos,
            msg: msg.into(),
        })
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            self.fail(format!("expected '{}'", c as char))
        }
    }

    fn integer(&mut self) -> Result<BigInt> {
        let start = self.pos;
        while matches!(self.peek(), Some(b'0'..=b'9')) {
            self.pos += 1;
        }
        if start == self.pos {
            return self.fail("expected a digit");
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(digits.parse().expect("digits parse as integer"))
    }

    fn term(&mut self) -> Result<(usize, BigInt)> {
        let term_pos = self.pos;
        let negative = if self.peek() == Some(b'-') {
            self.pos += 1;
            true
        } else {
            false
        };
        let len_pos = self.pos;
        let len = self.integer()?;
        if len.is_zero() {
            return Err(Error::ZeroLength { pos: term_pos });
        }
        let len: usize = usize::try_from(&len).map_err(|_| Error::Syntax {
            pos: len_pos,
            msg: "rod length too large".into(),
        })?;
        let mut count = BigInt::one();
        if self.peek() == Some(b'^') {
            self.pos += 1;
            if self.peek() == Some(b'-') {
                return self.fail("count must be a positive integer; put the sign on the length");
            }
            let count_pos = self.pos;
            count = self.integer()?;
            if count.is_zero() {
                return Err(Error::ZeroCount { pos: count_pos });
            }
        }
        if negative {
            count = -count;
        }
        Ok((len, count))
    }

    fn rodset(&mut self) -> Result<RodSet> {
        let mut out = RodSet::new();
        self.skip_ws();
        self.expect(b'[')?;
        self.skip_ws();
        if self.peek() != Some(b']') {
            loop {
                let (len, m) = self.term()?;
                out.add(len, m);
                self.skip_ws();
                if self.peek() == Some(b',') {
                    self.pos += 1;
                    self.skip_ws();
                } else {
                    break;
                }
            }
        }
        self.expect(b']')?;
        self.skip_ws();
        if self.pos != self.src.len() {
            return self.fail("unexpected trailing input");
        }
        Ok(out)
    }
}
