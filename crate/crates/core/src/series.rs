//! Exact integer polynomials and truncated power series.
//!
//! Everything here is over ℤ with arbitrary precision; there is no floating
//! point anywhere. [`Poly`] stores coefficients in ascending degree with the
//! top coefficient nonzero (the zero polynomial is the empty vector).

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rodset::RodSet;

#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Poly {
    coeffs: Vec<BigInt>,
}

impl Poly {
    pub fn zero() -> Poly {
        Poly::default()
    }

    pub fn one() -> Poly {
        Poly::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Poly {
        Poly::from_coeffs(vec![c])
    }

    /// `c·x^n`
    pub fn monomial(c: BigInt, n: usize) -> Poly {
        let mut coeffs = vec![BigInt::zero(); n + 1];
        coeffs[n] = c;
        Poly::from_coeffs(coeffs)
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Poly {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Poly {
        Poly::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, n: usize) -> BigInt {
        self.coeffs.get(n).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        Poly::from_coeffs((0..n).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::from_coeffs(out)
    }

    /// Terms of degree at most `n`.
    pub fn truncated(&self, n: usize) -> Poly {
        Poly::from_coeffs(self.coeffs.iter().take(n + 1).cloned().collect())
    }

    /// Exact quotient `self / d`, or `None` when `d` does not divide `self` in ℤ[x].
    pub fn div_exact(&self, d: &Poly) -> Result<Option<Poly>> {
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Some(Poly::zero()));
        }
        let (dp, dd) = (self.coeffs.len() - 1, d.coeffs.len() - 1);
        if dp < dd {
            return Ok(None);
        }
        let d0 = &d.coeffs[0];
        let q = if d0.abs().is_one() {
            // ascending elimination; 1/d0 = d0 for a unit
            let mut q: Vec<BigInt> = Vec::with_capacity(dp - dd + 1);
            for n in 0..=dp - dd {
                let mut acc = self.coeffs[n].clone();
                for k in 1..=n.min(dd) {
                    acc -= &d.coeffs[k] * &q[n - k];
                }
                q.push(acc * d0);
            }
            let q = Poly::from_coeffs(q);
            if q.mul(d) != *self {
                return Ok(None);
            }
            q
        } else {
            let lead = &d.coeffs[dd];
            let mut rem = self.coeffs.clone();
            let mut q = vec![BigInt::zero(); dp - dd + 1];
            for i in (0..=dp - dd).rev() {
                let c = &rem[i + dd];
                if c.is_zero() {
                    continue;
                }
                let (quot, r) = c.div_rem(lead);
                if !r.is_zero() {
                    return Ok(None);
                }
                for (k, dk) in d.coeffs.iter().enumerate() {
                    rem[i + k] -= &quot * dk;
                }
                q[i] = quot;
            }
            if rem.iter().any(|c| !c.is_zero()) {
                return Ok(None);
            }
            Poly::from_coeffs(q)
        };
        Ok(Some(q))
    }

    /// `true` when `d` divides `self` exactly.
    pub fn divisible_by(&self, d: &Poly) -> Result<bool> {
        Ok(self.div_exact(d)?.is_some())
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (n, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let abs = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else if c.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            first = false;
            if n == 0 || !abs.is_one() {
                write!(f, "{abs}")?;
            }
            match n {
                0 => {}
                1 => f.write_str("x")?,
                _ => write!(f, "x^{n}")?,
            }
        }
        Ok(())
    }
}

impl FromStr for Poly {
    type Err = Error;

    /// Parses the text form produced by `Display`, e.g. `"1 - x - x^2"` or `"3x^4 + 2"`.
    fn from_str(text: &str) -> Result<Poly> {
        let src: Vec<(usize, u8)> = text
            .bytes()
            .enumerate()
            .filter(|(_, b)| !b.is_ascii_whitespace())
            .collect();
        let err = |i: usize, msg: &str| Error::Syntax {
            pos: src.get(i).map_or(text.len(), |p| p.0),
            msg: msg.into(),
        };
        let digits = |i: &mut usize| -> Option<BigInt> {
            let start = *i;
            while src.get(*i).is_some_and(|p| p.1.is_ascii_digit()) {
                *i += 1;
            }
            (start != *i).then(|| {
                let s: String = src[start..*i].iter().map(|p| p.1 as char).collect();
                s.parse().expect("digits")
            })
        };
        let mut coeffs: Vec<BigInt> = Vec::new();
        let mut i = 0;
        let mut first = true;
        if src.is_empty() {
            return Err(err(0, "empty polynomial"));
        }
        while i < src.len() {
            let negative = match src[i].1 {
                b'+' => {
                    i += 1;
                    false
                }
                b'-' => {
                    i += 1;
                    true
                }
                _ if first => false,
                _ => return Err(err(i, "expected '+' or '-'")),
            };
            first = false;
            let coef = digits(&mut i);
            if src.get(i).is_some_and(|p| p.1 == b'*') {
                i += 1;
            }
            let power = if src.get(i).is_some_and(|p| p.1 == b'x') {
                i += 1;
                if src.get(i).is_some_and(|p| p.1 == b'^') {
                    i += 1;
                    let p = digits(&mut i).ok_or_else(|| err(i, "expected exponent"))?;
                    usize::try_from(&p).map_err(|_| err(i, "exponent too large"))?
                } else {
                    1
                }
            } else if coef.is_none() {
                return Err(err(i, "expected a coefficient or x"));
            } else {
                0
            };
            let mut c = coef.unwrap_or_else(BigInt::one);
            if negative {
                c = -c;
            }
            if coeffs.len() <= power {
                coeffs.resize(power + 1, BigInt::zero());
            }
            coeffs[power] += c;
        }
        Ok(Poly::from_coeffs(coeffs))
    }
}

/// Coefficients `0..=N` of a formal power series.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<BigInt>,
}

impl TruncatedSeries {
    pub fn horizon(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    pub fn to_poly(&self) -> Poly {
        Poly::from_coeffs(self.coeffs.clone())
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        crate::counts::write_csv(f, &self.coeffs)
    }
}

/// Rod count generating function `C(x, R)`.
pub fn rod_poly(r: &RodSet) -> Poly {
    let Some(max) = r.max_len() else {
        return Poly::zero();
    };
    let mut coeffs = vec![BigInt::zero(); max + 1];
    for (len, m) in r.entries() {
        coeffs[len] = m.clone();
    }
    Poly::from_coeffs(coeffs)
}

/// `1 - C(x, R)`.
pub fn char_poly(r: &RodSet) -> Poly {
    Poly::one().sub(&rod_poly(r))
}

/// `1 + C(x, Q)`.
pub fn augment_poly(q: &RodSet) -> Poly {
    Poly::one().add(&rod_poly(q))
}

/// The rod set `R` with `1 - C(x, R) = p`. Requires constant term 1.
pub fn rodset_from_char_poly(p: &Poly) -> Result<RodSet> {
    if !p.coeff(0).is_one() {
        return Err(Error::Invalid(format!("constant term of {p} must be 1")));
    }
    Ok(RodSet::from_coefficients(&p.neg().coeffs))
}

/// The rod set `Q` with `1 + C(x, Q) = p`. Requires constant term 1.
pub fn rodset_from_augment_poly(p: &Poly) -> Result<RodSet> {
    if !p.coeff(0).is_one() {
        return Err(Error::Invalid(format!("constant term of {p} must be 1")));
    }
    Ok(RodSet::from_coefficients(&p.coeffs))
}

pub fn poly_mul(p: &Poly, q: &Poly) -> Poly {
    p.mul(q)
}

pub fn poly_divexact(p: &Poly, d: &Poly) -> Result<Option<Poly>> {
    p.div_exact(d)
}

/// `q` with `p·q ≡ 1 (mod x^{N+1})`.
pub fn series_inverse(p: &Poly, horizon: usize) -> Result<TruncatedSeries> {
    let p0 = p.coeff(0);
    if !p0.abs().is_one() {
        return Err(Error::NonUnitConstant(p0.to_string()));
    }
    let mut q: Vec<BigInt> = Vec::with_capacity(horizon + 1);
    q.push(p0.clone());
    for n in 1..=horizon {
        let mut acc = BigInt::zero();
        for k in 1..=n.min(p.coeffs.len().saturating_sub(1)) {
            acc += &p.coeffs[k] * &q[n - k];
        }
        q.push(-acc * &p0);
    }
    Ok(TruncatedSeries { coeffs: q })
}

/// Product of two truncated series up to the shorter horizon.
pub fn series_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let n = a.len().min(b.len());
    (0..n)
        .map(|k| (0..=k).map(|i| &a[i] * &b[k - i]).sum())
        .collect()
}

fn cyclotomic_cache() -> &'static RwLock<HashMap<usize, Poly>> {
    static CACHE: OnceLock<RwLock<HashMap<usize, Poly>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// Divisors of `n` in ascending order.
pub fn divisors(n: usize) -> Vec<usize> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut i = 1;
    while i * i <= n {
        if n.is_multiple_of(i) {
            small.push(i);
            if i != n / i {
                large.push(n / i);
            }
        }
        i += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// The `d`-th cyclotomic polynomial, by dividing `x^d - 1` by `Φ_e` for each proper divisor `e`.
///
/// Panics if `d == 0`.
pub fn cyclotomic(d: usize) -> Poly {
    assert!(d >= 1, "cyclotomic index must be positive");
    if let Some(p) = cyclotomic_cache().read().expect("cache lock").get(&d) {
        return p.clone();
    }
    let mut p = Poly::monomial(BigInt::one(), d).sub(&Poly::one());
    for e in divisors(d) {
        if e == d {
            break;
        }
        p = p
            .div_exact(&cyclotomic(e))
            .expect("nonzero divisor")
            .expect("cyclotomic factor divides x^d - 1");
    }
    cyclotomic_cache()
        .write()
        .expect("cache lock")
        .entry(d)
        .or_insert(p)
        .clone()
}

/// Euler's totient by trial factorization.
pub fn totient(mut n: usize) -> usize {
    let mut out = n;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            out -= out / p;
        }
        p += 1;
    }
    if n > 1 {
        out -= out / n;
    }
    out
}
