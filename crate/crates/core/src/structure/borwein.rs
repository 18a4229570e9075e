//! Which trinomials `1 - σ_a x^a - σ_b x^b` are reached from `[1,-2]` and `[-1,-2]`.
//!
//! `R →Q [a^σ_a, b^σ_b]` with finite `Q` exactly when `1 - C(x, R)` divides the
//! trinomial: `x² - x + 1` for `[1,-2]` and `x² + x + 1` for `[-1,-2]`.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::rodset::{RodSet, Sign};
use crate::series::{char_poly, rod_poly, Poly};
use crate::structure::scaling::scan_two_expansions;

/// `(a, σ_a, b, σ_b)` with `a < b`.
pub type SignedPair = (usize, Sign, usize, Sign);

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BorweinFamily {
    pub rodset: RodSet,
    pub modulus: usize,
    /// Hits grouped by residue class key, e.g. `"(1,5) mod 6"`.
    pub classes: BTreeMap<String, Vec<SignedPair>>,
    /// The classes the hits are expected to fall into.
    pub expected: Vec<String>,
    /// The two-length scan found exactly the same `±1` shapes.
    pub scan_agrees: bool,
}

impl BorweinFamily {
    /// Every class that was hit is an expected class.
    pub fn within_expected(&self) -> bool {
        self.classes.keys().all(|k| self.expected.contains(k))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BorweinTable {
    pub bound: usize,
    pub families: Vec<BorweinFamily>,
}

pub fn pair_rodset(&(a, sa, b, sb): &SignedPair) -> RodSet {
    RodSet::from_pairs([(a, sa.to_bigint()), (b, sb.to_bigint())])
}

/// Class key of a signed pair: signed residues sorted by `(residue, sign)`.
pub fn class_key(&(a, sa, b, sb): &SignedPair, modulus: usize) -> String {
    let mut parts = [(a % modulus, sa), (b % modulus, sb)];
    parts.sort();
    let show = |(r, s): (usize, Sign)| format!("{}{r}", if s == Sign::Minus { "-" } else { "" });
    format!("({},{}) mod {modulus}", show(parts[0]), show(parts[1]))
}

fn signed_pairs(bound: usize) -> impl Iterator<Item = SignedPair> {
    let signs = [Sign::Plus, Sign::Minus];
    (2..=bound).flat_map(move |b| {
        (1..b).flat_map(move |a| {
            signs
                .into_iter()
                .flat_map(move |sa| signs.into_iter().map(move |sb| (a, sa, b, sb)))
        })
    })
}

fn classify(r: RodSet, modulus: usize, expected: &[&str], bound: usize) -> Result<BorweinFamily> {
    let divisor = char_poly(&r);
    let mut classes: BTreeMap<String, Vec<SignedPair>> = BTreeMap::new();
    let mut found = BTreeSet::new();
    for pair in signed_pairs(bound) {
        let trinomial = Poly::one().sub(&rod_poly(&pair_rodset(&pair)));
        if trinomial.divisible_by(&divisor)? {
            classes.entry(class_key(&pair, modulus)).or_default().push(pair);
            found.insert(pair);
        }
    }
    let mut scanned: BTreeSet<SignedPair> = scan_two_expansions(&r, bound)?
        .into_iter()
        .filter(|h| h.mult_a.abs().is_one() && h.mult_b.abs().is_one())
        .map(|h| (h.a, sign_of(&h.mult_a), h.b, sign_of(&h.mult_b)))
        .collect();
    // the scan leaves out S = R
    if r.shape_len() == 2 && r.entries().all(|(_, m)| m.abs().is_one()) {
        let mut it = r.entries();
        let ((a, ma), (b, mb)) = (it.next().expect("two"), it.next().expect("two"));
        if b <= bound {
            scanned.insert((a, sign_of(ma), b, sign_of(mb)));
        }
    }
    Ok(BorweinFamily {
        rodset: r,
        modulus,
        classes,
        expected: expected.iter().map(|c| format!("{c} mod {modulus}")).collect(),
        scan_agrees: scanned == found,
    })
}

fn sign_of(m: &num_bigint::BigInt) -> Sign {
    if m.is_negative() {
        Sign::Minus
    } else {
        Sign::Plus
    }
}

/// Classifies every signed pair `1 ≤ a < b ≤ bound` for `[1,-2]` (mod 6) and `[-1,-2]` (mod 3).
pub fn borwein_classify(bound: usize) -> Result<BorweinTable> {
    if bound < 2 {
        return Err(Error::Invalid("bound must be at least 2".into()));
    }
    let families = vec![
        classify("[1,-2]".parse()?, 6, &["(1,5)", "(1,-2)", "(-2,-4)", "(-4,5)"], bound)?,
        classify("[-1,-2]".parse()?, 3, &["(-1,-2)"], bound)?,
    ];
    Ok(BorweinTable { bound, families })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn keys() {
        assert_eq!(class_key(&(1, Sign::Plus, 5, Sign::Plus), 6), "(1,5) mod 6");
        assert_eq!(class_key(&(11, Sign::Plus, 13, Sign::Plus), 6), "(1,5) mod 6");
        assert_eq!(class_key(&(5, Sign::Plus, 10, Sign::Minus), 6), "(-4,5) mod 6");
        assert_eq!(class_key(&(6, Sign::Minus, 12, Sign::Plus), 6), "(0,-0) mod 6");
    }

    #[test]
    fn small_table() {
        let t = borwein_classify(12).unwrap();
        let six = &t.families[0];
        assert!(six.within_expected() && six.scan_agrees);
        assert!(six.classes["(1,5) mod 6"].contains(&(1, Sign::Plus, 5, Sign::Plus)));
        assert!(six.classes["(1,-2) mod 6"].contains(&(1, Sign::Plus, 2, Sign::Minus)));
        let three = &t.families[1];
        assert!(three.within_expected() && three.scan_agrees);
        assert!(three.classes["(-1,-2) mod 3"].contains(&(4, Sign::Minus, 5, Sign::Minus)));
        assert_eq!(three.classes.len(), 1);
        assert!(borwein_classify(1).is_err());
    }
}
