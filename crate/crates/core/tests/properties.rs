use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

use trainyard::series::{augment_poly, divisors, rodset_from_char_poly};
use trainyard::*;

/// Rod sets with lengths `1..=max_len` and multiplicities in `-max_mult..=max_mult`.
fn rodset(max_len: usize, max_mult: i64) -> impl Strategy<Value = RodSet> {
    prop::collection::vec(-max_mult..=max_mult, max_len).prop_map(|ms| {
        RodSet::from_pairs(ms.into_iter().enumerate().map(|(i, m)| (i + 1, m)))
    })
}

fn nonempty(max_len: usize, max_mult: i64) -> impl Strategy<Value = RodSet> {
    rodset(max_len, max_mult).prop_filter("nonempty", |r| !r.is_empty())
}

fn poly(max_deg: usize) -> impl Strategy<Value = Poly> {
    prop::collection::vec(-5i64..=5, 0..=max_deg + 1).prop_map(|c| Poly::from_i64(&c))
}

fn unit_poly(max_deg: usize) -> impl Strategy<Value = Poly> {
    (prop::bool::ANY, prop::collection::vec(-5i64..=5, 0..=max_deg)).prop_map(|(neg, mut c)| {
        c.insert(0, if neg { -1 } else { 1 });
        Poly::from_i64(&c)
    })
}

fn finite(r: &RodSet) -> RodSource {
    RodSource::Finite(r.clone())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn literal_round_trip(r in rodset(8, 40)) {
        prop_assert_eq!(parse_rodset(&format_rodset(&r)).unwrap(), r);
    }

    #[test]
    fn union_laws(a in rodset(6, 3), b in rodset(6, 3), c in rodset(6, 3)) {
        prop_assert_eq!(a.union(&b), b.union(&a));
        prop_assert_eq!(a.union(&b).union(&c), a.union(&b.union(&c)));
        prop_assert_eq!(a.union(&RodSet::new()), a.clone());
        prop_assert!(a.union(&a.negate()).is_empty());
    }

    #[test]
    fn concat_laws(a in rodset(5, 3), b in rodset(5, 3), c in rodset(5, 3)) {
        prop_assert_eq!(a.concat(&b), b.concat(&a));
        prop_assert_eq!(a.concat(&b).concat(&c), a.concat(&b.concat(&c)));
        prop_assert!(RodSet::new().concat(&a).is_empty());
        prop_assert_eq!(a.union(&b).concat(&c), a.concat(&c).union(&b.concat(&c)));
    }

    #[test]
    fn sign_laws(a in rodset(5, 3), b in rodset(5, 3)) {
        prop_assert_eq!(a.negate().concat(&b.negate()), a.concat(&b));
        prop_assert_eq!(a.concat(&b).negate(), a.negate().concat(&b));
        prop_assert_eq!(a.odd_sign_swap().odd_sign_swap(), a.clone());
    }

    #[test]
    fn set_difference(a in rodset(6, 4), keep in prop::collection::vec(0u8..=100, 6)) {
        // a sub-multiset of a: shrink each multiplicity toward zero
        let sub = RodSet::from_pairs(a.entries().zip(&keep).map(|((l, m), k)| {
            (l, m * BigInt::from(*k) / BigInt::from(100))
        }));
        prop_assert!(a.contains(&sub));
        let diff = RodSet::from_pairs(a.entries().map(|(l, m)| (l, m - sub.count(l))));
        prop_assert_eq!(diff, a.union(&sub.negate()));
    }

    #[test]
    fn product_rule(a in rodset(6, 3), b in rodset(6, 3)) {
        prop_assert_eq!(rod_poly(&a.concat(&b)), rod_poly(&a).mul(&rod_poly(&b)));
    }

    #[test]
    fn division_undoes_multiplication(p in poly(8), d in unit_poly(6)) {
        prop_assert_eq!(p.mul(&d).div_exact(&d).unwrap(), Some(p));
    }

    #[test]
    fn inverse_prefix_consistency(p in unit_poly(6), n in 0usize..40, extra in 1usize..20) {
        let short = series_inverse(&p, n).unwrap();
        let long = series_inverse(&p, n + extra).unwrap();
        prop_assert_eq!(short.coeffs(), &long.coeffs()[..=n]);
        let product = p.mul(&short.to_poly()).truncated(n);
        prop_assert_eq!(product, Poly::one());
    }

    #[test]
    fn equivalence_insensitivity(r in rodset(6, 3), len in 1usize..=6, k in 1i64..4) {
        // add k rod/antirod pairs at one length before reduction
        let padded = RodSet::from_pairs(r.entries().map(|(l, m)| (l, m.clone())).chain([(len, k.into()), (len, (-k).into())]));
        prop_assert!(padded.equivalent(&r));
        prop_assert_eq!(finite_train_counts(&padded, 40), finite_train_counts(&r, 40));
    }

    #[test]
    fn odd_sign_swap_flips_odd_counts(r in rodset(6, 3)) {
        let f = finite_train_counts(&r, 64);
        let g = finite_train_counts(&r.odd_sign_swap(), 64);
        for n in 0..=64 {
            let want = if n % 2 == 1 { -&f[n] } else { f[n].clone() };
            prop_assert_eq!(&g[n], &want);
        }
    }

    #[test]
    fn binomial_sum_matches_recursion(a in 1usize..6, gap in 1usize..6, ma in -3i64..=3, mb in -3i64..=3) {
        prop_assume!(ma != 0 && mb != 0);
        let r = RodSet::from_pairs([(a, ma), (a + gap, mb)]);
        let f = finite_train_counts(&r, 40);
        for (n, v) in f.iter().enumerate() {
            prop_assert_eq!(&binomial_count(&r, n).unwrap(), v);
        }
    }

    #[test]
    fn trains_source_counts(r in rodset(5, 2)) {
        let src = RodSource::TrainsOf { base: r.clone(), sign: Sign::Plus };
        let f = finite_train_counts(&r, 30);
        prop_assert_eq!(&src.counts_upto(30).unwrap()[1..], &f[1..]);
    }

    #[test]
    fn suffix_decomposition(r in rodset(5, 3), q in rodset(5, 3)) {
        let e = expand(&r, &q, 40);
        let s = e.s.as_finite().unwrap();
        let fr = finite_train_counts(&r, 40);
        let fs = finite_train_counts(s, 40);
        for n in 0..=40 {
            let mut rhs = fs[n].clone();
            for (len, m) in q.entries().filter(|(len, _)| *len <= n) {
                rhs += m * &fs[n - len];
            }
            prop_assert_eq!(&fr[n], &rhs);
        }
    }

    #[test]
    fn expansion_round_trips(r in rodset(6, 3), q in rodset(6, 3)) {
        let e = expand(&r, &q, 64);
        prop_assert!(e.identity_checked);
        let s = e.s.clone();
        prop_assert_eq!(solve_q(&finite(&r), &s, 64).unwrap().q, finite(&q));
        prop_assert_eq!(solve_r(&finite(&q), &s, 64).unwrap().r, finite(&r));
        // exchange: -Q →(-R) S
        prop_assert_eq!(solve_q(&finite(&q.negate()), &s, 64).unwrap().q, finite(&r.negate()));
    }

    #[test]
    fn odd_sign_swap_covariance(r in rodset(6, 3), q in rodset(6, 3)) {
        let s = expand(&r, &q, 8).s.as_finite().unwrap().odd_sign_swap();
        let swapped = expand(&r.odd_sign_swap(), &q.odd_sign_swap(), 8);
        prop_assert_eq!(swapped.s, finite(&s));
    }

    #[test]
    fn composition(p in rodset(4, 2), q1 in rodset(4, 2), q2 in rodset(4, 2)) {
        let r = expand(&p, &q1, 8).s.as_finite().unwrap().clone();
        let s = expand(&r, &q2, 8).s;
        prop_assert_eq!(solve_q(&finite(&p), &s, 8).unwrap().q, finite(&compose(&q1, &q2)));
    }

    #[test]
    fn dual_involution(q in rodset(6, 3)) {
        let once = dual(&finite(&q), 64).unwrap();
        prop_assert!(once.identity_checked);
        let twice = dual(&once.dual, 64).unwrap();
        prop_assert_eq!(twice.dual.counts_upto(64).unwrap(), finite(&q).counts_upto(64).unwrap());
    }

    #[test]
    fn expansion_edges(r in rodset(6, 3), q in rodset(6, 3)) {
        prop_assert_eq!(expand(&r, &RodSet::new(), 8).s, finite(&r));
        prop_assert_eq!(expand(&RodSet::new(), &q, 8).s, finite(&q.negate()));
        let to_empty = solve_q(&finite(&r), &finite(&RodSet::new()), 30).unwrap();
        let f = finite_train_counts(&r, 30);
        prop_assert_eq!(&to_empty.q.counts_upto(30).unwrap()[1..], &f[1..]);
    }

    #[test]
    fn rational_generating_function(r in nonempty(5, 2), q in rodset(5, 2)) {
        // G_R = (1 + C_Q) / (1 - C_S)
        let s = expand(&r, &q, 8).s.as_finite().unwrap().clone();
        let g = finite_train_counts(&r, 40);
        let inv = series_inverse(&char_poly(&s), 40).unwrap();
        let quotient = augment_poly(&q).mul(&inv.to_poly()).truncated(40);
        let want: Vec<BigInt> = (0..=40).map(|n| quotient.coeff(n)).collect();
        prop_assert_eq!(g, want);
    }

    #[test]
    fn inversion_round_trip(r in rodset(8, 4)) {
        let f = train_counts(&finite(&r), 32).unwrap();
        prop_assert_eq!(rodset_from_counts(&f, 32).unwrap().to_rodset(), r);
    }

    #[test]
    fn period_soundness(r in nonempty(6, 1)) {
        let rep = detect_period(&r).unwrap();
        prop_assert!(rep.window_confirmed);
        if let Some(p) = rep.least_period {
            let f = finite_train_counts(&r, 3 * p);
            for n in 0..=2 * p {
                prop_assert_eq!(&f[n], &f[n + p]);
            }
            prop_assert_eq!(rep.q_to_period.is_some(), true);
        }
    }

    #[test]
    fn antirod_periods(r in nonempty(5, 2)) {
        for hit in scan_one_expansions(&r, 40).unwrap() {
            if hit.mult_a == BigInt::from(-1) {
                let p = detect_period(&r).unwrap().least_period;
                prop_assert!(p.is_some_and(|p| (2 * hit.a) % p == 0), "{} -> [-{}] but period {:?}", r, hit.a, p);
            }
        }
    }

    #[test]
    fn scaling_hits_reproduce(r in nonempty(4, 2)) {
        prop_assume!(r.max_len().unwrap() >= 2);
        let bound = 24;
        let hits = scan_two_expansions(&r, bound).unwrap();
        let f = finite_train_counts(&r, 4 * bound);
        let mut seen = std::collections::BTreeSet::new();
        for h in &hits {
            prop_assert!(seen.insert((h.a, h.b)));
            prop_assert!(!h.alpha.is_zero() && !h.mult_b.is_zero());
            let max_q = h.b - r.max_len().unwrap();
            prop_assert_eq!(h.q.max_len().unwrap_or(0), max_q);
            for n in max_q + 1..=4 * h.b {
                let at = |k: usize| n.checked_sub(k).map_or_else(BigInt::zero, |i| f[i].clone());
                prop_assert_eq!(&f[n], &(&h.mult_a * at(h.a) + &h.mult_b * at(h.b)));
            }
        }
    }
}

#[test]
fn cyclotomic_products() {
    for p in 1..=120usize {
        let product = divisors(p).into_iter().fold(Poly::one(), |acc, d| acc.mul(&cyclotomic(d)));
        let want = Poly::monomial(BigInt::one(), p).sub(&Poly::one());
        assert_eq!(product, want, "p = {p}");
    }
}

#[test]
fn cyclotomic_degrees() {
    for d in 1..=300usize {
        // φ(d) counted directly
        let phi = (1..=d).filter(|k| num_integer::gcd(*k, d) == 1).count();
        assert_eq!(cyclotomic(d).degree(), Some(phi), "d = {d}");
        assert_eq!(totient(d), phi);
    }
}

#[test]
fn cyclotomic_cache_is_shareable() {
    let handles: Vec<_> = (0..8)
        .map(|i| std::thread::spawn(move || (1..=60).map(|d| cyclotomic(d + i)).collect::<Vec<_>>()))
        .collect();
    for h in handles {
        for p in h.join().unwrap() {
            assert!(p.coeff(p.degree().unwrap()).is_one());
        }
    }
}

#[test]
fn lucas_family_passes() {
    for (s, t) in [(1, 1), (1, 2), (2, 1), (3, 2), (2, 3), (5, 3), (4, 7)] {
        for sign in [Sign::Plus, Sign::Minus] {
            let rep = lucas_check(s, t, sign, 80).unwrap();
            assert!(rep.passed, "({s},{t},{sign:?}): {:?}", rep.counterexample);
        }
    }
}

#[test]
fn more_adjacent_shapes() {
    for (s, t, sign) in [(1, 1, Sign::Plus), (2, 3, Sign::Minus), (5, 2, Sign::Plus)] {
        let hits = lucas_two_shapes(s, t, sign, ShapeKind::Adjacent { from: 1, to: 12 }).unwrap();
        assert_eq!(hits.len(), 12);
        let r = lucas_rodset(s, t, sign).unwrap();
        for h in &hits[1..] {
            assert!(expansion::finite_quotient(&r, &h.s).is_some());
        }
    }
}

#[test]
fn reach_every_periodic_one_length_shape() {
    // R = Φ_d-derived sets expand to [p] with the reported Q
    for d in [3usize, 4, 5, 6, 7, 9, 10, 12] {
        let r = rodset_from_char_poly(&cyclotomic(d)).unwrap();
        let rep = detect_period(&r).unwrap();
        assert_eq!(rep.least_period, Some(d));
        let q = rep.q_to_period.unwrap();
        assert_eq!(expand(&r, &q, 8).s, RodSource::Finite(RodSet::from_pairs([(d, 1)])));
        assert!(r.entries().all(|(_, m)| m.abs() <= BigInt::from(2)));
    }
}

use trainyard::expansion;
use trainyard::structure::lucas_rodset;
