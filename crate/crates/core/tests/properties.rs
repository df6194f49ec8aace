use nnrep_core::boolean::{dl_to_dom_circuit, families, input_from_index};
use nnrep_core::numerics::{resolution_scalar, Rational, RationalMatrix};
use nnrep_core::repr::{construct_edl, construct_ldl_general, construct_sym_elt, construct_sym_lt};
use nnrep_core::verify::{verify_exhaustive, FnOracle, Oracle};
use nnrep_core::{AnchorSet, Circuit, DecisionList, Family, SymmetricProfile, ThresholdGate};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed};
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = Rational> {
    (any::<i64>(), any::<i64>().prop_filter("nonzero", |d| *d != 0)).prop_map(|(n, d)| Rational::new(n, d))
}

fn normalized(q: &Rational) -> bool {
    q.denom().is_positive() && q.numer().gcd(q.denom()).is_one()
}

/// Smallest `r` with `|a+1| ≤ 2^r` and `|b+1| ≤ 2^r`, by counting up.
fn naive_resolution(q: &Rational) -> u64 {
    let a = (q.numer() + BigInt::one()).abs();
    let b = (q.denom() + BigInt::one()).abs();
    let mut r = 0u64;
    let mut p = BigInt::one();
    while p < a || p < b {
        p <<= 1;
        r += 1;
    }
    r
}

proptest! {
    #[test]
    fn arithmetic_stays_normalized(a in rational(), b in rational()) {
        prop_assert!(normalized(&(&a + &b)));
        prop_assert!(normalized(&(&a - &b)));
        prop_assert!(normalized(&(&a * &b)));
        if !b.is_zero() {
            let q = &a / &b;
            prop_assert!(normalized(&q));
            prop_assert_eq!(&q * &b, a);
        }
    }

    #[test]
    fn text_round_trip(a in rational()) {
        let back: Rational = a.to_string().parse().unwrap();
        prop_assert_eq!(back, a);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10_000))]

    #[test]
    fn resolution_matches_naive(n in any::<i64>(), d in 1i64..=i64::MAX) {
        let q = Rational::new(n, d);
        prop_assert_eq!(resolution_scalar(&q), naive_resolution(&q));
    }
}

proptest! {
    #[test]
    fn pseudo_inverse_is_right_inverse(
        (m, n, entries) in (1usize..=6)
            .prop_flat_map(|n| (1..=n, Just(n)))
            .prop_flat_map(|(m, n)| (Just(m), Just(n), proptest::collection::vec(-5i64..=5, m * n)))
    ) {
        let rows: Vec<Vec<i64>> = entries.chunks(n).map(<[i64]>::to_vec).collect();
        let w = RationalMatrix::from_integer_rows(&rows).unwrap();
        match w.pseudo_inverse() {
            Ok(p) => prop_assert_eq!(w.mul(&p).unwrap(), RationalMatrix::identity(m)),
            Err(_) => prop_assert!(w.gram().det().unwrap().is_zero()),
        }
    }

    #[test]
    fn intervals_round_trip(bits in proptest::collection::vec(any::<bool>(), 1..12)) {
        let p = SymmetricProfile::new(bits).unwrap();
        let bounds = p.intervals();
        let values: Vec<bool> = bounds.iter().map(|&b| p.value(b)).collect();
        prop_assert_eq!(SymmetricProfile::from_intervals(&bounds, &values).unwrap(), p);
    }

    #[test]
    fn list_matches_dom_compilation(
        (n, _m, weights, biases, outputs, default) in (1usize..=8)
            .prop_flat_map(|n| (Just(n), 1usize..=5))
            .prop_flat_map(|(n, m)| (
                Just(n),
                Just(m),
                proptest::collection::vec(-4i64..=4, n * m),
                proptest::collection::vec(-6i64..=6, m),
                proptest::collection::vec(any::<bool>(), m),
                any::<bool>(),
            ))
    ) {
        let gates = weights
            .chunks(n)
            .zip(&biases)
            .map(|(w, &b)| ThresholdGate::linear(w.to_vec(), b).unwrap())
            .collect();
        let l = DecisionList::new(gates, outputs, default).unwrap();
        let dom = dl_to_dom_circuit(&l);
        for v in 0..1usize << n {
            let x = input_from_index(v, n);
            prop_assert_eq!(l.eval(&x).unwrap(), dom.eval(&x).unwrap());
        }
    }
}

fn constructed_sets() -> Vec<(AnchorSet, Circuit)> {
    let mut out = Vec::new();
    for f in Family::ALL {
        for m in 1..=2 {
            let (c, s) = f.build(m, 1).unwrap();
            out.push((s, c));
        }
    }
    for p in [[1u8, 0, 0, 1], [0, 1, 1, 0], [1, 1, 0, 1]] {
        let prof = SymmetricProfile::from_bits(&p).unwrap();
        let c = families::compose_disjoint(prof.clone(), &families::build_eq(1), 3);
        out.push((construct_sym_elt(&c, None).unwrap(), Circuit::Depth2(c)));
        let c = families::compose_disjoint(prof, &families::build_and2(), 3);
        out.push((construct_sym_lt(&c, None).unwrap(), Circuit::Depth2(c)));
    }
    let l = families::five_input_ldl();
    out.push((construct_ldl_general(&l).unwrap(), Circuit::List(l)));
    let l = families::omb_eq(2, 1);
    out.push((construct_edl(&l, None).unwrap(), Circuit::List(l)));
    out
}

#[test]
fn complement_closure() {
    let sets = constructed_sets();
    assert!(sets.len() >= 20);
    for (s, c) in &sets {
        let not_c = FnOracle::new(c.arity(), |x: &[bool]| !Oracle::eval(c, x));
        let r = verify_exhaustive(&s.complement(), &not_c).unwrap();
        assert!(r.pass, "{:?}", s.construction());
        let direct = verify_exhaustive(s, c).unwrap();
        assert_eq!(r.min_margin, direct.min_margin);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn verdict_ignores_anchor_order(which in 0usize..24, seed in any::<u64>()) {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let sets = constructed_sets();
        let (s, c) = &sets[which % sets.len()];
        let mut perm: Vec<usize> = (0..s.len()).collect();
        perm.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed));
        let p = s.permuted(&perm).unwrap();
        let a = verify_exhaustive(s, c).unwrap();
        let b = verify_exhaustive(&p, c).unwrap();
        prop_assert_eq!(a.pass, b.pass);
        prop_assert_eq!(a.min_margin, b.min_margin);
        prop_assert_eq!(a.ties, b.ties);

        let mut flipped: Vec<bool> = s.labels().to_vec();
        flipped[0] = !flipped[0];
        let broken = AnchorSet::manual(s.anchors().to_rows(), flipped).unwrap();
        let q = broken.permuted(&perm).unwrap();
        prop_assert_eq!(
            verify_exhaustive(&broken, c).unwrap().failure_count,
            verify_exhaustive(&q, c).unwrap().failure_count
        );
    }
}
