//! Randomized law checking for the sequence algebra; every assertion is an
//! exact identity in the ring at hand.

use num_bigint::BigInt;
use proptest::prelude::*;

use hurwitz_core::{
    binomial_from_u, comp_inverse, hurwitz_inverse, hurwitz_inverse_via_relinv, parse_seq,
    serialize_seq, tau_forward, tau_inverse, u_from_binomial, Ring, RingValue, Seq, TransformSpec,
    UnitSeq,
};

fn z() -> Ring {
    Ring::integers()
}

fn q() -> Ring {
    Ring::rationals()
}

fn int_seq(ring: &Ring, terms: &[i64]) -> Seq {
    Seq::from_i64s(ring, terms)
}

fn rational_seq(terms: &[(i64, u8)]) -> Seq {
    let values = terms
        .iter()
        .map(|&(n, d)| RingValue::rational(BigInt::from(n), BigInt::from(d)).unwrap())
        .collect();
    Seq::new(q(), values).unwrap()
}

fn terms(max_len: usize) -> impl Strategy<Value = Vec<i64>> {
    proptest::collection::vec(-9i64..=9, 1..=max_len)
}

fn rational_terms(max_len: usize) -> impl Strategy<Value = Vec<(i64, u8)>> {
    proptest::collection::vec((-9i64..=9, 1u8..=9), 1..=max_len)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    // n!-weighting intertwines the Cauchy and Hurwitz products
    #[test]
    fn gamma_intertwines_products(a in terms(8), b in terms(8)) {
        let a = int_seq(&z(), &a);
        let b = int_seq(&z(), &b);
        prop_assert_eq!(
            a.cauchy(&b).unwrap().gamma(),
            a.gamma().hurwitz(&b.gamma()).unwrap()
        );
    }

    // weighting is reversible, through the fraction field when needed
    #[test]
    fn gamma_round_trips(a in terms(8), b in rational_terms(8)) {
        let a = int_seq(&z(), &a);
        prop_assert_eq!(a.gamma().gamma_inv().unwrap(), a);
        let b = rational_seq(&b);
        prop_assert_eq!(b.gamma().gamma_inv().unwrap(), b);
    }

    // products only look at the prefix they return
    #[test]
    fn truncation_locality(a in terms(8), b in terms(8), k in 1usize..=4) {
        let a = int_seq(&z(), &a);
        let b = int_seq(&z(), &b);
        let k = k.min(a.len()).min(b.len());
        let at = a.truncate(k).unwrap();
        let bt = b.truncate(k).unwrap();
        prop_assert_eq!(a.hurwitz(&b).unwrap().truncate(k).unwrap(), at.hurwitz(&bt).unwrap());
        prop_assert_eq!(a.cauchy(&b).unwrap().truncate(k).unwrap(), at.cauchy(&bt).unwrap());
        prop_assert_eq!(a.hadamard(&b).unwrap().truncate(k).unwrap(), at.hadamard(&bt).unwrap());
        prop_assert_eq!(a.add(&b).unwrap().truncate(k).unwrap(), at.add(&bt).unwrap());
    }

    // two-sided inverse for the Hurwitz product over Q
    #[test]
    fn hurwitz_inverse_is_two_sided(a in rational_terms(8), head in 1i64..=9) {
        let mut a = rational_seq(&a);
        let mut t = a.terms().to_vec();
        t[0] = RingValue::rational(BigInt::from(head), BigInt::from(1)).unwrap();
        a = Seq::new(q(), t).unwrap();
        let inv = hurwitz_inverse(&a).unwrap();
        let one = Seq::hurwitz_identity(&q(), a.len());
        prop_assert_eq!(a.hurwitz(&inv).unwrap(), one.clone());
        prop_assert_eq!(inv.hurwitz(&a).unwrap(), one);
        prop_assert_eq!(hurwitz_inverse(&inv).unwrap(), a);
    }

    // the division-free route agrees with the recursion when 2 is not a unit
    #[test]
    fn hurwitz_inverse_mod_eight(a in terms(6)) {
        let ring = Ring::integers_mod(8u32).unwrap();
        let mut a = int_seq(&ring, &a);
        let mut t = a.terms().to_vec();
        t[0] = ring.from_i64(3); // any odd head is a unit mod 8
        a = Seq::new(ring.clone(), t).unwrap();
        prop_assert_eq!(hurwitz_inverse_via_relinv(&a).unwrap(), hurwitz_inverse(&a).unwrap());
    }

    // two-sided inverse for composition over Q
    #[test]
    fn comp_inverse_is_two_sided(a in rational_terms(7), slope in 1i64..=9) {
        let mut t = rational_seq(&a).terms().to_vec();
        t[0] = q().zero();
        if t.len() > 1 {
            t[1] = RingValue::rational(BigInt::from(slope), BigInt::from(2)).unwrap();
        }
        let a = Seq::new(q(), t).unwrap();
        prop_assume!(a.len() >= 2);
        let inv = comp_inverse(&a).unwrap();
        let id = Seq::composition_identity(&q(), a.len());
        prop_assert_eq!(a.compose_egf(&inv).unwrap(), id.clone());
        prop_assert_eq!(inv.compose_egf(&a).unwrap(), id);
    }

    // composition is associative on zero-headed inner sequences
    #[test]
    fn composition_is_associative(a in terms(6), b in terms(6), c in terms(6)) {
        let a = int_seq(&z(), &a);
        let mut b = int_seq(&z(), &b).terms().to_vec();
        b[0] = z().zero();
        let b = Seq::new(z(), b).unwrap();
        let mut c = int_seq(&z(), &c).terms().to_vec();
        c[0] = z().zero();
        let c = Seq::new(z(), c).unwrap();
        prop_assert_eq!(
            a.compose_egf(&b).unwrap().compose_egf(&c).unwrap(),
            a.compose_egf(&b.compose_egf(&c).unwrap()).unwrap()
        );
    }

    // the exponent isomorphism: round trip and additivity
    #[test]
    fn tau_round_trips_and_adds(x in terms(6), y in terms(6)) {
        let x = int_seq(&z(), &x);
        let image = tau_forward(&x, x.len() + 1).unwrap();
        prop_assert_eq!(tau_inverse(&image).unwrap(), x.clone());

        let k = x.len().min(y.len());
        let x = x.truncate(k).unwrap();
        let y = int_seq(&z(), &y).truncate(k).unwrap();
        let sum_image = tau_forward(&x.add(&y).unwrap(), k + 1).unwrap();
        let product = tau_forward(&x, k + 1)
            .unwrap()
            .seq()
            .hurwitz(tau_forward(&y, k + 1).unwrap().seq())
            .unwrap();
        prop_assert_eq!(sum_image.seq(), &product);
    }

    // inverted transforms undo the originals
    #[test]
    fn inverted_transform_undoes(a in rational_terms(7), b in rational_terms(7), r in 1i64..=9) {
        let n = a.len().min(b.len());
        let a = rational_seq(&a).truncate(n).unwrap();
        let mut b = rational_seq(&b).truncate(n).unwrap().terms().to_vec();
        b[0] = q().zero();
        if n > 1 {
            b[1] = RingValue::rational(BigInt::from(r), BigInt::from(3)).unwrap();
        }
        let b = Seq::new(q(), b).unwrap();
        prop_assume!(n >= 2);
        let specs = [
            TransformSpec::ComposeBy(b),
            TransformSpec::HadamardBeta(RingValue::rational(BigInt::from(r), BigInt::from(2)).unwrap()),
            TransformSpec::AltSign,
            TransformSpec::Stirling,
            TransformSpec::StirlingInverse,
        ];
        for spec in specs {
            let undone = spec.inverted().unwrap().apply(&spec.apply(&a).unwrap()).unwrap();
            prop_assert_eq!(undone, a.clone());
        }
    }

    // exponent sequences survive the trip through their polynomial family
    #[test]
    fn u_recovery_round_trips(u in terms(5)) {
        let u = int_seq(&z(), &u);
        let fam = binomial_from_u(&u, u.len() + 1).unwrap();
        prop_assert_eq!(u_from_binomial(&fam).unwrap(), u);
    }

    // integer specializations of a family agree with Hurwitz powers
    #[test]
    fn family_specializes_to_powers(a in terms(6), m in 0u64..=4) {
        let mut t = int_seq(&z(), &a).terms().to_vec();
        t[0] = z().one();
        let a = UnitSeq::new(Seq::new(z(), t).unwrap()).unwrap();
        let polys = hurwitz_core::pa_polynomials(&a, a.seq().len()).unwrap();
        let point = z().from_i64(m as i64);
        let evaluated: Vec<RingValue> = polys
            .seq()
            .terms()
            .iter()
            .map(|p| p.as_polynomial().unwrap().eval(&point).unwrap())
            .collect();
        prop_assert_eq!(Seq::new(z(), evaluated).unwrap(), a.seq().hurwitz_power(m));
    }

    // serialized documents parse back, and the canonical form is stable
    #[test]
    fn documents_round_trip(a in terms(8), b in rational_terms(8)) {
        for seq in [int_seq(&z(), &a), rational_seq(&b)] {
            let text = serialize_seq(&seq);
            let back = parse_seq(&text).unwrap();
            prop_assert_eq!(&back, &seq);
            prop_assert_eq!(serialize_seq(&back), text);
        }
    }
}
