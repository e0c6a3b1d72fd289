use num_bigint::BigInt;
use num_rational::BigRational;
use perfmatch_core::{IntPoly, PolyFrac};
use proptest::prelude::*;

fn int_poly() -> impl Strategy<Value = IntPoly> {
    prop::collection::vec(-6i64..=6, 0..5).prop_map(|c| IntPoly::from_i64s(&c))
}

fn frac() -> impl Strategy<Value = PolyFrac> {
    (int_poly(), int_poly(), 0usize..3).prop_filter_map("nonzero denominator", |(n, d, k)| {
        if d.is_zero() {
            return None;
        }
        PolyFrac::new(n, d.shift_up(k)).ok()
    })
}

fn point() -> impl Strategy<Value = BigRational> {
    (-7i64..=7, 1i64..=5).prop_map(|(a, b)| BigRational::new(BigInt::from(a), BigInt::from(b)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn field_axioms(a in frac(), b in frac(), c in frac()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert!((&a - &a).is_zero());
        if !a.is_zero() {
            prop_assert!((&a * &a.inv().unwrap()).is_one());
            prop_assert_eq!((&b * &a).checked_div(&a).unwrap(), b.clone());
        }
    }

    #[test]
    fn denominators_are_normalized(a in frac(), b in frac()) {
        for v in [&a * &b, &a + &b, &a - &b] {
            let den = v.denominator();
            prop_assert!(den.lead().unwrap() > &BigInt::from(0));
            prop_assert!(v.numerator().gcd(den).is_one());
        }
    }

    #[test]
    fn text_round_trips(a in frac()) {
        let back: PolyFrac = a.to_string().parse().unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn evaluation_is_a_homomorphism(a in frac(), b in frac(), t in point()) {
        if let (Ok(x), Ok(y)) = (a.evaluate(&t), b.evaluate(&t)) {
            prop_assert_eq!((&a * &b).evaluate(&t).unwrap(), &x * &y);
            prop_assert_eq!((&a + &b).evaluate(&t).unwrap(), &x + &y);
        }
    }

    #[test]
    fn laurent_round_trips(terms in prop::collection::btree_map(-4i64..=4, -5i64..=5, 0..5)) {
        let terms = terms.into_iter().filter(|(_, c)| *c != 0).map(|(k, c)| (k, BigInt::from(c))).collect();
        let p = PolyFrac::from_laurent(&terms);
        prop_assert_eq!(p.as_laurent().unwrap(), terms);
    }
}
