use ellq_core::exactq::{ratfunc_from_factored_report, ratfunc_to_factored_report, QPoly, RatFunc, Rational};
use proptest::prelude::*;

fn poly() -> impl Strategy<Value = QPoly> {
    prop::collection::vec(-4i64..=4, 1..5).prop_map(|c| QPoly::from_ints(&c))
}

fn ratfunc() -> impl Strategy<Value = RatFunc> {
    (poly(), poly()).prop_filter_map("zero denominator", |(n, d)| RatFunc::new(n, d).ok())
}

// products of (1 - q^k)^a (1 + q^k)^b, times q^e and a rational constant
fn cyclotomic() -> impl Strategy<Value = RatFunc> {
    (prop::collection::vec((1usize..7, -2i32..3, -2i32..3), 0..4), 0i32..3, -5i64..6, 1i64..6).prop_map(
        |(fs, e, a, b)| {
            let mut f = RatFunc::q().pow(e).unwrap().scale(&Rational::new(a.into(), b.into()));
            for (k, x, y) in fs {
                let mut minus = vec![0; k + 1];
                minus[0] = 1;
                minus[k] = -1;
                let mut plus = minus.clone();
                plus[k] = 1;
                f = &f * &RatFunc::from_poly(QPoly::from_ints(&minus)).pow(x).unwrap();
                f = &f * &RatFunc::from_poly(QPoly::from_ints(&plus)).pow(y).unwrap();
            }
            f
        },
    )
}

proptest! {
    #[test]
    fn field_laws(a in ratfunc(), b in ratfunc(), c in ratfunc()) {
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
        prop_assert_eq!(&(&a - &b) + &b, a.clone());
        if !b.is_zero() {
            prop_assert_eq!(&(&a / &b) * &b, a.clone());
        }
    }

    #[test]
    fn evaluation_is_a_homomorphism(a in ratfunc(), b in ratfunc(), x in -7i64..8, y in 1i64..5) {
        let x = Rational::new(x.into(), y.into());
        if let (Ok(u), Ok(v), Ok(w)) = (a.eval(&x), b.eval(&x), (&a * &b).eval(&x)) {
            prop_assert_eq!(w, u * v);
        }
    }

    #[test]
    fn factored_report_round_trips(f in cyclotomic()) {
        let r = ratfunc_to_factored_report(&f);
        prop_assert_eq!(ratfunc_from_factored_report(&r).unwrap(), f);
    }
}
