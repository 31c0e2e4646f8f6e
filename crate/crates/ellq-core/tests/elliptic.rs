use ellq_core::combinat::{g_poly, partitions, Partition};
use ellq_core::elliptic::*;
use ellq_core::exactq::{linalg, QPoly, RatFunc, Rational};
use ellq_core::weylgrp::{CartanType, WeylGroup};
use num_traits::{One, Zero};

fn rf(num: &[i64], den: &[i64]) -> RatFunc {
    RatFunc::new(QPoly::from_ints(num), QPoly::from_ints(den)).unwrap()
}

fn int(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

#[test]
fn small_fake_degrees() {
    let a1 = WeylGroup::parse("A1").unwrap();
    assert_eq!(elliptic_fake_degree(&a1, &a1.sign()), rf(&[1, -2, 1], &[1, 0, -1]));
    let b1 = WeylGroup::parse("B1").unwrap();
    assert_eq!(elliptic_fake_degree(&b1, &b1.trivial()), rf(&[-1, 1], &[1, 1]));
    let g2 = WeylGroup::parse("G2").unwrap();
    let f = elliptic_fake_degree(&g2, &g2.sign());
    assert_eq!(f.factored(), "(q-1)^2 * Phi5 / (Phi2^2 Phi3 Phi6)");
    assert_eq!(f, sgn_fake_degree(&[1, 5]));
}

#[test]
fn bn_closed_examples() {
    // -q(q-1)^2/(Φ2^2 Φ4)
    let f = bn_fake_closed(&Partition::new(vec![1, 1]));
    assert_eq!(f, rf(&[0, -1, 2, -1], &[1, 2, 2, 2, 1]));
    let d = dn_fake_closed(&Partition::new(vec![2])).unwrap();
    assert_eq!(d, rf(&[1, -2, 1], &[1, 2, 1]));
    assert!(dn_fake_closed(&Partition::new(vec![2, 1])).unwrap().is_zero());
}

#[test]
fn type_a_sign() {
    for n in 2..=8u32 {
        let exps: Vec<u32> = (1..n).collect();
        let expect = RatFunc::new(QPoly::from_ints(&[1, -1]).pow(n), QPoly::one_minus_q_pow(n as usize)).unwrap();
        assert_eq!(sgn_fake_degree(&exps), expect, "A{}", n - 1);
    }
    for n in 1..=5u32 {
        let w = WeylGroup::of_type(CartanType::A(n)).unwrap();
        assert_eq!(elliptic_fake_degree(&w, &w.sign()), sgn_fake_degree(&w.exponents()));
    }
}

#[test]
fn bn_closed_matches_definition() {
    for n in 1..=5u32 {
        let w = WeylGroup::of_type(CartanType::B(n)).unwrap();
        for (l, chi) in bn_basis(&w, n).unwrap() {
            assert_eq!(elliptic_fake_degree(&w, &chi), bn_fake_closed(&l), "B{n} {l:?}");
        }
    }
}

#[test]
fn dn_closed_matches_definition() {
    for n in 2..=6u32 {
        let w = WeylGroup::of_type(CartanType::D(n)).unwrap();
        for l in partitions(n) {
            let chi = w.character_by_label(&format!("{}.", l.label())).unwrap();
            assert_eq!(elliptic_fake_degree(&w, &chi), dn_fake_closed(&l).unwrap(), "D{n} {l:?}");
        }
    }
}

#[test]
fn bn_gram_is_identity() {
    for n in 1..=5u32 {
        let w = WeylGroup::of_type(CartanType::B(n)).unwrap();
        let basis: Vec<_> = bn_basis(&w, n).unwrap().into_iter().map(|x| x.1).collect();
        assert_eq!(gram(&w, &basis), linalg::identity(basis.len()), "B{n}");
    }
}

#[test]
fn dn_gram_is_diagonal() {
    for n in [2u32, 4, 6] {
        let w = WeylGroup::of_type(CartanType::D(n)).unwrap();
        let basis = dn_basis(&w, n).unwrap();
        let chars: Vec<_> = basis.iter().map(|x| x.1.clone()).collect();
        let g = gram(&w, &chars);
        for (i, (l, _)) in basis.iter().enumerate() {
            for j in 0..basis.len() {
                let expect = if i != j { Rational::zero() } else if l.is_self_conjugate() { int(2) } else { Rational::one() };
                assert_eq!(g[i][j], expect, "D{n} {l:?}");
            }
        }
        assert_eq!(basis.len(), w.elliptic_classes().len());
    }
}

#[test]
fn hook_content_bridge() {
    let t = RatFunc::from_poly(QPoly::q_pow(2));
    let s = RatFunc::from_poly(QPoly::from_ints(&[0, -1]));
    for n in 1..=5u32 {
        let w = WeylGroup::of_type(CartanType::B(n)).unwrap();
        let scale = RatFunc::from_poly(QPoly::from_ints(&[-1, 1]).pow(n)).inv().unwrap();
        for (l, chi) in bn_basis(&w, n).unwrap() {
            let lhs = &elliptic_fake_degree(&w, &chi) * &scale;
            assert_eq!(lhs, g_poly(&l, &t, &s).unwrap(), "B{n} {l:?}");
        }
    }
}

#[test]
fn sign_twist() {
    for name in ["A3", "B3", "D4", "G2", "F4", "A1xB2"] {
        let w = WeylGroup::parse(name).unwrap();
        let sgn = w.sign();
        let sign = if w.rank().is_multiple_of(2) { Rational::one() } else { -Rational::one() };
        for i in 0..w.num_irreps() {
            let a = w.character(i);
            let twisted: Vec<Rational> = a.iter().zip(&sgn).map(|(x, y)| x * y).collect();
            for j in 0..w.num_irreps() {
                let b = w.character(j);
                assert_eq!(elliptic_pairing(&w, &twisted, &b), &sign * elliptic_pairing(&w, &a, &b), "{name}");
            }
        }
    }
}

#[test]
fn induced_characters_do_not_change_fake_degrees() {
    let w = WeylGroup::parse("B3").unwrap();
    let sub = w.parabolic(&[0, 1]).unwrap();
    let ind = w.induce(&sub, &sub.trivial()).unwrap();
    let chi = w.character_by_label("21.").unwrap();
    let moved: Vec<Rational> = chi.iter().zip(&ind).map(|(a, b)| a + b * int(3)).collect();
    assert_eq!(elliptic_fake_degree(&w, &moved), elliptic_fake_degree(&w, &chi));
}

#[test]
fn independence() {
    for n in 2..=6u32 {
        for t in [CartanType::B(n), CartanType::D(n)] {
            let w = WeylGroup::of_type(t).unwrap();
            let r = independence_check(&w);
            // B5 and B6 carry a genuine linear relation, see below
            assert_eq!(r.independent, !matches!(t, CartanType::B(5) | CartanType::B(6)), "{t}");
        }
    }
    let b5 = independence_check(&WeylGroup::parse("B5").unwrap());
    assert_eq!((b5.elliptic_classes, b5.rank), (7, 6));
    let b6 = independence_check(&WeylGroup::parse("B6").unwrap());
    assert_eq!((b6.elliptic_classes, b6.rank), (11, 10));
    let a4 = independence_check(&WeylGroup::parse("A4").unwrap());
    assert_eq!((a4.elliptic_classes, a4.independent), (1, true));
    let f4 = independence_check(&WeylGroup::parse("F4").unwrap());
    assert_eq!(f4.elliptic_classes, 9);
    assert_eq!(f4.coincident.len(), 1);
    assert_eq!(f4.coincident[0].2, &QPoly::from_ints(&[1, 0, 0, 1]) * &QPoly::from_ints(&[1, 1]));
}

#[test]
fn radical() {
    for (name, k) in [("B2", 2), ("G2", 3), ("B3", 3), ("A3", 1), ("D4", 3)] {
        let r = radical_check(&WeylGroup::parse(name).unwrap()).unwrap();
        assert!(r.ok(), "{name}: {r:?}");
        assert_eq!(r.gram_rank, k, "{name}");
    }
}

#[test]
fn cyc_values() {
    let rows = [
        (vec![1, 5], "Phi2^2 Phi3 Phi6"),
        (vec![1, 5, 7, 11], "Phi2^4 Phi3^2 Phi4^2 Phi6^2 Phi8 Phi12"),
        (vec![1, 4, 5, 7, 8, 11], "Phi2^2 Phi3^3 Phi6^2 Phi9 Phi12"),
    ];
    for (e, s) in rows {
        assert_eq!(cyc(&e).unwrap().render(), s);
    }
}

#[test]
fn b5_relation() {
    // 1/((1+q^3)(1+q^2)) - 3/((1+q^3)(1+q)^2) + 2/((1+q^2)(1+q)^3) = 0
    let p = |a: &[usize]| {
        let mut d = QPoly::one();
        for &k in a {
            d = &d * &(&QPoly::one() + &QPoly::q_pow(k));
        }
        RatFunc::new(QPoly::one(), d).unwrap()
    };
    let s = &(&p(&[3, 2]) - &p(&[3, 1, 1]).scale(&int(3))) + &p(&[2, 1, 1, 1]).scale(&int(2));
    assert!(s.is_zero());
}
