use ellq_core::exactq::{cyclotomic, rat, ratfunc_from_factored_json, QPoly, RatFunc};
use ellq_core::fixtures::Fixtures;
use ellq_core::fourier::SmallGroup;
use ellq_core::unipotent::*;
use ellq_core::weylgrp::WeylGroup;
use serde_json::json;

fn f(v: serde_json::Value) -> RatFunc {
    ratfunc_from_factored_json(&v).unwrap()
}

fn case(id: &str) -> RatFunc {
    let data = UnipotentData::load(&Fixtures::embedded()).unwrap();
    let c = data.case(id).unwrap();
    let g = data.group(&c.group).unwrap();
    let p = g.point(&c.point).unwrap();
    let u = g.class(&c.u).unwrap();
    assert!(is_elliptic(&g.dual, &p.point, &u.marks), "{id}");
    m_x(&g.dual, &p.point, &u.marks).unwrap()
}

#[test]
fn mx_examples() {
    // q(q-1)^2/(Φ2^2 Φ3)
    assert_eq!(case("g2-a1-s0"), f(json!({"q": 1, "phi": {"1": 2, "2": -2, "3": -1}})));
    assert_eq!(case("sl2-reg"), f(json!({"phi": {"1": 1, "2": -1}})));
    // q(q-1)^2/(Φ2^2 Φ6), not the printed Φ2 Φ6
    assert_eq!(case("g2-a1-s1"), f(json!({"q": 1, "phi": {"1": 2, "2": -2, "6": -1}})));
    assert_eq!(case("g2-a1-s2"), f(json!({"q": 1, "phi": {"1": 2, "3": -1, "6": -1}})));
    // regular u, s = 1: the sign fake degree up to sign
    let g2 = WeylGroup::parse("G2").unwrap();
    assert_eq!(case("g2-reg"), ellq_core::elliptic::elliptic_fake_degree(&g2, &g2.sign()));
}

#[test]
fn g2_a1_marks_are_even_and_distinguished() {
    let d = DualRootDatum::parse("G2").unwrap();
    let h = SL2Marks::new(vec![0, 2]);
    let mut w: Vec<i64> = d.roots().iter().map(|r| h.weight(r)).collect();
    w.sort();
    assert_eq!(w, vec![-4, -2, -2, -2, -2, 0, 0, 2, 2, 2, 2, 4]);
    assert!(is_elliptic(&d, &SemisimplePoint::identity(2), &h));
    assert!(!is_elliptic(&d, &SemisimplePoint::identity(2), &SL2Marks::new(vec![2, 0])));
    // s with Z(s) = A1 x A1 but u = 1 is not elliptic
    assert!(!is_elliptic(&d, &SemisimplePoint::new(vec![rat(1, 2), rat(1, 2)]), &SL2Marks::new(vec![0, 0])));
    let s1 = SemisimplePoint::new(vec![rat(1, 2), rat(1, 2)]);
    assert_eq!(centralizer_roots(&d, &s1).len(), 4);
    let s2 = SemisimplePoint::new(vec![rat(1, 3), rat(0, 1)]);
    assert_eq!(centralizer_roots(&d, &s2).len(), 6);
}

#[test]
fn mx_rejects_non_rational_data() {
    // a point of order 5 in SL2 with u = 1 gives ζ-parts that do not cancel
    let d = DualRootDatum::parse("SL2").unwrap();
    let s = SemisimplePoint::new(vec![rat(1, 5)]);
    assert!(m_x(&d, &s, &SL2Marks::new(vec![0])).is_err());
}

#[test]
fn g2_conjecture_pipeline() {
    let fx = Fixtures::embedded();
    let s3 = SmallGroup::parse("S3").unwrap();
    let fakes = npoly_fakes(&fx, "g2_npolys", "G2(a1)").unwrap();
    let table = fx.load("g2_formal_degrees").unwrap();
    let printed = |pair: &str| -> RatFunc {
        let row = table["rows"].as_array().unwrap().iter().find(|r| r["pair"] == pair).unwrap();
        ratfunc_from_factored_json(&row["value"]).unwrap()
    };
    for pair in ["(1,1)", "(1,r)", "(1,eps)", "(g3,1)", "(g3,theta)", "(g3,theta2)"] {
        assert_eq!(conjecture_rhs(&s3, pair, &fakes, 1).unwrap(), printed(pair), "{pair}");
    }
    let expect = f(json!({"scalar": "1/2", "q": 1, "phi": {"1": 2, "2": -2, "6": -1}}));
    for pair in ["(g2,1)", "(g2,eps)"] {
        let got = conjecture_rhs(&s3, pair, &fakes, 1).unwrap();
        assert_eq!(got, expect, "{pair}");
        assert_ne!(got, printed(pair), "{pair}");
    }
}

#[test]
fn product_formula_agrees_with_the_pipeline() {
    let fx = Fixtures::embedded();
    let data = UnipotentData::load(&fx).unwrap();
    let g = data.group("G2").unwrap();
    let u = g.class("G2(a1)").unwrap();
    let s3 = SmallGroup::parse("S3").unwrap();
    let fakes = npoly_fakes(&fx, "g2_npolys", "G2(a1)").unwrap();
    let table = PacketTable::load(&fx, "g2_packets").unwrap();
    assert_eq!(table.rows.len(), s3.m_set().len());
    for row in &table.rows {
        let pair = s3.find_pair(&row.pair).unwrap();
        let p = &s3.m_set()[pair];
        let point = g.point_for_class(&p.x_label).unwrap();
        let m = m_x(&g.dual, &point.point, &u.marks).unwrap();
        let deg = s3.centralizer_chars(p.class)[p.sigma].degree;
        let thm = product_formal_degree(&m, deg, s3.centralizer_order(p.class), g.dual.center_order());
        assert_eq!(thm, conjecture_rhs(&s3, &row.pair, &fakes, 1).unwrap(), "{}", row.pair);
        // the equivalent form through Γ_u-characters
        let eq = conj_equiv(&s3, &p.x_label, deg, &fakes, 1).unwrap();
        assert_eq!(eq, thm, "{}", row.pair);
    }
}

#[test]
fn springer_restrictions_reproduce_the_npolys() {
    let fx = Fixtures::embedded();
    let data = UnipotentData::load(&fx).unwrap();
    let g = data.group("G2").unwrap();
    let w = WeylGroup::parse(&g.weyl).unwrap();
    for u in ["G2", "G2(a1)"] {
        let class = g.class(u).unwrap();
        let sp = class.springer_characters(&w).unwrap();
        let fakes = npoly_fakes(&fx, "g2_npolys", u).unwrap();
        for (phi, x) in &sp {
            let expect = &fakes.iter().find(|(l, _)| l == phi).unwrap().1;
            assert_eq!(&q_part_prediction(&w, x), expect, "{u} {phi}");
        }
    }
    // conj-equiv through the class function H^•(B_u)^s, then compare with m_x
    let s3 = SmallGroup::parse("S3").unwrap();
    let class = g.class("G2(a1)").unwrap();
    let sp = class.springer_characters(&w).unwrap();
    for p in &g.points {
        let h = springer_class_function(&w, &s3, &p.gamma_class, &sp).unwrap();
        let m = m_x(&g.dual, &p.point, &class.marks).unwrap();
        assert_eq!(q_part_prediction(&w, &h), m, "{}", p.name);
        let c = s3.class_index(&p.gamma_class).unwrap();
        let a = s3.centralizer_order(c);
        assert_eq!(conj_equiv_class_function(&w, &h, 1, a, 1), product_formal_degree(&m, 1, a, 1));
    }
}

#[test]
fn npoly_orthonormal_basis_exhausts_the_elliptic_norm() {
    // Σ F_i^2 = (q-1)^{2l} ⟨S_qE, S_qE⟩^el for an orthonormal basis of the elliptic space
    let fx = Fixtures::embedded();
    let w = WeylGroup::parse("G2").unwrap();
    let mut fs = npoly_fakes(&fx, "g2_npolys", "G2").unwrap();
    fs.extend(npoly_fakes(&fx, "g2_npolys", "G2(a1)").unwrap());
    assert_eq!(fs.len(), w.elliptic_classes().len());
    let lhs = RatFunc::sum(&fs.iter().map(|(_, x)| x * x).collect::<Vec<_>>());
    let terms: Vec<RatFunc> = w
        .elliptic_classes()
        .into_iter()
        .map(|c| {
            let k = w.det_one_minus(c) * rat(w.class_size(c) as i64, w.order() as i64);
            RatFunc::new(QPoly::constant(k), w.charpoly(c).pow(2)).unwrap()
        })
        .collect();
    let rhs = &RatFunc::from_poly(QPoly::from_ints(&[-1, 1]).pow(4)) * &RatFunc::sum(&terms);
    assert_eq!(lhs, rhs);
}

#[test]
fn sp4_example() {
    let fx = Fixtures::embedded();
    let doc = fx.load("sp4_formal").unwrap();
    let fakes: Vec<(String, RatFunc)> = doc["fakes"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| (r["gamma_char"].as_str().unwrap().to_string(), ratfunc_from_factored_json(&r["value"]).unwrap()))
        .collect();
    // the fake degrees are ∓F for the bipartition (11, ∅) of B2
    let b = ellq_core::elliptic::bn_fake_closed(&ellq_core::combinat::Partition::new(vec![1, 1]));
    assert_eq!(fakes[0].1, b.scale(&rat(-1, 1)));
    assert_eq!(fakes[1].1, b);
    let z2 = SmallGroup::parse("Z2").unwrap();
    for r in doc["rows"].as_array().unwrap() {
        let pair = r["pair"].as_str().unwrap();
        let got = conjecture_rhs(&z2, pair, &fakes, 2).unwrap();
        assert_eq!(got, ratfunc_from_factored_json(&r["value"]).unwrap(), "{pair}");
    }
    // product formula for the two discrete series
    let data = UnipotentData::load(&fx).unwrap();
    let g = data.group("Sp4").unwrap();
    let u = g.class("(2,2)").unwrap();
    let tau = g.point("tau").unwrap();
    let m = m_x(&g.dual, &tau.point, &u.marks).unwrap();
    assert_eq!(m, fakes[0].1.scale(&rat(2, 1)));
    assert_eq!(product_formal_degree(&m, 1, 2, 2), conjecture_rhs(&z2, "(tau,1)", &fakes, 2).unwrap());
    // q-part from the Springer class function
    let w = WeylGroup::parse(&g.weyl).unwrap();
    let sp = u.springer_characters(&w).unwrap();
    let h = springer_class_function(&w, &z2, "tau", &sp).unwrap();
    assert_eq!(q_part_prediction(&w, &h), m);
    // distinct packets have distinct q-parts
    let reg = g.class("(4)").unwrap();
    let m4 = m_x(&g.dual, &g.point("1").unwrap().point, &reg.marks).unwrap();
    assert_ne!(m4, m);
    let hr = springer_class_function(&w, &SmallGroup::trivial(), "1", &reg.springer_characters(&w).unwrap()).unwrap();
    assert_eq!(q_part_prediction(&w, &hr), m4);
}

#[test]
fn npoly_cyc_matches_exponents() {
    let fx = Fixtures::embedded();
    let doc = fx.load("g2_npolys").unwrap();
    let mut p = QPoly::one();
    for (k, e) in doc["cyc"].as_object().unwrap() {
        p = &p * &cyclotomic(k.parse().unwrap()).pow(e.as_u64().unwrap() as u32);
    }
    let sgn = ellq_core::elliptic::sgn_fake_degree(&[1, 5]);
    assert_eq!(sgn.den(), &p);
}
