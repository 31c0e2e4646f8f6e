use ellq_core::affine::*;
use ellq_core::elliptic::{elliptic_fake_degree, sgn_fake_degree};
use ellq_core::exactq::{linalg, rat, ratfunc_from_factored_json, RatFunc, Rational};
use ellq_core::fixtures::Fixtures;
use ellq_core::fourier::SmallGroup;
use ellq_core::unipotent::{npoly_fakes, conjecture_rhs};
use serde_json::json;

fn f(v: serde_json::Value) -> RatFunc {
    ratfunc_from_factored_json(&v).unwrap()
}

fn g2() -> AffineDatum {
    AffineDatum::parse("G2").unwrap()
}

fn printed_formal(pair: &str) -> RatFunc {
    let t = Fixtures::embedded().load("g2_formal_degrees").unwrap();
    let row = t["rows"].as_array().unwrap().iter().find(|r| r["pair"] == pair).unwrap();
    ratfunc_from_factored_json(&row["value"]).unwrap()
}

#[test]
fn maximal_parabolic_types() {
    let types = |s: &str| -> Vec<String> {
        AffineDatum::parse(s).unwrap().maximal_parabolics().unwrap().iter().map(|p| p.spec.to_string()).collect()
    };
    assert_eq!(types("G2"), vec!["G2", "A1xA1", "A2"]);
    assert_eq!(types("A1"), vec!["A1", "A1"]);
    let mut c2 = types("C2");
    c2.sort();
    assert_eq!(c2, vec!["A1xA1", "B2", "B2"]);
    let d = g2();
    assert_eq!(d.omega(), Omega::Trivial);
    let names: Vec<String> = d.maximal_parabolics().unwrap().iter().map(|p| p.name()).collect();
    assert_eq!(names, vec!["J0 = {a1,a2}", "J1 = {a0,a2}", "J2 = {a0,a1}"]);
    // deleting the affine node gives back W
    let ps = d.maximal_parabolics().unwrap();
    assert_eq!(ps[0].group.order(), d.finite_group().unwrap().order());
}

#[test]
fn elliptic_classes_and_measure() {
    let d = g2();
    let cls = d.elliptic_classes().unwrap();
    let mu: Vec<Rational> = cls.iter().map(|c| c.mu.clone()).collect();
    assert_eq!(mu, vec![rat(1, 6), rat(1, 6), rat(1, 12), rat(1, 4), rat(1, 3)]);
    let orders: Vec<u32> = cls.iter().map(|c| c.element_order).collect();
    assert_eq!(orders, vec![6, 3, 2, 2, 3]);
    let t = EllipticCharacterTable::g2(&Fixtures::embedded()).unwrap();
    assert_eq!(t.mu, mu);
    // per J, the measure adds up to the proportion of elliptic elements
    for (j, p) in d.maximal_parabolics().unwrap().iter().enumerate() {
        let total: Rational = cls.iter().filter(|c| c.parabolic == j).map(|c| c.mu.clone()).sum();
        let ell: usize = p.elliptic_classes().iter().map(|&c| p.group.class_size(c)).sum();
        assert_eq!(total, Rational::new(ell.into(), p.group.order().into()));
    }
    let a1 = AffineDatum::parse("A1").unwrap().elliptic_classes().unwrap();
    assert_eq!(a1.iter().map(|c| c.mu.clone()).collect::<Vec<_>>(), vec![rat(1, 2), rat(1, 2)]);
}

#[test]
fn nu_on_the_small_parahorics() {
    let nu = nu_function(&g2(), &Fixtures::embedded()).unwrap();
    assert_eq!(nu.values[3], f(json!({"phi": {"1": 2, "2": -2}})));
    assert_eq!(nu.values[4], f(json!({"phi": {"1": 2, "3": -1}})));
}

#[test]
fn elliptic_table_is_orthonormal() {
    let d = g2();
    let cls = d.elliptic_classes().unwrap();
    let t = EllipticCharacterTable::g2(&Fixtures::embedded()).unwrap();
    let b = t.basis();
    let gram: Vec<Vec<Rational>> = b.iter().map(|x| b.iter().map(|y| elliptic_inner(&cls, x, y)).collect()).collect();
    assert_eq!(gram, linalg::identity(5));
}

#[test]
fn elliptic_table_restrictions_agree_on_the_g2_classes() {
    let d = g2();
    let t = EllipticCharacterTable::g2(&Fixtures::embedded()).unwrap();
    let ps = d.maximal_parabolics().unwrap();
    let w = &ps[0].group;
    for c in t.characters.iter().filter(|c| c.point_is_identity) {
        let mut chi = vec![Rational::from_integer(0.into()); w.num_classes()];
        for (label, k) in &c.restriction {
            for (a, b) in chi.iter_mut().zip(w.character_by_label(label).unwrap()) {
                *a += b * Rational::from_integer((*k).into());
            }
        }
        let on_ell: Vec<Rational> = ps[0].elliptic_classes().iter().map(|&k| chi[k].clone()).collect();
        assert_eq!(on_ell, c.values[..3].to_vec(), "{}", c.name);
    }
}

#[test]
fn ef_j_normalization_is_the_operator_one() {
    let d = g2();
    let fx = Fixtures::embedded();
    let t = EllipticCharacterTable::g2(&fx).unwrap();
    assert_eq!(matching_normalizations(&d, &fx, &t.ef_j).unwrap(), vec![Normalization::Operator]);
    let ps = d.maximal_parabolics().unwrap();
    let u = ps[0].ef_elliptic(&fx, Normalization::Unweighted).unwrap();
    assert!(linalg::is_symmetric(&u));
}

#[test]
fn ef_affine_is_the_fourier_submatrix() {
    let d = g2();
    let fx = Fixtures::embedded();
    let t = EllipticCharacterTable::g2(&fx).unwrap();
    let m = ef_affine_elliptic(&d, &fx, &t.basis()).unwrap();
    assert!(linalg::is_symmetric(&m));
    let pairs = t.packet_pairs(&d, &fx, "g2_npolys", "G2(a1)").unwrap();
    let labels: Vec<&str> = pairs.iter().map(|p| p.1.as_str()).collect();
    assert_eq!(labels, vec!["(1,1)", "(1,1)", "(1,r)", "(g3,1)", "(g2,1)"]);
    assert_eq!(pairs[0].0, "G2");
    assert_eq!(m, t.fourier_submatrix(&fx, &pairs).unwrap());
    // cross-J entries vanish in the delta basis
    let delta = ef_affine_delta(&d, &fx, Normalization::Operator).unwrap();
    for (i, j) in [(0, 3), (0, 4), (3, 4), (4, 2)] {
        assert_eq!(delta[i][j], Rational::from_integer(0.into()));
    }
}

#[test]
fn printed_affine_matrix_differs_in_one_entry() {
    let d = g2();
    let fx = Fixtures::embedded();
    let t = EllipticCharacterTable::g2(&fx).unwrap();
    let m = ef_affine_elliptic(&d, &fx, &t.basis()).unwrap();
    let mut diff = Vec::new();
    for i in 0..5 {
        for j in 0..5 {
            if m[i][j] != t.ef_affine[i][j] {
                diff.push((i, j));
            }
        }
    }
    // the printed matrix is not symmetric; in an orthonormal basis it has to be
    assert_eq!(diff, vec![(2, 3)]);
    assert_eq!(m[2][3], rat(-1, 3));
    assert!(!linalg::is_symmetric(&t.ef_affine));
}

#[test]
fn formal_degrees_from_nu() {
    let d = g2();
    let fx = Fixtures::embedded();
    let cls = d.elliptic_classes().unwrap();
    let nu = nu_function(&d, &fx).unwrap();
    let t = EllipticCharacterTable::g2(&fx).unwrap();
    let deg = |name: &str| affine_formal_degree(&cls, &t.character(name).unwrap().class_function(), &nu).unwrap();
    // Steinberg: the sign fake degree
    assert_eq!(deg("v1"), sgn_fake_degree(&[1, 5]));
    assert_eq!(deg("v2"), printed_formal("(1,1)"));
    assert_eq!(deg("v3"), printed_formal("(1,r)"));
    assert_eq!(deg("v4"), printed_formal("(g3,1)"));
    assert_eq!(deg("v4"), f(json!({"scalar": "1/3", "q": 1, "phi": {"1": 2, "3": -1, "6": -1}})));
    // v5 reproduces q(q-1)^2/(2 Φ2^2 Φ6), not the printed Φ2 Φ6
    let v5 = deg("v5");
    assert_eq!(v5, f(json!({"scalar": "1/2", "q": 1, "phi": {"1": 2, "2": -2, "6": -1}})));
    assert_ne!(v5, printed_formal("(g2,1)"));
    // the conjecture pipeline lands on the same values
    let s3 = SmallGroup::parse("S3").unwrap();
    let fakes = npoly_fakes(&fx, "g2_npolys", "G2(a1)").unwrap();
    let pairs = t.packet_pairs(&d, &fx, "g2_npolys", "G2(a1)").unwrap();
    for (c, (_, pair)) in t.characters.iter().zip(&pairs).skip(1) {
        assert_eq!(deg(&c.name), conjecture_rhs(&s3, pair, &fakes, 1).unwrap(), "{}", c.name);
    }
    // anything vanishing on the elliptic classes has formal degree 0
    let zero = AffineClassFunction::from_rationals(&[rat(0, 1), rat(0, 1), rat(0, 1), rat(0, 1), rat(0, 1)]);
    assert!(affine_formal_degree(&cls, &zero, &nu).unwrap().is_zero());
    assert!(affine_formal_degree(&cls[..4], &zero, &nu).is_err());
}

#[test]
fn affine_elliptic_fake_degrees() {
    let d = g2();
    let fx = Fixtures::embedded();
    let t = EllipticCharacterTable::g2(&fx).unwrap();
    let w = d.finite_group().unwrap();
    let v1 = t.character("v1").unwrap().elliptic_fake_degree(&d).unwrap();
    assert_eq!(v1, f(json!({"phi": {"1": 2, "5": 1, "2": -2, "3": -1, "6": -1}})));
    assert_eq!(v1, elliptic_fake_degree(&w, &w.sign()));
    for name in ["v4", "v5"] {
        assert!(t.character(name).unwrap().elliptic_fake_degree(&d).unwrap().is_zero(), "{name}");
    }
    // (q-1)^l ⟨v, F^a_el⟩ recovers F^e, including the vanishing for s ≠ 1
    let fa = affine_fake_class_function(&d).unwrap();
    let cls = d.elliptic_classes().unwrap();
    let q1 = RatFunc::from_poly(ellq_core::exactq::QPoly::from_ints(&[-1, 1]).pow(2));
    for c in &t.characters {
        let p = &q1 * &affine_formal_degree(&cls, &c.class_function(), &fa).unwrap();
        assert_eq!(p, c.elliptic_fake_degree(&d).unwrap(), "{}", c.name);
    }
    // formal degree = EF^a_el applied to the fake degrees
    let nu = nu_function(&d, &fx).unwrap();
    let a = ef_affine_elliptic(&d, &fx, &t.basis()).unwrap();
    let fakes: Vec<RatFunc> = t.characters.iter().map(|c| c.elliptic_fake_degree(&d).unwrap()).collect();
    for (i, c) in t.characters.iter().enumerate() {
        let terms: Vec<RatFunc> = (0..5).map(|k| fakes[k].scale(&a[i][k])).collect();
        assert_eq!(RatFunc::sum(&terms), affine_formal_degree(&cls, &c.class_function(), &nu).unwrap(), "{}", c.name);
    }
}
