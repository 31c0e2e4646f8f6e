//! Elliptic parameters on the dual group, the product formula m_x(q) for
//! formal degrees, and the Fourier-side conjecture for distinguished u.

mod conjecture;
mod data;

use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactq::{linalg, Cyclo, QPoly, RatFunc, Rational};
use crate::weylgrp::CartanType;

pub use conjecture::{
    conj_equiv, conj_equiv_class_function, conjecture_rhs, q_part_prediction, springer_class_function,
    product_formal_degree,
};
pub use data::{npoly_fakes, MxCase, NamedPoint, PacketRow, PacketTable, UnipotentClass, UnipotentData, UnipotentGroup};

/// Root datum of the dual group G^∨, roots in simple-root coordinates.
#[derive(Clone, Debug)]
pub struct DualRootDatum {
    name: String,
    cartan: CartanType,
    positive: Vec<Vec<i64>>,
    center_order: u32,
}

/// Positive roots in simple-root coordinates, generated by simple reflections.
fn positive_roots(t: CartanType) -> Vec<Vec<i64>> {
    let a = t.cartan_matrix();
    let n = a.len();
    let mut roots: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect();
    let mut k = 0;
    while k < roots.len() {
        let beta = roots[k].clone();
        for i in 0..n {
            // s_i(β) = β - <β, α_i^∨> α_i
            let pairing: i64 = (0..n).map(|j| beta[j] * a[i][j]).sum();
            let mut image = beta.clone();
            image[i] -= pairing;
            if image.iter().all(|&c| c >= 0) && image.iter().any(|&c| c > 0) && !roots.contains(&image) {
                roots.push(image);
            }
        }
        k += 1;
    }
    roots.sort_by_key(|r| (r.iter().sum::<i64>(), r.clone()));
    roots
}

impl DualRootDatum {
    /// The simply connected group of the given type.
    pub fn simply_connected(t: CartanType) -> Result<DualRootDatum> {
        t.validate()?;
        let center_order = match t {
            CartanType::A(n) => n + 1,
            CartanType::B(_) | CartanType::C(_) => 2,
            CartanType::D(_) => 4,
            CartanType::E(6) => 3,
            CartanType::E(7) => 2,
            _ => 1,
        };
        Ok(DualRootDatum { name: t.to_string(), cartan: t, positive: positive_roots(t), center_order })
    }

    /// Accepts Cartan types ("G2", "C2") and the names SL_n, Sp_2n, Spin_n.
    pub fn parse(s: &str) -> Result<DualRootDatum> {
        let t: String = s.chars().filter(|c| !c.is_whitespace() && *c != '_').collect();
        let num = |rest: &str| rest.parse::<u32>().map_err(|_| Error::Parse(format!("unknown group {s:?}")));
        let cartan = if let Some(r) = t.strip_prefix("SL") {
            CartanType::A(num(r)?.saturating_sub(1))
        } else if let Some(r) = t.strip_prefix("Sp") {
            let n = num(r)?;
            if n % 2 != 0 {
                return Err(Error::Parse(format!("Sp needs an even size in {s:?}")));
            }
            CartanType::C(n / 2)
        } else if let Some(r) = t.strip_prefix("Spin") {
            let n = num(r)?;
            if n % 2 == 1 {
                CartanType::B(n / 2)
            } else {
                CartanType::D(n / 2)
            }
        } else {
            CartanType::parse(&t)?
        };
        let mut d = DualRootDatum::simply_connected(cartan)?;
        d.name = s.trim().to_string();
        Ok(d)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn cartan(&self) -> CartanType {
        self.cartan
    }

    pub fn rank(&self) -> usize {
        self.cartan.rank()
    }

    /// ν, the number of positive roots.
    pub fn nu(&self) -> usize {
        self.positive.len()
    }

    pub fn center_order(&self) -> u32 {
        self.center_order
    }

    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.positive
    }

    /// All roots, positive ones first.
    pub fn roots(&self) -> Vec<Vec<i64>> {
        let neg = self.positive.iter().map(|r| r.iter().map(|c| -c).collect());
        self.positive.iter().cloned().chain(neg).collect()
    }
}

/// A point s of finite order in T^∨, given by e_{α_i}(s) = exp(2πi v_i) on
/// the simple roots. Coordinates are kept in [0, 1).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SemisimplePoint {
    coords: Vec<Rational>,
}

impl SemisimplePoint {
    pub fn new(coords: Vec<Rational>) -> SemisimplePoint {
        let coords = coords.into_iter().map(|c| &c - c.floor()).collect();
        SemisimplePoint { coords }
    }

    pub fn identity(rank: usize) -> SemisimplePoint {
        SemisimplePoint { coords: vec![Rational::zero(); rank] }
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    /// The order of s, the lcm of the coordinate denominators.
    pub fn order(&self) -> u32 {
        let l = self.coords.iter().fold(num_bigint::BigInt::one(), |acc, c| acc.lcm(c.denom()));
        u32::try_from(l).expect("point of moderate order")
    }

    /// k with e_α(s) = ζ_m^k, m = order().
    pub fn exponent(&self, root: &[i64]) -> i64 {
        let m = Rational::from_integer(self.order().into());
        let v: Rational = root.iter().zip(&self.coords).map(|(c, x)| x * Rational::from_integer((*c).into())).sum();
        let k = (v * m).to_integer();
        i64::try_from(k).expect("small exponent").rem_euclid(self.order() as i64)
    }

    pub fn is_identity(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }
}

/// The weights α(h) of the sl2-triple of u, from the weighted Dynkin diagram.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SL2Marks {
    marks: Vec<i64>,
}

impl SL2Marks {
    pub fn new(marks: Vec<i64>) -> SL2Marks {
        SL2Marks { marks }
    }

    pub fn marks(&self) -> &[i64] {
        &self.marks
    }

    pub fn weight(&self, root: &[i64]) -> i64 {
        root.iter().zip(&self.marks).map(|(c, h)| c * h).sum()
    }
}

/// Roots α with e_α(s) = 1: the root system of Z_{G^∨}(s).
pub fn centralizer_roots(d: &DualRootDatum, s: &SemisimplePoint) -> Vec<Vec<i64>> {
    d.roots().into_iter().filter(|r| s.exponent(r) == 0).collect()
}

/// x = su is elliptic when s is isolated (Z(s) semisimple of full rank)
/// and u is distinguished in Z(s), i.e. dim z(0) = dim z(2) for the grading by h.
pub fn is_elliptic(d: &DualRootDatum, s: &SemisimplePoint, h: &SL2Marks) -> bool {
    let zs = centralizer_roots(d, s);
    let m: linalg::QMatrix =
        zs.iter().map(|r| r.iter().map(|&c| Rational::from_integer(c.into())).collect()).collect();
    if m.is_empty() || linalg::rank(&m) != d.rank() {
        return false;
    }
    let g0 = d.rank() + zs.iter().filter(|r| h.weight(r) == 0).count();
    let g2 = zs.iter().filter(|r| h.weight(r) == 2).count();
    g0 == g2
}

/// Polynomial in u with coefficients in Q(ζ_m).
#[derive(Clone, Debug)]
struct CycloPoly {
    m: u32,
    c: Vec<Cyclo>,
}

impl CycloPoly {
    fn one(m: u32) -> CycloPoly {
        CycloPoly { m, c: vec![Cyclo::one(m)] }
    }

    /// a + b u^e.
    fn binomial(m: u32, a: Cyclo, b: Cyclo, e: usize) -> CycloPoly {
        let mut c = vec![Cyclo::zero(m); e + 1];
        c[0] = &c[0] + &a;
        c[e] = &c[e] + &b;
        CycloPoly { m, c }
    }

    fn mul(&self, o: &CycloPoly) -> CycloPoly {
        let mut c = vec![Cyclo::zero(self.m); self.c.len() + o.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.c.iter().enumerate() {
                if !b.is_zero() {
                    c[i + j] = &c[i + j] + &(a * b);
                }
            }
        }
        CycloPoly { m: self.m, c }
    }

    fn galois(&self, j: i64) -> CycloPoly {
        CycloPoly { m: self.m, c: self.c.iter().map(|x| x.galois(j)).collect() }
    }

    fn to_qpoly(&self) -> Option<QPoly> {
        self.c.iter().map(Cyclo::to_rational).collect::<Option<Vec<_>>>().map(QPoly::new)
    }
}

/// ζ^k u^w - 1 as u^shift · p(u) with p a polynomial; None for the zero factor.
fn factor(m: u32, k: i64, w: i64) -> Option<(CycloPoly, i64)> {
    if k == 0 && w == 0 {
        return None;
    }
    let z = Cyclo::root(m, k);
    let minus_one = Cyclo::from_int(m, -1);
    Some(if w >= 0 {
        (CycloPoly::binomial(m, minus_one, z, w as usize), 0)
    } else {
        (CycloPoly::binomial(m, z, minus_one, (-w) as usize), w)
    })
}

/// A rational function of u that only involves u², rewritten in q = u².
fn in_q(f: &RatFunc) -> Option<RatFunc> {
    let even = |p: &QPoly| -> Option<QPoly> {
        let c = p.coeffs();
        if c.iter().skip(1).step_by(2).any(|x| !x.is_zero()) {
            return None;
        }
        Some(QPoly::new(c.iter().step_by(2).cloned().collect()))
    };
    RatFunc::new(even(f.num())?, even(f.den())?).ok()
}

/// m_x(q) = q^ν ∏′(e_α(s′) - 1) / ∏′(q e_α(s′) - 1) over all roots α, with
/// e_α(s′) = e_α(s) q^{α(h)/2} and zero factors dropped. Normalized to be
/// positive for large real q.
pub fn m_x(d: &DualRootDatum, s: &SemisimplePoint, h: &SL2Marks) -> Result<RatFunc> {
    if s.coords().len() != d.rank() || h.marks().len() != d.rank() {
        return Err(Error::Invalid(format!("point or marks do not match the rank of {}", d.name())));
    }
    let m = s.order();
    let mut num = CycloPoly::one(m);
    let mut den = CycloPoly::one(m);
    let mut shift = 2 * d.nu() as i64;
    for root in d.roots() {
        let k = s.exponent(&root);
        let w = h.weight(&root);
        if let Some((p, sh)) = factor(m, k, w) {
            num = num.mul(&p);
            shift += sh;
        }
        // q e_α(s′) = ζ^k u^{w+2}
        if let Some((p, sh)) = factor(m, k, w + 2) {
            den = den.mul(&p);
            shift -= sh;
        }
    }
    // multiply through by the Galois conjugates of the denominator
    for j in Cyclo::galois_exponents(m).into_iter().filter(|&j| j != 1) {
        let g = den.galois(j);
        num = num.mul(&g);
        den = den.mul(&g);
    }
    let not_rational = || Error::Arithmetic(format!("m_x for {} does not lie in Q(q)", d.name()));
    let mut n = num.to_qpoly().ok_or_else(not_rational)?;
    let mut dd = den.to_qpoly().ok_or_else(not_rational)?;
    if shift >= 0 {
        n = n.shift(shift as usize);
    } else {
        dd = dd.shift((-shift) as usize);
    }
    let f = in_q(&RatFunc::new(n, dd)?).ok_or_else(not_rational)?;
    Ok(if f.sign_at_infinity() < 0 { f.scale(&-Rational::one()) } else { f })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactq::rat;

    #[test]
    fn root_counts() {
        for (t, n) in [("A1", 1), ("A3", 6), ("B2", 4), ("C3", 9), ("D4", 12), ("G2", 6), ("F4", 24), ("E6", 36), ("E8", 120)] {
            assert_eq!(DualRootDatum::parse(t).unwrap().nu(), n, "{t}");
        }
        let g2 = DualRootDatum::parse("G2").unwrap();
        assert!(g2.positive_roots().contains(&vec![3, 2]));
        assert_eq!(DualRootDatum::parse("Sp4").unwrap().cartan(), CartanType::C(2));
        assert_eq!(DualRootDatum::parse("SL2").unwrap().center_order(), 2);
    }

    #[test]
    fn points() {
        let s = SemisimplePoint::new(vec![rat(3, 2), rat(-1, 3)]);
        assert_eq!(s.coords(), &[rat(1, 2), rat(2, 3)]);
        assert_eq!(s.order(), 6);
        assert_eq!(s.exponent(&[1, 1]), 1);
    }
}
