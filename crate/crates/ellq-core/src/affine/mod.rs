//! Elliptic theory of affine Weyl groups W^a = W ⋉ Q∨: maximal parahoric
//! subgroups, affine elliptic classes and their measure, the ν function,
//! formal degrees and the EF^a_el matrix.

mod table;

pub use table::{AffineCharacter, EllipticCharacterTable};

use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactq::linalg::{self, QMatrix};
use crate::exactq::{QPoly, RatFunc, Rational};
use crate::fixtures::Fixtures;
use crate::fourier::{ef_map, generic_degrees, FamilyData};
use crate::weylgrp::{CartanType, GroupSpec, WeylGroup};

/// The group X/Q; only the trivial case is handled.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Omega {
    Trivial,
}

/// Simple affine roots of an irreducible root system in the simply
/// connected convention: the simple coroots together with 1 - θ∨, θ∨ the
/// highest coroot. Roots are recorded by their linear parts in simple
/// coroot coordinates.
#[derive(Clone, Debug)]
pub struct AffineDatum {
    base: CartanType,
    omega: Omega,
    gram: Vec<Vec<i64>>,
    /// nodes[0] = -θ∨, nodes[i] = α_i∨ for i = 1..=l.
    nodes: Vec<Vec<i64>>,
}

fn gcd_all(m: &[Vec<i64>]) -> i64 {
    m.iter().flatten().fold(0i64, |g, &x| g.gcd(&x))
}

impl AffineDatum {
    pub fn new(base: CartanType) -> Result<AffineDatum> {
        base.validate()?;
        let g = base.gram();
        let l = g.len();
        let n = (0..l).fold(1i64, |a, i| a.lcm(&g[i][i]));
        let mut gram = vec![vec![0i64; l]; l];
        for i in 0..l {
            for j in 0..l {
                let num = n * n * g[i][j];
                let den = g[i][i] * g[j][j];
                if num % den != 0 {
                    return Err(Error::Internal(format!("coroot Gram matrix of {base} is not integral")));
                }
                gram[i][j] = num / den;
            }
        }
        let k = gcd_all(&gram);
        for row in gram.iter_mut() {
            for x in row.iter_mut() {
                *x /= k;
            }
        }
        let simple: Vec<Vec<i64>> = (0..l).map(|i| (0..l).map(|j| i64::from(i == j)).collect()).collect();
        let host = WeylGroup::realize(&GroupSpec::single(base), &gram, &simple)?;
        let theta = host
            .roots()
            .into_iter()
            .max_by_key(|r| r.iter().sum::<i64>())
            .expect("nonempty root system");
        let mut nodes = vec![theta.iter().map(|x| -x).collect::<Vec<i64>>()];
        nodes.extend(simple);
        Ok(AffineDatum { base, omega: Omega::Trivial, gram, nodes })
    }

    pub fn parse(s: &str) -> Result<AffineDatum> {
        AffineDatum::new(CartanType::parse(s)?)
    }

    pub fn base(&self) -> CartanType {
        self.base
    }

    pub fn omega(&self) -> Omega {
        self.omega
    }

    pub fn rank(&self) -> usize {
        self.base.rank()
    }

    /// Linear parts of the simple affine roots, node 0 first.
    pub fn nodes(&self) -> &[Vec<i64>] {
        &self.nodes
    }

    pub fn gram(&self) -> &[Vec<i64>] {
        &self.gram
    }

    /// The finite Weyl group acting on the coroot lattice, labelled as W(base).
    pub fn finite_group(&self) -> Result<WeylGroup> {
        WeylGroup::realize(&GroupSpec::single(self.base), &self.gram, &self.nodes[1..])
    }

    /// W_J for J = S^a minus one node, in order of the deleted node.
    pub fn maximal_parabolics(&self) -> Result<Vec<MaximalParabolic>> {
        (0..self.nodes.len())
            .map(|k| {
                let nodes: Vec<usize> = (0..self.nodes.len()).filter(|&i| i != k).collect();
                let roots: Vec<Vec<i64>> = nodes.iter().map(|&i| self.nodes[i].clone()).collect();
                let (spec, order) = crate::weylgrp::roots::identify(&self.gram, &roots)?;
                let ordered: Vec<Vec<i64>> = order.iter().map(|&i| roots[i].clone()).collect();
                let group = WeylGroup::realize(&spec, &self.gram, &ordered)?;
                Ok(MaximalParabolic { deleted: k, nodes, spec, group })
            })
            .collect()
    }

    pub fn elliptic_classes(&self) -> Result<Vec<AffineEllipticClass>> {
        let mut out = Vec::new();
        for (j, p) in self.maximal_parabolics()?.iter().enumerate() {
            for c in p.elliptic_classes() {
                out.push(AffineEllipticClass {
                    label: format!("C{}", out.len() + 1),
                    parabolic: j,
                    class: c,
                    element_order: p.group.class_rep(c).order(),
                    mu: Rational::new(p.group.class_size(c).into(), p.group.order().into()),
                });
            }
        }
        Ok(out)
    }
}

#[derive(Clone, Debug)]
pub struct MaximalParabolic {
    /// The node of S^a not in J.
    pub deleted: usize,
    pub nodes: Vec<usize>,
    pub spec: GroupSpec,
    pub group: WeylGroup,
}

impl MaximalParabolic {
    pub fn name(&self) -> String {
        let j: Vec<String> = self.nodes.iter().map(|i| format!("a{i}")).collect();
        format!("J{} = {{{}}}", self.deleted, j.join(","))
    }

    /// Elliptic classes of W_J, by decreasing element order.
    pub fn elliptic_classes(&self) -> Vec<usize> {
        let w = &self.group;
        let mut cs = w.elliptic_classes();
        cs.sort_by_key(|&c| (std::cmp::Reverse(w.class_rep(c).order()), w.charpoly(c).coeffs().to_vec()));
        cs
    }

    /// ν(C) = (-1)^l Σ_δ δ(C) d_δ(q) / P_J(q) on every class of W_J.
    pub fn nu(&self, fixtures: &Fixtures) -> Result<Vec<RatFunc>> {
        let w = &self.group;
        let fd = FamilyData::for_group(w, fixtures)?;
        let d = generic_degrees(w, &fd)?;
        let p = RatFunc::from_poly(w.poincare());
        let sign = if w.rank().is_multiple_of(2) { Rational::one() } else { -Rational::one() };
        (0..w.num_classes())
            .map(|c| {
                let terms: Vec<RatFunc> = (0..w.num_irreps())
                    .filter(|&i| w.table().values[i][c] != 0)
                    .map(|i| d[i].scale(&Rational::from_integer(w.table().values[i][c].into())))
                    .collect();
                RatFunc::sum(&terms).scale(&sign).checked_div(&p)
            })
            .collect()
    }

    /// EF^J restricted to the elliptic classes, in the basis of their
    /// indicator functions.
    pub fn ef_elliptic(&self, fixtures: &Fixtures, norm: Normalization) -> Result<QMatrix> {
        let w = &self.group;
        let fd = FamilyData::for_group(w, fixtures)?;
        let ell = self.elliptic_classes();
        let mut m = vec![vec![Rational::zero(); ell.len()]; ell.len()];
        for (j, &cj) in ell.iter().enumerate() {
            let mut ind = vec![Rational::zero(); w.num_classes()];
            ind[cj] = Rational::one();
            let img = ef_map(w, &fd, &ind)?;
            let weight = Rational::new(w.class_size(cj).into(), w.order().into());
            for (i, &ci) in ell.iter().enumerate() {
                m[i][j] = match norm {
                    Normalization::Operator => img[ci].clone(),
                    Normalization::Unweighted => &img[ci] / &weight,
                };
            }
        }
        Ok(m)
    }
}

/// How ⟨1_C|EF^J|1_C′⟩ is normalized.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Normalization {
    /// Column j holds EF(1_{C_j}) evaluated on the elliptic classes.
    Operator,
    /// Σ_{δ,δ′} δ(C) {δ,δ′} δ′(C′), without class measures.
    Unweighted,
}

impl Normalization {
    pub const ALL: [Normalization; 2] = [Normalization::Operator, Normalization::Unweighted];

    pub fn name(&self) -> &'static str {
        match self {
            Normalization::Operator => "operator",
            Normalization::Unweighted => "unweighted",
        }
    }
}

#[derive(Clone, Debug)]
pub struct AffineEllipticClass {
    pub label: String,
    /// Index into `maximal_parabolics()`.
    pub parabolic: usize,
    /// Class of W_J.
    pub class: usize,
    pub element_order: u32,
    pub mu: Rational,
}

/// A class function on the affine elliptic classes.
#[derive(Clone, Debug, PartialEq)]
pub struct AffineClassFunction {
    pub values: Vec<RatFunc>,
}

impl AffineClassFunction {
    pub fn from_rationals(v: &[Rational]) -> AffineClassFunction {
        AffineClassFunction { values: v.iter().map(|x| RatFunc::constant(x.clone())).collect() }
    }
}

pub fn nu_function(datum: &AffineDatum, fixtures: &Fixtures) -> Result<AffineClassFunction> {
    let ps = datum.maximal_parabolics()?;
    let nus = ps.iter().map(|p| p.nu(fixtures)).collect::<Result<Vec<_>>>()?;
    let values = datum.elliptic_classes()?.iter().map(|c| nus[c.parabolic][c.class].clone()).collect();
    Ok(AffineClassFunction { values })
}

/// Σ_C v(C) ν(C) μ_el(C).
pub fn affine_formal_degree(
    classes: &[AffineEllipticClass],
    v: &AffineClassFunction,
    nu: &AffineClassFunction,
) -> Result<RatFunc> {
    if v.values.len() != classes.len() || nu.values.len() != classes.len() {
        return Err(Error::Invalid("class functions are not on the same class list".into()));
    }
    let terms: Vec<RatFunc> = classes
        .iter()
        .zip(v.values.iter().zip(&nu.values))
        .map(|(c, (a, b))| (a * b).scale(&c.mu))
        .collect();
    Ok(RatFunc::sum(&terms))
}

/// ⟨a, b⟩ = Σ_C a(C) b(C) μ_el(C) for rational class functions.
pub fn elliptic_inner(classes: &[AffineEllipticClass], a: &[Rational], b: &[Rational]) -> Rational {
    classes.iter().zip(a.iter().zip(b)).map(|(c, (x, y))| x * y * &c.mu).sum()
}

/// EF^a_el = ⊕_J EF^J_el on the indicator basis of the affine elliptic classes.
pub fn ef_affine_delta(datum: &AffineDatum, fixtures: &Fixtures, norm: Normalization) -> Result<QMatrix> {
    let classes = datum.elliptic_classes()?;
    let ps = datum.maximal_parabolics()?;
    let n = classes.len();
    let mut m = vec![vec![Rational::zero(); n]; n];
    let mut off = 0;
    for p in &ps {
        let block = p.ef_elliptic(fixtures, norm)?;
        for (i, row) in block.iter().enumerate() {
            for (j, x) in row.iter().enumerate() {
                m[off + i][off + j] = x.clone();
            }
        }
        off += block.len();
    }
    Ok(m)
}

/// The matrix of EF^a_el in a basis of class functions: entry (i, k) is the
/// coefficient of basis[i] in EF^a_el(basis[k]).
pub fn ef_affine_elliptic(datum: &AffineDatum, fixtures: &Fixtures, basis: &[Vec<Rational>]) -> Result<QMatrix> {
    let n = datum.elliptic_classes()?.len();
    if basis.len() != n || basis.iter().any(|b| b.len() != n) {
        return Err(Error::Invalid(format!("a basis of the elliptic space needs {n} vectors of length {n}")));
    }
    let d = ef_affine_delta(datum, fixtures, Normalization::Operator)?;
    let v: QMatrix = (0..n).map(|j| (0..n).map(|i| basis[i][j].clone()).collect()).collect();
    let vinv = linalg::inverse(&v).map_err(|_| Error::Invalid("basis vectors are linearly dependent".into()))?;
    Ok(linalg::matmul(&vinv, &linalg::matmul(&d, &v)))
}

/// The normalizations under which every EF^J_el equals the given blocks.
pub fn matching_normalizations(datum: &AffineDatum, fixtures: &Fixtures, printed: &[QMatrix]) -> Result<Vec<Normalization>> {
    let ps = datum.maximal_parabolics()?;
    if printed.len() != ps.len() {
        return Err(Error::Invalid(format!("expected {} blocks, got {}", ps.len(), printed.len())));
    }
    let mut out = Vec::new();
    for norm in Normalization::ALL {
        let mut ok = true;
        for (p, m) in ps.iter().zip(printed) {
            ok &= &p.ef_elliptic(fixtures, norm)? == m;
        }
        if ok {
            out.push(norm);
        }
    }
    Ok(out)
}

/// F^a_el = Σ_J Σ_{C_J elliptic} 1_{C_J} / det(1 - q C_J).
pub fn affine_fake_class_function(datum: &AffineDatum) -> Result<AffineClassFunction> {
    let ps = datum.maximal_parabolics()?;
    let values = datum
        .elliptic_classes()?
        .iter()
        .map(|c| RatFunc::new(QPoly::one(), ps[c.parabolic].group.charpoly(c.class).clone()))
        .collect::<Result<_>>()?;
    Ok(AffineClassFunction { values })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn affine_nodes() {
        let d = AffineDatum::parse("G2").unwrap();
        assert_eq!(d.nodes().len(), 3);
        let a1 = AffineDatum::parse("A1").unwrap();
        assert_eq!(a1.nodes()[0], vec![-1]);
        let ps = a1.maximal_parabolics().unwrap();
        assert!(ps.iter().all(|p| p.spec.to_string() == "A1"));
    }
}
