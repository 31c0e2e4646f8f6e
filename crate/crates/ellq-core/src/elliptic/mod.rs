//! The elliptic pairing on virtual characters, elliptic fake degrees and
//! their closed forms in types A, B and D.

use num_traits::{One, Zero};

use crate::combinat::{partitions, Partition};
use crate::error::{Error, Result};
use crate::exactq::{factor_cyclotomic, linalg, CyclotomicFactorization, QPoly, RatFunc, Rational, DEFAULT_BOUND};
use crate::weylgrp::{ClassFunction, WeylGroup};

/// ⟨a, b⟩^el = (1/|W|) Σ_w a(w) b(w) det(1 - w).
pub fn elliptic_pairing(w: &WeylGroup, a: &[Rational], b: &[Rational]) -> Rational {
    let mut s = Rational::zero();
    for c in w.elliptic_classes() {
        s += &a[c] * &b[c] * w.det_one_minus(c) * Rational::from_integer(w.class_size(c).into());
    }
    s / Rational::from_integer(w.order().into())
}

/// F_[π] = (q-1)^l (1/|W|) Σ_w π(w) det(1-w)/det(1-qw).
pub fn elliptic_fake_degree(w: &WeylGroup, pi: &[Rational]) -> RatFunc {
    let terms: Vec<RatFunc> = w
        .elliptic_classes()
        .into_iter()
        .filter(|&c| !pi[c].is_zero())
        .map(|c| {
            let k = &pi[c] * w.det_one_minus(c) * Rational::from_integer(w.class_size(c).into());
            RatFunc::new(QPoly::constant(k), w.charpoly(c).clone()).expect("nonzero charpoly")
        })
        .collect();
    let pre = QPoly::from_ints(&[-1, 1]).pow(w.rank() as u32);
    (&RatFunc::from_poly(pre) * &RatFunc::sum(&terms)).scale(&(Rational::one() / Rational::from_integer(w.order().into())))
}

/// (1-q)^l ∏ (1-q^{m_i})/(1-q^{m_i+1}) from the exponents alone.
pub fn sgn_fake_degree(exponents: &[u32]) -> RatFunc {
    let mut f = RatFunc::from_poly(QPoly::from_ints(&[1, -1]).pow(exponents.len() as u32));
    for &m in exponents {
        let r = RatFunc::new(QPoly::one_minus_q_pow(m as usize), QPoly::one_minus_q_pow(m as usize + 1))
            .expect("nonzero denominator");
        f = &f * &r;
    }
    f
}

/// cyc(W): the cyclotomic factorization of the reduced denominator of F_[sgn].
pub fn cyc(exponents: &[u32]) -> Result<CyclotomicFactorization> {
    let f = sgn_fake_degree(exponents);
    factor_cyclotomic(f.den(), DEFAULT_BOUND.max(exponents.iter().max().copied().unwrap_or(1) + 2))
}

fn q_pow_signed(k: i64) -> RatFunc {
    RatFunc::q().pow(k as i32).expect("q is invertible")
}

/// Closed form of F^{B_n}_{[λ×∅]}:
/// (q-1)^n q^{2n(λ)} ∏_cells (1 - q^{2c+1}) / (1 - q^{2h}).
pub fn bn_fake_closed(lambda: &Partition) -> RatFunc {
    let n = lambda.size();
    let mut f = &RatFunc::from_poly(QPoly::from_ints(&[-1, 1]).pow(n)) * &q_pow_signed(2 * lambda.n() as i64);
    for c in lambda.contents() {
        f = &f * &(&RatFunc::one() - &q_pow_signed(2 * c as i64 + 1));
    }
    for (_, h) in lambda.hook_lengths() {
        f = &f * &RatFunc::from_poly(QPoly::one_minus_q_pow(2 * h as usize)).inv().expect("nonzero");
    }
    f
}

/// F^{D_n}_{[λ×∅]} = F^{B_n}_λ + (-1)^n F^{B_n}_{λᵗ}.
pub fn dn_fake_closed(lambda: &Partition) -> Result<RatFunc> {
    let n = lambda.size();
    if n < 2 {
        return Err(Error::Invalid("type D needs n ≥ 2".into()));
    }
    let t = bn_fake_closed(&lambda.conjugate());
    let t = if n.is_multiple_of(2) { t } else { -t };
    Ok(&bn_fake_closed(lambda) + &t)
}

/// Gram matrix of the elliptic pairing on a list of class functions.
pub fn gram(w: &WeylGroup, basis: &[ClassFunction]) -> linalg::QMatrix {
    basis.iter().map(|a| basis.iter().map(|b| elliptic_pairing(w, a, b)).collect()).collect()
}

/// {λ×∅ : λ ⊢ n} on W(B_n), with labels.
pub fn bn_basis(w: &WeylGroup, n: u32) -> Result<Vec<(Partition, ClassFunction)>> {
    partitions(n)
        .into_iter()
        .map(|l| Ok((l.clone(), w.character_by_label(&format!("{}.", l.label()))?)))
        .collect()
}

/// λ×∅ restricted to W(D_n), one λ from each pair {λ, λᵗ}; for odd n the
/// self-conjugate λ are dropped since they vanish in the elliptic space.
pub fn dn_basis(w: &WeylGroup, n: u32) -> Result<Vec<(Partition, ClassFunction)>> {
    let all = partitions(n);
    let mut out = Vec::new();
    for (i, l) in all.iter().enumerate() {
        let t = l.conjugate();
        let j = all.iter().position(|x| *x == t).expect("conjugate is a partition");
        if j < i || (j == i && n % 2 == 1) {
            continue;
        }
        out.push((l.clone(), w.character_by_label(&format!("{}.", l.label()))?));
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndependenceReport {
    pub elliptic_classes: usize,
    pub rank: usize,
    pub independent: bool,
    /// Pairs of elliptic classes with the same characteristic polynomial.
    pub coincident: Vec<(usize, usize, QPoly)>,
}

/// Rank over Q of {1/det(1-qw)} on the elliptic classes, computed by
/// clearing denominators with their lcm and row reducing.
pub fn independence_check(w: &WeylGroup) -> IndependenceReport {
    let ell = w.elliptic_classes();
    let mut lcm = QPoly::one();
    for &c in &ell {
        let p = w.charpoly(c);
        let g = QPoly::gcd(&lcm, p);
        lcm = (&lcm * p).exact_div(&g).expect("gcd divides");
    }
    let deg = lcm.degree().unwrap_or(0);
    let rows: linalg::QMatrix = ell
        .iter()
        .map(|&c| {
            let p = lcm.exact_div(w.charpoly(c)).expect("charpoly divides lcm");
            (0..=deg).map(|k| p.coeff(k)).collect()
        })
        .collect();
    let rank = linalg::rank(&rows);
    let mut coincident = Vec::new();
    for (i, &a) in ell.iter().enumerate() {
        for &b in &ell[i + 1..] {
            if w.charpoly(a) == w.charpoly(b) {
                coincident.push((a, b, w.charpoly(a).clone()));
            }
        }
    }
    IndependenceReport { elliptic_classes: ell.len(), rank, independent: rank == ell.len(), coincident }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RadicalReport {
    pub elliptic_classes: usize,
    pub gram_rank: usize,
    /// Every character induced from a maximal parabolic pairs to zero with all irreducibles.
    pub induced_in_radical: bool,
}

impl RadicalReport {
    pub fn ok(&self) -> bool {
        self.induced_in_radical && self.gram_rank == self.elliptic_classes
    }
}

pub fn radical_check(w: &WeylGroup) -> Result<RadicalReport> {
    let irr: Vec<ClassFunction> = (0..w.num_irreps()).map(|i| w.character(i)).collect();
    let g = gram(w, &irr);
    let mut induced_in_radical = true;
    for drop in 0..w.rank() {
        let nodes: Vec<usize> = (0..w.rank()).filter(|&i| i != drop).collect();
        let sub = w.parabolic(&nodes)?;
        for i in 0..sub.num_irreps() {
            let ind = w.induce(&sub, &sub.character(i))?;
            if irr.iter().any(|x| !elliptic_pairing(w, &ind, x).is_zero()) {
                induced_in_radical = false;
            }
        }
    }
    Ok(RadicalReport { elliptic_classes: w.elliptic_classes().len(), gram_rank: linalg::rank(&g), induced_in_radical })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weylgrp::CartanType;

    fn rf(num: &[i64], den: &[i64]) -> RatFunc {
        RatFunc::new(QPoly::from_ints(num), QPoly::from_ints(den)).unwrap()
    }

    #[test]
    fn s2_pairings() {
        let w = WeylGroup::of_type(CartanType::A(1)).unwrap();
        let sgn = w.sign();
        assert_eq!(elliptic_pairing(&w, &sgn, &sgn), Rational::one());
        assert_eq!(elliptic_pairing(&w, &w.trivial(), &sgn), -Rational::one());
        assert_eq!(elliptic_fake_degree(&w, &sgn), rf(&[1, -2, 1], &[1, 0, -1]));
    }

    #[test]
    fn b1_and_small_closed_forms() {
        let w = WeylGroup::of_type(CartanType::B(1)).unwrap();
        assert_eq!(elliptic_fake_degree(&w, &w.trivial()), rf(&[-1, 1], &[1, 1]));
        assert_eq!(bn_fake_closed(&Partition::new(vec![1])), rf(&[-1, 1], &[1, 1]));
        // (2): (q-1)^2 Φ3/(Φ2^2 Φ4)
        let expect = &rf(&[1, -2, 1], &[1]) * &rf(&[1, 1, 1], &[1, 2, 2, 2, 1]);
        assert_eq!(bn_fake_closed(&Partition::new(vec![2])), expect);
    }

    #[test]
    fn sgn_closed_form() {
        assert_eq!(sgn_fake_degree(&[]), RatFunc::one());
        let g2 = cyc(&[1, 5]).unwrap();
        assert_eq!(g2.render(), "Phi2^2 Phi3 Phi6");
    }
}
