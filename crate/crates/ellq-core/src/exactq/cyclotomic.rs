//! Cyclotomic polynomials and trial-division factorization into them.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use num_traits::{One, Signed};

use super::{QPoly, Rational};
use crate::error::{Error, Result};

/// Default largest index tried by [`factor_cyclotomic`]. E8 needs Φ30.
pub const DEFAULT_BOUND: u32 = 30;

const CACHE_SIZE: u32 = 64;

fn cache() -> &'static Vec<QPoly> {
    static CACHE: OnceLock<Vec<QPoly>> = OnceLock::new();
    CACHE.get_or_init(|| {
        let mut table = vec![QPoly::zero()];
        for n in 1..=CACHE_SIZE {
            let phi = compute(n, &table);
            table.push(phi);
        }
        table
    })
}

fn compute(n: u32, smaller: &[QPoly]) -> QPoly {
    let mut p = QPoly::q_pow_minus_one(n as usize);
    for d in 1..n {
        if n.is_multiple_of(d) {
            p = p.exact_div(&smaller[d as usize]).expect("Φ_d divides q^n - 1");
        }
    }
    p
}

/// The n-th cyclotomic polynomial Φ_n(q).
pub fn cyclotomic(n: u32) -> QPoly {
    assert!(n >= 1, "cyclotomic index must be positive");
    if n <= CACHE_SIZE {
        return cache()[n as usize].clone();
    }
    let mut table: Vec<QPoly> = cache().clone();
    for m in CACHE_SIZE + 1..=n {
        let phi = compute(m, &table);
        table.push(phi);
    }
    table.pop().unwrap()
}

/// Euler's totient, used for degree checks.
pub fn totient(n: u32) -> u32 {
    (1..=n).filter(|&k| num_integer::gcd(k, n) == 1).count() as u32
}

/// scalar · q^qpow · ∏ Φ_n^mult · remainder
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclotomicFactorization {
    pub scalar: Rational,
    pub qpow: u32,
    pub phi: BTreeMap<u32, u32>,
    /// Monic, and free of Φ_n for n up to the bound used.
    pub remainder: QPoly,
}

impl CyclotomicFactorization {
    pub fn expand(&self) -> QPoly {
        let mut p = QPoly::constant(self.scalar.clone()).shift(self.qpow as usize);
        for (&n, &m) in &self.phi {
            p = &p * &cyclotomic(n).pow(m);
        }
        &p * &self.remainder
    }

    /// Renders e.g. `-q^2 * (q-1)^2 * Phi2 Phi3`. The scalar, q-power and
    /// Φ1 factor are separated by `*`; higher Φ_n are juxtaposed.
    pub fn render(&self) -> String {
        let (sign, tokens) = self.render_tokens();
        let body = if tokens.is_empty() { "1".to_string() } else { tokens.join(" * ") };
        if sign {
            format!("-{body}")
        } else {
            body
        }
    }

    /// Sign flag and the multiplicative tokens; used by the rational
    /// function renderer to decide on parentheses.
    pub(crate) fn render_tokens(&self) -> (bool, Vec<String>) {
        let mut tokens = Vec::new();
        let neg = self.scalar.is_negative();
        let a = self.scalar.abs();
        if !a.is_one() {
            tokens.push(a.to_string());
        }
        match self.qpow {
            0 => {}
            1 => tokens.push("q".into()),
            k => tokens.push(format!("q^{k}")),
        }
        if let Some(&m) = self.phi.get(&1) {
            tokens.push(if m == 1 { "(q-1)".into() } else { format!("(q-1)^{m}") });
        }
        let higher: Vec<String> = self
            .phi
            .iter()
            .filter(|(&n, _)| n > 1)
            .map(|(&n, &m)| if m == 1 { format!("Phi{n}") } else { format!("Phi{n}^{m}") })
            .collect();
        if !higher.is_empty() {
            tokens.push(higher.join(" "));
        }
        if !self.remainder.is_one() {
            tokens.push(format!("({})", self.remainder.pretty()));
        }
        (neg, tokens)
    }
}

/// Factor out q-powers and Φ_n for n ≤ bound by repeated exact division.
pub fn factor_cyclotomic(p: &QPoly, bound: u32) -> Result<CyclotomicFactorization> {
    if p.is_zero() {
        return Err(Error::Invalid("zero input".into()));
    }
    let qpow = p.valuation().unwrap() as u32;
    let mut rest = QPoly::new(p.coeffs()[qpow as usize..].to_vec());
    let scalar = rest.leading();
    rest = rest.monic();
    let mut phi = BTreeMap::new();
    for n in 1..=bound {
        let c = cyclotomic(n);
        if rest.degree().unwrap_or(0) < c.degree().unwrap() {
            continue;
        }
        let mut m = 0;
        while let Some(quot) = rest.exact_div(&c) {
            rest = quot;
            m += 1;
        }
        if m > 0 {
            phi.insert(n, m);
        }
    }
    debug_assert!(!rest.is_zero() && rest.leading().is_one());
    Ok(CyclotomicFactorization { scalar, qpow, phi, remainder: rest })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cyclotomics() {
        assert_eq!(cyclotomic(1), QPoly::from_ints(&[-1, 1]));
        assert_eq!(cyclotomic(2), QPoly::from_ints(&[1, 1]));
        assert_eq!(cyclotomic(6), QPoly::from_ints(&[1, -1, 1]));
        assert_eq!(cyclotomic(12), QPoly::from_ints(&[1, 0, -1, 0, 1]));
    }

    #[test]
    fn degrees_are_totients() {
        for n in 1..=40 {
            assert_eq!(cyclotomic(n).degree().unwrap() as u32, totient(n));
        }
    }

    #[test]
    fn q6_minus_one() {
        let f = factor_cyclotomic(&QPoly::q_pow_minus_one(6), DEFAULT_BOUND).unwrap();
        assert_eq!(f.phi, BTreeMap::from([(1, 1), (2, 1), (3, 1), (6, 1)]));
        assert!(f.remainder.is_one());
        assert_eq!(f.scalar, Rational::one());
    }

    #[test]
    fn irreducible_remainder() {
        let f = factor_cyclotomic(&QPoly::from_ints(&[2, 0, 1]), DEFAULT_BOUND).unwrap();
        assert!(f.phi.is_empty());
        assert_eq!(f.remainder, QPoly::from_ints(&[2, 0, 1]));
    }

    #[test]
    fn zero_is_rejected() {
        assert!(factor_cyclotomic(&QPoly::zero(), DEFAULT_BOUND).is_err());
    }

    #[test]
    fn render_negative_monomial() {
        let f = factor_cyclotomic(&QPoly::from_ints(&[0, 0, -1]), DEFAULT_BOUND).unwrap();
        assert_eq!(f.render(), "-q^2");
    }
}
