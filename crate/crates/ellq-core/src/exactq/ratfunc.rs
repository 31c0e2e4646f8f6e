//! Reduced quotients of polynomials over Q.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::cyclotomic::{factor_cyclotomic, DEFAULT_BOUND};
use super::{QPoly, Rational};
use crate::error::{Error, Result};

/// num/den with den monic and gcd(num, den) = 1. Zero is 0/1.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: QPoly,
    den: QPoly,
}

impl RatFunc {
    pub fn new(num: QPoly, den: QPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::Arithmetic("zero denominator".into()));
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(num: QPoly, den: QPoly) -> Self {
        if num.is_zero() {
            return RatFunc::zero();
        }
        let g = QPoly::gcd(&num, &den);
        let (mut n, mut d) = if g.is_one() {
            (num, den)
        } else {
            (num.exact_div(&g).unwrap(), den.exact_div(&g).unwrap())
        };
        let lead = d.leading();
        if !lead.is_one() {
            let inv = lead.recip();
            n = n.scale(&inv);
            d = d.scale(&inv);
        }
        RatFunc { num: n, den: d }
    }

    pub fn zero() -> Self {
        RatFunc { num: QPoly::zero(), den: QPoly::one() }
    }

    pub fn one() -> Self {
        RatFunc::from_poly(QPoly::one())
    }

    pub fn from_poly(p: QPoly) -> Self {
        RatFunc { num: p, den: QPoly::one() }
    }

    pub fn constant(c: Rational) -> Self {
        RatFunc::from_poly(QPoly::constant(c))
    }

    pub fn from_int(c: i64) -> Self {
        RatFunc::constant(Rational::from_integer(c.into()))
    }

    /// The indeterminate q.
    pub fn q() -> Self {
        RatFunc::from_poly(QPoly::q_pow(1))
    }

    pub fn num(&self) -> &QPoly {
        &self.num
    }

    pub fn den(&self) -> &QPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn as_polynomial(&self) -> Option<&QPoly> {
        self.is_polynomial().then_some(&self.num)
    }

    pub fn scale(&self, c: &Rational) -> RatFunc {
        if c.is_zero() {
            return RatFunc::zero();
        }
        RatFunc { num: self.num.scale(c), den: self.den.clone() }
    }

    pub fn inv(&self) -> Result<RatFunc> {
        if self.is_zero() {
            return Err(Error::Arithmetic("inverse of zero rational function".into()));
        }
        Ok(Self::reduce(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, rhs: &RatFunc) -> Result<RatFunc> {
        Ok(self * &rhs.inv()?)
    }

    pub fn pow(&self, e: i32) -> Result<RatFunc> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let k = e.unsigned_abs();
        Ok(RatFunc { num: base.num.pow(k), den: base.den.pow(k) })
    }

    /// Exact value at a rational point.
    pub fn eval(&self, x: &Rational) -> Result<Rational> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return Err(Error::Arithmetic(format!("evaluation at a pole q = {x}")));
        }
        Ok(self.num.eval(x) / d)
    }

    /// f(q^k)
    pub fn substitute_power(&self, k: usize) -> RatFunc {
        Self::reduce(self.num.substitute_power(k), self.den.substitute_power(k))
    }

    /// Composition with another rational function g: f(g(q)).
    pub fn compose(&self, g: &RatFunc) -> Result<RatFunc> {
        // Horner in the field: both num and den evaluated at g.
        let horner = |p: &QPoly| {
            let mut acc = RatFunc::zero();
            for c in p.coeffs().iter().rev() {
                acc = &(&acc * g) + &RatFunc::constant(c.clone());
            }
            acc
        };
        horner(&self.num).checked_div(&horner(&self.den))
    }

    /// Sum of many fractions over their least common denominator, reduced once.
    pub fn sum<'a, I: IntoIterator<Item = &'a RatFunc>>(terms: I) -> RatFunc {
        let terms: Vec<&RatFunc> = terms.into_iter().filter(|t| !t.is_zero()).collect();
        if terms.is_empty() {
            return RatFunc::zero();
        }
        let mut lcm = QPoly::one();
        for t in &terms {
            let g = QPoly::gcd(&lcm, &t.den);
            lcm = &lcm * &t.den.exact_div(&g).unwrap();
        }
        let mut num = QPoly::zero();
        for t in &terms {
            let cofactor = lcm.exact_div(&t.den).unwrap();
            num = &num + &(&t.num * &cofactor);
        }
        Self::reduce(num, lcm)
    }

    /// Sign of the function for large real q (sign of leading coefficient ratio).
    pub fn sign_at_infinity(&self) -> i32 {
        use num_traits::Signed;
        if self.is_zero() {
            0
        } else if self.num.leading().is_positive() {
            1
        } else {
            -1
        }
    }

    /// Rendered with cyclotomic factorization of numerator and denominator,
    /// e.g. `(q-1)^2 * Phi5 / (Phi2^2 Phi3 Phi6)`.
    pub fn factored(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let n = factor_cyclotomic(&self.num, DEFAULT_BOUND).unwrap();
        let d = factor_cyclotomic(&self.den, DEFAULT_BOUND).unwrap();
        let mut out = n.render();
        if !self.den.is_one() {
            let (_, toks) = d.render_tokens();
            let body = toks.join(" * ");
            let wrap = toks.len() > 1 || body.contains(' ') || body.contains('^');
            out.push_str(" / ");
            if wrap {
                out.push('(');
                out.push_str(&body);
                out.push(')');
            } else {
                out.push_str(&body);
            }
        }
        out
    }

    /// Expanded `num / den` form.
    pub fn pretty(&self) -> String {
        if self.den.is_one() {
            self.num.pretty()
        } else {
            format!("({}) / ({})", self.num.pretty(), self.den.pretty())
        }
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFunc({})", self.pretty())
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.factored())
    }
}

impl From<QPoly> for RatFunc {
    fn from(p: QPoly) -> Self {
        RatFunc::from_poly(p)
    }
}

impl Add for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            return RatFunc::reduce(&self.num + &rhs.num, self.den.clone());
        }
        let g = QPoly::gcd(&self.den, &rhs.den);
        let a = self.den.exact_div(&g).unwrap();
        let b = rhs.den.exact_div(&g).unwrap();
        let num = &(&self.num * &b) + &(&rhs.num * &a);
        RatFunc::reduce(num, &a * &rhs.den)
    }
}

impl Sub for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self + &(-rhs)
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc { num: -&self.num, den: self.den.clone() }
    }
}

impl Mul for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() || rhs.is_zero() {
            return RatFunc::zero();
        }
        // cross-cancel first to keep degrees down
        let g1 = QPoly::gcd(&self.num, &rhs.den);
        let g2 = QPoly::gcd(&rhs.num, &self.den);
        let n1 = self.num.exact_div(&g1).unwrap();
        let d2 = rhs.den.exact_div(&g1).unwrap();
        let n2 = rhs.num.exact_div(&g2).unwrap();
        let d1 = self.den.exact_div(&g2).unwrap();
        RatFunc::reduce(&n1 * &n2, &d1 * &d2)
    }
}

/// Panics on division by zero; use [`RatFunc::checked_div`] for a `Result`.
impl Div for &RatFunc {
    type Output = RatFunc;
    fn div(self, rhs: &RatFunc) -> RatFunc {
        self.checked_div(rhs).expect("division by the zero rational function")
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for RatFunc {
            type Output = RatFunc;
            fn $m(self, rhs: RatFunc) -> RatFunc {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactq::rat;

    fn rf(n: &[i64], d: &[i64]) -> RatFunc {
        RatFunc::new(QPoly::from_ints(n), QPoly::from_ints(d)).unwrap()
    }

    #[test]
    fn evaluation() {
        let f = rf(&[1, -1], &[1, 1]);
        assert_eq!(f.eval(&rat(2, 1)).unwrap(), rat(-1, 3));
        assert!(f.eval(&rat(-1, 1)).is_err());
    }

    #[test]
    fn canonical_form() {
        // (1 - q^2)/(1 - q) = 1 + q
        let f = rf(&[1, 0, -1], &[1, -1]);
        assert_eq!(f, RatFunc::from_poly(QPoly::from_ints(&[1, 1])));
        let g = rf(&[2, 2], &[4, 4, 0]);
        assert_eq!(g, RatFunc::constant(rat(1, 2)));
        assert!(rf(&[3], &[0, 2]).den().leading().is_one());
    }

    #[test]
    fn field_axioms_spot_check() {
        let f = rf(&[1, -1, 3], &[2, 0, 1]);
        assert_eq!(&f * &f.inv().unwrap(), RatFunc::one());
        assert!((&f - &f).is_zero());
        assert!(RatFunc::zero().inv().is_err());
    }

    #[test]
    fn sum_matches_pairwise_addition() {
        let terms = vec![rf(&[1], &[1, 1]), rf(&[1], &[1, -1]), rf(&[0, 1], &[1, 0, 1])];
        let pairwise = terms.iter().fold(RatFunc::zero(), |a, b| &a + b);
        assert_eq!(RatFunc::sum(&terms), pairwise);
    }

    #[test]
    fn factored_rendering() {
        // (q-1)^2 Φ5 / (Φ2^2 Φ3 Φ6)
        use crate::exactq::cyclotomic::cyclotomic as phi;
        let num = &phi(1).pow(2) * &phi(5);
        let den = &(&phi(2).pow(2) * &phi(3)) * &phi(6);
        let f = RatFunc::new(num, den).unwrap();
        assert_eq!(f.factored(), "(q-1)^2 * Phi5 / (Phi2^2 Phi3 Phi6)");
        assert_eq!(rf(&[1, -1], &[1, 1]).factored(), "-(q-1) / Phi2");
    }
}
