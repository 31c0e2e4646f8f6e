//! Dense univariate polynomials over Q in the indeterminate q.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::Rational;

/// Polynomial with rational coefficients, lowest degree first.
///
/// The coefficient vector never ends in a zero; the zero polynomial is
/// the empty vector.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct QPoly {
    coeffs: Vec<Rational>,
}

impl QPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        QPoly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        QPoly::new(coeffs.iter().map(|&c| Rational::from_integer(c.into())).collect())
    }

    pub fn zero() -> Self {
        QPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        QPoly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        QPoly::new(vec![c])
    }

    /// The monomial c·q^k.
    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut v = vec![Rational::zero(); k + 1];
        v[k] = c;
        QPoly::new(v)
    }

    /// q^k
    pub fn q_pow(k: usize) -> Self {
        QPoly::monomial(Rational::one(), k)
    }

    /// q^k - 1
    pub fn q_pow_minus_one(k: usize) -> Self {
        &QPoly::q_pow(k) - &QPoly::one()
    }

    /// 1 - q^k
    pub fn one_minus_q_pow(k: usize) -> Self {
        &QPoly::one() - &QPoly::q_pow(k)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    /// Lowest power of q with a nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn scale(&self, c: &Rational) -> QPoly {
        if c.is_zero() {
            return QPoly::zero();
        }
        QPoly { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    pub fn monic(&self) -> QPoly {
        if self.is_zero() {
            return QPoly::zero();
        }
        self.scale(&self.leading().recip())
    }

    /// Multiply by q^k.
    pub fn shift(&self, k: usize) -> QPoly {
        if self.is_zero() {
            return QPoly::zero();
        }
        let mut v = vec![Rational::zero(); k];
        v.extend(self.coeffs.iter().cloned());
        QPoly { coeffs: v }
    }

    pub fn pow(&self, mut e: u32) -> QPoly {
        let mut base = self.clone();
        let mut acc = QPoly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// p(q^k)
    pub fn substitute_power(&self, k: usize) -> QPoly {
        assert!(k >= 1);
        if self.is_zero() {
            return QPoly::zero();
        }
        let mut v = vec![Rational::zero(); (self.coeffs.len() - 1) * k + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            v[i * k] = c.clone();
        }
        QPoly::new(v)
    }

    /// Horner evaluation at a rational point.
    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Composition self(other).
    pub fn compose(&self, other: &QPoly) -> QPoly {
        let mut acc = QPoly::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * other) + &QPoly::constant(c.clone());
        }
        acc
    }

    /// Euclidean division, returns (quotient, remainder).
    pub fn div_rem(&self, d: &QPoly) -> (QPoly, QPoly) {
        assert!(!d.is_zero(), "polynomial division by zero");
        let dd = d.coeffs.len() - 1;
        if self.coeffs.len() < d.coeffs.len() {
            return (QPoly::zero(), self.clone());
        }
        let lead_inv = d.leading().recip();
        let mut r = self.coeffs.clone();
        let mut quot = vec![Rational::zero(); r.len() - dd];
        for i in (0..quot.len()).rev() {
            let c = &r[i + dd] * &lead_inv;
            if !c.is_zero() {
                for (j, dc) in d.coeffs.iter().enumerate() {
                    r[i + j] -= &c * dc;
                }
            }
            quot[i] = c;
        }
        r.truncate(dd);
        (QPoly::new(quot), QPoly::new(r))
    }

    /// Quotient if `d` divides `self` exactly.
    pub fn exact_div(&self, d: &QPoly) -> Option<QPoly> {
        let (quot, r) = self.div_rem(d);
        r.is_zero().then_some(quot)
    }

    /// Monic gcd; gcd(0, 0) = 0.
    pub fn gcd(a: &QPoly, b: &QPoly) -> QPoly {
        let mut x = a.primitive_part();
        let mut y = b.primitive_part();
        while !y.is_zero() {
            let (_, r) = x.div_rem(&y);
            x = y;
            y = r.primitive_part();
        }
        x.monic()
    }

    /// Divide out the rational content so the coefficients are coprime
    /// integers with positive leading coefficient. Keeps Euclid's
    /// intermediate coefficients from growing.
    pub fn primitive_part(&self) -> QPoly {
        if self.is_zero() {
            return QPoly::zero();
        }
        let content = self.content();
        let p = self.scale(&content.recip());
        if p.leading().is_negative() {
            -&p
        } else {
            p
        }
    }

    /// Positive rational c with self/c having coprime integer coefficients.
    pub fn content(&self) -> Rational {
        use num_integer::Integer;
        let mut num = BigInt::zero();
        let mut den = BigInt::one();
        for c in &self.coeffs {
            num = num.gcd(c.numer());
            den = den.lcm(c.denom());
        }
        Rational::new(num, den)
    }

    /// All coefficients are integers.
    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    /// Coefficients as i64, if they are all small integers.
    pub fn to_i64s(&self) -> Option<Vec<i64>> {
        use num_traits::ToPrimitive;
        self.coeffs
            .iter()
            .map(|c| if c.is_integer() { c.numer().to_i64() } else { None })
            .collect()
    }

    /// Human-readable expanded form, highest degree first.
    pub fn pretty(&self) -> String {
        self.pretty_in("q")
    }

    pub fn pretty_in(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mon = match k {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{k}"),
            };
            if mon.is_empty() {
                out.push_str(&a.to_string());
            } else if a.is_one() {
                out.push_str(&mon);
            } else {
                out.push_str(&format!("{a}*{mon}"));
            }
        }
        out
    }
}

impl fmt::Debug for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QPoly({})", self.pretty())
    }
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.pretty())
    }
}

impl Add for &QPoly {
    type Output = QPoly;
    fn add(self, rhs: &QPoly) -> QPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut v = Vec::with_capacity(n);
        for i in 0..n {
            v.push(match (self.coeffs.get(i), rhs.coeffs.get(i)) {
                (Some(a), Some(b)) => a + b,
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            });
        }
        QPoly::new(v)
    }
}

impl Sub for &QPoly {
    type Output = QPoly;
    fn sub(self, rhs: &QPoly) -> QPoly {
        self + &(-rhs)
    }
}

impl Neg for &QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        QPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Mul for &QPoly {
    type Output = QPoly;
    fn mul(self, rhs: &QPoly) -> QPoly {
        if self.is_zero() || rhs.is_zero() {
            return QPoly::zero();
        }
        let mut v = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        QPoly::new(v)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for QPoly {
            type Output = QPoly;
            fn $m(self, rhs: QPoly) -> QPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> QPoly {
        QPoly::from_ints(c)
    }

    #[test]
    fn trailing_zeros_are_trimmed() {
        assert_eq!(p(&[1, 2, 0, 0]).degree(), Some(1));
        assert!(p(&[0, 0]).is_zero());
    }

    #[test]
    fn division_round_trips() {
        let a = p(&[-1, 0, 0, 0, 0, 0, 1]);
        let b = p(&[1, 1]);
        let (quot, r) = a.div_rem(&b);
        assert!(r.is_zero());
        assert_eq!(&quot * &b, a);
        let (q2, r2) = p(&[3, 0, 1]).div_rem(&p(&[1, 1]));
        assert_eq!(&(&q2 * &p(&[1, 1])) + &r2, p(&[3, 0, 1]));
    }

    #[test]
    fn gcd_is_monic() {
        // (q-1)(q+2) and (q-1)(q+5)
        let g = QPoly::gcd(&p(&[-2, 1, 1]), &p(&[-5, 4, 1]));
        assert_eq!(g, p(&[-1, 1]));
        assert!(QPoly::gcd(&p(&[2]), &p(&[0, 3])).is_one());
    }

    #[test]
    fn eval_and_compose() {
        let f = p(&[1, -1, 1]);
        assert_eq!(f.eval(&Rational::from_integer(3.into())), Rational::from_integer(7.into()));
        assert_eq!(f.substitute_power(2), f.compose(&p(&[0, 0, 1])));
    }

    #[test]
    fn pretty_printing() {
        assert_eq!(p(&[-1, 0, 2]).pretty(), "2*q^2 - 1");
        assert_eq!(p(&[0, -1]).pretty(), "-q");
        assert_eq!(QPoly::zero().pretty(), "0");
    }
}
