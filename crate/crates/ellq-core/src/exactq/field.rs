//! Exact arithmetic in the cyclotomic field Q(ζ_m).

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::cyclotomic::cyclotomic;
use super::{QPoly, Rational};

/// Element of Q(ζ_m), stored as a polynomial in ζ reduced modulo Φ_m.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Cyclo {
    m: u32,
    p: QPoly,
}

impl Cyclo {
    fn reduced(m: u32, p: QPoly) -> Self {
        let (_, r) = p.div_rem(&cyclotomic(m));
        Cyclo { m, p: r }
    }

    pub fn zero(m: u32) -> Self {
        Cyclo { m, p: QPoly::zero() }
    }

    pub fn one(m: u32) -> Self {
        Cyclo::rational(m, Rational::one())
    }

    pub fn rational(m: u32, c: Rational) -> Self {
        Cyclo { m, p: QPoly::constant(c) }
    }

    pub fn from_int(m: u32, c: i64) -> Self {
        Cyclo::rational(m, Rational::from_integer(c.into()))
    }

    /// ζ_m^k for any integer k.
    pub fn root(m: u32, k: i64) -> Self {
        let e = k.rem_euclid(m as i64) as usize;
        Cyclo::reduced(m, QPoly::q_pow(e))
    }

    pub fn order(&self) -> u32 {
        self.m
    }

    pub fn is_zero(&self) -> bool {
        self.p.is_zero()
    }

    /// Some(c) if the element lies in Q.
    pub fn to_rational(&self) -> Option<Rational> {
        match self.p.degree() {
            None => Some(Rational::zero()),
            Some(0) => Some(self.p.coeff(0)),
            _ => None,
        }
    }

    /// Re-express in Q(ζ_n) where m divides n.
    pub fn lift(&self, n: u32) -> Cyclo {
        assert!(n.is_multiple_of(self.m), "Q(ζ_{}) does not embed in Q(ζ_{n})", self.m);
        if n == self.m {
            return self.clone();
        }
        let step = (n / self.m) as usize;
        Cyclo::reduced(n, self.p.substitute_power(step))
    }

    /// The automorphism ζ ↦ ζ^j (j coprime to m).
    pub fn galois(&self, j: i64) -> Cyclo {
        let m = self.m as i64;
        let mut v = vec![Rational::zero(); self.m as usize];
        for (i, c) in self.p.coeffs().iter().enumerate() {
            let e = ((i as i64) * j).rem_euclid(m) as usize;
            v[e] += c;
        }
        Cyclo::reduced(self.m, QPoly::new(v))
    }

    /// Complex conjugation ζ ↦ ζ^{-1}.
    pub fn conj(&self) -> Cyclo {
        self.galois(-1)
    }

    /// Exponents j in [1, m] coprime to m, indexing the Galois group.
    pub fn galois_exponents(m: u32) -> Vec<i64> {
        (1..=m as i64).filter(|&j| num_integer::gcd(j, m as i64) == 1).collect()
    }

    pub fn scale(&self, c: &Rational) -> Cyclo {
        Cyclo { m: self.m, p: self.p.scale(c) }
    }

    fn common(a: &Cyclo, b: &Cyclo) -> (Cyclo, Cyclo) {
        if a.m == b.m {
            return (a.clone(), b.clone());
        }
        let n = num_integer::lcm(a.m, b.m);
        (a.lift(n), b.lift(n))
    }
}

impl fmt::Debug for Cyclo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.to_rational() {
            Some(c) => write!(f, "{c}"),
            None => write!(f, "[{}]_{}", self.p.pretty_in("z"), self.m),
        }
    }
}

impl Add for &Cyclo {
    type Output = Cyclo;
    fn add(self, rhs: &Cyclo) -> Cyclo {
        let (a, b) = Cyclo::common(self, rhs);
        Cyclo { m: a.m, p: &a.p + &b.p }
    }
}

impl Sub for &Cyclo {
    type Output = Cyclo;
    fn sub(self, rhs: &Cyclo) -> Cyclo {
        self + &(-rhs)
    }
}

impl Neg for &Cyclo {
    type Output = Cyclo;
    fn neg(self) -> Cyclo {
        Cyclo { m: self.m, p: -&self.p }
    }
}

impl Mul for &Cyclo {
    type Output = Cyclo;
    fn mul(self, rhs: &Cyclo) -> Cyclo {
        let (a, b) = Cyclo::common(self, rhs);
        Cyclo::reduced(a.m, &a.p * &b.p)
    }
}
