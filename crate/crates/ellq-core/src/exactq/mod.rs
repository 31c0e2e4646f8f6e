//! Exact scalars, polynomials and rational functions in q.

pub mod cyclotomic;
pub mod field;
pub mod linalg;
pub mod poly;
pub mod ratfunc;

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::{json, Value};

pub use cyclotomic::{cyclotomic, factor_cyclotomic, CyclotomicFactorization, DEFAULT_BOUND};
pub use field::Cyclo;
pub use poly::QPoly;
pub use ratfunc::RatFunc;

use crate::error::{Error, Result};

pub type Rational = BigRational;

/// Shorthand for the rational n/d.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// Always `num/den`, even for integers, so the JSON shape never varies.
pub fn rational_to_string(c: &Rational) -> String {
    format!("{}/{}", c.numer(), c.denom())
}

pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational number: {s:?}"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d == BigInt::from(0) {
                return Err(bad());
            }
            Ok(Rational::new(n, d))
        }
        None => Ok(Rational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

pub fn rational_to_json(c: &Rational) -> Value {
    Value::String(rational_to_string(c))
}

pub fn rational_from_json(v: &Value) -> Result<Rational> {
    match v {
        Value::String(s) => parse_rational(s),
        Value::Number(n) => n
            .as_i64()
            .map(int)
            .ok_or_else(|| Error::Parse(format!("non-integer JSON number {n}"))),
        _ => Err(Error::Parse(format!("expected a rational, got {v}"))),
    }
}

pub fn poly_to_json(p: &QPoly) -> Value {
    Value::Array(p.coeffs().iter().map(rational_to_json).collect())
}

pub fn poly_from_json(v: &Value) -> Result<QPoly> {
    let arr = v.as_array().ok_or_else(|| Error::Parse(format!("expected coefficient array, got {v}")))?;
    Ok(QPoly::new(arr.iter().map(rational_from_json).collect::<Result<_>>()?))
}

pub fn ratfunc_to_json(f: &RatFunc) -> Value {
    json!({ "num": poly_to_json(f.num()), "den": poly_to_json(f.den()) })
}

pub fn ratfunc_from_json(v: &Value) -> Result<RatFunc> {
    let num = poly_from_json(v.get("num").ok_or_else(|| Error::Parse("missing \"num\"".into()))?)?;
    let den = poly_from_json(v.get("den").ok_or_else(|| Error::Parse("missing \"den\"".into()))?)?;
    RatFunc::new(num, den)
}

pub fn factorization_to_json(f: &CyclotomicFactorization) -> Value {
    let phi: BTreeMap<String, u32> = f.phi.iter().map(|(n, m)| (n.to_string(), *m)).collect();
    json!({
        "scalar": rational_to_string(&f.scalar),
        "qpow": f.qpow,
        "phi": phi,
        "rem": poly_to_json(&f.remainder),
    })
}

pub fn factorization_from_json(v: &Value) -> Result<CyclotomicFactorization> {
    let field = |k: &str| v.get(k).ok_or_else(|| Error::Parse(format!("missing {k:?}")));
    let scalar = rational_from_json(field("scalar")?)?;
    let qpow = field("qpow")?.as_u64().ok_or_else(|| Error::Parse("bad qpow".into()))? as u32;
    let mut phi = BTreeMap::new();
    for (k, m) in field("phi")?.as_object().ok_or_else(|| Error::Parse("bad phi".into()))? {
        let n: u32 = k.parse().map_err(|_| Error::Parse(format!("bad Phi index {k:?}")))?;
        phi.insert(n, m.as_u64().ok_or_else(|| Error::Parse("bad multiplicity".into()))? as u32);
    }
    let remainder = poly_from_json(field("rem")?)?;
    Ok(CyclotomicFactorization { scalar, qpow, phi, remainder })
}

/// A rational function as factored numerator and denominator plus its
/// rendering; `ratfunc_from_factored_report` inverts it.
pub fn ratfunc_to_factored_report(f: &RatFunc) -> Value {
    let fac = |p: &QPoly| factorization_to_json(&factor_cyclotomic(p, DEFAULT_BOUND).expect("nonzero polynomial"));
    if f.is_zero() {
        return json!({ "text": "0", "num": null, "den": fac(&QPoly::one()) });
    }
    json!({ "text": f.factored(), "num": fac(f.num()), "den": fac(f.den()) })
}

pub fn ratfunc_from_factored_report(v: &Value) -> Result<RatFunc> {
    let den = factorization_from_json(v.get("den").ok_or_else(|| Error::Parse("missing \"den\"".into()))?)?.expand();
    match v.get("num") {
        Some(Value::Null) => Ok(RatFunc::zero()),
        Some(n) => RatFunc::new(factorization_from_json(n)?.expand(), den),
        None => Err(Error::Parse("missing \"num\"".into())),
    }
}

/// Reads `{"scalar": "1/6", "q": 1, "phi": {"1": 2, "2": -2, "3": -1}}`, meaning
/// (1/6) q Φ1² / (Φ2² Φ3). Negative Φ exponents go to the denominator.
pub fn ratfunc_from_factored_json(v: &Value) -> Result<RatFunc> {
    let scalar = match v.get("scalar") {
        Some(x) => rational_from_json(x)?,
        None => int(1),
    };
    let qpow = v.get("q").map_or(Some(0), Value::as_u64).ok_or_else(|| Error::Parse(format!("bad q power in {v}")))?;
    let mut num = QPoly::monomial(scalar, qpow as usize);
    let mut den = QPoly::one();
    if let Some(phi) = v.get("phi") {
        let phi = phi.as_object().ok_or_else(|| Error::Parse(format!("bad phi map in {v}")))?;
        for (k, e) in phi {
            let n: u32 = k.parse().map_err(|_| Error::Parse(format!("bad Phi index {k:?}")))?;
            let e = e.as_i64().ok_or_else(|| Error::Parse(format!("bad exponent for Phi{n}")))?;
            let f = cyclotomic(n).pow(e.unsigned_abs() as u32);
            if e >= 0 {
                num = &num * &f;
            } else {
                den = &den * &f;
            }
        }
    }
    RatFunc::new(num, den)
}

/// Rational function together with its factored rendering, for reports.
pub fn ratfunc_report_json(f: &RatFunc) -> Value {
    let mut v = ratfunc_to_json(f);
    v["text"] = Value::String(f.factored());
    if !f.is_zero() {
        v["num_factored"] = factorization_to_json(&factor_cyclotomic(f.num(), DEFAULT_BOUND).unwrap());
        v["den_factored"] = factorization_to_json(&factor_cyclotomic(f.den(), DEFAULT_BOUND).unwrap());
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_strings() {
        assert_eq!(rational_to_string(&rat(-2, 4)), "-1/2");
        assert_eq!(rational_to_string(&int(3)), "3/1");
        assert_eq!(parse_rational("6/-4").unwrap(), rat(-3, 2));
        let f = ratfunc_from_factored_json(&json!({"scalar": "-1", "q": 2, "phi": {"1": 1, "2": -1}})).unwrap();
        assert_eq!(f, RatFunc::new(QPoly::from_ints(&[0, 0, 1, -1]), QPoly::from_ints(&[1, 1])).unwrap());
        assert_eq!(parse_rational("7").unwrap(), int(7));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn json_round_trip() {
        let f = RatFunc::new(QPoly::from_ints(&[0, 1, -2]), QPoly::from_ints(&[3, 0, 6])).unwrap();
        let back = ratfunc_from_json(&ratfunc_to_json(&f)).unwrap();
        assert_eq!(back, f);
        let fac = factor_cyclotomic(&QPoly::from_ints(&[0, 0, 2, 0, -2]), DEFAULT_BOUND).unwrap();
        assert_eq!(factorization_from_json(&factorization_to_json(&fac)).unwrap(), fac);
    }
}
