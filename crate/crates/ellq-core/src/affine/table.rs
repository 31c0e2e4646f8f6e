use std::collections::BTreeMap;

use num_traits::Zero;
use serde_json::Value;

use super::{AffineClassFunction, AffineDatum};
use crate::elliptic::elliptic_fake_degree;
use crate::error::{Error, Result};
use crate::exactq::linalg::QMatrix;
use crate::exactq::{parse_rational, RatFunc, Rational};
use crate::fixtures::Fixtures;
use crate::fourier::SmallGroup;
use crate::unipotent::{npoly_fakes, UnipotentData};

fn bad(id: &str, m: &str) -> Error {
    Error::Invalid(format!("fixture {id}: {m}"))
}

fn rationals(v: &Value, id: &str) -> Result<Vec<Rational>> {
    v.as_array()
        .ok_or_else(|| bad(id, "expected an array"))?
        .iter()
        .map(|x| match x {
            Value::String(s) => parse_rational(s),
            Value::Number(n) => n.as_i64().map(|k| Rational::from_integer(k.into())).ok_or_else(|| bad(id, "bad number")),
            _ => Err(bad(id, "expected a rational")),
        })
        .collect()
}

fn matrix(v: &Value, id: &str) -> Result<QMatrix> {
    v.as_array().ok_or_else(|| bad(id, "expected a matrix"))?.iter().map(|r| rationals(r, id)).collect()
}

/// A discrete series character of W^a restricted to the elliptic classes,
/// with the isolated point it is induced from.
#[derive(Clone, Debug)]
pub struct AffineCharacter {
    pub name: String,
    pub module: String,
    pub point: String,
    pub point_is_identity: bool,
    /// Restriction to W as irreducible label -> multiplicity, when s = 1.
    pub restriction: BTreeMap<String, i64>,
    /// Type of the centralizer of the isolated point.
    pub centralizer: String,
    pub values: Vec<Rational>,
}

#[derive(Clone, Debug)]
pub struct EllipticCharacterTable {
    pub group: String,
    pub classes: Vec<String>,
    pub mu: Vec<Rational>,
    pub characters: Vec<AffineCharacter>,
    /// Printed EF^J_el blocks, one per maximal J.
    pub ef_j: Vec<QMatrix>,
    /// Printed EF^a_el in the basis of the characters.
    pub ef_affine: QMatrix,
}

impl EllipticCharacterTable {
    pub fn load(fixtures: &Fixtures, id: &str) -> Result<EllipticCharacterTable> {
        let v = fixtures.load(id)?;
        let s = |x: &Value, k: &str| -> Result<String> {
            x.get(k).and_then(Value::as_str).map(str::to_string).ok_or_else(|| bad(id, &format!("missing {k:?}")))
        };
        let classes: Vec<String> = v
            .get("classes")
            .and_then(Value::as_array)
            .ok_or_else(|| bad(id, "missing classes"))?
            .iter()
            .map(|c| c.as_str().map(str::to_string).ok_or_else(|| bad(id, "class label is not a string")))
            .collect::<Result<_>>()?;
        let mu = rationals(v.get("mu_el").ok_or_else(|| bad(id, "missing mu_el"))?, id)?;
        let mut characters = Vec::new();
        for c in v.get("characters").and_then(Value::as_array).ok_or_else(|| bad(id, "missing characters"))? {
            let values = rationals(c.get("values").ok_or_else(|| bad(id, "character without values"))?, id)?;
            if values.len() != classes.len() {
                return Err(bad(id, "character length does not match the classes"));
            }
            let mut restriction = BTreeMap::new();
            if let Some(r) = c.get("restriction").and_then(Value::as_object) {
                for (l, k) in r {
                    restriction.insert(l.clone(), k.as_i64().ok_or_else(|| bad(id, "bad multiplicity"))?);
                }
            }
            characters.push(AffineCharacter {
                name: s(c, "name")?,
                module: s(c, "module")?,
                point: s(c, "point")?,
                point_is_identity: c.get("point_is_identity").and_then(Value::as_bool).unwrap_or(false),
                restriction,
                centralizer: s(c, "centralizer")?,
                values,
            });
        }
        let ef_j = v
            .get("ef_j")
            .and_then(Value::as_array)
            .ok_or_else(|| bad(id, "missing ef_j"))?
            .iter()
            .map(|m| matrix(m, id))
            .collect::<Result<_>>()?;
        let ef_affine = matrix(v.get("ef_affine").ok_or_else(|| bad(id, "missing ef_affine"))?, id)?;
        Ok(EllipticCharacterTable { group: s(&v, "group")?, classes, mu, characters, ef_j, ef_affine })
    }

    pub fn g2(fixtures: &Fixtures) -> Result<EllipticCharacterTable> {
        EllipticCharacterTable::load(fixtures, "g2_affine_elliptic")
    }

    pub fn character(&self, name: &str) -> Result<&AffineCharacter> {
        self.characters
            .iter()
            .find(|c| c.name == name)
            .ok_or_else(|| Error::Missing(format!("no character {name} in the {} table", self.group)))
    }

    pub fn basis(&self) -> Vec<Vec<Rational>> {
        self.characters.iter().map(|c| c.values.clone()).collect()
    }

    /// The unipotent class and M(Γ_u)-pair of every character. Characters
    /// with s = 1 are located by their fake degree among the N-polynomial rows;
    /// the others lie in the packet of `u_points`.
    pub fn packet_pairs(
        &self,
        datum: &AffineDatum,
        fixtures: &Fixtures,
        npolys: &str,
        u_points: &str,
    ) -> Result<Vec<(String, String)>> {
        let data = UnipotentData::load(fixtures)?;
        let g = data.group(&self.group)?;
        self.characters
            .iter()
            .map(|c| {
                if c.point_is_identity {
                    for class in &g.classes {
                        if let Ok(p) = c.packet_pair(datum, fixtures, npolys, &self.group, &class.u) {
                            return Ok((class.u.clone(), p));
                        }
                    }
                    Err(Error::Missing(format!("{}: fake degree matches no N-polynomial row", c.name)))
                } else {
                    Ok((u_points.to_string(), c.packet_pair(datum, fixtures, npolys, &self.group, u_points)?))
                }
            })
            .collect()
    }

    /// The submatrix of the exotic Fourier transform on the packet pairs of
    /// the characters; pairs from different unipotent classes lie in
    /// different families and pair to 0.
    pub fn fourier_submatrix(&self, fixtures: &Fixtures, pairs: &[(String, String)]) -> Result<QMatrix> {
        let data = UnipotentData::load(fixtures)?;
        let g = data.group(&self.group)?;
        let n = pairs.len();
        let mut m = vec![vec![Rational::zero(); n]; n];
        for i in 0..n {
            let block = SmallGroup::parse(&g.class(&pairs[i].0)?.gamma)?.fourier_matrix()?;
            for j in 0..n {
                if pairs[j].0 == pairs[i].0 {
                    m[i][j] = block.rational_entry(&pairs[i].1, &pairs[j].1)?;
                }
            }
        }
        Ok(m)
    }
}

impl AffineCharacter {
    pub fn class_function(&self) -> AffineClassFunction {
        AffineClassFunction::from_rationals(&self.values)
    }

    /// F^e of the character: zero unless the isolated point is 1, in which
    /// case the finite elliptic fake degree of the restriction to W.
    pub fn elliptic_fake_degree(&self, datum: &AffineDatum) -> Result<RatFunc> {
        if !self.point_is_identity {
            return Ok(RatFunc::zero());
        }
        if self.restriction.is_empty() {
            return Err(Error::Missing(format!("{} has no recorded restriction to W", self.name)));
        }
        let w = datum.finite_group()?;
        let mut f = vec![Rational::zero(); w.num_classes()];
        for (label, k) in &self.restriction {
            for (a, b) in f.iter_mut().zip(w.character_by_label(label)?) {
                *a += b * Rational::from_integer((*k).into());
            }
        }
        Ok(elliptic_fake_degree(&w, &f))
    }

    /// The pair (x, σ) of M(Γ_u) labelling this character inside the packet
    /// of `u`. For s = 1 the Γ_u-character is the one whose tabulated fake
    /// degree equals F^e of the character; otherwise x is the class attached
    /// to the isolated point with the same centralizer and σ = 1 (the
    /// Steinberg module of the endoscopic group).
    pub fn packet_pair(
        &self,
        datum: &AffineDatum,
        fixtures: &Fixtures,
        npolys: &str,
        group: &str,
        u: &str,
    ) -> Result<String> {
        if self.point_is_identity {
            let f = self.elliptic_fake_degree(datum)?;
            let fakes = npoly_fakes(fixtures, npolys, u)?;
            let (rho, _) = fakes
                .iter()
                .find(|(_, g)| *g == f)
                .ok_or_else(|| Error::Missing(format!("{}: no Γ_u-character of {u} has this fake degree", self.name)))?;
            return Ok(format!("(1,{rho})"));
        }
        let data = UnipotentData::load(fixtures)?;
        let p = data
            .group(group)?
            .points
            .iter()
            .find(|p| p.centralizer == self.centralizer)
            .ok_or_else(|| Error::Missing(format!("no isolated point of {group} with centralizer {}", self.centralizer)))?;
        Ok(format!("({},1)", p.gamma_class))
    }
}
