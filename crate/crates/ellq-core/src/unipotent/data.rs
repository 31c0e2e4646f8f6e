//! Fixture-backed parameter data for the worked examples.

use std::collections::BTreeMap;

use num_traits::Zero;
use serde_json::Value;

use super::{DualRootDatum, SL2Marks, SemisimplePoint};
use crate::error::{Error, Result};
use crate::exactq::{cyclotomic, parse_rational, ratfunc_from_factored_json, QPoly, RatFunc, Rational};
use crate::fixtures::Fixtures;
use crate::weylgrp::{ClassFunction, WeylGroup};

fn bad(id: &str, m: &str) -> Error {
    Error::Invalid(format!("fixture {id}: {m}"))
}

fn str_field<'a>(v: &'a Value, k: &str, id: &str) -> Result<&'a str> {
    v.get(k).and_then(Value::as_str).ok_or_else(|| bad(id, &format!("missing string field {k:?}")))
}

fn array<'a>(v: &'a Value, k: &str, id: &str) -> Result<&'a Vec<Value>> {
    v.get(k).and_then(Value::as_array).ok_or_else(|| bad(id, &format!("missing array {k:?}")))
}

#[derive(Clone, Debug)]
pub struct PacketRow {
    pub centralizer: String,
    pub phi: String,
    pub pair: String,
    pub notes: String,
}

/// One of the packet tables: the parameters attached to a unipotent class.
#[derive(Clone, Debug)]
pub struct PacketTable {
    pub group: String,
    pub u: String,
    pub gamma: String,
    pub rows: Vec<PacketRow>,
}

impl PacketTable {
    pub fn load(fixtures: &Fixtures, id: &str) -> Result<PacketTable> {
        let v = fixtures.load(id)?;
        let rows = array(&v, "rows", id)?
            .iter()
            .map(|r| {
                Ok(PacketRow {
                    centralizer: str_field(r, "centralizer", id)?.to_string(),
                    phi: str_field(r, "phi", id)?.to_string(),
                    pair: str_field(r, "pair", id)?.to_string(),
                    notes: r.get("notes").and_then(Value::as_str).unwrap_or("").to_string(),
                })
            })
            .collect::<Result<_>>()?;
        Ok(PacketTable {
            group: str_field(&v, "group", id)?.to_string(),
            u: str_field(&v, "u", id)?.to_string(),
            gamma: str_field(&v, "gamma", id)?.to_string(),
            rows,
        })
    }
}

/// F = (q-1)^l N / cyc(W) for the rows of an N-polynomial table with the given
/// unipotent class, keyed by the Γ_u-character.
pub fn npoly_fakes(fixtures: &Fixtures, id: &str, u: &str) -> Result<Vec<(String, RatFunc)>> {
    let v = fixtures.load(id)?;
    let l = v.get("rank").and_then(Value::as_u64).ok_or_else(|| bad(id, "missing rank"))?;
    let mut cyc = QPoly::one();
    for (k, e) in v.get("cyc").and_then(Value::as_object).ok_or_else(|| bad(id, "missing cyc"))? {
        let n: u32 = k.parse().map_err(|_| bad(id, "bad cyc index"))?;
        cyc = &cyc * &cyclotomic(n).pow(e.as_u64().ok_or_else(|| bad(id, "bad cyc exponent"))? as u32);
    }
    let pre = RatFunc::new(QPoly::from_ints(&[-1, 1]).pow(l as u32), cyc)?;
    let mut out = Vec::new();
    for r in array(&v, "rows", id)? {
        if str_field(r, "u", id)? != u {
            continue;
        }
        let n = ratfunc_from_factored_json(r.get("n").ok_or_else(|| bad(id, "row without n"))?)?;
        out.push((str_field(r, "gamma_char", id)?.to_string(), &pre * &n));
    }
    if out.is_empty() {
        return Err(Error::Missing(format!("{id} has no rows for u = {u}")));
    }
    Ok(out)
}

#[derive(Clone, Debug)]
pub struct UnipotentClass {
    pub u: String,
    pub marks: SL2Marks,
    pub gamma: String,
    /// X(u,φ) = H^•(B_u)^φ as virtual W-characters (irreducible label -> multiplicity),
    /// keyed by the Γ_u-character φ; only the elliptic restriction is meaningful.
    pub springer: Vec<(String, BTreeMap<String, i64>)>,
}

#[derive(Clone, Debug)]
pub struct NamedPoint {
    pub name: String,
    pub point: SemisimplePoint,
    pub centralizer: String,
    pub gamma_class: String,
}

#[derive(Clone, Debug)]
pub struct UnipotentGroup {
    pub name: String,
    pub dual: DualRootDatum,
    pub weyl: String,
    pub classes: Vec<UnipotentClass>,
    pub points: Vec<NamedPoint>,
}

/// A named m_x evaluation: group, unipotent class and isolated point.
#[derive(Clone, Debug)]
pub struct MxCase {
    pub id: String,
    pub group: String,
    pub u: String,
    pub point: String,
}

#[derive(Clone, Debug)]
pub struct UnipotentData {
    pub groups: Vec<UnipotentGroup>,
    pub cases: Vec<MxCase>,
}

impl UnipotentData {
    pub fn load(fixtures: &Fixtures) -> Result<UnipotentData> {
        let id = "unipotent_data";
        let v = fixtures.load(id)?;
        let mut groups = Vec::new();
        for g in array(&v, "groups", id)? {
            let mut dual = DualRootDatum::parse(str_field(g, "dual", id)?)?;
            dual.name = str_field(g, "name", id)?.to_string();
            let rank = dual.rank();
            let mut classes = Vec::new();
            for c in array(g, "classes", id)? {
                let marks: Vec<i64> = array(c, "marks", id)?.iter().filter_map(Value::as_i64).collect();
                if marks.len() != rank {
                    return Err(bad(id, "marks do not match the rank"));
                }
                let mut springer = Vec::new();
                if let Some(sp) = c.get("springer").and_then(Value::as_object) {
                    for (phi, chars) in sp {
                        let chars = chars.as_object().ok_or_else(|| bad(id, "springer entry is not a map"))?;
                        let m = chars
                            .iter()
                            .map(|(l, k)| Ok((l.clone(), k.as_i64().ok_or_else(|| bad(id, "bad multiplicity"))?)))
                            .collect::<Result<_>>()?;
                        springer.push((phi.clone(), m));
                    }
                }
                classes.push(UnipotentClass {
                    u: str_field(c, "u", id)?.to_string(),
                    marks: SL2Marks::new(marks),
                    gamma: str_field(c, "gamma", id)?.to_string(),
                    springer,
                });
            }
            let mut points = Vec::new();
            for p in array(g, "points", id)? {
                let coords = array(p, "coords", id)?
                    .iter()
                    .map(|x| parse_rational(x.as_str().ok_or_else(|| bad(id, "coordinate is not a string"))?))
                    .collect::<Result<Vec<Rational>>>()?;
                if coords.len() != rank {
                    return Err(bad(id, "point does not match the rank"));
                }
                points.push(NamedPoint {
                    name: str_field(p, "name", id)?.to_string(),
                    point: SemisimplePoint::new(coords),
                    centralizer: str_field(p, "centralizer", id)?.to_string(),
                    gamma_class: str_field(p, "gamma_class", id)?.to_string(),
                });
            }
            groups.push(UnipotentGroup {
                name: dual.name.clone(),
                weyl: str_field(g, "weyl", id)?.to_string(),
                dual,
                classes,
                points,
            });
        }
        let cases = array(&v, "cases", id)?
            .iter()
            .map(|c| {
                Ok(MxCase {
                    id: str_field(c, "id", id)?.to_string(),
                    group: str_field(c, "group", id)?.to_string(),
                    u: str_field(c, "u", id)?.to_string(),
                    point: str_field(c, "point", id)?.to_string(),
                })
            })
            .collect::<Result<_>>()?;
        Ok(UnipotentData { groups, cases })
    }

    pub fn group(&self, name: &str) -> Result<&UnipotentGroup> {
        self.groups.iter().find(|g| g.name == name).ok_or_else(|| Error::Missing(format!("no parameter data for {name}")))
    }

    pub fn case(&self, id: &str) -> Result<&MxCase> {
        self.cases.iter().find(|c| c.id == id).ok_or_else(|| Error::Missing(format!("no m_x case named {id}")))
    }

    pub fn case_ids(&self) -> Vec<&str> {
        self.cases.iter().map(|c| c.id.as_str()).collect()
    }
}

impl UnipotentGroup {
    pub fn class(&self, u: &str) -> Result<&UnipotentClass> {
        self.classes
            .iter()
            .find(|c| c.u == u)
            .ok_or_else(|| Error::Missing(format!("no unipotent class {u} in {}", self.name)))
    }

    pub fn point(&self, name: &str) -> Result<&NamedPoint> {
        self.points
            .iter()
            .find(|p| p.name == name)
            .ok_or_else(|| Error::Missing(format!("no point {name} in {}", self.name)))
    }

    pub fn point_for_class(&self, gamma_class: &str) -> Result<&NamedPoint> {
        self.points
            .iter()
            .find(|p| p.gamma_class == gamma_class)
            .ok_or_else(|| Error::Missing(format!("no point of {} maps to {gamma_class}", self.name)))
    }
}

impl UnipotentClass {
    /// The Springer virtual characters as class functions of `w`.
    pub fn springer_characters(&self, w: &WeylGroup) -> Result<Vec<(String, ClassFunction)>> {
        self.springer
            .iter()
            .map(|(phi, m)| {
                let mut f = vec![Rational::zero(); w.num_classes()];
                for (label, k) in m {
                    let chi = w.character_by_label(label)?;
                    for (a, b) in f.iter_mut().zip(chi) {
                        *a += b * Rational::from_integer((*k).into());
                    }
                }
                Ok((phi.clone(), f))
            })
            .collect()
    }
}
