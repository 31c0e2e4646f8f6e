//! Families of irreducible Weyl group characters, the pairing on X(W), the
//! map EF and generic degrees.

use std::collections::{BTreeMap, HashMap};

use num_traits::Zero;
use serde_json::Value;

use super::small::{FourierBlock, SmallGroup};
use crate::error::{Error, Result};
use crate::exactq::{linalg::QMatrix, RatFunc, Rational};
use crate::fixtures::Fixtures;
use crate::weylgrp::{CartanType, ClassFunction, WeylGroup};

/// One family: its Fourier block on all of M(Γ), the members with their
/// position in M(Γ), and Δ on M(Γ).
#[derive(Clone, Debug)]
pub struct Family {
    pub gamma: String,
    pub block: FourierBlock,
    pub members: Vec<(String, usize)>,
    pub delta: Vec<i64>,
}

impl Family {
    fn singleton(label: &str) -> Family {
        Family { gamma: "1".into(), block: FourierBlock::trivial(), members: vec![(label.to_string(), 0)], delta: vec![1] }
    }

    fn product(&self, other: &Family) -> Family {
        let block = self.block.kron(&other.block);
        let n2 = other.block.size();
        let mut members = Vec::new();
        for (a, i) in &self.members {
            for (b, j) in &other.members {
                members.push((format!("{a} x {b}"), i * n2 + j));
            }
        }
        let delta = self.delta.iter().flat_map(|d| other.delta.iter().map(move |e| d * e)).collect();
        Family { gamma: block.gamma.clone(), block, members, delta }
    }
}

fn irrational(gamma: &str) -> Error {
    Error::Unsupported(format!("the Fourier matrix of {gamma} is not rational"))
}

/// A partition of Irr(W) into families.
#[derive(Clone, Debug)]
pub struct FamilyData {
    pub group: String,
    pub families: Vec<Family>,
}

fn parse_family(v: &Value, cache: &mut HashMap<String, FourierBlock>) -> Result<Family> {
    let bad = |m: &str| Error::Invalid(format!("family fixture: {m}"));
    let gamma = v.get("gamma").and_then(Value::as_str).ok_or_else(|| bad("missing gamma"))?;
    let g = SmallGroup::parse(gamma)?;
    let block = match cache.get(g.name()) {
        Some(b) => b.clone(),
        None => {
            let b = g.fourier_matrix()?;
            cache.insert(g.name().to_string(), b.clone());
            b
        }
    };
    let members: Vec<String> = v
        .get("members")
        .and_then(Value::as_array)
        .ok_or_else(|| bad("missing members"))?
        .iter()
        .map(|m| m.as_str().map(str::to_string).ok_or_else(|| bad("member is not a string")))
        .collect::<Result<_>>()?;
    let emb = v.get("embedding").and_then(Value::as_object).ok_or_else(|| bad("missing embedding"))?;
    let mut out = Vec::new();
    let mut used = Vec::new();
    for m in &members {
        let pair = emb.get(m).and_then(Value::as_str).ok_or_else(|| bad(&format!("{m} has no embedding")))?;
        let k = block.index(pair)?;
        if used.contains(&k) {
            return Err(bad(&format!("embedding is not injective at {pair}")));
        }
        used.push(k);
        out.push((m.clone(), k));
    }
    let mut delta = vec![1i64; block.size()];
    if let Some(d) = v.get("delta").and_then(Value::as_object) {
        for (pair, s) in d {
            let k = block.index(pair)?;
            delta[k] = s.as_i64().filter(|x| x.abs() == 1).ok_or_else(|| bad("delta values must be ±1"))?;
        }
    }
    Ok(Family { gamma: block.gamma.clone(), block, members: out, delta })
}

/// Families of an irreducible type; characters not listed are singletons.
fn factor_families(t: CartanType, labels: &[String], fixtures: &Fixtures) -> Result<Vec<Family>> {
    let key = match t {
        CartanType::A(_) | CartanType::B(1) | CartanType::C(1) | CartanType::D(2) | CartanType::D(3) => None,
        CartanType::B(n) | CartanType::C(n) if n <= 3 => Some(format!("B{n}")),
        CartanType::G2 => Some("G2".to_string()),
        _ => return Err(Error::Missing(format!("no family data for type {t}"))),
    };
    let mut fams = Vec::new();
    if let Some(key) = key {
        let doc = fixtures.load("families")?;
        let entry = doc
            .get("groups")
            .and_then(Value::as_array)
            .and_then(|gs| gs.iter().find(|g| g.get("group").and_then(Value::as_str) == Some(key.as_str())))
            .ok_or_else(|| Error::Missing(format!("no family data for type {t}")))?;
        let mut cache = HashMap::new();
        for f in entry.get("families").and_then(Value::as_array).into_iter().flatten() {
            fams.push(parse_family(f, &mut cache)?);
        }
    }
    let covered: Vec<String> = fams.iter().flat_map(|f| f.members.iter().map(|m| m.0.clone())).collect();
    for l in labels {
        if !covered.contains(l) {
            fams.push(Family::singleton(l));
        }
    }
    Ok(fams)
}

impl FamilyData {
    pub fn for_group(w: &WeylGroup, fixtures: &Fixtures) -> Result<FamilyData> {
        let mut acc: Option<Vec<Family>> = None;
        for &t in &w.spec().factors {
            let fw = WeylGroup::of_type(t)?;
            let fams = factor_families(t, fw.labels(), fixtures)?;
            acc = Some(match acc {
                None => fams,
                Some(prev) => prev.iter().flat_map(|a| fams.iter().map(move |b| a.product(b))).collect(),
            });
        }
        let fd = FamilyData { group: w.spec().to_string(), families: acc.unwrap_or_default() };
        fd.validate(w)?;
        Ok(fd)
    }

    /// Families must partition Irr(W).
    pub fn validate(&self, w: &WeylGroup) -> Result<()> {
        let mut count: BTreeMap<&str, usize> = BTreeMap::new();
        for f in &self.families {
            for (m, _) in &f.members {
                *count.entry(m.as_str()).or_insert(0) += 1;
            }
        }
        for l in w.labels() {
            match count.remove(l.as_str()) {
                Some(1) => {}
                Some(_) => return Err(Error::Invalid(format!("{l} lies in more than one family"))),
                None => return Err(Error::Invalid(format!("{l} lies in no family"))),
            }
        }
        if let Some((l, _)) = count.into_iter().next() {
            return Err(Error::Invalid(format!("family member {l} is not an irreducible character of {}", self.group)));
        }
        Ok(())
    }

    /// The family containing irreducible `label` and its position in M(Γ).
    pub fn locate(&self, label: &str) -> Option<(usize, usize)> {
        self.families
            .iter()
            .enumerate()
            .find_map(|(f, fam)| fam.members.iter().find(|m| m.0 == label).map(|m| (f, m.1)))
    }

    /// X(W) and its pairing: block diagonal, one Fourier block per family.
    pub fn xw_pairing(&self) -> Result<(Vec<String>, QMatrix)> {
        let n: usize = self.families.iter().map(|f| f.block.size()).sum();
        let mut labels = Vec::new();
        let mut m = vec![vec![Rational::zero(); n]; n];
        let mut off = 0;
        for (k, f) in self.families.iter().enumerate() {
            for (i, l) in f.block.labels.iter().enumerate() {
                labels.push(format!("F{k}:{l}"));
                for j in 0..f.block.size() {
                    m[off + i][off + j] = f.block.matrix[i][j].to_rational().ok_or_else(|| irrational(&f.gamma))?;
                }
            }
            off += f.block.size();
        }
        Ok((labels, m))
    }

    /// {δ, δ′} on Irr(W), rows and columns in the order of `w.labels()`.
    pub fn irr_pairing(&self, w: &WeylGroup) -> Result<QMatrix> {
        let n = w.num_irreps();
        let mut m = vec![vec![Rational::zero(); n]; n];
        for f in &self.families {
            for (a, i) in &f.members {
                let ia = w.irrep_index(a)?;
                for (b, j) in &f.members {
                    m[ia][w.irrep_index(b)?] = f.block.matrix[*i][*j].to_rational().ok_or_else(|| irrational(&f.gamma))?;
                }
            }
        }
        Ok(m)
    }

    /// Δ at the parameter of each irreducible.
    pub fn irr_delta(&self, w: &WeylGroup) -> Result<Vec<i64>> {
        w.labels()
            .iter()
            .map(|l| {
                let (f, i) = self.locate(l).ok_or_else(|| Error::Invalid(format!("{l} lies in no family")))?;
                Ok(self.families[f].delta[i])
            })
            .collect()
    }
}

/// EF(χ) = Σ_δ′ {χ, δ′} δ′ for a class function χ.
pub fn ef_map(w: &WeylGroup, fd: &FamilyData, chi: &[Rational]) -> Result<ClassFunction> {
    let m = fd.irr_pairing(w)?;
    let c = w.decompose(chi);
    let n = w.num_irreps();
    let out: Vec<Rational> = (0..n).map(|j| (0..n).map(|i| &c[i] * &m[i][j]).sum()).collect();
    Ok(w.compose(&out))
}

/// ind ∘ EF^L = EF ∘ ind on every irreducible of the parabolic.
pub fn ef_induction_check(w: &WeylGroup, sub: &WeylGroup, fixtures: &Fixtures) -> Result<bool> {
    let fd = FamilyData::for_group(w, fixtures)?;
    let fl = FamilyData::for_group(sub, fixtures)?;
    for i in 0..sub.num_irreps() {
        let d = sub.character(i);
        let lhs = w.induce(sub, &ef_map(sub, &fl, &d)?)?;
        let rhs = ef_map(w, &fd, &w.induce(sub, &d)?)?;
        if lhs != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}

/// d_δ(q) = Δ(δ) Σ_δ′ {δ,δ′} f_δ′(q), for every irreducible δ in label order.
pub fn generic_degrees(w: &WeylGroup, fd: &FamilyData) -> Result<Vec<RatFunc>> {
    let m = fd.irr_pairing(w)?;
    let delta = fd.irr_delta(w)?;
    let fakes: Vec<RatFunc> = (0..w.num_irreps()).map(|j| w.fake_degree(&w.character(j))).collect();
    Ok((0..w.num_irreps())
        .map(|i| {
            let terms: Vec<RatFunc> =
                (0..w.num_irreps()).filter(|&j| !m[i][j].is_zero()).map(|j| fakes[j].scale(&m[i][j])).collect();
            RatFunc::sum(&terms).scale(&Rational::from_integer(delta[i].into()))
        })
        .collect())
}

pub fn generic_degree(w: &WeylGroup, fd: &FamilyData, label: &str) -> Result<RatFunc> {
    let i = w.irrep_index(label)?;
    Ok(generic_degrees(w, fd)?.swap_remove(i))
}

/// Σ_δ d_δ(q) δ(1) - P(q); zero when the Plancherel identity holds.
pub fn plancherel_defect(w: &WeylGroup, fd: &FamilyData) -> Result<RatFunc> {
    let d = generic_degrees(w, fd)?;
    let terms: Vec<RatFunc> =
        d.iter().enumerate().map(|(i, f)| f.scale(&Rational::from_integer(w.degree(i).into()))).collect();
    Ok(&RatFunc::sum(&terms) - &RatFunc::from_poly(w.poincare()))
}
