//! Verification suites comparing computed values against the stored tables.

use std::fmt;

use serde::Serialize;
use serde_json::{json, Value};

use crate::affine::{
    affine_formal_degree, ef_affine_elliptic, elliptic_inner, matching_normalizations, nu_function, AffineDatum,
    EllipticCharacterTable, Normalization,
};
use crate::combinat::Partition;
use crate::elliptic::{bn_fake_closed, cyc, independence_check};
use crate::error::{Error, Result};
use crate::exactq::linalg::{self, QMatrix};
use crate::exactq::{
    factorization_to_json, rat, ratfunc_from_factored_json, ratfunc_to_factored_report, rational_to_json, QPoly,
    RatFunc, Rational,
};
use crate::fixtures::Fixtures;
use crate::fourier::SmallGroup;
use crate::unipotent::{
    conjecture_rhs, is_elliptic, m_x, npoly_fakes, product_formal_degree, q_part_prediction, springer_class_function,
    UnipotentData,
};
use crate::weylgrp::{CartanType, WeylGroup};

pub const SUITES: [&str; 7] = ["cyc", "g2-formal", "sp4", "g2-affine", "independence", "appendix-g2", "fourier"];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Pass,
    Fail,
    Discrepancy,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Discrepancy => "DISCREPANCY",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerificationReport {
    #[serde(rename = "checkId")]
    pub check_id: String,
    pub status: Status,
    pub computed: Value,
    pub expected: Value,
    pub notes: String,
}

impl VerificationReport {
    fn new(id: impl Into<String>, status: Status, computed: Value, expected: Value, notes: impl Into<String>) -> Self {
        VerificationReport { check_id: id.into(), status, computed, expected, notes: notes.into() }
    }

    fn eq(id: impl Into<String>, ok: bool, computed: Value, expected: Value) -> Self {
        let status = if ok { Status::Pass } else { Status::Fail };
        VerificationReport::new(id, status, computed, expected, "")
    }

    fn error(id: impl Into<String>, e: &Error) -> Self {
        VerificationReport::new(id, Status::Fail, Value::Null, Value::Null, e.to_string())
    }
}

fn rf(f: &RatFunc) -> Value {
    ratfunc_to_factored_report(f)
}

fn qmatrix(m: &QMatrix) -> Value {
    Value::Array(m.iter().map(|r| Value::Array(r.iter().map(rational_to_json).collect())).collect())
}

fn rationals(v: &[Rational]) -> Value {
    Value::Array(v.iter().map(rational_to_json).collect())
}

/// Runs one suite. Errors inside a suite become FAIL rows; an unknown suite
/// name is an error. Rows are sorted by check id.
pub fn run_verify(suite: &str, fixtures: &Fixtures) -> Result<Vec<VerificationReport>> {
    let rows = match suite {
        "cyc" => cyc_suite(fixtures),
        "g2-formal" => g2_formal_suite(fixtures),
        "sp4" => sp4_suite(fixtures),
        "g2-affine" => g2_affine_suite(fixtures),
        "independence" => independence_suite(),
        "appendix-g2" => npoly_g2_suite(fixtures),
        "fourier" => fourier_suite(fixtures),
        _ => return Err(Error::Invalid(format!("unknown suite {suite:?}; expected one of {}", SUITES.join(", ")))),
    };
    let mut rows = rows.unwrap_or_else(|e| vec![VerificationReport::error(format!("{suite}/load"), &e)]);
    rows.sort_by(|a, b| a.check_id.cmp(&b.check_id));
    Ok(rows)
}

pub fn run_all(fixtures: &Fixtures) -> Vec<VerificationReport> {
    SUITES.iter().flat_map(|s| run_verify(s, fixtures).expect("known suite")).collect()
}

fn cyc_suite(fx: &Fixtures) -> Result<Vec<VerificationReport>> {
    let doc = fx.load("cyc_values")?;
    let mut out = Vec::new();
    for row in doc["rows"].as_array().ok_or_else(|| Error::Invalid("cyc_values: missing rows".into()))? {
        let group = row["group"].as_str().unwrap_or("?").to_string();
        let id = format!("cyc/{group}");
        let exps: Vec<u32> = row["exponents"].as_array().into_iter().flatten().filter_map(|e| e.as_u64()).map(|e| e as u32).collect();
        match cyc(&exps) {
            Ok(f) => {
                let computed = factorization_to_json(&f);
                let ok = computed["phi"] == row["cyc"] && f.remainder.is_one() && f.qpow == 0;
                out.push(VerificationReport::eq(id, ok, json!({"text": f.render(), "phi": computed["phi"]}), row["cyc"].clone()));
            }
            Err(e) => out.push(VerificationReport::error(id, &e)),
        }
    }
    Ok(out)
}

fn g2_formal_suite(fx: &Fixtures) -> Result<Vec<VerificationReport>> {
    let doc = fx.load("g2_formal_degrees")?;
    let s3 = SmallGroup::parse("S3")?;
    let fakes = npoly_fakes(fx, "g2_npolys", "G2(a1)")?;
    let data = UnipotentData::load(fx)?;
    let g = data.group("G2")?;
    let u = g.class("G2(a1)")?;
    let mut out = Vec::new();
    for row in doc["rows"].as_array().ok_or_else(|| Error::Invalid("g2_formal_degrees: missing rows".into()))? {
        let pair = row["pair"].as_str().unwrap_or("?");
        let id = format!("g2-formal/row{}-{pair}", row["row"]);
        let r = (|| -> Result<VerificationReport> {
            let printed = ratfunc_from_factored_json(&row["value"])?;
            let computed = conjecture_rhs(&s3, pair, &fakes, 1)?;
            let p = &s3.m_set()[s3.find_pair(pair)?];
            let point = g.point_for_class(&p.x_label)?;
            let m = m_x(&g.dual, &point.point, &u.marks)?;
            let deg = s3.centralizer_chars(p.class)[p.sigma].degree;
            let thm = product_formal_degree(&m, deg, s3.centralizer_order(p.class), g.dual.center_order());
            let computed_json = json!({"conjecture": rf(&computed), "product": rf(&thm)});
            Ok(if computed == printed && thm == printed {
                VerificationReport::new(&id, Status::Pass, computed_json, rf(&printed), "")
            } else if computed == thm {
                VerificationReport::new(
                    &id,
                    Status::Discrepancy,
                    computed_json,
                    rf(&printed),
                    "conjecture pipeline and product formula agree with each other, not with the printed value",
                )
            } else {
                VerificationReport::new(&id, Status::Fail, computed_json, rf(&printed), "pipelines disagree")
            })
        })();
        out.push(r.unwrap_or_else(|e| VerificationReport::error(&id, &e)));
    }
    // m_x at s = 1: |A(x)| times rows 1-3
    let id = "g2-formal/mx-s0";
    let r = (|| -> Result<VerificationReport> {
        let p = g.point_for_class("1")?;
        let m = m_x(&g.dual, &p.point, &u.marks)?;
        let row1 = doc["rows"][0]["value"].clone();
        let expect = ratfunc_from_factored_json(&row1)?.scale(&rat(6, 1));
        Ok(VerificationReport::eq(id, m == expect, rf(&m), rf(&expect)))
    })();
    out.push(r.unwrap_or_else(|e| VerificationReport::error(id, &e)));
    Ok(out)
}

fn sp4_suite(fx: &Fixtures) -> Result<Vec<VerificationReport>> {
    let doc = fx.load("sp4_formal")?;
    let center = doc["center_order"].as_u64().unwrap_or(1) as u32;
    let closed = bn_fake_closed(&Partition::new(vec![1, 1]));
    let mut fakes = Vec::new();
    let mut notes = Vec::new();
    for r in doc["fakes"].as_array().ok_or_else(|| Error::Invalid("sp4_formal: missing fakes".into()))? {
        let chi = r["gamma_char"].as_str().unwrap_or("?").to_string();
        let v = ratfunc_from_factored_json(&r["value"])?;
        if v != closed && v != closed.scale(&rat(-1, 1)) {
            notes.push(format!("stored fake degree for {chi} is not ±F of (11, ∅)"));
        }
        fakes.push((chi, v));
    }
    let z2 = SmallGroup::parse("Z2")?;
    let mut out = Vec::new();
    for row in doc["rows"].as_array().ok_or_else(|| Error::Invalid("sp4_formal: missing rows".into()))? {
        let pair = row["pair"].as_str().unwrap_or("?");
        let id = format!("sp4/{pair}");
        let r = (|| -> Result<VerificationReport> {
            let printed = ratfunc_from_factored_json(&row["value"])?;
            let computed = conjecture_rhs(&z2, pair, &fakes, center)?;
            let mut rep = VerificationReport::eq(&id, computed == printed && notes.is_empty(), rf(&computed), rf(&printed));
            rep.notes = notes.join("; ");
            Ok(rep)
        })();
        out.push(r.unwrap_or_else(|e| VerificationReport::error(&id, &e)));
    }
    Ok(out)
}

fn g2_affine_suite(fx: &Fixtures) -> Result<Vec<VerificationReport>> {
    let d = AffineDatum::new(CartanType::G2)?;
    let t = EllipticCharacterTable::g2(fx)?;
    let cls = d.elliptic_classes()?;
    let ps = d.maximal_parabolics()?;
    let mut out = Vec::new();

    let mu: Vec<Rational> = cls.iter().map(|c| c.mu.clone()).collect();
    out.push(VerificationReport::eq("g2-affine/classes", mu == t.mu, rationals(&mu), rationals(&t.mu)));

    let b = t.basis();
    let gram: QMatrix = b.iter().map(|x| b.iter().map(|y| elliptic_inner(&cls, x, y)).collect()).collect();
    let id = linalg::identity(b.len());
    out.push(VerificationReport::eq("g2-affine/gram", gram == id, qmatrix(&gram), qmatrix(&id)));

    let norms = matching_normalizations(&d, fx, &t.ef_j)?;
    let norm_note = match norms.as_slice() {
        [] => "no normalization reproduces the printed blocks".to_string(),
        ns => format!("normalization: {}", ns.iter().map(|n| n.name()).collect::<Vec<_>>().join(", ")),
    };
    let norm = norms.first().copied().unwrap_or(Normalization::Operator);
    for (k, (p, printed)) in ps.iter().zip(&t.ef_j).enumerate() {
        let m = p.ef_elliptic(fx, norm)?;
        let mut r = VerificationReport::eq(format!("g2-affine/ef-j{k}"), &m == printed, qmatrix(&m), qmatrix(printed));
        r.notes = norm_note.clone();
        out.push(r);
    }

    let m = ef_affine_elliptic(&d, fx, &b)?;
    let pairs = t.packet_pairs(&d, fx, "g2_npolys", "G2(a1)")?;
    let sub = t.fourier_submatrix(fx, &pairs)?;
    let pair_note: Vec<String> = t.characters.iter().zip(&pairs).map(|(c, (u, p))| format!("{} -> {u} {p}", c.name)).collect();
    out.push(VerificationReport::new(
        "g2-affine/fourier-submatrix",
        if m == sub { Status::Pass } else { Status::Fail },
        qmatrix(&m),
        qmatrix(&sub),
        format!("Fourier submatrix on {}", pair_note.join(", ")),
    ));
    let status = if m == t.ef_affine {
        Status::Pass
    } else if m == sub && linalg::is_symmetric(&m) {
        Status::Discrepancy
    } else {
        Status::Fail
    };
    let diffs: Vec<String> = (0..m.len())
        .flat_map(|i| (0..m.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| m[i][j] != t.ef_affine[i][j])
        .map(|(i, j)| format!("({},{})", t.characters[i].name, t.characters[j].name))
        .collect();
    out.push(VerificationReport::new(
        "g2-affine/ef-affine",
        status,
        qmatrix(&m),
        qmatrix(&t.ef_affine),
        if diffs.is_empty() {
            String::new()
        } else {
            format!("differs at {}; the computed matrix is symmetric as it must be in a μ_el-orthonormal basis", diffs.join(" "))
        },
    ));

    let nu = nu_function(&d, fx)?;
    let hand = [
        ("g2-affine/nu-C4", 3, ratfunc_from_factored_json(&json!({"phi": {"1": 2, "2": -2}}))?),
        ("g2-affine/nu-C5", 4, ratfunc_from_factored_json(&json!({"phi": {"1": 2, "3": -1}}))?),
    ];
    for (id, k, e) in hand {
        out.push(VerificationReport::eq(id, nu.values[k] == e, rf(&nu.values[k]), rf(&e)));
    }

    let printed = fx.load("g2_formal_degrees")?;
    let s3 = SmallGroup::parse("S3")?;
    let fakes = npoly_fakes(fx, "g2_npolys", "G2(a1)")?;
    for (c, (u, pair)) in t.characters.iter().zip(&pairs) {
        let id = format!("g2-affine/formal-{}", c.name);
        let fd = affine_formal_degree(&cls, &c.class_function(), &nu)?;
        let fe = c.elliptic_fake_degree(&d)?;
        if u != "G2(a1)" {
            // Steinberg: the formal degree is its own fake degree
            out.push(VerificationReport::new(&id, if fd == fe { Status::Pass } else { Status::Fail }, rf(&fd), rf(&fe), format!("{u} {pair}")));
            continue;
        }
        let row = printed["rows"].as_array().into_iter().flatten().find(|r| r["pair"] == pair.as_str());
        let Some(row) = row else {
            out.push(VerificationReport::error(&id, &Error::Missing(format!("no printed formal degree for {pair}"))));
            continue;
        };
        let printed = ratfunc_from_factored_json(&row["value"])?;
        let conj = conjecture_rhs(&s3, pair, &fakes, 1)?;
        let status = if fd == printed && fd == conj {
            Status::Pass
        } else if fd == conj {
            Status::Discrepancy
        } else {
            Status::Fail
        };
        out.push(VerificationReport::new(
            &id,
            status,
            json!({"nu": rf(&fd), "conjecture": rf(&conj)}),
            rf(&printed),
            format!("printed row {} {pair}", row["row"]),
        ));
    }
    Ok(out)
}

/// Types whose independence is claimed, with the number of elliptic classes.
fn independence_suite() -> Result<Vec<VerificationReport>> {
    let mut out = Vec::new();
    let mut types: Vec<CartanType> = (2..=6).map(CartanType::B).collect();
    types.extend((4..=6).map(CartanType::D));
    for t in types {
        let id = format!("independence/{t}");
        match WeylGroup::of_type(t) {
            Ok(w) => {
                let r = independence_check(&w);
                let (status, notes) = if r.independent {
                    (Status::Pass, String::new())
                } else {
                    (Status::Discrepancy, format!("{} elliptic classes span a space of rank {}", r.elliptic_classes, r.rank))
                };
                out.push(VerificationReport::new(
                    id,
                    status,
                    json!({"rank": r.rank}),
                    json!({"rank": r.elliptic_classes}),
                    notes,
                ));
            }
            Err(e) => out.push(VerificationReport::error(id, &e)),
        }
    }
    let id = "independence/F4-coincidence";
    match WeylGroup::of_type(CartanType::F4) {
        Ok(w) => {
            let r = independence_check(&w);
            let expect = &QPoly::from_ints(&[1, 0, 0, 1]) * &QPoly::from_ints(&[1, 1]);
            let ok = r.elliptic_classes == 9 && r.coincident.len() == 1 && r.coincident[0].2 == expect;
            let polys: Vec<String> = r.coincident.iter().map(|c| c.2.pretty()).collect();
            out.push(VerificationReport::eq(
                id,
                ok,
                json!({"elliptic": r.elliptic_classes, "coincident": polys}),
                json!({"elliptic": 9, "coincident": [expect.pretty()]}),
            ));
        }
        Err(e) => out.push(VerificationReport::error(id, &e)),
    }
    Ok(out)
}

fn npoly_g2_suite(fx: &Fixtures) -> Result<Vec<VerificationReport>> {
    let data = UnipotentData::load(fx)?;
    let g = data.group("G2")?;
    let w = WeylGroup::parse(&g.weyl)?;
    let mut out = Vec::new();
    let mut all = Vec::new();
    for class in &g.classes {
        let fakes = npoly_fakes(fx, "g2_npolys", &class.u)?;
        let springer = class.springer_characters(&w)?;
        for (phi, f) in &fakes {
            let id = format!("appendix-g2/{}-{phi}", class.u);
            match springer.iter().find(|(p, _)| p == phi) {
                Some((_, x)) => {
                    let c = q_part_prediction(&w, x);
                    out.push(VerificationReport::eq(id, &c == f, rf(&c), rf(f)));
                }
                None => out.push(VerificationReport::error(id, &Error::Missing(format!("no Springer data for {phi}")))),
            }
        }
        all.extend(fakes.into_iter().map(|x| x.1));
    }
    // Σ F_i^2 = (q-1)^{2l} ⟨S_qE, S_qE⟩^el
    let lhs = RatFunc::sum(&all.iter().map(|x| x * x).collect::<Vec<_>>());
    let terms = w
        .elliptic_classes()
        .into_iter()
        .map(|c| {
            let k = w.det_one_minus(c) * Rational::new(w.class_size(c).into(), w.order().into());
            RatFunc::new(QPoly::constant(k), w.charpoly(c).pow(2))
        })
        .collect::<Result<Vec<_>>>()?;
    let rhs = &RatFunc::from_poly(QPoly::from_ints(&[-1, 1]).pow(2 * w.rank() as u32)) * &RatFunc::sum(&terms);
    out.push(VerificationReport::eq("appendix-g2/norm", lhs == rhs && all.len() == w.elliptic_classes().len(), rf(&lhs), rf(&rhs)));
    Ok(out)
}

fn fourier_suite(fx: &Fixtures) -> Result<Vec<VerificationReport>> {
    let mut out = Vec::new();
    let doc = fx.load("ft_z2")?;
    let z2 = SmallGroup::parse("Z2")?.fourier_matrix()?;
    let printed: QMatrix = doc["matrix"]
        .as_array()
        .into_iter()
        .flatten()
        .map(|r| r.as_array().into_iter().flatten().map(crate::exactq::rational_from_json).collect::<Result<Vec<_>>>())
        .collect::<Result<_>>()?;
    let labels: Vec<String> = doc["labels"].as_array().into_iter().flatten().filter_map(|l| l.as_str().map(str::to_string)).collect();
    let m = z2.rational()?;
    out.push(VerificationReport::eq("fourier/Z2-matrix", m == printed && z2.labels == labels, qmatrix(&m), qmatrix(&printed)));
    for (name, size) in [("S3", Some(8)), ("Z2", Some(4)), ("S4", None), ("S5", None), ("Z2^2", None), ("Z2^3", None)] {
        let id = format!("fourier/{name}");
        let r = (|| -> Result<VerificationReport> {
            let f = SmallGroup::parse(name)?.fourier_matrix()?;
            let props = json!({
                "size": f.size(),
                "symmetric": f.is_symmetric(),
                "orthogonal": f.is_orthogonal(),
                "involution": f.is_involution(),
            });
            let ok = f.is_symmetric() && f.is_orthogonal() && f.is_involution() && size.is_none_or(|s| s == f.size());
            let expected = json!({
                "size": size.map_or(Value::Null, |s| json!(s)),
                "symmetric": true,
                "orthogonal": true,
                "involution": true,
            });
            Ok(VerificationReport::eq(&id, ok, props, expected))
        })();
        out.push(r.unwrap_or_else(|e| VerificationReport::error(&id, &e)));
    }
    Ok(out)
}

/// m_x for a named case, compared with (1-q)^l ⟨H^•(B_u)^s, 1/det(1-q·)⟩^el
/// built from the stored Springer restrictions.
pub fn mx_report(case: &str, fixtures: &Fixtures) -> Result<VerificationReport> {
    let data = UnipotentData::load(fixtures)?;
    let c = data.case(case)?;
    let g = data.group(&c.group)?;
    let p = g.point(&c.point)?;
    let u = g.class(&c.u)?;
    let id = format!("mx/{case}");
    if !is_elliptic(&g.dual, &p.point, &u.marks) {
        return Ok(VerificationReport::new(id, Status::Fail, Value::Null, Value::Null, "parameter is not elliptic"));
    }
    let m = m_x(&g.dual, &p.point, &u.marks)?;
    let w = WeylGroup::parse(&g.weyl)?;
    let gamma = SmallGroup::parse(&u.gamma)?;
    let h = springer_class_function(&w, &gamma, &p.gamma_class, &u.springer_characters(&w)?)?;
    let expect = q_part_prediction(&w, &h);
    let what = format!("{} u = {}, s = {} (Z(s) of type {})", c.group, c.u, c.point, p.centralizer);
    if m != expect && w.rank() % 2 == 1 && m == expect.scale(&rat(-1, 1)) {
        let notes = format!("{what}; agrees only up to (-1)^l: the predicted q-part is negative in odd rank");
        return Ok(VerificationReport::new(id, Status::Discrepancy, rf(&m), rf(&expect), notes));
    }
    let mut r = VerificationReport::eq(id, m == expect, rf(&m), rf(&expect));
    r.notes = what;
    Ok(r)
}

pub fn exit_code(rows: &[VerificationReport]) -> i32 {
    i32::from(rows.iter().any(|r| r.status == Status::Fail))
}

fn value_text(v: &Value) -> String {
    if let Some(t) = v.get("text").and_then(Value::as_str) {
        return t.to_string();
    }
    match v {
        Value::Object(m) => m.iter().map(|(k, x)| format!("{k}={}", value_text(x))).collect::<Vec<_>>().join(", "),
        Value::String(s) => s.clone(),
        _ => v.to_string(),
    }
}

/// Plain-text rendering, one line per check.
pub fn render_text(rows: &[VerificationReport]) -> String {
    let mut s = String::new();
    for r in rows {
        s.push_str(&format!("{:<12} {}  computed: {}  expected: {}", r.status.to_string(), r.check_id, value_text(&r.computed), value_text(&r.expected)));
        if !r.notes.is_empty() {
            s.push_str(&format!("  [{}]", r.notes));
        }
        s.push('\n');
    }
    s
}
