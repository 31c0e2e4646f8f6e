use std::fmt::Write as _;
use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use ellq_core::affine::{
    affine_formal_degree, ef_affine_elliptic, matching_normalizations, nu_function, AffineDatum,
    EllipticCharacterTable, MaximalParabolic, Normalization,
};
use ellq_core::combinat::Partition;
use ellq_core::elliptic::{bn_fake_closed, dn_fake_closed, elliptic_fake_degree, independence_check};
use ellq_core::exactq::linalg::{self, QMatrix};
use ellq_core::exactq::{poly_to_json, ratfunc_to_factored_report, rational_to_json, RatFunc};
use ellq_core::fixtures::Fixtures;
use ellq_core::fourier::SmallGroup;
use ellq_core::unipotent::UnipotentData;
use ellq_core::verify::{exit_code, mx_report, render_text, run_verify, VerificationReport, SUITES};
use ellq_core::weylgrp::{CartanType, GroupSpec, WeylGroup};
use ellq_core::Error;

#[derive(Parser)]
#[command(name = "ellq", version, about = "Elliptic fake degrees, exotic Fourier matrices and formal degrees")]
struct Cli {
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Directory of JSON data files overriding the embedded ones.
    #[arg(long, global = true, value_name = "DIR")]
    fixtures: Option<PathBuf>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
struct TypeArgs {
    /// Cartan type: G2, F4, B4, or a bare letter together with --n.
    #[arg(long = "type", value_name = "TYPE")]
    ty: String,
    #[arg(long)]
    n: Option<u32>,
}

impl TypeArgs {
    fn spec(&self) -> Result<GroupSpec, Error> {
        GroupSpec::from_family(&self.ty, self.n)
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// Conjugacy classes and character table of a finite Weyl group.
    Group {
        #[command(flatten)]
        t: TypeArgs,
        /// List the classes: representative, size, characteristic polynomial, ellipticity.
        #[arg(long)]
        classes: bool,
        /// Print the labelled character table.
        #[arg(long)]
        table: bool,
    },
    /// Fake degree and elliptic fake degree of irreducible characters.
    Fake {
        #[command(flatten)]
        t: TypeArgs,
        /// Irreducible label, e.g. phi1,6 or 21.1; all characters when omitted.
        #[arg(long)]
        label: Option<String>,
    },
    /// Elliptic fake degree of λ×∅ in type B or D, closed form against the group computation.
    Efd {
        #[command(flatten)]
        t: TypeArgs,
        /// Partition of n, comma separated.
        #[arg(long, value_delimiter = ',', required = true)]
        lambda: Vec<u32>,
    },
    /// Exotic Fourier matrix of M(Γ).
    Fourier {
        /// Γ: 1, Z2, Z2^k, S3, S4, S5.
        #[arg(long)]
        gamma: String,
    },
    /// q-part m_x of a formal degree against the Springer prediction.
    Mx {
        /// Case id, e.g. g2-a1-s1; every case when omitted.
        #[arg(long)]
        fixture: Option<String>,
    },
    /// Run a verification suite, or all of them.
    Verify {
        /// One of cyc, g2-formal, sp4, g2-affine, independence, appendix-g2, fourier, all.
        suite: String,
    },
    /// Elliptic theory of an affine Weyl group; all stages when no flag is given.
    Affine {
        /// Finite type of the affine root system, e.g. g2.
        group: String,
        /// Elliptic classes with their parahoric and μ_el.
        #[arg(long)]
        classes: bool,
        /// The function ν on elliptic classes.
        #[arg(long)]
        nu: bool,
        /// Elliptic Fourier transforms, EF^J per parahoric and EF^a on the elliptic basis.
        #[arg(long)]
        ef: bool,
        /// Formal degrees of the elliptic discrete series.
        #[arg(long)]
        formal: bool,
    },
    /// Linear independence of 1/det(1-qw) over the elliptic classes.
    Independence {
        /// Single type; the classical range B2..B6, D4..D6 and F4 when omitted.
        #[arg(long = "type", value_name = "TYPE")]
        ty: Option<String>,
        #[arg(long)]
        n: Option<u32>,
    },
}

enum Failure {
    Usage(String),
    Fail(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(_) | Error::Invalid(_) => Failure::Usage(e.to_string()),
            _ => Failure::Fail(e.to_string()),
        }
    }
}

struct Output {
    value: Value,
    text: String,
    failed: bool,
}

impl Output {
    fn ok(value: Value, text: String) -> Output {
        Output { value, text, failed: false }
    }
}

fn rf(f: &RatFunc) -> Value {
    ratfunc_to_factored_report(f)
}

fn qmatrix_json(m: &QMatrix) -> Value {
    Value::Array(m.iter().map(|r| Value::Array(r.iter().map(rational_to_json).collect())).collect())
}

fn grid(labels: &[String], rows: &[Vec<String>]) -> String {
    let w = rows.iter().flatten().chain(labels).map(|s| s.chars().count()).max().unwrap_or(1);
    let lw = labels.iter().map(|s| s.chars().count()).max().unwrap_or(1);
    let mut s = format!("{:lw$}", "");
    for l in labels {
        let _ = write!(s, "  {l:>w$}");
    }
    s.push('\n');
    for (l, r) in labels.iter().zip(rows) {
        let _ = write!(s, "{l:lw$}");
        for x in r {
            let _ = write!(s, "  {x:>w$}");
        }
        s.push('\n');
    }
    s
}

fn qmatrix_text(labels: &[String], m: &QMatrix) -> String {
    let rows: Vec<Vec<String>> = m.iter().map(|r| r.iter().map(ToString::to_string).collect()).collect();
    grid(labels, &rows)
}

fn group(t: &TypeArgs, classes: bool, table: bool) -> Result<Output, Failure> {
    let w = WeylGroup::standard(&t.spec()?)?;
    let class_rows: Vec<Value> = (0..w.num_classes())
        .map(|c| {
            json!({
                "rep": w.class_rep(c).rows(),
                "size": w.class_size(c),
                "charpoly": poly_to_json(w.charpoly(c)),
                "elliptic": w.is_elliptic(c),
            })
        })
        .collect();
    let table_json = json!({"labels": w.labels(), "values": w.table().values});
    let mut text = String::new();
    if classes {
        for c in 0..w.num_classes() {
            let e = if w.is_elliptic(c) { "elliptic" } else { "" };
            let _ = writeln!(text, "{c:>3}  size {:>6}  det(q-w) = {}  {e}", w.class_size(c), w.charpoly(c));
        }
    }
    if table {
        let labels: Vec<String> = w.labels().to_vec();
        let cols: Vec<String> = (0..w.num_classes()).map(|c| c.to_string()).collect();
        let rows: Vec<Vec<String>> = w.table().values.iter().map(|r| r.iter().map(i64::to_string).collect()).collect();
        let lw = labels.iter().map(String::len).max().unwrap_or(1);
        let cw = rows.iter().flatten().chain(&cols).map(String::len).max().unwrap_or(1);
        let _ = write!(text, "{:lw$}", "");
        for c in &cols {
            let _ = write!(text, " {c:>cw$}");
        }
        text.push('\n');
        for (l, r) in labels.iter().zip(&rows) {
            let _ = write!(text, "{l:lw$}");
            for x in r {
                let _ = write!(text, " {x:>cw$}");
            }
            text.push('\n');
        }
    }
    let value = match (classes, table) {
        (true, false) => Value::Array(class_rows),
        (false, true) => table_json,
        (true, true) => json!({"classes": class_rows, "table": table_json}),
        (false, false) => {
            let ell = w.elliptic_classes().len();
            text = format!(
                "W({}): order {}, rank {}, exponents {:?}, {} classes ({ell} elliptic), {} irreducible characters\n",
                w.spec(),
                w.order(),
                w.rank(),
                w.exponents(),
                w.num_classes(),
                w.num_irreps()
            );
            json!({
                "type": w.spec().to_string(),
                "order": w.order(),
                "rank": w.rank(),
                "exponents": w.exponents(),
                "classes": w.num_classes(),
                "elliptic": ell,
                "irreducibles": w.num_irreps(),
            })
        }
    };
    Ok(Output::ok(value, text))
}

fn fake(t: &TypeArgs, label: Option<&str>) -> Result<Output, Failure> {
    let w = WeylGroup::standard(&t.spec()?)?;
    let idx: Vec<usize> = match label {
        Some(l) => vec![w.irrep_index(l).map_err(|e| Failure::Usage(e.to_string()))?],
        None => (0..w.num_irreps()).collect(),
    };
    let mut rows = Vec::new();
    let mut text = String::new();
    for i in idx {
        let chi = w.character(i);
        let f = w.fake_degree(&chi);
        let fe = elliptic_fake_degree(&w, &chi);
        let _ = writeln!(text, "{:<10} f = {:<24} F = {}", w.labels()[i], f.to_string(), fe.factored());
        rows.push(json!({
            "label": w.labels()[i],
            "degree": w.degree(i),
            "fake_degree": rf(&f),
            "elliptic_fake_degree": rf(&fe),
        }));
    }
    let value = if label.is_some() { rows.pop().unwrap_or(Value::Null) } else { Value::Array(rows) };
    Ok(Output::ok(value, text))
}

fn efd(t: &TypeArgs, lambda: &[u32]) -> Result<Output, Failure> {
    let spec = t.spec()?;
    let ty = match spec.factors.as_slice() {
        [ty] => *ty,
        _ => return Err(Failure::Usage("efd takes an irreducible type".into())),
    };
    let (n, is_b) = match ty {
        CartanType::B(n) | CartanType::C(n) => (n, true),
        CartanType::D(n) => (n, false),
        _ => return Err(Failure::Usage(format!("closed forms exist for types B and D, not {ty}"))),
    };
    let l = Partition::new(lambda.to_vec());
    if l.size() != n {
        return Err(Failure::Usage(format!("{l} is not a partition of {n}")));
    }
    let closed = if is_b { bn_fake_closed(&l) } else { dn_fake_closed(&l)? };
    let w = WeylGroup::standard(&spec)?;
    let label = format!("{}.", l.label());
    let chi = w
        .character_by_label(&label)
        .or_else(|_| w.character_by_label(&format!(".{}", l.label())))?;
    let computed = elliptic_fake_degree(&w, &chi);
    let agree = computed == closed;
    let text = format!(
        "F({l} x ∅) in W({spec})\n  raw:      {closed}\n  factored: {}\n  group computation {}\n",
        closed.factored(),
        if agree { "agrees" } else { "DISAGREES" }
    );
    let value = json!({
        "type": spec.to_string(),
        "lambda": lambda,
        "raw": closed.to_string(),
        "value": rf(&closed),
        "computed": rf(&computed),
        "agrees": agree,
    });
    Ok(Output { value, text, failed: !agree })
}

fn fourier(gamma: &str) -> Result<Output, Failure> {
    let g = SmallGroup::parse(gamma)?;
    let b = g.fourier_matrix()?;
    let cell = |i: usize, j: usize| -> String {
        match b.matrix[i][j].to_rational() {
            Some(c) => c.to_string(),
            None => format!("{:?}", b.matrix[i][j]),
        }
    };
    let n = b.size();
    let rows: Vec<Vec<String>> = (0..n).map(|i| (0..n).map(|j| cell(i, j)).collect()).collect();
    let mut text = format!("M({}), {n} pairs (x, σ)\n", g.name());
    text.push_str(&grid(&b.labels, &rows));
    let value = json!({
        "gamma": g.name(),
        "labels": b.labels,
        "matrix": rows,
        "rational": b.is_rational(),
        "symmetric": b.is_symmetric(),
        "orthogonal": b.is_orthogonal(),
        "involution": b.is_involution(),
    });
    Ok(Output::ok(value, text))
}

fn reports(rows: Vec<VerificationReport>) -> Output {
    let failed = exit_code(&rows) != 0;
    let text = render_text(&rows);
    Output { value: serde_json::to_value(&rows).unwrap_or(Value::Null), text, failed }
}

fn mx(fixture: Option<&str>, fx: &Fixtures) -> Result<Output, Failure> {
    let rows = match fixture {
        Some(id) => {
            let data = UnipotentData::load(fx)?;
            if data.case(id).is_err() {
                return Err(Failure::Usage(format!("unknown case {id:?}; known: {}", data.case_ids().join(", "))));
            }
            vec![mx_report(id, fx)?]
        }
        None => {
            let data = UnipotentData::load(fx)?;
            data.case_ids().iter().map(|id| mx_report(id, fx)).collect::<Result<Vec<_>, _>>()?
        }
    };
    Ok(reports(rows))
}

fn verify(suite: &str, fx: &Fixtures) -> Result<Output, Failure> {
    if suite == "all" {
        let mut rows = Vec::new();
        for s in SUITES {
            rows.extend(run_verify(s, fx)?);
        }
        return Ok(reports(rows));
    }
    Ok(reports(run_verify(suite, fx)?))
}

fn normalization(d: &AffineDatum, fx: &Fixtures, table: Option<&EllipticCharacterTable>) -> Result<Normalization, Failure> {
    match table {
        Some(t) => Ok(matching_normalizations(d, fx, &t.ef_j)?.first().copied().unwrap_or(Normalization::Operator)),
        None => Ok(Normalization::Operator),
    }
}

fn ef_block(p: &MaximalParabolic, labels: &[String], m: &QMatrix) -> (Value, String) {
    let v = json!({"parabolic": p.name(), "type": p.spec.to_string(), "classes": labels, "matrix": qmatrix_json(m)});
    let t = format!("{} ({})\n{}", p.name(), p.spec, qmatrix_text(labels, m));
    (v, t)
}

fn affine(group: &str, stages: [bool; 4], fx: &Fixtures) -> Result<Output, Failure> {
    let [mut classes, mut nu, mut ef, mut formal] = stages;
    if !(classes || nu || ef || formal) {
        (classes, nu, ef, formal) = (true, true, true, true);
    }
    let d = AffineDatum::parse(group)?;
    let ps = d.maximal_parabolics()?;
    let cls = d.elliptic_classes()?;
    let table = if d.base() == CartanType::G2 { Some(EllipticCharacterTable::g2(fx)?) } else { None };
    let mut value = serde_json::Map::new();
    let mut text = String::new();
    if classes {
        let _ = writeln!(text, "elliptic classes of W^a({}), Ω trivial", d.base());
        let mut rows = Vec::new();
        for c in &cls {
            let p = &ps[c.parabolic];
            let cp = p.group.charpoly(c.class);
            let _ = writeln!(
                text,
                "  {:<4} {:<16} {:<6} order {:>2}  μ = {:<5} det(q-w) = {cp}",
                c.label,
                p.name(),
                p.spec.to_string(),
                c.element_order,
                c.mu.to_string()
            );
            rows.push(json!({
                "label": c.label,
                "parabolic": p.name(),
                "type": p.spec.to_string(),
                "order": c.element_order,
                "mu": rational_to_json(&c.mu),
                "charpoly": poly_to_json(cp),
            }));
        }
        value.insert("classes".into(), Value::Array(rows));
    }
    if nu {
        let f = nu_function(&d, fx)?;
        text.push_str("ν on the elliptic classes\n");
        let mut rows = Vec::new();
        for (c, v) in cls.iter().zip(&f.values) {
            let _ = writeln!(text, "  {:<4} {}", c.label, v.factored());
            rows.push(json!({"label": c.label, "nu": rf(v)}));
        }
        value.insert("nu".into(), Value::Array(rows));
    }
    if ef {
        let norm = normalization(&d, fx, table.as_ref())?;
        let _ = writeln!(text, "EF^J on the elliptic classes ({} normalization)", norm.name());
        let mut blocks = Vec::new();
        for (j, p) in ps.iter().enumerate() {
            let m = p.ef_elliptic(fx, norm)?;
            let labels: Vec<String> = cls.iter().filter(|c| c.parabolic == j).map(|c| c.label.clone()).collect();
            let (v, t) = ef_block(p, &labels, &m);
            text.push_str(&t);
            blocks.push(v);
        }
        let mut e = json!({"normalization": norm.name(), "blocks": blocks});
        if let Some(t) = &table {
            let m = ef_affine_elliptic(&d, fx, &t.basis())?;
            let names: Vec<String> = t.characters.iter().map(|c| c.name.clone()).collect();
            let matches = m == t.ef_affine;
            let _ = write!(text, "EF^a on the elliptic discrete series\n{}", qmatrix_text(&names, &m));
            if !matches {
                let diff: Vec<String> = (0..names.len())
                    .flat_map(|i| (0..names.len()).map(move |j| (i, j)))
                    .filter(|&(i, j)| m[i][j] != t.ef_affine[i][j])
                    .map(|(i, j)| format!("({},{})", names[i], names[j]))
                    .collect();
                let _ = writeln!(text, "  differs from the stored matrix at {}", diff.join(" "));
            }
            e["affine"] = json!({
                "basis": names,
                "matrix": qmatrix_json(&m),
                "symmetric": linalg::is_symmetric(&m),
                "stored": qmatrix_json(&t.ef_affine),
                "matches_stored": matches,
            });
        }
        value.insert("ef".into(), e);
    }
    if formal {
        let t = table
            .as_ref()
            .ok_or_else(|| Failure::Fail(format!("no elliptic character table for {}", d.base())))?;
        let f = nu_function(&d, fx)?;
        text.push_str("formal degrees Σ v(C) ν(C) μ(C)\n");
        let mut rows = Vec::new();
        for c in &t.characters {
            let deg = affine_formal_degree(&cls, &c.class_function(), &f)?;
            let _ = writeln!(text, "  {:<3} {:<14} {}", c.name, c.module, deg.factored());
            rows.push(json!({"name": c.name, "module": c.module, "point": c.point, "formal_degree": rf(&deg)}));
        }
        value.insert("formal".into(), Value::Array(rows));
    }
    Ok(Output::ok(Value::Object(value), text))
}

fn independence(ty: Option<&str>, n: Option<u32>) -> Result<Output, Failure> {
    let specs: Vec<GroupSpec> = match ty {
        Some(t) => vec![GroupSpec::from_family(t, n)?],
        None => ["B2", "B3", "B4", "B5", "B6", "D4", "D5", "D6", "F4"]
            .iter()
            .map(|s| GroupSpec::parse(s))
            .collect::<Result<_, _>>()?,
    };
    let mut rows = Vec::new();
    let mut text = String::new();
    for s in specs {
        let w = WeylGroup::standard(&s)?;
        let r = independence_check(&w);
        let verdict = if r.independent { "independent" } else { "DEPENDENT" };
        let _ = writeln!(text, "{:<4} {:>2} elliptic classes, rank {:>2}: {verdict}", s.to_string(), r.elliptic_classes, r.rank);
        for (a, b, p) in &r.coincident {
            let _ = writeln!(text, "     classes {a} and {b} share det(q-w) = {p}");
        }
        rows.push(json!({
            "type": s.to_string(),
            "elliptic_classes": r.elliptic_classes,
            "rank": r.rank,
            "independent": r.independent,
            "coincident": r.coincident.iter().map(|(a, b, p)| json!([a, b, poly_to_json(p)])).collect::<Vec<_>>(),
        }));
    }
    Ok(Output::ok(Value::Array(rows), text))
}

fn run(cli: &Cli) -> Result<Output, Failure> {
    let fx = match &cli.fixtures {
        Some(d) if !d.is_dir() => return Err(Failure::Usage(format!("{} is not a directory", d.display()))),
        Some(d) => Fixtures::with_dir(d),
        None => Fixtures::embedded(),
    };
    match &cli.cmd {
        Cmd::Group { t, classes, table } => group(t, *classes, *table),
        Cmd::Fake { t, label } => fake(t, label.as_deref()),
        Cmd::Efd { t, lambda } => efd(t, lambda),
        Cmd::Fourier { gamma } => fourier(gamma),
        Cmd::Mx { fixture } => mx(fixture.as_deref(), &fx),
        Cmd::Verify { suite } => verify(suite, &fx),
        Cmd::Affine { group, classes, nu, ef, formal } => affine(group, [*classes, *nu, *ef, *formal], &fx),
        Cmd::Independence { ty, n } => independence(ty.as_deref(), *n),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            let body = if cli.json {
                serde_json::to_string_pretty(&out.value).expect("JSON values serialize") + "\n"
            } else {
                out.text
            };
            // a closed pipe (ellq ... | head) is not an error
            let _ = std::io::stdout().lock().write_all(body.as_bytes());
            ExitCode::from(u8::from(out.failed))
        }
        Err(Failure::Usage(m)) => {
            eprintln!("ellq: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Fail(m)) => {
            eprintln!("ellq: {m}");
            ExitCode::from(1)
        }
    }
}
