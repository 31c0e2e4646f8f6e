//! The small groups Γ attached to families, the set M(Γ) and the exotic
//! Fourier transform matrix.

use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactq::{linalg::QMatrix, Cyclo, Rational};
use crate::weylgrp::{FiniteGroup, Mat, DEFAULT_BOUND};

#[derive(Clone, Debug, PartialEq, Eq)]
enum Kind {
    Trivial,
    Elementary(u32),
    Symmetric(u32),
}

/// An irreducible character of a centralizer C_Γ(x), stored by its values
/// on the elements of Γ that lie in C_Γ(x).
#[derive(Clone, Debug)]
pub struct CentralizerChar {
    pub label: String,
    pub degree: i64,
    values: HashMap<usize, Cyclo>,
}

impl CentralizerChar {
    /// Value at the element of Γ with the given index; None off the centralizer.
    pub fn value(&self, g: usize) -> Option<&Cyclo> {
        self.values.get(&g)
    }
}

/// A pair (x, σ) with x a class representative of Γ and σ ∈ Irr C_Γ(x).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MPair {
    pub class: usize,
    pub x: usize,
    pub x_label: String,
    pub sigma: usize,
    pub sigma_label: String,
}

impl MPair {
    pub fn label(&self) -> String {
        format!("({},{})", self.x_label, self.sigma_label)
    }
}

#[derive(Clone, Debug)]
pub struct SmallGroup {
    name: String,
    kind: Kind,
    group: FiniteGroup,
    class_labels: Vec<String>,
    /// Irreducible characters of C_Γ(rep) for each class, in display order.
    cent_chars: Vec<Vec<CentralizerChar>>,
    cent_orders: Vec<usize>,
}

fn perm_matrix(n: usize, swap: (usize, usize)) -> Mat {
    let mut m = Mat::identity(n);
    m.set(swap.0, swap.0, 0);
    m.set(swap.1, swap.1, 0);
    m.set(swap.0, swap.1, 1);
    m.set(swap.1, swap.0, 1);
    m
}

/// Cycle type of a permutation matrix (x sends e_j to e_{π(j)}).
fn cycle_type(m: &Mat) -> Vec<u32> {
    let n = m.dim();
    let image: Vec<usize> = (0..n).map(|j| (0..n).find(|&i| m.get(i, j) != 0).expect("permutation matrix")).collect();
    let mut seen = vec![false; n];
    let mut parts = Vec::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        let mut len = 0;
        let mut j = s;
        while !seen[j] {
            seen[j] = true;
            j = image[j];
            len += 1;
        }
        parts.push(len);
    }
    parts.sort_unstable_by(|a, b| b.cmp(a));
    parts
}

impl SmallGroup {
    pub fn trivial() -> SmallGroup {
        SmallGroup::build("1".into(), Kind::Trivial).expect("trivial group")
    }

    /// (Z/2)^k, 1 ≤ k ≤ 4.
    pub fn elementary_abelian(k: u32) -> Result<SmallGroup> {
        if !(1..=4).contains(&k) {
            return Err(Error::Unsupported(format!("(Z/2)^{k}: only 1 ≤ k ≤ 4 are supported")));
        }
        let name = if k == 1 { "Z2".to_string() } else { format!("Z2^{k}") };
        SmallGroup::build(name, Kind::Elementary(k))
    }

    /// S_n for 2 ≤ n ≤ 5 (S_2 is returned as Z2).
    pub fn symmetric(n: u32) -> Result<SmallGroup> {
        match n {
            0 | 1 => Ok(SmallGroup::trivial()),
            2 => SmallGroup::elementary_abelian(1),
            3..=5 => SmallGroup::build(format!("S{n}"), Kind::Symmetric(n)),
            _ => Err(Error::Unsupported(format!("S{n}: only n ≤ 5 are supported"))),
        }
    }

    /// Accepts "1", "trivial", "Z2", "Z/2", "Z2^k", "(Z/2)^k", "S3", "S4", "S5".
    pub fn parse(s: &str) -> Result<SmallGroup> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        match t.as_str() {
            "1" | "trivial" | "S1" => return Ok(SmallGroup::trivial()),
            "Z2" | "Z/2" | "S2" | "Z/2Z" => return SmallGroup::elementary_abelian(1),
            _ => {}
        }
        for prefix in ["Z2^", "(Z/2)^", "(Z/2Z)^"] {
            if let Some(k) = t.strip_prefix(prefix) {
                let k: u32 = k.parse().map_err(|_| Error::Parse(format!("bad exponent in {s:?}")))?;
                return SmallGroup::elementary_abelian(k);
            }
        }
        if let Some(n) = t.strip_prefix('S') {
            let n: u32 = n.parse().map_err(|_| Error::Parse(format!("unknown group {s:?}")))?;
            return SmallGroup::symmetric(n);
        }
        Err(Error::Parse(format!("unknown group {s:?}")))
    }

    fn build(name: String, kind: Kind) -> Result<SmallGroup> {
        let (dim, gens) = match kind {
            Kind::Trivial => (1, vec![]),
            Kind::Elementary(k) => {
                let k = k as usize;
                let gens = (0..k)
                    .map(|i| {
                        let mut m = Mat::identity(k);
                        m.set(i, i, -1);
                        m
                    })
                    .collect();
                (k, gens)
            }
            Kind::Symmetric(n) => {
                let n = n as usize;
                (n, (0..n - 1).map(|i| perm_matrix(n, (i, i + 1))).collect())
            }
        };
        let mut group = FiniteGroup::from_generators(dim, &gens, DEFAULT_BOUND)?;
        group.sort_classes(|c, m| (m.order(), c.size()));
        let class_labels = group.classes().iter().map(|c| element_label(&kind, group.element(c.rep))).collect();
        let mut cent_chars = Vec::new();
        let mut cent_orders = Vec::new();
        for c in group.classes() {
            let (order, chars) = centralizer_characters(&group, c.rep)?;
            cent_orders.push(order);
            cent_chars.push(chars);
        }
        Ok(SmallGroup { name, kind, group, class_labels, cent_chars, cent_orders })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.group.order()
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn num_classes(&self) -> usize {
        self.group.classes().len()
    }

    pub fn class_label(&self, c: usize) -> &str {
        &self.class_labels[c]
    }

    pub fn class_rep(&self, c: usize) -> usize {
        self.group.classes()[c].rep
    }

    pub fn class_index(&self, label: &str) -> Result<usize> {
        self.class_labels
            .iter()
            .position(|l| l == label.trim())
            .ok_or_else(|| Error::Invalid(format!("{label} is not a class of {}", self.name)))
    }

    /// Index in Irr(Γ) of the character with this label.
    pub fn irreducible_index(&self, label: &str) -> Result<usize> {
        self.irreducibles()
            .iter()
            .position(|c| c.label == label.trim())
            .ok_or_else(|| Error::Invalid(format!("{label} is not an irreducible character of {}", self.name)))
    }

    pub fn centralizer_order(&self, c: usize) -> usize {
        self.cent_orders[c]
    }

    pub fn centralizer_chars(&self, c: usize) -> &[CentralizerChar] {
        &self.cent_chars[c]
    }

    /// Irr(Γ), which is Irr C_Γ(1).
    pub fn irreducibles(&self) -> &[CentralizerChar] {
        &self.cent_chars[self.group.identity_class()]
    }

    /// M(Γ): one pair per Γ-orbit.
    pub fn m_set(&self) -> Vec<MPair> {
        let mut out = Vec::new();
        for c in 0..self.num_classes() {
            for (i, s) in self.cent_chars[c].iter().enumerate() {
                out.push(MPair {
                    class: c,
                    x: self.class_rep(c),
                    x_label: self.class_labels[c].clone(),
                    sigma: i,
                    sigma_label: s.label.clone(),
                });
            }
        }
        out
    }

    pub fn find_pair(&self, label: &str) -> Result<usize> {
        let t: String = label.chars().filter(|c| !c.is_whitespace()).collect();
        self.m_set()
            .iter()
            .position(|p| p.label() == t)
            .ok_or_else(|| Error::Invalid(format!("{label} is not an element of M({})", self.name)))
    }

    /// The entry {(x,σ),(y,τ)} computed from the defining sum, kept in Q(ζ).
    fn entry_cyclo(&self, a: &MPair, b: &MPair, terms: &BTreeMap<(usize, usize), usize>) -> Cyclo {
        let sigma = &self.cent_chars[a.class][a.sigma];
        let tau = &self.cent_chars[b.class][b.sigma];
        let mut s = Cyclo::zero(1);
        for (&(yc, xc), &count) in terms {
            let u = sigma.value(yc).expect("conjugate of y commutes with x");
            let v = tau.value(xc).expect("conjugate of x commutes with y");
            s = &s + &(u * &v.conj()).scale(&Rational::from_integer(count.into()));
        }
        let d = self.cent_orders[a.class] * self.cent_orders[b.class];
        s.scale(&(Rational::one() / Rational::from_integer(d.into())))
    }

    /// For class representatives x, y: the multiset of (g y g⁻¹, g⁻¹ x g)
    /// over g with x g y g⁻¹ = g y g⁻¹ x.
    fn commuting_terms(&self, x: usize, y: usize) -> BTreeMap<(usize, usize), usize> {
        let g = &self.group;
        let mut terms = BTreeMap::new();
        for h in 0..g.order() {
            let hi = g.inverse(h);
            let yc = g.mul(g.mul(h, y), hi);
            if g.mul(x, yc) != g.mul(yc, x) {
                continue;
            }
            let xc = g.mul(g.mul(hi, x), h);
            *terms.entry((yc, xc)).or_insert(0) += 1;
        }
        terms
    }

    /// The exotic Fourier transform matrix on M(Γ). Entries are real
    /// cyclotomic numbers; they are rational except when Γ has elements of
    /// order 5.
    pub fn fourier_matrix(&self) -> Result<FourierBlock> {
        let pairs = self.m_set();
        let n = pairs.len();
        let mut matrix = vec![vec![Cyclo::zero(1); n]; n];
        let mut cache: HashMap<(usize, usize), BTreeMap<(usize, usize), usize>> = HashMap::new();
        for i in 0..n {
            for j in 0..n {
                let key = (pairs[i].class, pairs[j].class);
                let terms = cache.entry(key).or_insert_with(|| self.commuting_terms(pairs[i].x, pairs[j].x));
                matrix[i][j] = simplify(self.entry_cyclo(&pairs[i], &pairs[j], terms));
            }
        }
        Ok(FourierBlock { gamma: self.name.clone(), labels: pairs.iter().map(MPair::label).collect(), matrix })
    }

    /// The column {(y,ρ),(1,ρ′)} = ρ(1)ρ′(y)/|C_Γ(y)| over all of M(Γ).
    pub fn special_column(&self, rho_prime: usize) -> Result<Vec<Rational>> {
        let rp = self
            .irreducibles()
            .get(rho_prime)
            .ok_or_else(|| Error::Invalid(format!("Γ = {} has no irreducible #{rho_prime}", self.name)))?;
        self.m_set()
            .iter()
            .map(|p| {
                let rho = &self.cent_chars[p.class][p.sigma];
                let v = rp.value(p.x).expect("Γ-character defined everywhere").to_rational().ok_or_else(|| {
                    Error::Unsupported(format!("irrational character value in {}", self.name))
                })?;
                Ok(Rational::from_integer(rho.degree.into()) * v / Rational::from_integer(self.cent_orders[p.class].into()))
            })
            .collect()
    }

    pub fn is_symmetric_group(&self) -> bool {
        matches!(self.kind, Kind::Symmetric(_))
    }
}

fn element_label(kind: &Kind, m: &Mat) -> String {
    if m.is_identity() {
        return "1".into();
    }
    match kind {
        Kind::Trivial => "1".into(),
        Kind::Elementary(1) => "tau".into(),
        Kind::Elementary(_) => {
            let idx: String = (0..m.dim()).filter(|&i| m.get(i, i) < 0).map(|i| (i + 1).to_string()).collect();
            format!("t{idx}")
        }
        Kind::Symmetric(_) => {
            let parts: String = cycle_type(m).into_iter().filter(|&p| p > 1).map(|p| p.to_string()).collect();
            format!("g{parts}")
        }
    }
}

/// Subgroup generated by the given elements of `g`, as a set of indices.
fn closure(g: &FiniteGroup, gens: &[usize]) -> HashSet<usize> {
    let mut seen = HashSet::from([0usize]);
    let mut queue = VecDeque::from([0usize]);
    while let Some(a) = queue.pop_front() {
        for &s in gens {
            let b = g.mul(a, s);
            if seen.insert(b) {
                queue.push_back(b);
            }
        }
    }
    seen
}

fn centralizer_characters(g: &FiniteGroup, x: usize) -> Result<(usize, Vec<CentralizerChar>)> {
    let mut elems: Vec<usize> = (0..g.order()).filter(|&h| g.mul(h, x) == g.mul(x, h)).collect();
    let order = elems.len();
    // greedy generating set, large orders first
    elems.sort_by_key(|&h| (std::cmp::Reverse(g.element(h).order()), h));
    let mut gens: Vec<usize> = Vec::new();
    let mut span = closure(g, &gens);
    for &h in &elems {
        if !span.contains(&h) {
            gens.push(h);
            span = closure(g, &gens);
        }
    }
    let abelian = gens.iter().all(|&a| gens.iter().all(|&b| g.mul(a, b) == g.mul(b, a)));
    let mut chars = if abelian { abelian_characters(g, &gens, &elems)? } else { nonabelian_characters(g, &gens)? };
    chars.sort_by(|a, b| {
        let ta = a.label == "1";
        let tb = b.label == "1";
        tb.cmp(&ta).then(b.degree.cmp(&a.degree)).then(a.label.cmp(&b.label))
    });
    Ok((order, chars))
}

fn abelian_characters(g: &FiniteGroup, gens: &[usize], elems: &[usize]) -> Result<Vec<CentralizerChar>> {
    let orders: Vec<u32> = gens.iter().map(|&h| g.element(h).order()).collect();
    let e = orders.iter().fold(1u32, |a, &b| num_integer::lcm(a, b));
    let mut out = Vec::new();
    let total: usize = orders.iter().map(|&o| o as usize).product();
    for code in 0..total {
        let mut ks = Vec::new();
        let mut c = code;
        for &o in &orders {
            ks.push((c % o as usize) as u32);
            c /= o as usize;
        }
        // exponent of ζ_e at each element, by walking words in the generators
        let mut exp: HashMap<usize, u32> = HashMap::from([(0usize, 0u32)]);
        let mut queue = VecDeque::from([0usize]);
        let mut ok = true;
        'walk: while let Some(a) = queue.pop_front() {
            for (i, &s) in gens.iter().enumerate() {
                let b = g.mul(a, s);
                let v = (exp[&a] + ks[i] * (e / orders[i])) % e;
                match exp.get(&b) {
                    Some(&w) if w != v => {
                        ok = false;
                        break 'walk;
                    }
                    Some(_) => {}
                    None => {
                        exp.insert(b, v);
                        queue.push_back(b);
                    }
                }
            }
        }
        if !ok {
            continue;
        }
        let label = if ks.iter().all(|&k| k == 0) {
            "1".to_string()
        } else if gens.len() == 1 {
            match (orders[0], ks[0]) {
                (2, _) => "eps".into(),
                (_, 1) => "theta".into(),
                (_, k) => format!("theta{k}"),
            }
        } else {
            format!("chi{}", ks.iter().map(|k| k.to_string()).collect::<String>())
        };
        let values = elems.iter().map(|&h| (h, Cyclo::root(e, exp[&h] as i64))).collect();
        out.push(CentralizerChar { label, degree: 1, values });
    }
    if out.len() != elems.len() {
        return Err(Error::Internal(format!("found {} characters of an abelian group of order {}", out.len(), elems.len())));
    }
    Ok(out)
}

fn nonabelian_characters(g: &FiniteGroup, gens: &[usize]) -> Result<Vec<CentralizerChar>> {
    let mats: Vec<Mat> = gens.iter().map(|&h| *g.element(h)).collect();
    let sub = FiniteGroup::from_generators(g.element(0).dim(), &mats, g.order() + 1)?;
    let table = sub.integer_character_table()?;
    let mut by_degree: BTreeMap<i64, usize> = BTreeMap::new();
    for row in &table {
        *by_degree.entry(row[sub.identity_class()]).or_insert(0) += 1;
    }
    let mut seen: BTreeMap<i64, usize> = BTreeMap::new();
    let mut out = Vec::new();
    for row in &table {
        let d = row[sub.identity_class()];
        let k = seen.entry(d).or_insert(0);
        *k += 1;
        let trivial = row.iter().all(|&v| v == 1);
        let base = if d == 1 { "eps".to_string() } else if d == 2 { "r".to_string() } else { format!("r{d}") };
        let label = if trivial {
            "1".to_string()
        } else if d == 1 {
            // the trivial row takes one of the degree-one slots
            if by_degree[&1] == 2 { base } else { format!("{base}{}", *k - 1) }
        } else if by_degree[&d] == 1 {
            base
        } else {
            format!("{base}_{k}")
        };
        let values = sub
            .elements()
            .iter()
            .map(|m| {
                let h = g.index_of(m).expect("subgroup element lies in Γ");
                (h, Cyclo::from_int(1, row[sub.class_of_matrix(m).expect("element of subgroup")]))
            })
            .collect();
        out.push(CentralizerChar { label, degree: d, values });
    }
    Ok(out)
}

/// Rational values are stored in Q(ζ_1) so that later arithmetic stays cheap.
fn simplify(c: Cyclo) -> Cyclo {
    match c.to_rational() {
        Some(r) => Cyclo::rational(1, r),
        None => c,
    }
}

fn cyclo_matmul(a: &[Vec<Cyclo>], b: &[Vec<Cyclo>]) -> Vec<Vec<Cyclo>> {
    let n = a.len();
    let m = b.first().map_or(0, |r| r.len());
    let mut out = vec![vec![Cyclo::zero(1); m]; n];
    for i in 0..n {
        for (l, bl) in b.iter().enumerate() {
            if a[i][l].is_zero() {
                continue;
            }
            for j in 0..m {
                if !bl[j].is_zero() {
                    out[i][j] = simplify(&out[i][j] + &(&a[i][l] * &bl[j]));
                }
            }
        }
    }
    out
}

fn is_identity(m: &[Vec<Cyclo>]) -> bool {
    m.iter().enumerate().all(|(i, r)| {
        r.iter().enumerate().all(|(j, x)| x.to_rational() == Some(if i == j { Rational::one() } else { Rational::zero() }))
    })
}

/// A Fourier matrix with its row/column labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FourierBlock {
    pub gamma: String,
    pub labels: Vec<String>,
    pub matrix: Vec<Vec<Cyclo>>,
}

impl FourierBlock {
    pub fn size(&self) -> usize {
        self.labels.len()
    }

    pub fn index(&self, label: &str) -> Result<usize> {
        let t: String = label.chars().filter(|c| !c.is_whitespace()).collect();
        self.labels
            .iter()
            .position(|l| *l == t)
            .ok_or_else(|| Error::Invalid(format!("{label} is not an element of M({})", self.gamma)))
    }

    pub fn entry(&self, a: &str, b: &str) -> Result<Cyclo> {
        Ok(self.matrix[self.index(a)?][self.index(b)?].clone())
    }

    pub fn rational_entry(&self, a: &str, b: &str) -> Result<Rational> {
        self.entry(a, b)?.to_rational().ok_or_else(|| Error::Unsupported(format!("{{{a},{b}}} is irrational")))
    }

    pub fn is_rational(&self) -> bool {
        self.matrix.iter().flatten().all(|x| x.to_rational().is_some())
    }

    /// The matrix over Q; an error when some entry is irrational.
    pub fn rational(&self) -> Result<QMatrix> {
        self.matrix
            .iter()
            .map(|r| {
                r.iter()
                    .map(|x| {
                        x.to_rational()
                            .ok_or_else(|| Error::Unsupported(format!("Fourier matrix of {} is not rational", self.gamma)))
                    })
                    .collect()
            })
            .collect()
    }

    pub fn is_real(&self) -> bool {
        self.matrix.iter().flatten().all(|x| x.conj() == *x)
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.size()).all(|i| (0..i).all(|j| self.matrix[i][j] == self.matrix[j][i]))
    }

    /// M·M = 1.
    pub fn is_involution(&self) -> bool {
        is_identity(&cyclo_matmul(&self.matrix, &self.matrix))
    }

    /// M·M̄ᵀ = 1: rows orthonormal.
    pub fn is_orthogonal(&self) -> bool {
        let n = self.size();
        let t: Vec<Vec<Cyclo>> = (0..n).map(|j| (0..n).map(|i| self.matrix[i][j].conj()).collect()).collect();
        is_identity(&cyclo_matmul(&self.matrix, &t))
    }

    /// Kronecker product, labels joined with "x".
    pub fn kron(&self, other: &FourierBlock) -> FourierBlock {
        let mut labels = Vec::new();
        let mut matrix = Vec::new();
        for (i, a) in self.labels.iter().enumerate() {
            for (k, b) in other.labels.iter().enumerate() {
                labels.push(format!("{a}x{b}"));
                let mut row = Vec::new();
                for j in 0..self.size() {
                    for l in 0..other.size() {
                        row.push(simplify(&self.matrix[i][j] * &other.matrix[k][l]));
                    }
                }
                matrix.push(row);
            }
        }
        let gamma = match (self.gamma.as_str(), other.gamma.as_str()) {
            ("1", g) | (g, "1") => g.to_string(),
            (a, b) => format!("{a}x{b}"),
        };
        FourierBlock { gamma, labels, matrix }
    }

    pub fn trivial() -> FourierBlock {
        FourierBlock { gamma: "1".into(), labels: vec!["(1,1)".into()], matrix: vec![vec![Cyclo::one(1)]] }
    }
}
