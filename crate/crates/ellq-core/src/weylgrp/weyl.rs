//! Realized Weyl groups with labelled character tables.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_traits::{One, Zero};

use super::cartan::{CartanType, GroupSpec};
use super::group::{FiniteGroup, DEFAULT_BOUND};
use super::mat::Mat;
use super::roots::{identify, reflection, root_orbit};
use crate::combinat::{bipartition_character, bipartitions, mn_character, partitions, Bipartition, Partition};
use crate::error::{Error, Result};
use crate::exactq::{QPoly, RatFunc, Rational};

/// Values of a class function, indexed like the group's classes.
pub type ClassFunction = Vec<Rational>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterTable {
    pub labels: Vec<String>,
    /// values[i][c]: character i on class c.
    pub values: Vec<Vec<i64>>,
}

#[derive(Clone, Debug)]
pub struct WeylGroup {
    spec: GroupSpec,
    gram: Vec<Vec<i64>>,
    simple_roots: Vec<Vec<i64>>,
    group: FiniteGroup,
    charpolys: Vec<QPoly>,
    table: CharacterTable,
}

fn cache() -> &'static Mutex<HashMap<GroupSpec, Arc<WeylGroup>>> {
    static CACHE: OnceLock<Mutex<HashMap<GroupSpec, Arc<WeylGroup>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

fn block_realization(spec: &GroupSpec) -> Result<(Vec<Vec<i64>>, Vec<Vec<i64>>)> {
    let parts = spec.factors.iter().map(|t| t.realization()).collect::<Result<Vec<_>>>()?;
    let d: usize = parts.iter().map(|(g, _)| g.len()).sum();
    let mut gram = vec![vec![0i64; d]; d];
    let mut roots = Vec::new();
    let mut off = 0;
    for (g, rs) in &parts {
        let k = g.len();
        for i in 0..k {
            for j in 0..k {
                gram[off + i][off + j] = g[i][j];
            }
        }
        for r in rs {
            let mut v = vec![0i64; d];
            v[off..off + k].copy_from_slice(r);
            roots.push(v);
        }
        off += k;
    }
    Ok((gram, roots))
}

impl WeylGroup {
    /// The standard realization of a Weyl group type, built once per process.
    pub fn standard(spec: &GroupSpec) -> Result<Arc<WeylGroup>> {
        if let Some(w) = cache().lock().expect("cache lock").get(spec) {
            return Ok(w.clone());
        }
        let w = Arc::new(WeylGroup::build_standard(spec)?);
        cache().lock().expect("cache lock").entry(spec.clone()).or_insert(w.clone());
        Ok(w)
    }

    pub fn of_type(t: CartanType) -> Result<Arc<WeylGroup>> {
        WeylGroup::standard(&GroupSpec::single(t))
    }

    pub fn parse(s: &str) -> Result<Arc<WeylGroup>> {
        WeylGroup::standard(&GroupSpec::parse(s)?)
    }

    fn build_standard(spec: &GroupSpec) -> Result<WeylGroup> {
        for t in &spec.factors {
            t.validate()?;
        }
        let order = spec.order();
        if order > DEFAULT_BOUND as u128 {
            return Err(Error::Bound(format!("|W({spec})| = {order} exceeds the enumeration bound {DEFAULT_BOUND}")));
        }
        let (gram, roots) = block_realization(spec)?;
        let mut w = WeylGroup::bare(spec.clone(), gram, roots)?;
        w.table = if spec.factors.len() == 1 {
            w.label_irreducible()?
        } else {
            w.tensor_table()?
        };
        Ok(w)
    }

    /// Group generated by the reflections in `roots`, classes sorted, no table yet.
    fn bare(spec: GroupSpec, gram: Vec<Vec<i64>>, roots: Vec<Vec<i64>>) -> Result<WeylGroup> {
        let d = gram.len();
        let gens = roots.iter().map(|r| reflection(&gram, r)).collect::<Result<Vec<_>>>()?;
        let mut group = FiniteGroup::from_generators(d, &gens, DEFAULT_BOUND)?;
        let fixed = QPoly::from_ints(&[1, -1]).pow((d - spec.rank()) as u32);
        let cp = |m: &Mat| -> QPoly {
            m.det_one_minus_q().exact_div(&fixed).expect("reflection subgroup fixes the complement")
        };
        group.sort_classes(|c, m| (c.size(), cp(m).coeffs().to_vec()));
        let charpolys = group.classes().iter().map(|c| cp(group.element(c.rep))).collect();
        if group.order() as u128 != spec.order() {
            return Err(Error::Invalid(format!(
                "reflections generate a group of order {} but W({spec}) has order {}",
                group.order(),
                spec.order()
            )));
        }
        Ok(WeylGroup {
            spec,
            gram,
            simple_roots: roots,
            group,
            charpolys,
            table: CharacterTable { labels: Vec::new(), values: Vec::new() },
        })
    }

    /// Realize W(spec) by the reflections in `roots` (given in Bourbaki order
    /// for `spec`) inside the lattice with Gram matrix `gram`. Labels are
    /// carried over from the standard realization through the isomorphism
    /// matching simple reflections.
    pub fn realize(spec: &GroupSpec, gram: &[Vec<i64>], roots: &[Vec<i64>]) -> Result<WeylGroup> {
        let std = WeylGroup::standard(spec)?;
        let mut w = WeylGroup::bare(spec.clone(), gram.to_vec(), roots.to_vec())?;
        let sg = &std.group;
        let new_gens = w.group.gens().to_vec();
        let d = gram.len();
        let mut img = vec![Mat::identity(d); sg.order()];
        for i in 1..sg.order() {
            let (p, g) = sg.parent(i).expect("non-identity element has a parent");
            img[i] = img[p].mul(&new_gens[g]);
        }
        for i in 0..sg.order() {
            for (g, s) in sg.gens().iter().enumerate() {
                let j = sg.index_of(&sg.element(i).mul(s)).expect("closed");
                if img[j] != img[i].mul(&new_gens[g]) {
                    return Err(Error::Invalid(format!("roots do not satisfy the Coxeter relations of {spec}")));
                }
            }
        }
        let pre: HashMap<Mat, usize> = img.iter().enumerate().map(|(i, m)| (*m, i)).collect();
        if pre.len() != sg.order() {
            return Err(Error::Invalid("simple reflections do not generate a faithful copy".into()));
        }
        let mut col = Vec::with_capacity(w.group.classes().len());
        for (c, cl) in w.group.classes().iter().enumerate() {
            let i = pre[w.group.element(cl.rep)];
            let sc = sg.class_of(i);
            if std.charpolys[sc] != w.charpolys[c] {
                return Err(Error::Internal("characteristic polynomials differ between realizations".into()));
            }
            col.push(sc);
        }
        w.table = CharacterTable {
            labels: std.table.labels.clone(),
            values: std.table.values.iter().map(|row| col.iter().map(|&sc| row[sc]).collect()).collect(),
        };
        Ok(w)
    }

    fn label_irreducible(&self) -> Result<CharacterTable> {
        let t = self.spec.factors[0];
        let raw = self.group.integer_character_table()?;
        let reps: Vec<Mat> = self.group.classes().iter().map(|c| *self.group.element(c.rep)).collect();
        let cycle = |m: &Mat| m.signed_cycle_type().expect("signed permutation realization");
        let part = |v: Vec<u32>| Partition::new(v);
        let expected: Vec<(String, Vec<i64>)> = match t {
            CartanType::A(n) => partitions(n + 1)
                .into_iter()
                .map(|l| {
                    let row = reps.iter().map(|m| mn_character(&l, &part(cycle(m).0)).unwrap()).collect();
                    (l.label(), row)
                })
                .collect(),
            CartanType::B(n) | CartanType::C(n) => bipartitions(n)
                .into_iter()
                .map(|b| {
                    let row = reps
                        .iter()
                        .map(|m| {
                            let (p, q) = cycle(m);
                            bipartition_character(&b, &part(p), &part(q)).unwrap()
                        })
                        .collect();
                    (b.label(), row)
                })
                .collect(),
            CartanType::D(n) => return self.label_type_d(n, raw, &reps),
            CartanType::G2 | CartanType::F4 => return self.label_by_fake_degrees(raw),
            CartanType::E(_) => return Err(Error::Unsupported("type E".into())),
        };
        match_rows(expected, raw)
    }

    fn label_type_d(&self, n: u32, raw: Vec<Vec<i64>>, reps: &[Mat]) -> Result<CharacterTable> {
        let value = |b: &Bipartition| -> Vec<i64> {
            reps.iter()
                .map(|m| {
                    let (p, q) = m.signed_cycle_type().expect("signed permutation");
                    bipartition_character(b, &Partition::new(p), &Partition::new(q)).unwrap()
                })
                .collect()
        };
        let mut used = vec![false; raw.len()];
        let mut labels = Vec::new();
        let mut values = Vec::new();
        let all = bipartitions(n);
        let pos: HashMap<Bipartition, usize> = all.iter().cloned().enumerate().map(|(i, b)| (b, i)).collect();
        for b in &all {
            let swapped = Bipartition::new(b.right.clone(), b.left.clone());
            if pos[&swapped] < pos[b] {
                continue;
            }
            let v = value(b);
            if b.left == b.right {
                // restriction splits into two conjugate constituents
                let mut found = None;
                'outer: for i in 0..raw.len() {
                    for j in 0..raw.len() {
                        if i != j && !used[i] && !used[j] && raw[i].iter().zip(&raw[j]).map(|(x, y)| x + y).eq(v.iter().copied()) {
                            found = Some(if raw[i] > raw[j] { (i, j) } else { (j, i) });
                            break 'outer;
                        }
                    }
                }
                let (i, j) = found.ok_or_else(|| Error::Internal(format!("no split constituents for {b}")))?;
                used[i] = true;
                used[j] = true;
                labels.push(format!("{}+", b.label()));
                values.push(raw[i].clone());
                labels.push(format!("{}-", b.label()));
                values.push(raw[j].clone());
            } else {
                let i = (0..raw.len())
                    .find(|&i| !used[i] && raw[i] == v)
                    .ok_or_else(|| Error::Internal(format!("restriction of {b} is not irreducible")))?;
                used[i] = true;
                labels.push(b.label());
                values.push(v);
            }
        }
        if used.iter().any(|u| !u) {
            return Err(Error::Internal("unlabelled characters remain in type D".into()));
        }
        Ok(CharacterTable { labels, values })
    }

    /// Labels φ_{d,b}: degree and lowest power of q in the fake degree.
    /// Pairs sharing (d,b) are told apart by the value on the reflection in
    /// the first simple root: φ' takes the larger value.
    fn label_by_fake_degrees(&self, raw: Vec<Vec<i64>>) -> Result<CharacterTable> {
        let id_c = self.group.identity_class();
        let s0 = self.group.class_of_matrix(&self.group.gens()[0]).expect("generator in group");
        let mut keyed: Vec<((i64, usize), Vec<i64>)> = raw
            .into_iter()
            .map(|row| {
                let f = self.fake_degree(&row.iter().map(|&x| Rational::from_integer(x.into())).collect::<Vec<_>>());
                let b = f.num().valuation().unwrap_or(0);
                ((row[id_c], b), row)
            })
            .collect();
        keyed.sort_by(|a, b| a.0.cmp(&b.0).then_with(|| b.1[s0].cmp(&a.1[s0])).then_with(|| b.1.cmp(&a.1)));
        let mut labels = Vec::new();
        let mut values = Vec::new();
        let mut i = 0;
        while i < keyed.len() {
            let mut j = i;
            while j < keyed.len() && keyed[j].0 == keyed[i].0 {
                j += 1;
            }
            let (d, b) = keyed[i].0;
            let primes = ["", "'", "''"];
            if j - i > 2 {
                return Err(Error::Internal(format!("more than two characters share (d,b) = ({d},{b})")));
            }
            for (k, entry) in keyed[i..j].iter().enumerate() {
                let mark = if j - i == 1 { "" } else { primes[k + 1] };
                labels.push(format!("phi{d},{b}{mark}"));
                values.push(entry.1.clone());
            }
            i = j;
        }
        if self.spec.factors[0] == CartanType::G2 {
            // conventional order: the two linear characters, the pair, then the 2-dimensional ones
            let want = ["phi1,0", "phi1,6", "phi1,3'", "phi1,3''", "phi2,1", "phi2,2"];
            let mut out = CharacterTable { labels: Vec::new(), values: Vec::new() };
            for w in want {
                let k = labels
                    .iter()
                    .position(|l| l == w)
                    .ok_or_else(|| Error::Internal(format!("G2 character {w} not found")))?;
                out.labels.push(labels[k].clone());
                out.values.push(values[k].clone());
            }
            return Ok(out);
        }
        Ok(CharacterTable { labels, values })
    }

    fn tensor_table(&self) -> Result<CharacterTable> {
        let factors = self
            .spec
            .factors
            .iter()
            .map(|&t| WeylGroup::of_type(t))
            .collect::<Result<Vec<_>>>()?;
        let dims: Vec<usize> = factors.iter().map(|f| f.gram.len()).collect();
        // factor class of each block of each class representative
        let mut block_classes = Vec::new();
        for cl in self.group.classes() {
            let m = self.group.element(cl.rep);
            let mut off = 0;
            let mut v = Vec::new();
            for (f, &d) in factors.iter().zip(&dims) {
                let c = f
                    .group
                    .class_of_matrix(&m.block(off, d))
                    .ok_or_else(|| Error::Internal("block is not an element of its factor".into()))?;
                v.push(c);
                off += d;
            }
            block_classes.push(v);
        }
        let mut labels = vec![String::new()];
        let mut rows: Vec<Vec<usize>> = vec![Vec::new()];
        for f in &factors {
            let mut nl = Vec::new();
            let mut nr = Vec::new();
            for (l, r) in labels.iter().zip(&rows) {
                for (k, fl) in f.table.labels.iter().enumerate() {
                    nl.push(if l.is_empty() { fl.clone() } else { format!("{l} x {fl}") });
                    let mut rr = r.clone();
                    rr.push(k);
                    nr.push(rr);
                }
            }
            labels = nl;
            rows = nr;
        }
        let values = rows
            .iter()
            .map(|idx| {
                block_classes
                    .iter()
                    .map(|bc| idx.iter().zip(bc).zip(&factors).map(|((&k, &c), f)| f.table.values[k][c]).product())
                    .collect()
            })
            .collect();
        Ok(CharacterTable { labels, values })
    }

    pub fn spec(&self) -> &GroupSpec {
        &self.spec
    }

    pub fn rank(&self) -> usize {
        self.spec.rank()
    }

    pub fn order(&self) -> usize {
        self.group.order()
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn gram(&self) -> &[Vec<i64>] {
        &self.gram
    }

    pub fn simple_roots(&self) -> &[Vec<i64>] {
        &self.simple_roots
    }

    /// All roots, in ambient coordinates.
    pub fn roots(&self) -> Vec<Vec<i64>> {
        root_orbit(self.group.gens(), &self.simple_roots)
    }

    pub fn num_classes(&self) -> usize {
        self.group.classes().len()
    }

    pub fn class_size(&self, c: usize) -> usize {
        self.group.classes()[c].size()
    }

    pub fn class_sizes(&self) -> Vec<usize> {
        self.group.classes().iter().map(|c| c.size()).collect()
    }

    pub fn class_rep(&self, c: usize) -> &Mat {
        self.group.element(self.group.classes()[c].rep)
    }

    /// det(1 - q w) on the reflection representation.
    pub fn charpoly(&self, c: usize) -> &QPoly {
        &self.charpolys[c]
    }

    pub fn charpolys(&self) -> &[QPoly] {
        &self.charpolys
    }

    /// det(1 - w) on the reflection representation.
    pub fn det_one_minus(&self, c: usize) -> Rational {
        self.charpolys[c].eval(&Rational::one())
    }

    pub fn is_elliptic(&self, c: usize) -> bool {
        !self.det_one_minus(c).is_zero()
    }

    pub fn elliptic_classes(&self) -> Vec<usize> {
        (0..self.num_classes()).filter(|&c| self.is_elliptic(c)).collect()
    }

    pub fn class_of_matrix(&self, m: &Mat) -> Option<usize> {
        self.group.class_of_matrix(m)
    }

    pub fn identity_class(&self) -> usize {
        self.group.identity_class()
    }

    pub fn table(&self) -> &CharacterTable {
        &self.table
    }

    pub fn labels(&self) -> &[String] {
        &self.table.labels
    }

    pub fn num_irreps(&self) -> usize {
        self.table.labels.len()
    }

    pub fn irrep_index(&self, label: &str) -> Result<usize> {
        self.table
            .labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| Error::Missing(format!("no character labelled {label:?} in W({})", self.spec)))
    }

    pub fn degree(&self, i: usize) -> i64 {
        self.table.values[i][self.identity_class()]
    }

    /// Character i as a rational class function.
    pub fn character(&self, i: usize) -> ClassFunction {
        self.table.values[i].iter().map(|&x| Rational::from_integer(x.into())).collect()
    }

    pub fn character_by_label(&self, label: &str) -> Result<ClassFunction> {
        Ok(self.character(self.irrep_index(label)?))
    }

    pub fn trivial(&self) -> ClassFunction {
        vec![Rational::one(); self.num_classes()]
    }

    /// The sign character w ↦ det(w) on the reflection representation.
    pub fn sign(&self) -> ClassFunction {
        (0..self.num_classes())
            .map(|c| {
                let l = self.group.length(self.group.classes()[c].rep);
                Rational::from_integer(if l.is_multiple_of(2) { 1.into() } else { (-1).into() })
            })
            .collect()
    }

    /// Index of the irreducible equal to the given class function, if any.
    pub fn find_irrep(&self, f: &[Rational]) -> Option<usize> {
        (0..self.num_irreps()).find(|&i| self.character(i) == f)
    }

    /// ⟨a, b⟩ = (1/|W|) Σ_w a(w) b(w); all characters here are real.
    pub fn inner(&self, a: &[Rational], b: &[Rational]) -> Rational {
        let mut s = Rational::zero();
        for c in 0..self.num_classes() {
            s += &a[c] * &b[c] * Rational::from_integer(self.class_size(c).into());
        }
        s / Rational::from_integer(self.order().into())
    }

    /// Coordinates of a class function in the basis of irreducibles.
    pub fn decompose(&self, f: &[Rational]) -> Vec<Rational> {
        (0..self.num_irreps()).map(|i| self.inner(f, &self.character(i))).collect()
    }

    /// Class function Σ coords[i] χ_i.
    pub fn compose(&self, coords: &[Rational]) -> ClassFunction {
        let mut out = vec![Rational::zero(); self.num_classes()];
        for (i, a) in coords.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (c, o) in out.iter_mut().enumerate() {
                *o += a * Rational::from_integer(self.table.values[i][c].into());
            }
        }
        out
    }

    pub fn exponents(&self) -> Vec<u32> {
        self.spec.exponents()
    }

    /// P(q) = ∏ (q^{m_i+1} - 1)/(q - 1).
    pub fn poincare(&self) -> QPoly {
        poincare_from_exponents(&self.exponents())
    }

    /// Σ_w q^{ℓ(w)} by direct enumeration of lengths.
    pub fn length_generating_function(&self) -> QPoly {
        let mut counts: Vec<i64> = Vec::new();
        for i in 0..self.order() {
            let l = self.group.length(i) as usize;
            if counts.len() <= l {
                counts.resize(l + 1, 0);
            }
            counts[l] += 1;
        }
        QPoly::from_ints(&counts)
    }

    /// (1/|W|) Σ_w f(w) / det(1 - q w).
    pub fn molien(&self, f: &[Rational]) -> RatFunc {
        let terms: Vec<RatFunc> = (0..self.num_classes())
            .filter(|&c| !f[c].is_zero())
            .map(|c| {
                let w = &f[c] * Rational::from_integer(self.class_size(c).into());
                RatFunc::new(QPoly::constant(w), self.charpolys[c].clone()).expect("charpoly is nonzero")
            })
            .collect();
        RatFunc::sum(&terms).scale(&(Rational::one() / Rational::from_integer(self.order().into())))
    }

    /// Fake degree (1-q)^l P(q) (1/|W|) Σ_w f(w)/det(1-qw): graded multiplicity
    /// in the coinvariant algebra.
    pub fn fake_degree(&self, f: &[Rational]) -> RatFunc {
        let pre = &QPoly::from_ints(&[1, -1]).pow(self.rank() as u32) * &self.poincare();
        &RatFunc::from_poly(pre) * &self.molien(f)
    }

    /// Induce a class function from a subgroup realized in the same lattice.
    pub fn induce(&self, sub: &WeylGroup, f: &[Rational]) -> Result<ClassFunction> {
        let fusion = self.fusion(sub)?;
        let mut out = vec![Rational::zero(); self.num_classes()];
        for (d, &c) in fusion.iter().enumerate() {
            out[c] += &f[d] * Rational::from_integer(sub.class_size(d).into());
        }
        let idx = Rational::new(self.order().into(), sub.order().into());
        for (c, o) in out.iter_mut().enumerate() {
            *o = &*o * &idx / Rational::from_integer(self.class_size(c).into());
        }
        Ok(out)
    }

    pub fn restrict(&self, sub: &WeylGroup, f: &[Rational]) -> Result<ClassFunction> {
        Ok(self.fusion(sub)?.iter().map(|&c| f[c].clone()).collect())
    }

    /// Class of W containing each class of the subgroup.
    pub fn fusion(&self, sub: &WeylGroup) -> Result<Vec<usize>> {
        if sub.gram.len() != self.gram.len() {
            return Err(Error::Invalid("subgroup lives in a different lattice".into()));
        }
        (0..sub.num_classes())
            .map(|d| {
                self.class_of_matrix(sub.class_rep(d))
                    .ok_or_else(|| Error::Invalid("subgroup element not contained in the group".into()))
            })
            .collect()
    }

    /// Reflection subgroup generated by the given roots (a simple system);
    /// its type is identified from the Cartan matrix.
    pub fn reflection_subgroup(&self, roots: &[Vec<i64>]) -> Result<WeylGroup> {
        let (spec, order) = identify(&self.gram, roots)?;
        let ordered: Vec<Vec<i64>> = order.iter().map(|&i| roots[i].clone()).collect();
        WeylGroup::realize(&spec, &self.gram, &ordered)
    }

    /// Standard parabolic subgroup on the given simple-root indices.
    pub fn parabolic(&self, nodes: &[usize]) -> Result<WeylGroup> {
        let roots: Vec<Vec<i64>> = nodes.iter().map(|&i| self.simple_roots[i].clone()).collect();
        self.reflection_subgroup(&roots)
    }
}

pub fn poincare_from_exponents(exps: &[u32]) -> QPoly {
    exps.iter().fold(QPoly::one(), |acc, &m| &acc * &QPoly::from_ints(&vec![1; m as usize + 1]))
}

fn match_rows(expected: Vec<(String, Vec<i64>)>, raw: Vec<Vec<i64>>) -> Result<CharacterTable> {
    let mut used = vec![false; raw.len()];
    let mut labels = Vec::new();
    let mut values = Vec::new();
    for (label, row) in expected {
        let i = (0..raw.len())
            .find(|&i| !used[i] && raw[i] == row)
            .ok_or_else(|| Error::Internal(format!("character {label} does not appear in the computed table")))?;
        used[i] = true;
        labels.push(label);
        values.push(row);
    }
    if used.iter().any(|u| !u) {
        return Err(Error::Internal("computed table has unlabelled characters".into()));
    }
    Ok(CharacterTable { labels, values })
}
