//! Finite matrix groups: enumeration, conjugacy classes and the integer
//! character table by the Burnside–Dixon method modulo a large prime.

use std::collections::{HashMap, VecDeque};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::mat::Mat;
use crate::error::{Error, Result};
use crate::exactq::Rational;

pub const DEFAULT_BOUND: usize = 50_000;

#[derive(Clone, Debug)]
pub struct Class {
    /// Index of the representative in the element list.
    pub rep: usize,
    pub members: Vec<usize>,
}

impl Class {
    pub fn size(&self) -> usize {
        self.members.len()
    }
}

/// A finite group of integer matrices together with its Cayley-graph data.
#[derive(Clone, Debug)]
pub struct FiniteGroup {
    gens: Vec<Mat>,
    elements: Vec<Mat>,
    index: HashMap<Mat, usize>,
    lengths: Vec<u32>,
    parent: Vec<(usize, usize)>,
    inverse: Vec<usize>,
    classes: Vec<Class>,
    class_of: Vec<usize>,
}

impl FiniteGroup {
    /// Breadth-first enumeration from the identity; word lengths are with
    /// respect to `gens`.
    pub fn from_generators(dim: usize, gens: &[Mat], bound: usize) -> Result<FiniteGroup> {
        let id = Mat::identity(dim);
        let mut elements = vec![id];
        let mut index = HashMap::from([(id, 0usize)]);
        let mut lengths = vec![0u32];
        let mut parent: Vec<(usize, usize)> = vec![(0, 0)];
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            for (g, s) in gens.iter().enumerate() {
                let y = elements[i].mul(s);
                if index.contains_key(&y) {
                    continue;
                }
                if elements.len() >= bound {
                    return Err(Error::Bound(format!("group exceeds the enumeration bound {bound}")));
                }
                index.insert(y, elements.len());
                elements.push(y);
                lengths.push(lengths[i] + 1);
                parent.push((i, g));
                queue.push_back(elements.len() - 1);
            }
        }
        // inverse of x·s is s⁻¹·x⁻¹
        let gen_inv: Vec<Mat> = gens.iter().map(|s| s.pow(s.order() - 1)).collect();
        let mut inverse = vec![0usize; elements.len()];
        for i in 1..elements.len() {
            let (p, g) = parent[i];
            inverse[i] = index[&gen_inv[g].mul(&elements[inverse[p]])];
        }
        let mut grp = FiniteGroup {
            gens: gens.to_vec(),
            elements,
            index,
            lengths,
            parent,
            inverse,
            classes: Vec::new(),
            class_of: Vec::new(),
        };
        grp.compute_classes();
        Ok(grp)
    }

    fn compute_classes(&mut self) {
        let n = self.elements.len();
        let gen_inv: Vec<Mat> = self.gens.iter().map(|s| s.pow(s.order() - 1)).collect();
        let mut class_of = vec![usize::MAX; n];
        let mut classes = Vec::new();
        for start in 0..n {
            if class_of[start] != usize::MAX {
                continue;
            }
            let c = classes.len();
            class_of[start] = c;
            let mut members = vec![start];
            let mut k = 0;
            while k < members.len() {
                let x = self.elements[members[k]];
                for (s, si) in self.gens.iter().zip(&gen_inv) {
                    let y = self.index[&si.mul(&x).mul(s)];
                    if class_of[y] == usize::MAX {
                        class_of[y] = c;
                        members.push(y);
                    }
                }
                k += 1;
            }
            members.sort_unstable();
            let rep = *members
                .iter()
                .min_by_key(|&&i| (self.lengths[i], self.elements[i]))
                .expect("nonempty class");
            classes.push(Class { rep, members });
        }
        self.classes = classes;
        self.class_of = class_of;
    }

    /// Reorder classes by a key computed from each class; ties are broken by
    /// the representative.
    pub fn sort_classes<K: Ord>(&mut self, key: impl Fn(&Class, &Mat) -> K) {
        let mut order: Vec<usize> = (0..self.classes.len()).collect();
        order.sort_by(|&a, &b| {
            let (ca, cb) = (&self.classes[a], &self.classes[b]);
            let (ma, mb) = (&self.elements[ca.rep], &self.elements[cb.rep]);
            key(ca, ma).cmp(&key(cb, mb)).then_with(|| ma.cmp(mb))
        });
        let old = std::mem::take(&mut self.classes);
        let mut slots: Vec<Option<Class>> = old.into_iter().map(Some).collect();
        self.classes = order.iter().map(|&i| slots[i].take().expect("each class once")).collect();
        for (c, cl) in self.classes.iter().enumerate() {
            for &m in &cl.members {
                self.class_of[m] = c;
            }
        }
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn gens(&self) -> &[Mat] {
        &self.gens
    }

    pub fn elements(&self) -> &[Mat] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Mat {
        &self.elements[i]
    }

    pub fn index_of(&self, m: &Mat) -> Option<usize> {
        self.index.get(m).copied()
    }

    pub fn length(&self, i: usize) -> u32 {
        self.lengths[i]
    }

    /// BFS tree edge: element i = parent · gens[g]. None for the identity.
    pub fn parent(&self, i: usize) -> Option<(usize, usize)> {
        (i > 0).then(|| self.parent[i])
    }

    pub fn inverse(&self, i: usize) -> usize {
        self.inverse[i]
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.index[&self.elements[a].mul(&self.elements[b])]
    }

    pub fn classes(&self) -> &[Class] {
        &self.classes
    }

    pub fn class_of(&self, i: usize) -> usize {
        self.class_of[i]
    }

    /// Class containing the given matrix, if it lies in the group.
    pub fn class_of_matrix(&self, m: &Mat) -> Option<usize> {
        self.index_of(m).map(|i| self.class_of[i])
    }

    pub fn identity_class(&self) -> usize {
        self.class_of[0]
    }

    pub fn is_abelian(&self) -> bool {
        self.classes.len() == self.elements.len()
    }

    /// Elements commuting with element i, as a new group (generated by all of them).
    pub fn centralizer(&self, i: usize) -> Result<FiniteGroup> {
        let x = self.elements[i];
        let elems: Vec<Mat> = self.elements.iter().copied().filter(|g| g.mul(&x) == x.mul(g)).collect();
        let dim = x.dim();
        FiniteGroup::from_generators(dim, &elems, self.order() + 1)
    }

    /// Irreducible characters with rational integer values, one row per
    /// character, columns in class order, trivial character first.
    pub fn integer_character_table(&self) -> Result<Vec<Vec<i64>>> {
        dixon_table(self)
    }
}

const P: u64 = (1 << 61) - 1;

fn addm(a: u64, b: u64) -> u64 {
    let s = a + b;
    if s >= P {
        s - P
    } else {
        s
    }
}

fn subm(a: u64, b: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + P - b
    }
}

fn mulm(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % P as u128) as u64
}

fn powm(mut a: u64, mut e: u64) -> u64 {
    let mut r = 1;
    while e > 0 {
        if e & 1 == 1 {
            r = mulm(r, a);
        }
        a = mulm(a, a);
        e >>= 1;
    }
    r
}

fn invm(a: u64) -> u64 {
    assert!(a != 0, "inverse of zero mod p");
    powm(a, P - 2)
}

fn from_i64(x: i64) -> u64 {
    if x >= 0 {
        x as u64 % P
    } else {
        P - ((-x) as u64 % P)
    }
}

fn lift(x: u64) -> i64 {
    if x > P / 2 {
        -((P - x) as i64)
    } else {
        x as i64
    }
}

/// Row-reduce; returns the nonzero rows in reduced echelon form together
/// with their pivot columns.
fn rref(mut rows: Vec<Vec<u64>>) -> (Vec<Vec<u64>>, Vec<usize>) {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(piv) = (r..rows.len()).find(|&i| rows[i][c] != 0) else {
            continue;
        };
        rows.swap(r, piv);
        let inv = invm(rows[r][c]);
        for x in rows[r].iter_mut() {
            *x = mulm(*x, inv);
        }
        for i in 0..rows.len() {
            if i != r && rows[i][c] != 0 {
                let f = rows[i][c];
                for k in 0..ncols {
                    let t = mulm(f, rows[r][k]);
                    rows[i][k] = subm(rows[i][k], t);
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    (rows, pivots)
}

/// Basis of the right nullspace {x : A x = 0} of a square matrix.
fn nullspace(a: &[Vec<u64>]) -> Vec<Vec<u64>> {
    let n = a.len();
    let (rows, pivots) = rref(a.to_vec());
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![0u64; n];
            v[f] = 1;
            for (row, &pc) in rows.iter().zip(&pivots) {
                v[pc] = subm(0, row[f]);
            }
            v
        })
        .collect()
}

/// Coefficients (constant term first) of det(λ - A) mod p.
fn charpoly_mod(a: &[Vec<u64>]) -> Vec<u64> {
    let d = a.len();
    let mut c = vec![0u64; d + 1];
    c[d] = 1;
    let mut mk = vec![vec![0u64; d]; d];
    for k in 1..=d {
        let mut next = vec![vec![0u64; d]; d];
        for i in 0..d {
            for l in 0..d {
                if a[i][l] == 0 {
                    continue;
                }
                for j in 0..d {
                    next[i][j] = addm(next[i][j], mulm(a[i][l], mk[l][j]));
                }
            }
            next[i][i] = addm(next[i][i], c[d - k + 1]);
        }
        mk = next;
        let mut tr = 0;
        for i in 0..d {
            for j in 0..d {
                tr = addm(tr, mulm(a[i][j], mk[j][i]));
            }
        }
        c[d - k] = subm(0, mulm(tr, invm(k as u64)));
    }
    c
}

fn eval_mod(c: &[u64], x: u64) -> u64 {
    c.iter().rev().fold(0, |acc, &k| addm(mulm(acc, x), k))
}

fn dixon_table(g: &FiniteGroup) -> Result<Vec<Vec<i64>>> {
    let classes = g.classes();
    let r = classes.len();
    let id_c = g.identity_class();
    let inv_class: Vec<usize> = classes.iter().map(|c| g.class_of(g.inverse(c.rep))).collect();

    // (M_j)_{k,l} = #{x ∈ C_j : x⁻¹ z_l ∈ C_k}
    let class_matrix = |j: usize| -> Vec<Vec<u64>> {
        let mut m = vec![vec![0u64; r]; r];
        for &x in &classes[j].members {
            let xi = g.inverse(x);
            for (l, cl) in classes.iter().enumerate() {
                let k = g.class_of(g.mul(xi, cl.rep));
                m[k][l] += 1;
            }
        }
        m
    };

    let unit = |i: usize| -> Vec<u64> { (0..r).map(|k| u64::from(k == i)).collect() };
    let mut spaces: Vec<Vec<Vec<u64>>> = vec![(0..r).map(unit).collect()];
    let mut order: Vec<usize> = (0..r).filter(|&j| j != id_c).collect();
    order.sort_by_key(|&j| classes[j].size());
    for &j in &order {
        if spaces.iter().all(|s| s.len() == 1) {
            break;
        }
        let m = class_matrix(j);
        let bound = classes[j].size() as i64;
        let mut next = Vec::new();
        for space in spaces {
            if space.len() == 1 {
                next.push(space);
                continue;
            }
            let (basis, pivots) = rref(space);
            let d = basis.len();
            // images M b_i expressed in the basis through the pivot coordinates
            let mut a = vec![vec![0u64; d]; d];
            for (i, b) in basis.iter().enumerate() {
                for (k, &pk) in pivots.iter().enumerate() {
                    let mut s = 0;
                    for (l, &bl) in b.iter().enumerate() {
                        if bl != 0 && m[pk][l] != 0 {
                            s = addm(s, mulm(m[pk][l], bl));
                        }
                    }
                    a[k][i] = s;
                }
            }
            let cp = charpoly_mod(&a);
            let mut found = 0;
            let mut pieces = Vec::new();
            for lam in -bound..=bound {
                let lm = from_i64(lam);
                if eval_mod(&cp, lm) != 0 {
                    continue;
                }
                let mut shifted = a.clone();
                for (i, row) in shifted.iter_mut().enumerate() {
                    row[i] = subm(row[i], lm);
                }
                let ns = nullspace(&shifted);
                if ns.is_empty() {
                    continue;
                }
                found += ns.len();
                let vecs: Vec<Vec<u64>> = ns
                    .iter()
                    .map(|c| {
                        let mut v = vec![0u64; r];
                        for (ci, b) in c.iter().zip(&basis) {
                            for (vk, bk) in v.iter_mut().zip(b) {
                                *vk = addm(*vk, mulm(*ci, *bk));
                            }
                        }
                        v
                    })
                    .collect();
                pieces.push(vecs);
                if found == d {
                    break;
                }
            }
            if found != d {
                return Err(Error::Internal(format!(
                    "class matrix {j} has eigenvalues outside the integers; table is not rational"
                )));
            }
            next.extend(pieces);
        }
        spaces = next;
    }
    if spaces.iter().any(|s| s.len() != 1) {
        return Err(Error::Internal("class matrices failed to separate the characters".into()));
    }

    let order_g = BigInt::from(g.order());
    let mut table = Vec::with_capacity(r);
    for space in spaces {
        let v = &space[0];
        let scale = invm(v[id_c]);
        let omega: Vec<i64> = v.iter().map(|&x| lift(mulm(x, scale))).collect();
        let mut s = Rational::zero();
        for k in 0..r {
            s += Rational::new(BigInt::from(omega[k]) * BigInt::from(omega[inv_class[k]]), classes[k].size().into());
        }
        let deg2 = Rational::from_integer(order_g.clone()) / s;
        if !deg2.is_integer() || deg2.is_negative() {
            return Err(Error::Internal(format!("non-integral degree squared {deg2}")));
        }
        let d2 = deg2.to_integer();
        let deg = d2.sqrt();
        if &deg * &deg != d2 {
            return Err(Error::Internal(format!("degree squared {d2} is not a square")));
        }
        let deg: i64 = deg.try_into().map_err(|_| Error::Internal("degree overflow".into()))?;
        let mut row = Vec::with_capacity(r);
        for k in 0..r {
            let num = omega[k] as i128 * deg as i128;
            let size = classes[k].size() as i128;
            if num % size != 0 {
                return Err(Error::Internal("character value is not an integer".into()));
            }
            row.push((num / size) as i64);
        }
        table.push(row);
    }
    verify_orthogonality(g, &table, &inv_class)?;
    table.sort_by(|a, b| a[id_c].cmp(&b[id_c]).then_with(|| b.cmp(a)));
    Ok(table)
}

fn verify_orthogonality(g: &FiniteGroup, table: &[Vec<i64>], inv_class: &[usize]) -> Result<()> {
    let sizes: Vec<i128> = g.classes().iter().map(|c| c.size() as i128).collect();
    let n = g.order() as i128;
    for (i, a) in table.iter().enumerate() {
        for (j, b) in table.iter().enumerate() {
            let s: i128 = (0..sizes.len()).map(|k| sizes[k] * a[k] as i128 * b[inv_class[k]] as i128).sum();
            if s != if i == j { n } else { 0 } {
                return Err(Error::Internal(format!("row orthogonality fails for characters {i}, {j}")));
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(n: usize, img: &[usize]) -> Mat {
        let mut m = Mat::zero(n);
        for (j, &i) in img.iter().enumerate() {
            m.set(i, j, 1);
        }
        m
    }

    #[test]
    fn s4_enumeration_and_table() {
        let gens = [perm(4, &[1, 0, 2, 3]), perm(4, &[0, 2, 1, 3]), perm(4, &[0, 1, 3, 2])];
        let g = FiniteGroup::from_generators(4, &gens, DEFAULT_BOUND).unwrap();
        assert_eq!(g.order(), 24);
        assert_eq!(g.classes().len(), 5);
        let t = g.integer_character_table().unwrap();
        let degs: Vec<i64> = t.iter().map(|r| r[g.identity_class()]).collect();
        assert_eq!(degs, vec![1, 1, 2, 3, 3]);
        // longest element of S4 has length 6
        assert_eq!((0..24).map(|i| g.length(i)).max(), Some(6));
        for i in 0..24 {
            assert_eq!(g.mul(i, g.inverse(i)), 0);
        }
    }

    #[test]
    fn bound_is_enforced() {
        let gens = [perm(4, &[1, 0, 2, 3]), perm(4, &[1, 2, 3, 0])];
        assert!(matches!(FiniteGroup::from_generators(4, &gens, 10), Err(Error::Bound(_))));
    }

    #[test]
    fn cyclic_group_is_not_rational() {
        let g = FiniteGroup::from_generators(3, &[perm(3, &[1, 2, 0])], DEFAULT_BOUND).unwrap();
        assert!(g.is_abelian());
        assert!(g.integer_character_table().is_err());
    }
}
