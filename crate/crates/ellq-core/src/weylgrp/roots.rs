//! Roots in an ambient lattice with an integer Gram matrix: reflections,
//! root enumeration and Dynkin type identification.

use std::collections::BTreeSet;

use super::cartan::{CartanType, GroupSpec};
use super::mat::Mat;
use crate::error::{Error, Result};

pub fn form(g: &[Vec<i64>], x: &[i64], y: &[i64]) -> i64 {
    let mut s = 0;
    for i in 0..x.len() {
        if x[i] == 0 {
            continue;
        }
        for j in 0..y.len() {
            s += x[i] * g[i][j] * y[j];
        }
    }
    s
}

/// Matrix of v ↦ v - 2(v,γ)/(γ,γ) γ in ambient coordinates.
pub fn reflection(g: &[Vec<i64>], gamma: &[i64]) -> Result<Mat> {
    let d = gamma.len();
    let gg = form(g, gamma, gamma);
    if gg <= 0 {
        return Err(Error::Invalid(format!("{gamma:?} is not a root of positive length")));
    }
    let mut m = Mat::identity(d);
    for j in 0..d {
        let ej: Vec<i64> = (0..d).map(|i| i64::from(i == j)).collect();
        let num = 2 * form(g, &ej, gamma);
        if num % gg != 0 {
            return Err(Error::Invalid(format!("reflection in {gamma:?} is not integral")));
        }
        let c = num / gg;
        for i in 0..d {
            m.set(i, j, m.get(i, j) - c * gamma[i]);
        }
    }
    Ok(m)
}

/// All roots: the orbit of the simple roots under the reflections.
pub fn root_orbit(gens: &[Mat], simple: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let mut seen: BTreeSet<Vec<i64>> = simple.iter().cloned().collect();
    let mut stack: Vec<Vec<i64>> = simple.to_vec();
    while let Some(v) = stack.pop() {
        for s in gens {
            let w = s.apply(&v);
            if seen.insert(w.clone()) {
                stack.push(w);
            }
        }
    }
    seen.into_iter().collect()
}

/// Cartan integers of a list of roots.
pub fn cartan_of(g: &[Vec<i64>], roots: &[Vec<i64>]) -> Vec<Vec<i64>> {
    roots
        .iter()
        .map(|a| roots.iter().map(|b| 2 * form(g, a, b) / form(g, a, a)).collect())
        .collect()
}

/// Identify the Dynkin type of a simple system. Returns the product type
/// and the permutation of the input roots into Bourbaki order (components
/// ordered by their first appearance).
pub fn identify(g: &[Vec<i64>], roots: &[Vec<i64>]) -> Result<(GroupSpec, Vec<usize>)> {
    let k = roots.len();
    let a = cartan_of(g, roots);
    let norm: Vec<i64> = roots.iter().map(|r| form(g, r, r)).collect();
    for i in 0..k {
        for j in 0..k {
            if i != j && a[i][j] > 0 {
                return Err(Error::Invalid("roots do not form a simple system (positive Cartan entry)".into()));
            }
        }
    }
    let adj = |i: usize| -> Vec<usize> { (0..k).filter(|&j| j != i && a[i][j] != 0).collect() };
    let bond = |i: usize, j: usize| a[i][j] * a[j][i];
    let mut seen = vec![false; k];
    let mut factors = Vec::new();
    let mut order = Vec::new();
    for start in 0..k {
        if seen[start] {
            continue;
        }
        let mut comp = vec![start];
        seen[start] = true;
        let mut idx = 0;
        while idx < comp.len() {
            for j in adj(comp[idx]) {
                if !seen[j] {
                    seen[j] = true;
                    comp.push(j);
                }
            }
            idx += 1;
        }
        comp.sort_unstable();
        let n = comp.len();
        let branch: Vec<usize> = comp.iter().copied().filter(|&i| adj(i).len() >= 3).collect();
        if n == 1 {
            factors.push(CartanType::A(1));
            order.push(comp[0]);
            continue;
        }
        if let Some(&b) = branch.first() {
            if branch.len() > 1 || adj(b).len() > 3 || comp.iter().any(|&i| comp.iter().any(|&j| i != j && bond(i, j) > 1)) {
                return Err(Error::Unsupported("unrecognized simply-laced diagram".into()));
            }
            // legs hanging off the branch node
            let mut legs: Vec<Vec<usize>> = adj(b)
                .into_iter()
                .map(|first| {
                    let mut leg = vec![first];
                    let mut prev = b;
                    loop {
                        let cur = *leg.last().unwrap();
                        let nxt: Vec<usize> = adj(cur).into_iter().filter(|&x| x != prev).collect();
                        if nxt.is_empty() {
                            break;
                        }
                        prev = cur;
                        leg.push(nxt[0]);
                    }
                    leg
                })
                .collect();
            legs.sort_by_key(|l| std::cmp::Reverse(l.len()));
            if legs[1].len() != 1 || legs[2].len() != 1 {
                return Err(Error::Unsupported("type E reflection subgroups are not realized".into()));
            }
            let mut o: Vec<usize> = legs[0].iter().rev().copied().collect();
            o.push(b);
            o.push(legs[1][0]);
            o.push(legs[2][0]);
            factors.push(CartanType::D(n as u32));
            order.extend(o);
            continue;
        }
        // a path: walk from an end
        let ends: Vec<usize> = comp.iter().copied().filter(|&i| adj(i).len() == 1).collect();
        let walk = |from: usize| -> Vec<usize> {
            let mut p = vec![from];
            let mut prev = usize::MAX;
            loop {
                let cur = *p.last().unwrap();
                let nxt: Vec<usize> = adj(cur).into_iter().filter(|&x| x != prev).collect();
                if nxt.is_empty() {
                    break;
                }
                prev = cur;
                p.push(nxt[0]);
            }
            p
        };
        let path = walk(ends[0]);
        let bonds: Vec<i64> = path.windows(2).map(|w| bond(w[0], w[1])).collect();
        let multi: Vec<usize> = (0..bonds.len()).filter(|&i| bonds[i] > 1).collect();
        let (t, p) = match multi.as_slice() {
            [] => (CartanType::A(n as u32), path),
            [i] if bonds[*i] == 3 => {
                // G2: short root first
                let p = if norm[path[0]] < norm[path[1]] { path } else { path.into_iter().rev().collect() };
                (CartanType::G2, p)
            }
            [i] if bonds[*i] == 2 && n == 4 && (*i == 1) => {
                let p: Vec<usize> = if norm[path[0]] > norm[path[3]] { path } else { path.into_iter().rev().collect() };
                (CartanType::F4, p)
            }
            [i] if bonds[*i] == 2 && (*i == 0 || *i == bonds.len() - 1) => {
                let p: Vec<usize> = if *i == bonds.len() - 1 && n > 2 { path } else if n > 2 { path.into_iter().rev().collect() } else {
                    // rank two: long root first so the last node is short
                    if norm[path[0]] > norm[path[1]] { path } else { path.into_iter().rev().collect() }
                };
                let last = p[n - 1];
                let prev = p[n - 2];
                let t = if norm[last] < norm[prev] { CartanType::B(n as u32) } else { CartanType::C(n as u32) };
                (t, p)
            }
            _ => return Err(Error::Unsupported("unrecognized Dynkin diagram".into())),
        };
        factors.push(t);
        order.extend(p);
    }
    Ok((GroupSpec::new(factors), order))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn g2_roots() {
        let t = CartanType::G2;
        let (g, simple) = t.realization().unwrap();
        let gens: Vec<Mat> = simple.iter().map(|r| reflection(&g, r).unwrap()).collect();
        let roots = root_orbit(&gens, &simple);
        assert_eq!(roots.len(), 12);
        // s_α(β) = β + 3α
        assert_eq!(gens[0].apply(&simple[1]), vec![3, 1]);
        assert_eq!(gens[1].apply(&simple[0]), vec![1, 1]);
    }

    #[test]
    fn identify_types() {
        for t in [CartanType::A(3), CartanType::B(3), CartanType::C(3), CartanType::D(4), CartanType::F4, CartanType::G2, CartanType::B(2)] {
            let g = t.gram();
            let simple: Vec<Vec<i64>> = (0..t.rank()).map(|i| (0..t.rank()).map(|j| i64::from(i == j)).collect()).collect();
            let mut rev = simple.clone();
            rev.reverse();
            let (spec, order) = identify(&g, &rev).unwrap();
            assert_eq!(spec.factors, vec![t], "{t}");
            let reordered: Vec<Vec<i64>> = order.iter().map(|&i| rev[i].clone()).collect();
            assert_eq!(cartan_of(&g, &reordered), t.cartan_matrix(), "{t}");
        }
    }
}
