//! Partitions, bipartitions, hooks and contents.

use std::fmt;

use crate::error::{Error, Result};

/// Weakly decreasing list of positive parts.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    /// Rejects input that is not already weakly decreasing and positive.
    pub fn from_parts(parts: &[u32]) -> Result<Self> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Invalid(format!("{parts:?} is not a weakly decreasing list of positive parts")));
        }
        Ok(Partition { parts: parts.to_vec() })
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let first = self.part(0);
        let parts = (1..=first).map(|j| self.parts.iter().filter(|&&p| p >= j).count() as u32).collect();
        Partition { parts }
    }

    pub fn is_self_conjugate(&self) -> bool {
        *self == self.conjugate()
    }

    /// Cells (i, j), 0-based row and column.
    pub fn cells(&self) -> Vec<(u32, u32)> {
        let mut out = Vec::with_capacity(self.size() as usize);
        for (i, &p) in self.parts.iter().enumerate() {
            for j in 0..p {
                out.push((i as u32, j));
            }
        }
        out
    }

    /// Hook length of every cell, in row-major order.
    pub fn hook_lengths(&self) -> Vec<((u32, u32), u32)> {
        let conj = self.conjugate();
        self.cells()
            .into_iter()
            .map(|(i, j)| {
                let arm = self.part(i as usize) - j - 1;
                let leg = conj.part(j as usize) - i - 1;
                ((i, j), arm + leg + 1)
            })
            .collect()
    }

    /// Contents c = j - i per cell, row-major.
    pub fn contents(&self) -> Vec<i32> {
        self.cells().into_iter().map(|(i, j)| j as i32 - i as i32).collect()
    }

    /// n(λ) = Σ (i-1) λ_i
    pub fn n(&self) -> u32 {
        self.parts.iter().enumerate().map(|(i, &p)| i as u32 * p).sum()
    }

    /// Number of permutations with this cycle type.
    pub fn class_size(&self) -> u128 {
        let n = self.size() as u128;
        factorial(n) / self.centralizer_order()
    }

    /// Order of the centralizer in S_n of an element of this cycle type.
    pub fn centralizer_order(&self) -> u128 {
        let mut z: u128 = 1;
        let mut i = 0;
        while i < self.parts.len() {
            let p = self.parts[i];
            let mut mult = 0u128;
            while i < self.parts.len() && self.parts[i] == p {
                mult += 1;
                i += 1;
            }
            z *= (p as u128).pow(mult as u32) * factorial(mult);
        }
        z
    }

    /// Sign of a permutation of this cycle type.
    pub fn sign(&self) -> i64 {
        let even_cycles = self.parts.iter().filter(|&&p| p % 2 == 0).count();
        if even_cycles % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// Compact label: parts concatenated when all are < 10, else comma separated.
    pub fn label(&self) -> String {
        if self.parts.iter().all(|&p| p < 10) {
            self.parts.iter().map(|p| p.to_string()).collect()
        } else {
            self.parts.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(",")
        }
    }

    /// Inverse of [`Partition::label`]; also accepts comma separated input.
    pub fn parse(s: &str) -> Result<Partition> {
        let s = s.trim();
        if s.is_empty() || s == "-" {
            return Ok(Partition::empty());
        }
        let parts: Vec<u32> = if s.contains(',') {
            s.split(',')
                .map(|t| t.trim().parse::<u32>().map_err(|_| Error::Parse(format!("bad partition {s:?}"))))
                .collect::<Result<_>>()?
        } else {
            s.chars()
                .map(|c| c.to_digit(10).ok_or_else(|| Error::Parse(format!("bad partition {s:?}"))))
                .collect::<Result<_>>()?
        };
        Partition::from_parts(&parts)
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.parts.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(","))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

pub fn factorial(n: u128) -> u128 {
    (1..=n).product()
}

/// All partitions of n, in reverse lexicographic order ((n) first, (1^n) last).
pub fn partitions(n: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(rem: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rem == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        for p in (1..=rem.min(max)).rev() {
            cur.push(p);
            rec(rem - p, p, cur, out);
            cur.pop();
        }
    }
    rec(n, n, &mut cur, &mut out);
    out
}

/// Ordered pair of partitions (λ, μ), written λ.μ
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Bipartition {
    pub left: Partition,
    pub right: Partition,
}

impl Bipartition {
    pub fn new(left: Partition, right: Partition) -> Self {
        Bipartition { left, right }
    }

    pub fn size(&self) -> u32 {
        self.left.size() + self.right.size()
    }

    /// Twist by the sign character of W(B_n): (λ, μ) ↦ (μᵗ, λᵗ).
    pub fn sign_twist(&self) -> Bipartition {
        Bipartition { left: self.right.conjugate(), right: self.left.conjugate() }
    }

    pub fn label(&self) -> String {
        format!("{}.{}", self.left.label(), self.right.label())
    }

    pub fn parse(s: &str) -> Result<Bipartition> {
        let (l, r) = s
            .split_once('.')
            .ok_or_else(|| Error::Parse(format!("bipartition {s:?} needs the form left.right")))?;
        Ok(Bipartition { left: Partition::parse(l)?, right: Partition::parse(r)? })
    }
}

impl fmt::Debug for Bipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}x{:?}", self.left, self.right)
    }
}

impl fmt::Display for Bipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

/// All bipartitions of total size n; left part of size n first.
pub fn bipartitions(n: u32) -> Vec<Bipartition> {
    let mut out = Vec::new();
    for k in (0..=n).rev() {
        for l in partitions(k) {
            for r in partitions(n - k) {
                out.push(Bipartition::new(l.clone(), r));
            }
        }
    }
    out
}
