//! Distinguished unipotent classes of classical groups, their Springer
//! symbols, and the component-group representations read off from them.

use std::fmt;

use super::partition::Partition;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ClassicalKind {
    B,
    C,
    D,
}

impl ClassicalKind {
    pub fn parse(s: &str) -> Result<Self> {
        match s.trim() {
            "B" | "b" => Ok(ClassicalKind::B),
            "C" | "c" => Ok(ClassicalKind::C),
            "D" | "d" => Ok(ClassicalKind::D),
            other => Err(Error::Parse(format!("unknown classical type {other:?}"))),
        }
    }
}

fn distinct_parts(total: u32, allowed: impl Fn(u32) -> bool) -> Vec<Partition> {
    fn rec(rem: u32, max: u32, allowed: &dyn Fn(u32) -> bool, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rem == 0 {
            out.push(Partition::new(cur.clone()));
            return;
        }
        for p in (1..=rem.min(max)).rev() {
            if allowed(p) {
                cur.push(p);
                rec(rem - p, p - 1, allowed, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(total, total, &allowed, &mut Vec::new(), &mut out);
    out
}

/// Distinguished unipotent classes of Sp(2n), SO(2n+1) or SO(2n).
pub fn distinguished_partitions(kind: ClassicalKind, n: u32) -> Vec<Partition> {
    match kind {
        ClassicalKind::C => distinct_parts(2 * n, |p| p % 2 == 0),
        ClassicalKind::B => distinct_parts(2 * n + 1, |p| p % 2 == 1),
        ClassicalKind::D => distinct_parts(2 * n, |p| p % 2 == 1)
            .into_iter()
            .filter(|u| u.len() % 2 == 0)
            .collect(),
    }
}

pub fn is_distinguished(kind: ClassicalKind, u: &Partition) -> bool {
    let parts = u.parts();
    let distinct = parts.windows(2).all(|w| w[0] > w[1]);
    distinct
        && match kind {
            ClassicalKind::C => parts.iter().all(|p| p % 2 == 0),
            ClassicalKind::B => parts.iter().all(|p| p % 2 == 1) && u.size() % 2 == 1,
            ClassicalKind::D => parts.iter().all(|p| p % 2 == 1) && parts.len().is_multiple_of(2),
        }
}

/// Two-row symbol with strictly increasing rows.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SSymbol {
    pub top: Vec<u32>,
    pub bottom: Vec<u32>,
}

impl SSymbol {
    pub fn new(mut top: Vec<u32>, mut bottom: Vec<u32>) -> Result<Self> {
        top.sort_unstable();
        bottom.sort_unstable();
        if top.windows(2).any(|w| w[0] == w[1]) || bottom.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::Invalid("symbol rows must be strictly increasing".into()));
        }
        Ok(SSymbol { top, bottom })
    }

    /// All entries, sorted.
    pub fn entries(&self) -> Vec<u32> {
        let mut e: Vec<u32> = self.top.iter().chain(&self.bottom).copied().collect();
        e.sort_unstable();
        e
    }

    pub fn rows_strictly_increasing(&self) -> bool {
        self.top.windows(2).all(|w| w[0] < w[1]) && self.bottom.windows(2).all(|w| w[0] < w[1])
    }

    fn in_top(&self, x: u32) -> bool {
        self.top.contains(&x)
    }
}

impl fmt::Display for SSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let row = |r: &[u32]| r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ");
        write!(f, "({} / {})", row(&self.top), row(&self.bottom))
    }
}

/// The sequence a_1 < a_2 < ... attached to a distinguished class, with the
/// leading zero already inserted in type C when needed.
pub fn symbol_sequence(kind: ClassicalKind, u: &Partition) -> Result<Vec<u32>> {
    if !is_distinguished(kind, u) {
        return Err(Error::Invalid(format!("{u:?} is not distinguished in type {kind:?}")));
    }
    let mut parts: Vec<u32> = u.parts().to_vec();
    parts.reverse();
    match kind {
        ClassicalKind::C => {
            let mut a: Vec<u32> = parts.iter().map(|p| p / 2).collect();
            if a.len().is_multiple_of(2) {
                a.insert(0, 0);
            }
            Ok(a)
        }
        ClassicalKind::D => Ok(parts.iter().map(|p| (p - 1) / 2).collect()),
        ClassicalKind::B => Err(Error::Unsupported("symbols are only built for types C and D".into())),
    }
}

/// Symbol of the trivial representation of the component group: the entries
/// b_j = a_j + (j-1) alternate between rows, b_1 on top.
pub fn triv_symbol(kind: ClassicalKind, u: &Partition) -> Result<SSymbol> {
    let a = symbol_sequence(kind, u)?;
    let b: Vec<u32> = a.iter().enumerate().map(|(j, &x)| x + j as u32).collect();
    let top = b.iter().step_by(2).copied().collect();
    let bottom = b.iter().skip(1).step_by(2).copied().collect();
    SSymbol::new(top, bottom)
}

/// Representation of (Z/2)^m: position j carries the sign character when true.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ComponentRep {
    pub signs: Vec<bool>,
}

impl ComponentRep {
    pub fn is_trivial(&self) -> bool {
        self.signs.iter().all(|s| !s)
    }

    pub fn sign_positions(&self) -> Vec<usize> {
        self.signs.iter().enumerate().filter(|(_, &s)| s).map(|(j, _)| j).collect()
    }

    /// Value (±1) on the group element g ∈ (Z/2)^m.
    pub fn eval(&self, g: &[bool]) -> i32 {
        let odd = self.signs.iter().zip(g).filter(|(&s, &x)| s && x).count() % 2 == 1;
        if odd {
            -1
        } else {
            1
        }
    }
}

pub fn symbol_to_component_rep(sym: &SSymbol, triv: &SSymbol) -> Result<ComponentRep> {
    let b = triv.entries();
    if sym.entries() != b {
        return Err(Error::Invalid(format!("symbols {sym} and {triv} have different entries")));
    }
    Ok(ComponentRep { signs: b.iter().map(|&x| sym.in_top(x) != triv.in_top(x)).collect() })
}

/// Swap b_j and b_{j+1} (0-based j) between the two rows. In type D the
/// result is renormalized so that b_1 stays in the top row.
pub fn flip_adjacent(kind: ClassicalKind, triv: &SSymbol, j: usize) -> Result<SSymbol> {
    let b = triv.entries();
    if j + 1 >= b.len() {
        return Err(Error::Bound(format!("no adjacent pair at position {j} in {triv}")));
    }
    let (x, y) = (b[j], b[j + 1]);
    let mv = |v: u32| if v == x { y } else if v == y { x } else { v };
    let mut s = SSymbol::new(
        triv.top.iter().map(|&v| mv(v)).collect(),
        triv.bottom.iter().map(|&v| mv(v)).collect(),
    )?;
    if kind == ClassicalKind::D && !s.in_top(b[0]) {
        s = SSymbol { top: s.bottom, bottom: s.top };
    }
    Ok(s)
}

/// The representations realized by single adjacent flips of the trivial symbol.
pub fn adjacent_flip_reps(kind: ClassicalKind, u: &Partition) -> Result<Vec<ComponentRep>> {
    let triv = triv_symbol(kind, u)?;
    let m = triv.entries().len();
    (0..m.saturating_sub(1))
        .map(|j| symbol_to_component_rep(&flip_adjacent(kind, &triv, j)?, &triv))
        .collect()
}

/// Coset representatives of the component group: (Z/2)^m modulo the diagonal
/// in type C, its even-weight subgroup modulo the diagonal in type D.
/// Each representative has g_1 = 0.
pub fn component_group(kind: ClassicalKind, m: usize) -> Vec<Vec<bool>> {
    let mut out = Vec::new();
    if m == 0 {
        return vec![Vec::new()];
    }
    for mask in 0u64..(1u64 << (m - 1)) {
        let g: Vec<bool> = (0..m).map(|j| j > 0 && mask >> (j - 1) & 1 == 1).collect();
        if kind == ClassicalKind::D && g.iter().filter(|&&x| x).count() % 2 == 1 {
            continue;
        }
        out.push(g);
    }
    out
}

/// True when the flip representations take distinct value vectors on
/// distinct elements of the component group.
pub fn separation_check(kind: ClassicalKind, u: &Partition) -> Result<bool> {
    let reps = adjacent_flip_reps(kind, u)?;
    let m = triv_symbol(kind, u)?.entries().len();
    let group = component_group(kind, m);
    let mut seen = std::collections::HashSet::new();
    for g in &group {
        let values: Vec<i32> = reps.iter().map(|r| r.eval(g)).collect();
        if !seen.insert(values) {
            return Ok(false);
        }
    }
    Ok(true)
}
