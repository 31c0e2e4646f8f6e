//! Cartan types, their Gram matrices, exponents and standard realizations.

use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CartanType {
    A(u32),
    B(u32),
    C(u32),
    D(u32),
    E(u32),
    F4,
    G2,
}

impl CartanType {
    pub fn rank(&self) -> usize {
        match *self {
            CartanType::A(n) | CartanType::B(n) | CartanType::C(n) | CartanType::D(n) | CartanType::E(n) => n as usize,
            CartanType::F4 => 4,
            CartanType::G2 => 2,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let ok = match *self {
            CartanType::A(n) | CartanType::B(n) | CartanType::C(n) => n >= 1,
            CartanType::D(n) => n >= 2,
            CartanType::E(n) => (6..=8).contains(&n),
            CartanType::F4 | CartanType::G2 => true,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::Invalid(format!("no root system of type {self}")))
        }
    }

    pub fn exponents(&self) -> Vec<u32> {
        match *self {
            CartanType::A(n) => (1..=n).collect(),
            CartanType::B(n) | CartanType::C(n) => (1..=n).map(|i| 2 * i - 1).collect(),
            CartanType::D(n) => {
                let mut e: Vec<u32> = (1..n).map(|i| 2 * i - 1).collect();
                e.push(n - 1);
                e.sort_unstable();
                e
            }
            CartanType::E(6) => vec![1, 4, 5, 7, 8, 11],
            CartanType::E(7) => vec![1, 5, 7, 9, 11, 13, 17],
            CartanType::E(8) => vec![1, 7, 11, 13, 17, 19, 23, 29],
            CartanType::E(_) => Vec::new(),
            CartanType::F4 => vec![1, 5, 7, 11],
            CartanType::G2 => vec![1, 5],
        }
    }

    /// |W| = ∏ (m_i + 1).
    pub fn order(&self) -> u128 {
        self.exponents().iter().map(|&m| m as u128 + 1).product()
    }

    /// Symmetrized Gram matrix of the simple roots in Bourbaki order,
    /// scaled to integers.
    pub fn gram(&self) -> Vec<Vec<i64>> {
        let n = self.rank();
        let mut g = vec![vec![0i64; n]; n];
        let chain = |g: &mut Vec<Vec<i64>>, i: usize, j: usize, v: i64| {
            g[i][j] = v;
            g[j][i] = v;
        };
        match *self {
            CartanType::A(_) => {
                for i in 0..n {
                    g[i][i] = 2;
                    if i + 1 < n {
                        chain(&mut g, i, i + 1, -1);
                    }
                }
            }
            CartanType::B(_) => {
                for i in 0..n {
                    g[i][i] = if i + 1 == n { 2 } else { 4 };
                    if i + 1 < n {
                        chain(&mut g, i, i + 1, -2);
                    }
                }
            }
            CartanType::C(_) => {
                for i in 0..n {
                    g[i][i] = if i + 1 == n { 4 } else { 2 };
                    if i + 1 < n {
                        chain(&mut g, i, i + 1, if i + 2 == n { -2 } else { -1 });
                    }
                }
            }
            CartanType::D(_) => {
                for i in 0..n {
                    g[i][i] = 2;
                }
                for i in 0..n.saturating_sub(2) {
                    if i + 1 < n - 1 {
                        chain(&mut g, i, i + 1, -1);
                    }
                }
                if n >= 3 {
                    chain(&mut g, n - 3, n - 1, -1);
                }
            }
            CartanType::E(_) => {
                for i in 0..n {
                    g[i][i] = 2;
                }
                chain(&mut g, 0, 2, -1);
                chain(&mut g, 1, 3, -1);
                for i in 2..n - 1 {
                    chain(&mut g, i, i + 1, -1);
                }
            }
            CartanType::F4 => {
                g = vec![vec![4, -2, 0, 0], vec![-2, 4, -2, 0], vec![0, -2, 2, -1], vec![0, 0, -1, 2]];
            }
            CartanType::G2 => {
                g = vec![vec![2, -3], vec![-3, 6]];
            }
        }
        g
    }

    /// Cartan integers a_ij = 2(α_i, α_j)/(α_i, α_i).
    pub fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        let g = self.gram();
        (0..g.len()).map(|i| (0..g.len()).map(|j| 2 * g[i][j] / g[i][i]).collect()).collect()
    }

    pub fn parse(s: &str) -> Result<CartanType> {
        let s = s.trim();
        let bad = || Error::Parse(format!("unknown Cartan type {s:?}"));
        let upper = s.to_ascii_uppercase();
        let t = match upper.as_str() {
            "G2" => CartanType::G2,
            "F4" => CartanType::F4,
            _ => {
                let (head, tail) = upper.split_at(1);
                let n: u32 = tail.parse().map_err(|_| bad())?;
                match head {
                    "A" => CartanType::A(n),
                    "B" => CartanType::B(n),
                    "C" => CartanType::C(n),
                    "D" => CartanType::D(n),
                    "E" => CartanType::E(n),
                    _ => return Err(bad()),
                }
            }
        };
        t.validate()?;
        Ok(t)
    }

    /// Ambient Gram matrix and simple roots (in ambient coordinates) of the
    /// standard realization: signed permutations for A/B/C/D, the root
    /// basis for the exceptional types.
    pub fn realization(&self) -> Result<(Vec<Vec<i64>>, Vec<Vec<i64>>)> {
        let n = self.rank();
        let unit = |d: usize| -> Vec<Vec<i64>> {
            (0..d).map(|i| (0..d).map(|j| i64::from(i == j)).collect()).collect()
        };
        let e = |d: usize, i: usize| -> Vec<i64> { (0..d).map(|j| i64::from(i == j)).collect() };
        let diff = |d: usize, i: usize, j: usize| -> Vec<i64> {
            e(d, i).iter().zip(e(d, j)).map(|(a, b)| a - b).collect()
        };
        match *self {
            CartanType::A(_) => Ok((unit(n + 1), (0..n).map(|i| diff(n + 1, i, i + 1)).collect())),
            CartanType::B(_) | CartanType::C(_) => {
                let mut roots: Vec<Vec<i64>> = (0..n - 1).map(|i| diff(n, i, i + 1)).collect();
                let last = if matches!(self, CartanType::B(_)) { 1 } else { 2 };
                roots.push(e(n, n - 1).iter().map(|x| x * last).collect());
                Ok((unit(n), roots))
            }
            CartanType::D(_) => {
                let mut roots: Vec<Vec<i64>> = (0..n - 1).map(|i| diff(n, i, i + 1)).collect();
                let mut last = e(n, n - 2);
                last[n - 1] = 1;
                roots.push(last);
                Ok((unit(n), roots))
            }
            CartanType::F4 | CartanType::G2 => Ok((self.gram(), unit(n))),
            CartanType::E(_) => Err(Error::Unsupported(format!("W({self}) is not realized"))),
        }
    }

    /// Whether the standard realization is by signed permutations.
    pub fn is_classical(&self) -> bool {
        matches!(self, CartanType::A(_) | CartanType::B(_) | CartanType::C(_) | CartanType::D(_))
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CartanType::A(n) => write!(f, "A{n}"),
            CartanType::B(n) => write!(f, "B{n}"),
            CartanType::C(n) => write!(f, "C{n}"),
            CartanType::D(n) => write!(f, "D{n}"),
            CartanType::E(n) => write!(f, "E{n}"),
            CartanType::F4 => write!(f, "F4"),
            CartanType::G2 => write!(f, "G2"),
        }
    }
}

/// A finite Weyl group type: a product of irreducible Cartan types.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GroupSpec {
    pub factors: Vec<CartanType>,
}

impl GroupSpec {
    pub fn new(factors: Vec<CartanType>) -> Self {
        GroupSpec { factors }
    }

    pub fn single(t: CartanType) -> Self {
        GroupSpec { factors: vec![t] }
    }

    pub fn rank(&self) -> usize {
        self.factors.iter().map(|t| t.rank()).sum()
    }

    pub fn order(&self) -> u128 {
        self.factors.iter().map(|t| t.order()).product()
    }

    pub fn exponents(&self) -> Vec<u32> {
        let mut e: Vec<u32> = self.factors.iter().flat_map(|t| t.exponents()).collect();
        e.sort_unstable();
        e
    }

    /// Accepts "G2", "B3", "A1xA1", "A1*A2" and family/rank pairs via [`GroupSpec::from_family`].
    pub fn parse(s: &str) -> Result<GroupSpec> {
        let factors = s
            .split(['x', 'X', '*', '×'])
            .filter(|t| !t.trim().is_empty())
            .map(CartanType::parse)
            .collect::<Result<Vec<_>>>()?;
        if factors.is_empty() {
            return Err(Error::Parse(format!("empty group type {s:?}")));
        }
        Ok(GroupSpec { factors })
    }

    /// "B" with n = 3 gives B3; "G2"/"F4" ignore n.
    pub fn from_family(family: &str, n: Option<u32>) -> Result<GroupSpec> {
        let f = family.trim().to_ascii_uppercase();
        if f == "G2" || f == "F4" || f.len() > 1 {
            return GroupSpec::parse(&f);
        }
        let n = n.ok_or_else(|| Error::Invalid(format!("type {f} needs a rank")))?;
        GroupSpec::parse(&format!("{f}{n}"))
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = self.factors.iter().map(|t| t.to_string()).collect();
        f.write_str(&names.join("x"))
    }
}
