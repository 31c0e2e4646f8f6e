//! Small integer matrices used as group elements.

use std::fmt;

use crate::exactq::QPoly;

pub const MAX_DIM: usize = 8;

/// Integer matrix of size d×d (d ≤ 8), stored row-major in a fixed array so
/// that elements are `Copy` and hash cheaply.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Mat {
    d: u8,
    a: [i8; MAX_DIM * MAX_DIM],
}

impl Mat {
    pub fn zero(d: usize) -> Mat {
        assert!(d <= MAX_DIM, "dimension {d} exceeds {MAX_DIM}");
        Mat { d: d as u8, a: [0; MAX_DIM * MAX_DIM] }
    }

    pub fn identity(d: usize) -> Mat {
        let mut m = Mat::zero(d);
        for i in 0..d {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Mat {
        let d = rows.len();
        let mut m = Mat::zero(d);
        for (i, r) in rows.iter().enumerate() {
            assert_eq!(r.len(), d, "matrix must be square");
            for (j, &x) in r.iter().enumerate() {
                m.set(i, j, x);
            }
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.d as usize
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.a[i * MAX_DIM + j] as i64
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, x: i64) {
        self.a[i * MAX_DIM + j] = i8::try_from(x).expect("matrix entry out of i8 range");
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        let d = self.dim();
        (0..d).map(|i| (0..d).map(|j| self.get(i, j)).collect()).collect()
    }

    pub fn mul(&self, rhs: &Mat) -> Mat {
        let d = self.dim();
        debug_assert_eq!(d, rhs.dim());
        let mut out = Mat::zero(d);
        for i in 0..d {
            for k in 0..d {
                let x = self.a[i * MAX_DIM + k] as i32;
                if x == 0 {
                    continue;
                }
                for j in 0..d {
                    let v = out.a[i * MAX_DIM + j] as i32 + x * rhs.a[k * MAX_DIM + j] as i32;
                    out.a[i * MAX_DIM + j] = v as i8;
                    debug_assert!(i8::try_from(v).is_ok());
                }
            }
        }
        out
    }

    pub fn apply(&self, v: &[i64]) -> Vec<i64> {
        let d = self.dim();
        (0..d).map(|i| (0..d).map(|j| self.get(i, j) * v[j]).sum()).collect()
    }

    pub fn transpose(&self) -> Mat {
        let d = self.dim();
        let mut out = Mat::zero(d);
        for i in 0..d {
            for j in 0..d {
                out.set(j, i, self.get(i, j));
            }
        }
        out
    }

    pub fn is_identity(&self) -> bool {
        *self == Mat::identity(self.dim())
    }

    pub fn trace(&self) -> i64 {
        (0..self.dim()).map(|i| self.get(i, i)).sum()
    }

    /// Multiplicative order (bounded by 1000).
    pub fn order(&self) -> u32 {
        let id = Mat::identity(self.dim());
        let mut x = *self;
        for k in 1..=1000 {
            if x == id {
                return k;
            }
            x = x.mul(self);
        }
        panic!("element order exceeds 1000");
    }

    pub fn pow(&self, e: u32) -> Mat {
        let mut out = Mat::identity(self.dim());
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    pub fn block_diag(blocks: &[Mat]) -> Mat {
        let d: usize = blocks.iter().map(|b| b.dim()).sum();
        let mut out = Mat::zero(d);
        let mut off = 0;
        for b in blocks {
            for i in 0..b.dim() {
                for j in 0..b.dim() {
                    out.set(off + i, off + j, b.get(i, j));
                }
            }
            off += b.dim();
        }
        out
    }

    /// Diagonal block starting at `off` of size `d`.
    pub fn block(&self, off: usize, d: usize) -> Mat {
        let mut out = Mat::zero(d);
        for i in 0..d {
            for j in 0..d {
                out.set(i, j, self.get(off + i, off + j));
            }
        }
        out
    }

    /// det(1 - qM) via Faddeev–LeVerrier on the integer matrix.
    pub fn det_one_minus_q(&self) -> QPoly {
        let d = self.dim();
        let m = self.rows();
        let mul = |x: &Vec<Vec<i64>>, y: &Vec<Vec<i64>>| -> Vec<Vec<i64>> {
            (0..d).map(|i| (0..d).map(|j| (0..d).map(|k| x[i][k] * y[k][j]).sum()).collect()).collect()
        };
        // c[k] is the coefficient of λ^k in det(λ - M)
        let mut c = vec![0i64; d + 1];
        c[d] = 1;
        let mut mk = vec![vec![0i64; d]; d];
        for k in 1..=d {
            let mut next = mul(&m, &mk);
            for (i, row) in next.iter_mut().enumerate() {
                row[i] += c[d - k + 1];
            }
            mk = next;
            let tr: i64 = (0..d).map(|i| (0..d).map(|j| m[i][j] * mk[j][i]).sum::<i64>()).sum();
            assert!(tr % k as i64 == 0);
            c[d - k] = -tr / k as i64;
        }
        // det(1 - qM) = Σ_j c[d-j] q^j
        QPoly::from_ints(&(0..=d).map(|j| c[d - j]).collect::<Vec<_>>())
    }

    /// Signed cycle type when the matrix is a signed permutation matrix:
    /// (positive cycle lengths, negative cycle lengths), each sorted decreasing.
    pub fn signed_cycle_type(&self) -> Option<(Vec<u32>, Vec<u32>)> {
        let d = self.dim();
        let mut img = vec![(0usize, 0i64); d];
        for j in 0..d {
            let nz: Vec<usize> = (0..d).filter(|&i| self.get(i, j) != 0).collect();
            if nz.len() != 1 || self.get(nz[0], j).abs() != 1 {
                return None;
            }
            img[j] = (nz[0], self.get(nz[0], j));
        }
        let mut seen = vec![false; d];
        let (mut pos, mut neg) = (Vec::new(), Vec::new());
        for start in 0..d {
            if seen[start] {
                continue;
            }
            let (mut len, mut sign, mut j) = (0u32, 1i64, start);
            while !seen[j] {
                seen[j] = true;
                len += 1;
                sign *= img[j].1;
                j = img[j].0;
            }
            if sign > 0 {
                pos.push(len);
            } else {
                neg.push(len);
            }
        }
        pos.sort_unstable_by(|a, b| b.cmp(a));
        neg.sort_unstable_by(|a, b| b.cmp(a));
        Some((pos, neg))
    }
}

impl fmt::Debug for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.rows())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn charpoly_of_rotation() {
        // order-3 rotation in the A2 root basis
        let m = Mat::from_rows(&[vec![-1, 1], vec![-1, 0]]);
        assert_eq!(m.order(), 3);
        assert_eq!(m.det_one_minus_q(), QPoly::from_ints(&[1, 1, 1]));
    }

    #[test]
    fn signed_cycles() {
        let m = Mat::from_rows(&[vec![0, -1, 0], vec![1, 0, 0], vec![0, 0, 1]]);
        assert_eq!(m.signed_cycle_type(), Some((vec![1], vec![2])));
        assert_eq!(m.det_one_minus_q(), QPoly::from_ints(&[1, -1, 1, -1]));
    }
}
