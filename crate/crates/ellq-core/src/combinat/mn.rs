//! Murnaghan–Nakayama rule for S_n and for the hyperoctahedral groups.

use super::partition::{Bipartition, Partition};
use crate::error::{Error, Result};

fn beta_set(lambda: &Partition, len: usize) -> Vec<u32> {
    (0..len).map(|i| lambda.part(i) + (len - 1 - i) as u32).collect()
}

fn from_beta(mut beta: Vec<u32>) -> Partition {
    beta.sort_unstable_by(|a, b| b.cmp(a));
    let len = beta.len();
    Partition::new(beta.iter().enumerate().map(|(i, &b)| b - (len - 1 - i) as u32).collect())
}

/// Every way of removing a rim hook of length k: (remaining shape, leg-length sign).
pub fn rim_hooks(lambda: &Partition, k: u32) -> Vec<(Partition, i64)> {
    let len = lambda.len();
    let beta = beta_set(lambda, len);
    let mut out = Vec::new();
    for (idx, &b) in beta.iter().enumerate() {
        if b < k {
            continue;
        }
        let target = b - k;
        if beta.contains(&target) {
            continue;
        }
        let between = beta.iter().filter(|&&x| x > target && x < b).count();
        let mut nb = beta.clone();
        nb[idx] = target;
        out.push((from_beta(nb), if between % 2 == 0 { 1 } else { -1 }));
    }
    out
}

fn mn_rec(lambda: &Partition, cycles: &[u32]) -> i64 {
    match cycles.split_first() {
        None => 1,
        Some((&k, rest)) => rim_hooks(lambda, k).iter().map(|(mu, s)| s * mn_rec(mu, rest)).sum(),
    }
}

/// χ^λ evaluated on a permutation of cycle type α.
pub fn mn_character(lambda: &Partition, alpha: &Partition) -> Result<i64> {
    if lambda.size() != alpha.size() {
        return Err(Error::Invalid(format!("size mismatch: |{lambda:?}| != |{alpha:?}|")));
    }
    Ok(mn_rec(lambda, alpha.parts()))
}

fn bi_rec(l: &Partition, r: &Partition, cycles: &[(u32, bool)]) -> i64 {
    match cycles.split_first() {
        None => 1,
        Some((&(k, negative), rest)) => {
            let mut total = 0;
            for (l2, s) in rim_hooks(l, k) {
                total += s * bi_rec(&l2, r, rest);
            }
            let eps = if negative { -1 } else { 1 };
            for (r2, s) in rim_hooks(r, k) {
                total += eps * s * bi_rec(l, &r2, rest);
            }
            total
        }
    }
}

/// Character of W(B_n) labelled by (λ, μ) at an element with positive
/// cycles α and negative cycles β. (n).∅ is trivial and ∅.(1^n) is the sign.
pub fn bipartition_character(chi: &Bipartition, alpha: &Partition, beta: &Partition) -> Result<i64> {
    if chi.size() != alpha.size() + beta.size() {
        return Err(Error::Invalid(format!("size mismatch: {chi:?} on ({alpha:?}, {beta:?})")));
    }
    let mut cycles: Vec<(u32, bool)> = alpha.parts().iter().map(|&k| (k, false)).collect();
    cycles.extend(beta.parts().iter().map(|&k| (k, true)));
    // longest cycles first keeps the recursion narrow
    cycles.sort_by(|a, b| b.0.cmp(&a.0));
    Ok(bi_rec(&chi.left, &chi.right, &cycles))
}
