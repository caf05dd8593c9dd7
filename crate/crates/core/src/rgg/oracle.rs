//! Brute-force references for the threshold computations.

use alloc::vec::Vec;

use crate::error::{domain, Error, Result};
use crate::math::distance;
use crate::sampling::PointCloud;

/// `L_{n,k}` from all pairwise distances: the largest, over points, of the
/// `k`-th smallest distance to another point. `+∞` when `n <= k`.
pub fn brute_force_l(cloud: &PointCloud, k: usize) -> Result<f64> {
    if k < 1 {
        return Err(domain!("k must be at least 1"));
    }
    let n = cloud.len();
    if n <= k {
        return Ok(f64::INFINITY);
    }
    let mut worst = 0.0f64;
    let mut row = Vec::with_capacity(n - 1);
    for i in 0..n {
        row.clear();
        row.extend((0..n).filter(|&j| j != i).map(|j| distance(cloud.point(i), cloud.point(j))));
        row.sort_by(f64::total_cmp);
        worst = worst.max(row[k - 1]);
    }
    Ok(worst)
}

/// Largest cloud accepted by [`brute_force_is_k_connected`].
pub const BRUTE_FORCE_MAX_POINTS: usize = 16;

/// k-connectivity of `G(cloud, r)` by exhaustion: more than `k` vertices,
/// and deleting any set of at most `k - 1` vertices leaves a connected graph.
pub fn brute_force_is_k_connected(cloud: &PointCloud, r: f64, k: usize) -> Result<bool> {
    let n = cloud.len();
    if n > BRUTE_FORCE_MAX_POINTS {
        return Err(Error::SizeGuard(alloc::format!(
            "brute-force connectivity handles at most {BRUTE_FORCE_MAX_POINTS} points, got {n}"
        )));
    }
    if k < 1 {
        return Err(domain!("k must be at least 1"));
    }
    if !(r >= 0.0) {
        return Err(domain!("radius must be >= 0, got {r}"));
    }
    if n <= k {
        return Ok(false);
    }
    let adj: Vec<u32> = (0..n)
        .map(|i| {
            (0..n)
                .filter(|&j| j != i && distance(cloud.point(i), cloud.point(j)) <= r)
                .fold(0u32, |m, j| m | 1 << j)
        })
        .collect();
    let all = (1u32 << n) - 1;
    for removed in 0..=all {
        if removed.count_ones() as usize > k - 1 {
            continue;
        }
        let keep = all & !removed;
        if keep.count_ones() <= 1 {
            continue;
        }
        let mut reached = 1u32 << keep.trailing_zeros();
        let mut frontier = reached;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let fresh = adj[v] & keep & !reached;
            reached |= fresh;
            frontier |= fresh;
        }
        if reached != keep {
            return Ok(false);
        }
    }
    Ok(true)
}
