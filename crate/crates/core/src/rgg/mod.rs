//! Thresholds of the random geometric graph `G(X, r)` (edges at distance `<= r`).
//!
//! - `L_{n,k}`: the smallest `r` at which every vertex has degree `>= k`.
//! - `M_{n,k}`: the smallest `r` at which the graph is k-connected.
//!
//! Balls are closed, so both thresholds are attained and are always one of
//! the pairwise distances. `L_{n,k} <= M_{n,k}` for every cloud.

mod dsu;
mod flow;
mod kdtree;
mod oracle;

use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};
use crate::math::{distance, sq_distance, sqrt};
use crate::sampling::PointCloud;
use dsu::DisjointSet;
use flow::{is_k_vertex_connected, Graph};
use kdtree::{EdgeKey, KdTree};

pub use oracle::{brute_force_is_k_connected, brute_force_l, BRUTE_FORCE_MAX_POINTS};

/// Result of one threshold computation on one cloud.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ThresholdReport {
    pub n: usize,
    pub k: usize,
    /// Largest k-nearest-neighbour link, `+∞` when `n <= k`.
    #[serde(rename = "L", with = "threshold_value")]
    pub l: f64,
    /// k-connectivity threshold, if it was requested.
    #[serde(rename = "M", with = "optional_threshold")]
    pub m: Option<f64>,
    /// Lowest point index attaining `L`; `None` when `L` is infinite.
    #[serde(rename = "witness_L")]
    pub witness_l: Option<usize>,
    /// Wall-clock seconds, filled in by callers that have a clock.
    pub elapsed: f64,
}

/// JSON numbers cannot hold `∞`, so infinite thresholds are written as `"inf"`.
mod threshold_value {
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    #[derive(Serialize, Deserialize)]
    #[serde(untagged)]
    enum Repr<'a> {
        Num(f64),
        Text(&'a str),
    }

    pub fn serialize<S: Serializer>(v: &f64, s: S) -> Result<S::Ok, S::Error> {
        if v.is_finite() {
            s.serialize_f64(*v)
        } else {
            s.serialize_str("inf")
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<f64, D::Error> {
        match Repr::deserialize(d)? {
            Repr::Num(x) => Ok(x),
            Repr::Text("inf") => Ok(f64::INFINITY),
            Repr::Text(other) => Err(serde::de::Error::custom(alloc::format!("bad threshold {other:?}"))),
        }
    }
}

mod optional_threshold {
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &Option<f64>, s: S) -> Result<S::Ok, S::Error> {
        match v {
            Some(x) => super::threshold_value::serialize(x, s),
            None => s.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<f64>, D::Error> {
        #[derive(Deserialize)]
        struct Wrap(#[serde(with = "super::threshold_value")] f64);
        Ok(Option::<Wrap>::deserialize(d)?.map(|w| w.0))
    }
}

fn check_k(k: usize) -> Result<()> {
    if k < 1 {
        return Err(domain!("k must be at least 1"));
    }
    Ok(())
}

fn check_radius(r: f64) -> Result<()> {
    if !(r >= 0.0) {
        return Err(domain!("radius must be >= 0, got {r}"));
    }
    Ok(())
}

/// `L_{n,k}` and the lowest index attaining it.
pub fn largest_k_nn_link_with_witness(cloud: &PointCloud, k: usize) -> Result<(f64, Option<usize>)> {
    check_k(k)?;
    if cloud.len() <= k {
        return Ok((f64::INFINITY, None));
    }
    let tree = KdTree::new(cloud);
    Ok(k_nn_link(&tree, cloud, k))
}

fn k_nn_link(tree: &KdTree<'_>, cloud: &PointCloud, k: usize) -> (f64, Option<usize>) {
    let mut scratch = Vec::with_capacity(k + 1);
    let mut worst = -1.0;
    let mut witness = 0;
    for i in 0..cloud.len() {
        // the point itself sits at distance 0, so the (k+1)-th nearest point
        // overall is the k-th nearest other point
        let s = tree.kth_nearest_sq(cloud.point(i), k + 1, &mut scratch);
        if s > worst {
            worst = s;
            witness = i;
        }
    }
    (sqrt(worst), Some(witness))
}

/// Largest k-nearest-neighbour link `L_{n,k}`: the maximum over points of the
/// distance to the k-th nearest other point, `+∞` when `n <= k`.
pub fn largest_k_nn_link(cloud: &PointCloud, k: usize) -> Result<f64> {
    largest_k_nn_link_with_witness(cloud, k).map(|(l, _)| l)
}

/// Length of the longest edge of a Euclidean minimum spanning tree
/// (Borůvka rounds driven by the kd-tree).
pub fn longest_mst_edge(cloud: &PointCloud) -> Result<f64> {
    let n = cloud.len();
    if n < 2 {
        return Err(domain!("a spanning tree needs at least 2 points, got {n}"));
    }
    let tree = KdTree::new(cloud);
    let mut dsu = DisjointSet::new(n);
    let mut comp: Vec<u32> = (0..n as u32).collect();
    let mut longest = 0.0f64;
    while dsu.components() > 1 {
        let labels = tree.node_components(&comp);
        let mut best = alloc::vec![EdgeKey::NONE; n];
        for i in 0..n {
            let c = comp[i] as usize;
            let mut b = best[c];
            tree.nearest_foreign(i, &comp, &labels, &mut b);
            best[c] = b;
        }
        for e in best.iter().filter(|e| e.a != u32::MAX) {
            if dsu.union(e.a as usize, e.b as usize) {
                longest = longest.max(e.sq);
            }
        }
        for i in 0..n {
            comp[i] = dsu.find(i) as u32;
        }
    }
    Ok(sqrt(longest))
}

/// Reusable k-connectivity tests on `G(cloud, r)` for varying `r`.
struct ConnectivityProbe<'a> {
    cloud: &'a PointCloud,
    tree: KdTree<'a>,
    k: usize,
}

impl<'a> ConnectivityProbe<'a> {
    fn new(cloud: &'a PointCloud, k: usize) -> Self {
        ConnectivityProbe { cloud, tree: KdTree::new(cloud), k }
    }

    fn holds_at(&self, r: f64) -> bool {
        let n = self.cloud.len();
        if n <= self.k {
            return false;
        }
        if self.k == 1 {
            let mut dsu = DisjointSet::new(n);
            for i in 0..n {
                self.tree.for_each_within(self.cloud.point(i), r, &mut |j| {
                    if j > i {
                        dsu.union(i, j);
                    }
                });
                if dsu.components() == 1 {
                    return true;
                }
            }
            return dsu.components() == 1;
        }
        let adj: Vec<Vec<u32>> = (0..n)
            .map(|i| {
                let mut list = Vec::new();
                self.tree.for_each_within(self.cloud.point(i), r, &mut |j| {
                    if j != i {
                        list.push(j as u32);
                    }
                });
                list
            })
            .collect();
        let cloud = self.cloud;
        is_k_vertex_connected(&Graph::from_adjacency(adj), self.k, &|v, t| {
            sq_distance(cloud.point(v), cloud.point(t))
        })
    }

    /// Pairwise distances in `(lo, hi]`, sorted and deduplicated.
    fn distances_between(&self, lo: f64, hi: f64) -> Vec<f64> {
        let mut out = Vec::new();
        for i in 0..self.cloud.len() {
            let p = self.cloud.point(i);
            self.tree.for_each_within(p, hi, &mut |j| {
                if j > i {
                    let d = distance(p, self.cloud.point(j));
                    if d > lo {
                        out.push(d);
                    }
                }
            });
        }
        out.sort_by(f64::total_cmp);
        out.dedup();
        out
    }
}

/// Whether `G(cloud, r)` is k-connected. Graphs on at most `k` vertices are
/// not; `K_{k+1}` is.
pub fn is_k_connected(cloud: &PointCloud, r: f64, k: usize) -> Result<bool> {
    check_k(k)?;
    check_radius(r)?;
    Ok(ConnectivityProbe::new(cloud, k).holds_at(r))
}

/// `M_{n,k}` by search over radii, valid for every `k >= 1`.
///
/// Starts at `L_{n,k}` (a lower bound), widens geometrically until the graph
/// becomes k-connected, then binary-searches the pairwise distances that fall
/// in the last bracket. Exact, since `M_{n,k}` is always a pairwise distance
/// and k-connectivity is monotone in `r`.
pub fn k_connectivity_threshold_by_search(cloud: &PointCloud, k: usize) -> Result<f64> {
    check_k(k)?;
    let n = cloud.len();
    if n <= k {
        return Ok(f64::INFINITY);
    }
    let probe = ConnectivityProbe::new(cloud, k);
    let (l, _) = k_nn_link(&probe.tree, cloud, k);
    if probe.holds_at(l) {
        return Ok(l);
    }
    // every pairwise distance is at most the bounding-box diagonal
    let d = cloud.dim();
    let mut lo_box = alloc::vec![f64::INFINITY; d];
    let mut hi_box = alloc::vec![f64::NEG_INFINITY; d];
    for p in cloud.iter() {
        for k in 0..d {
            lo_box[k] = lo_box[k].min(p[k]);
            hi_box[k] = hi_box[k].max(p[k]);
        }
    }
    let cap = distance(&lo_box, &hi_box) * (1.0 + 1e-9) + f64::MIN_POSITIVE;
    let mut lo = l;
    let mut width = (0.25 * l).max(1e-6 * cap);
    let hi = loop {
        let hi = (lo + width).min(cap);
        if hi >= cap || probe.holds_at(hi) {
            break hi;
        }
        lo = hi;
        width *= 2.0;
    };
    let candidates = probe.distances_between(lo, hi);
    let first = candidates.partition_point(|&r| !probe.holds_at(r));
    candidates.get(first).copied().ok_or_else(|| {
        Error::Domain(alloc::format!("no k-connected radius found in ({lo}, {hi}]"))
    })
}

/// k-connectivity threshold `M_{n,k}`, `+∞` when `n <= k`. For `k = 1` this
/// is the longest edge of the Euclidean minimum spanning tree.
pub fn k_connectivity_threshold(cloud: &PointCloud, k: usize) -> Result<f64> {
    check_k(k)?;
    if cloud.len() <= k {
        return Ok(f64::INFINITY);
    }
    if k == 1 {
        return longest_mst_edge(cloud);
    }
    k_connectivity_threshold_by_search(cloud, k)
}

/// `L_{n,k}` and optionally `M_{n,k}` for one cloud.
pub fn thresholds(cloud: &PointCloud, k: usize, with_m: bool) -> Result<ThresholdReport> {
    let (l, witness_l) = largest_k_nn_link_with_witness(cloud, k)?;
    let m = if with_m { Some(k_connectivity_threshold(cloud, k)?) } else { None };
    Ok(ThresholdReport { n: cloud.len(), k, l, m, witness_l, elapsed: 0.0 })
}

#[cfg(test)]
mod tests;
