//! A static kd-tree over a point cloud.
//!
//! All answers are exact. Pruning relies on the box-to-query squared distance
//! never exceeding the squared distance to any point inside the box, which
//! holds in floating point because subtraction, squaring and summation are
//! all monotone.

use alloc::vec::Vec;

use crate::math::{distance, sq_distance, sqrt};
use crate::sampling::PointCloud;

const LEAF_SIZE: usize = 12;
const NONE: u32 = u32::MAX;

#[derive(Debug, Clone, Copy)]
struct Node {
    start: u32,
    end: u32,
    left: u32,
    right: u32,
}

pub(crate) struct KdTree<'a> {
    cloud: &'a PointCloud,
    dim: usize,
    order: Vec<u32>,
    nodes: Vec<Node>,
    /// Per node: `lo[0..dim]` followed by `hi[0..dim]`.
    bounds: Vec<f64>,
}

/// Candidate edge for Borůvka, ordered by `(squared length, lower index, upper index)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) struct EdgeKey {
    pub sq: f64,
    pub a: u32,
    pub b: u32,
}

impl EdgeKey {
    pub(crate) const NONE: EdgeKey = EdgeKey { sq: f64::INFINITY, a: u32::MAX, b: u32::MAX };

    pub(crate) fn new(sq: f64, i: u32, j: u32) -> Self {
        EdgeKey { sq, a: i.min(j), b: i.max(j) }
    }

    pub(crate) fn less(&self, other: &EdgeKey) -> bool {
        self.sq
            .total_cmp(&other.sq)
            .then(self.a.cmp(&other.a))
            .then(self.b.cmp(&other.b))
            .is_lt()
    }
}

impl<'a> KdTree<'a> {
    pub(crate) fn new(cloud: &'a PointCloud) -> Self {
        let dim = cloud.dim();
        let n = cloud.len();
        let mut tree = KdTree {
            cloud,
            dim,
            order: (0..n as u32).collect(),
            nodes: Vec::with_capacity(2 * n / LEAF_SIZE + 1),
            bounds: Vec::new(),
        };
        tree.build(0, n);
        tree
    }

    fn build(&mut self, start: usize, end: usize) -> u32 {
        let id = self.nodes.len() as u32;
        self.nodes.push(Node { start: start as u32, end: end as u32, left: NONE, right: NONE });
        let d = self.dim;
        let mut lo = alloc::vec![f64::INFINITY; d];
        let mut hi = alloc::vec![f64::NEG_INFINITY; d];
        for &i in &self.order[start..end] {
            let p = self.cloud.point(i as usize);
            for k in 0..d {
                lo[k] = lo[k].min(p[k]);
                hi[k] = hi[k].max(p[k]);
            }
        }
        self.bounds.extend_from_slice(&lo);
        self.bounds.extend_from_slice(&hi);
        if end - start > LEAF_SIZE {
            let axis = (0..d)
                .max_by(|&a, &b| (hi[a] - lo[a]).total_cmp(&(hi[b] - lo[b])))
                .unwrap_or(0);
            if hi[axis] > lo[axis] {
                let mid = (start + end) / 2;
                let cloud = self.cloud;
                self.order[start..end].select_nth_unstable_by(mid - start, |&a, &b| {
                    cloud.point(a as usize)[axis].total_cmp(&cloud.point(b as usize)[axis])
                });
                let left = self.build(start, mid);
                let right = self.build(mid, end);
                self.nodes[id as usize].left = left;
                self.nodes[id as usize].right = right;
            }
        }
        id
    }

    #[inline]
    fn box_sq_distance(&self, node: u32, q: &[f64]) -> f64 {
        let d = self.dim;
        let base = node as usize * 2 * d;
        let (lo, hi) = (&self.bounds[base..base + d], &self.bounds[base + d..base + 2 * d]);
        let mut s = 0.0;
        for k in 0..d {
            let t = if q[k] < lo[k] {
                lo[k] - q[k]
            } else if q[k] > hi[k] {
                q[k] - hi[k]
            } else {
                0.0
            };
            s += t * t;
        }
        s
    }

    /// Squared distance from `q` to its `count`-th nearest point of the
    /// cloud (counting a point at `q` itself, if present).
    pub(crate) fn kth_nearest_sq(&self, q: &[f64], count: usize, best: &mut Vec<f64>) -> f64 {
        best.clear();
        self.knn_rec(0, q, count, best);
        best[count - 1]
    }

    fn knn_rec(&self, node: u32, q: &[f64], count: usize, best: &mut Vec<f64>) {
        let worst = if best.len() < count { f64::INFINITY } else { best[count - 1] };
        if self.box_sq_distance(node, q) > worst {
            return;
        }
        let nd = self.nodes[node as usize];
        if nd.left == NONE {
            for &i in &self.order[nd.start as usize..nd.end as usize] {
                let s = sq_distance(q, self.cloud.point(i as usize));
                if best.len() < count || s < best[count - 1] {
                    let pos = best.partition_point(|&b| b <= s);
                    best.insert(pos, s);
                    best.truncate(count);
                }
            }
            return;
        }
        let (a, b) = if self.box_sq_distance(nd.left, q) <= self.box_sq_distance(nd.right, q) {
            (nd.left, nd.right)
        } else {
            (nd.right, nd.left)
        };
        self.knn_rec(a, q, count, best);
        self.knn_rec(b, q, count, best);
    }

    /// Calls `visit(j)` for every point with `distance(q, p_j) <= r`.
    pub(crate) fn for_each_within(&self, q: &[f64], r: f64, visit: &mut impl FnMut(usize)) {
        self.within_rec(0, q, r, visit);
    }

    fn within_rec(&self, node: u32, q: &[f64], r: f64, visit: &mut impl FnMut(usize)) {
        if sqrt(self.box_sq_distance(node, q)) > r {
            return;
        }
        let nd = self.nodes[node as usize];
        if nd.left == NONE {
            for &i in &self.order[nd.start as usize..nd.end as usize] {
                if distance(q, self.cloud.point(i as usize)) <= r {
                    visit(i as usize);
                }
            }
            return;
        }
        self.within_rec(nd.left, q, r, visit);
        self.within_rec(nd.right, q, r, visit);
    }

    /// Component label of every node: the shared label when all of its points
    /// are in one component, `u32::MAX` otherwise.
    pub(crate) fn node_components(&self, comp: &[u32]) -> Vec<u32> {
        let mut labels = alloc::vec![NONE; self.nodes.len()];
        // children always have larger ids than their parent
        for id in (0..self.nodes.len()).rev() {
            let nd = self.nodes[id];
            labels[id] = if nd.left == NONE {
                let pts = &self.order[nd.start as usize..nd.end as usize];
                let c = comp[pts[0] as usize];
                if pts.iter().all(|&i| comp[i as usize] == c) {
                    c
                } else {
                    NONE
                }
            } else if labels[nd.left as usize] == labels[nd.right as usize] {
                labels[nd.left as usize]
            } else {
                NONE
            };
        }
        labels
    }

    /// Smallest edge (under [`EdgeKey`] order) from point `i` to a point of a
    /// different component, if it beats `best`.
    pub(crate) fn nearest_foreign(&self, i: usize, comp: &[u32], labels: &[u32], best: &mut EdgeKey) {
        let q = self.cloud.point(i);
        self.foreign_rec(0, i as u32, q, comp[i], comp, labels, best);
    }

    #[allow(clippy::too_many_arguments)]
    fn foreign_rec(
        &self,
        node: u32,
        i: u32,
        q: &[f64],
        ci: u32,
        comp: &[u32],
        labels: &[u32],
        best: &mut EdgeKey,
    ) {
        if labels[node as usize] == ci || self.box_sq_distance(node, q) > best.sq {
            return;
        }
        let nd = self.nodes[node as usize];
        if nd.left == NONE {
            for &j in &self.order[nd.start as usize..nd.end as usize] {
                if comp[j as usize] != ci {
                    let key = EdgeKey::new(sq_distance(q, self.cloud.point(j as usize)), i, j);
                    if key.less(best) {
                        *best = key;
                    }
                }
            }
            return;
        }
        let (a, b) = if self.box_sq_distance(nd.left, q) <= self.box_sq_distance(nd.right, q) {
            (nd.left, nd.right)
        } else {
            (nd.right, nd.left)
        };
        self.foreign_rec(a, i, q, ci, comp, labels, best);
        self.foreign_rec(b, i, q, ci, comp, labels, best);
    }
}
