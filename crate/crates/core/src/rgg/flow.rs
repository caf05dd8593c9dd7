//! Vertex connectivity by unit-capacity max-flow on the vertex-split network.
//!
//! `κ(G) >= k` is decided with the Esfahanian–Hakimi pair set: for a vertex
//! `v` of minimum degree, the local connectivity `κ(v, w)` for every `w`
//! not adjacent to `v`, and `κ(x, y)` for every non-adjacent pair of
//! neighbours of `v`. A minimum separator either avoids `v`, and then splits
//! it from some `w`, or contains it, and then (being minimal) it splits two
//! neighbours of `v`.
//!
//! Augmenting paths are found by depth-first search that tries vertices
//! closest to the sink first (closeness supplied by the caller). Any
//! augmenting path is valid for unit capacities, and on geometric graphs
//! the guided search reaches the sink after visiting a thin corridor instead
//! of the whole network.

use alloc::vec::Vec;

/// Undirected graph in compressed adjacency form, neighbour lists sorted.
#[derive(Debug, Clone)]
pub(crate) struct Graph {
    offsets: Vec<usize>,
    targets: Vec<u32>,
}

impl Graph {
    pub(crate) fn from_adjacency(adj: Vec<Vec<u32>>) -> Self {
        let mut offsets = Vec::with_capacity(adj.len() + 1);
        let mut targets = Vec::new();
        offsets.push(0);
        for mut list in adj {
            list.sort_unstable();
            list.dedup();
            targets.extend_from_slice(&list);
            offsets.push(targets.len());
        }
        Graph { offsets, targets }
    }

    pub(crate) fn len(&self) -> usize {
        self.offsets.len() - 1
    }

    pub(crate) fn neighbours(&self, v: usize) -> &[u32] {
        &self.targets[self.offsets[v]..self.offsets[v + 1]]
    }

    pub(crate) fn degree(&self, v: usize) -> usize {
        self.offsets[v + 1] - self.offsets[v]
    }

    fn adjacent(&self, u: usize, v: usize) -> bool {
        self.neighbours(u).binary_search(&(v as u32)).is_ok()
    }
}

/// Residual network: node `2v` is `v_in`, `2v + 1` is `v_out`.
/// Arcs come in pairs, so the reverse of arc `a` is `a ^ 1`.
struct SplitNetwork {
    head: Vec<u32>,
    cap: Vec<u8>,
    first: Vec<usize>,
    arcs: Vec<u32>,
    touched: Vec<u32>,
    stamp: Vec<u32>,
    pred: Vec<u32>,
    epoch: u32,
    stack: Vec<u32>,
    candidates: Vec<(f64, u32)>,
}

impl SplitNetwork {
    fn new(g: &Graph) -> Self {
        let n = g.len();
        let mut head = Vec::new();
        let mut cap = Vec::new();
        let mut out: Vec<Vec<u32>> = alloc::vec![Vec::new(); 2 * n];
        let mut add = |from: usize, to: usize, c: u8, head: &mut Vec<u32>, cap: &mut Vec<u8>| {
            let a = head.len() as u32;
            head.push(to as u32);
            cap.push(c);
            head.push(from as u32);
            cap.push(0);
            out[from].push(a);
            out[to].push(a + 1);
        };
        for v in 0..n {
            add(2 * v, 2 * v + 1, 1, &mut head, &mut cap);
        }
        for u in 0..n {
            for &w in g.neighbours(u) {
                add(2 * u + 1, 2 * w as usize, 1, &mut head, &mut cap);
            }
        }
        let mut first = Vec::with_capacity(2 * n + 1);
        let mut arcs = Vec::with_capacity(head.len());
        first.push(0);
        for list in out {
            arcs.extend_from_slice(&list);
            first.push(arcs.len());
        }
        SplitNetwork {
            head,
            cap,
            first,
            arcs,
            touched: Vec::new(),
            stamp: alloc::vec![0; 2 * n],
            pred: alloc::vec![u32::MAX; 2 * n],
            epoch: 0,
            stack: Vec::new(),
            candidates: Vec::new(),
        }
    }

    /// Number of internally vertex-disjoint `s`-`t` paths, stopping at `limit`.
    /// `closeness(v)` ranks vertices by proximity to `t`, smaller first.
    fn local_connectivity(&mut self, s: usize, t: usize, limit: usize, closeness: &dyn Fn(usize) -> f64) -> usize {
        let (source, sink) = (2 * s + 1, 2 * t);
        let mut flow = 0;
        while flow < limit && self.augment(source, sink, closeness) {
            flow += 1;
        }
        // every forward arc starts at capacity 1, every reverse arc at 0
        for &a in &self.touched {
            let forward = a as usize & !1;
            self.cap[forward] = 1;
            self.cap[forward + 1] = 0;
        }
        self.touched.clear();
        flow
    }

    fn augment(&mut self, source: usize, sink: usize, closeness: &dyn Fn(usize) -> f64) -> bool {
        self.epoch += 1;
        let epoch = self.epoch;
        self.stack.clear();
        self.stack.push(source as u32);
        self.stamp[source] = epoch;
        let mut found = false;
        while let Some(x) = self.stack.pop() {
            let x = x as usize;
            self.candidates.clear();
            for &a in &self.arcs[self.first[x]..self.first[x + 1]] {
                let y = self.head[a as usize] as usize;
                if self.cap[a as usize] > 0 && self.stamp[y] != epoch {
                    self.stamp[y] = epoch;
                    self.pred[y] = a;
                    if y == sink {
                        found = true;
                        break;
                    }
                    self.candidates.push((closeness(y / 2), y as u32));
                }
            }
            if found {
                break;
            }
            // farthest pushed first, so the closest is expanded next
            self.candidates.sort_unstable_by(|p, q| q.0.total_cmp(&p.0));
            self.stack.extend(self.candidates.iter().map(|c| c.1));
        }
        if !found {
            return false;
        }
        let mut y = sink;
        while y != source {
            let a = self.pred[y] as usize;
            self.cap[a] -= 1;
            self.cap[a ^ 1] += 1;
            self.touched.push(a as u32);
            y = self.head[a ^ 1] as usize;
        }
        true
    }
}

/// True iff the graph has more than `k` vertices and no set of fewer than
/// `k` vertices disconnects it.
///
/// `distance(v, t)` is a heuristic closeness of vertex `v` to vertex `t`; it
/// affects only the running time.
pub(crate) fn is_k_vertex_connected(g: &Graph, k: usize, distance: &dyn Fn(usize, usize) -> f64) -> bool {
    let n = g.len();
    if n <= k {
        return false;
    }
    if k == 0 {
        return true;
    }
    if (0..n).any(|v| g.degree(v) < k) {
        return false;
    }
    if (0..n).all(|v| g.degree(v) == n - 1) {
        return true;
    }
    let v = (0..n).min_by_key(|&u| (g.degree(u), u)).unwrap_or(0);
    let mut net = SplitNetwork::new(g);
    let mut separated = |s: usize, t: usize| net.local_connectivity(s, t, k, &|u| distance(u, t)) < k;
    for w in 0..n {
        if w != v && !g.adjacent(v, w) && separated(v, w) {
            return false;
        }
    }
    let nv = g.neighbours(v);
    for (i, &x) in nv.iter().enumerate() {
        for &y in &nv[i + 1..] {
            if !g.adjacent(x as usize, y as usize) && separated(x as usize, y as usize) {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn is_k_vertex_connected_plain(g: &Graph, k: usize) -> bool {
        is_k_vertex_connected(g, k, &|_, _| 0.0)
    }

    fn cycle(n: usize) -> Graph {
        Graph::from_adjacency(
            (0..n).map(|i| vec![((i + 1) % n) as u32, ((i + n - 1) % n) as u32]).collect(),
        )
    }

    #[test]
    fn cycles_are_two_connected() {
        let g = cycle(6);
        assert!(is_k_vertex_connected_plain(&g, 1));
        assert!(is_k_vertex_connected_plain(&g, 2));
        assert!(!is_k_vertex_connected_plain(&g, 3));
    }

    #[test]
    fn complete_graphs() {
        let k4 = Graph::from_adjacency((0..4).map(|i| (0..4).filter(|&j| j != i).collect()).collect());
        assert!(is_k_vertex_connected_plain(&k4, 3));
        assert!(!is_k_vertex_connected_plain(&k4, 4));
    }

    #[test]
    fn two_triangles_sharing_a_vertex() {
        // 0-1-2 triangle, 2-3-4 triangle: vertex 2 is a cut vertex
        let adj = vec![vec![1, 2], vec![0, 2], vec![0, 1, 3, 4], vec![2, 4], vec![2, 3]];
        let g = Graph::from_adjacency(adj);
        assert!(is_k_vertex_connected_plain(&g, 1));
        assert!(!is_k_vertex_connected_plain(&g, 2));
    }

    #[test]
    fn network_resets_between_queries() {
        // K_{3,3} is 3-connected; repeated queries must see fresh capacities
        let adj = (0..6u32)
            .map(|i| if i < 3 { vec![3, 4, 5] } else { vec![0, 1, 2] })
            .collect();
        let g = Graph::from_adjacency(adj);
        let mut net = SplitNetwork::new(&g);
        for _ in 0..3 {
            assert_eq!(net.local_connectivity(0, 1, 5, &|_| 0.0), 3);
            assert_eq!(net.local_connectivity(3, 4, 5, &|_| 0.0), 3);
        }
        assert!(is_k_vertex_connected_plain(&g, 3));
        assert!(!is_k_vertex_connected_plain(&g, 4));
    }
}
