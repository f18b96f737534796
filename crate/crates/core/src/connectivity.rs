//! Vertex connectivity via Menger's theorem: unit-capacity max flow on the
//! split-vertex digraph, minimised over non-adjacent pairs.

use alloc::vec;
use alloc::vec::Vec;

use crate::graph::{Graph, VertexSet};

/// Residual network where vertex `v` becomes `v_in = 2v` and `v_out = 2v + 1`.
struct SplitNetwork {
    cap: Vec<Vec<u8>>,
    nbrs: Vec<Vec<usize>>,
}

impl SplitNetwork {
    fn new(g: &Graph, source: usize, sink: usize) -> Self {
        let n = g.order();
        let size = 2 * n;
        let mut net = SplitNetwork {
            cap: vec![vec![0; size]; size],
            nbrs: vec![Vec::new(); size],
        };
        for v in 0..n {
            // the terminals themselves may carry any number of paths
            let through = if v == source || v == sink { n as u8 } else { 1 };
            net.arc(2 * v, 2 * v + 1, through);
        }
        for (u, v) in g.edges() {
            net.arc(2 * u + 1, 2 * v, 1);
            net.arc(2 * v + 1, 2 * u, 1);
        }
        net
    }

    fn arc(&mut self, from: usize, to: usize, cap: u8) {
        if self.cap[from][to] == 0 && self.cap[to][from] == 0 {
            self.nbrs[from].push(to);
            self.nbrs[to].push(from);
        }
        self.cap[from][to] += cap;
    }

    /// Augments along BFS shortest paths until `limit` units flow or none remain.
    fn max_flow(&mut self, from: usize, to: usize, limit: usize) -> usize {
        let size = self.cap.len();
        let mut flow = 0;
        let mut parent = vec![usize::MAX; size];
        let mut queue = Vec::with_capacity(size);
        while flow < limit {
            parent.fill(usize::MAX);
            parent[from] = from;
            queue.clear();
            queue.push(from);
            let mut head = 0;
            while head < queue.len() && parent[to] == usize::MAX {
                let u = queue[head];
                head += 1;
                for &w in &self.nbrs[u] {
                    if parent[w] == usize::MAX && self.cap[u][w] > 0 {
                        parent[w] = u;
                        queue.push(w);
                    }
                }
            }
            if parent[to] == usize::MAX {
                break;
            }
            let mut w = to;
            while w != from {
                let u = parent[w];
                self.cap[u][w] -= 1;
                self.cap[w][u] += 1;
                w = u;
            }
            flow += 1;
        }
        flow
    }
}

/// Maximum number of internally disjoint `s`–`t` paths for non-adjacent `s != t`.
pub fn local_connectivity(g: &Graph, s: usize, t: usize) -> usize {
    debug_assert!(s != t && !g.has_edge(s, t));
    let mut net = SplitNetwork::new(g, s, t);
    net.max_flow(2 * s + 1, 2 * t, g.order())
}

/// Vertex connectivity κ. Complete graphs give `n - 1`, disconnected graphs 0.
pub fn vertex_connectivity(g: &Graph) -> usize {
    let n = g.order();
    if g.is_complete() {
        return n - 1;
    }
    if !g.is_connected() {
        return 0;
    }
    let mut best = g.min_degree();
    for s in 0..n {
        let far = g
            .vertices()
            .difference(g.neighbors(s))
            .difference(VertexSet::singleton(s));
        for t in far.iter().filter(|&t| t > s) {
            let mut net = SplitNetwork::new(g, s, t);
            best = best.min(net.max_flow(2 * s + 1, 2 * t, best));
        }
        // some minimum cut avoids one of the first κ+1 vertices
        if s >= best {
            break;
        }
    }
    best
}
