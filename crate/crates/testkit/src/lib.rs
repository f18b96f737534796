//! Brute-force reference implementations for tests. Nothing here shares an
//! algorithm with `domcycle-core`; only the `Graph` container and its
//! adjacency queries are reused.

use domcycle_core::Graph;
use itertools::Itertools;
use rand::Rng;

/// Every labeled graph on `n` vertices, indexed by upper-triangle bit masks.
pub fn labeled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).tuple_combinations().collect();
    let total = 1u64 << pairs.len();
    (0..total).map(move |mask| {
        let edges = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e);
        Graph::build(n, edges).unwrap()
    })
}

pub fn random_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let edges: Vec<(usize, usize)> = (0..n)
        .tuple_combinations()
        .filter(|_| rng.random_bool(p))
        .collect();
    Graph::build(n, edges).unwrap()
}

/// A `k`-cycle `0..k` plus a path of `path_len` edges on new vertices whose
/// two ends each see two or three cycle vertices, with every attachment of
/// one end at least `path_len + 2` steps along the cycle from every distinct
/// attachment of the other, plus chords with probability `chord_p`. Without
/// chords the `k`-cycle stays longest, so these graphs reach the regime where
/// the path ends see different parts of a longest cycle.
pub fn cycle_with_handle<R: Rng>(rng: &mut R, k: usize, path_len: usize, chord_p: f64) -> Graph {
    let dist = |a: usize, b: usize| {
        let d = a.abs_diff(b);
        d.min(k - d)
    };
    let gap = path_len + 2;
    let mut ends: [Vec<usize>; 2] = [Vec::new(), Vec::new()];
    for _ in 0..64 {
        let side = rng.random_range(0..2);
        let v = rng.random_range(0..k);
        let other = &ends[1 - side];
        let own = &ends[side];
        if own.len() < 3 && !own.contains(&v) && other.iter().all(|&u| u == v || dist(u, v) >= gap)
        {
            ends[side].push(v);
        }
    }
    let x = k;
    let y = k + path_len;
    let mut edges: Vec<(usize, usize)> = (0..k).map(|i| (i, (i + 1) % k)).collect();
    edges.extend((x..y).map(|v| (v, v + 1)));
    edges.extend(ends[0].iter().map(|&v| (x, v)));
    edges.extend(ends[1].iter().map(|&v| (y, v)));
    edges.extend(
        (0..k)
            .tuple_combinations()
            .filter(|&(u, v)| dist(u, v) >= 2 && rng.random_bool(chord_p)),
    );
    Graph::build(y + 1, edges).unwrap()
}

/// Checks the cyclic sequence `verts` against the adjacency of `g`.
fn closes_cycle(g: &Graph, verts: &[usize]) -> bool {
    verts
        .iter()
        .zip(verts.iter().cycle().skip(1))
        .all(|(&u, &v)| g.has_edge(u, v))
}

/// Vertex sequences of every cycle of length `len`, each once: the least
/// vertex leads and the second vertex is smaller than the last.
pub fn cycles_by_permutation(g: &Graph, len: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if len < 3 {
        return out;
    }
    for subset in (0..g.order()).combinations(len) {
        let lead = subset[0];
        for rest in subset[1..].iter().copied().permutations(len - 1) {
            if rest[0] > rest[len - 2] {
                continue;
            }
            let mut cyc = vec![lead];
            cyc.extend(rest);
            if closes_cycle(g, &cyc) {
                out.push(cyc);
            }
        }
    }
    out.sort();
    out
}

/// Longest cycle length by trying vertex orderings, longest first.
pub fn longest_cycle_by_permutation(g: &Graph) -> usize {
    for len in (3..=g.order()).rev() {
        for subset in (0..g.order()).combinations(len) {
            let lead = subset[0];
            let found = subset[1..]
                .iter()
                .copied()
                .permutations(len - 1)
                .any(|rest| {
                    let mut cyc = vec![lead];
                    cyc.extend(rest);
                    closes_cycle(g, &cyc)
                });
            if found {
                return len;
            }
        }
    }
    0
}

/// Longest path (in edges) of the subgraph induced by `within`, by ordering
/// subsets; `None` for an empty set.
pub fn longest_path_by_permutation(g: &Graph, within: &[usize]) -> Option<usize> {
    if within.is_empty() {
        return None;
    }
    for len in (1..=within.len()).rev() {
        let found = within
            .iter()
            .copied()
            .permutations(len)
            .any(|seq| seq.windows(2).all(|w| g.has_edge(w[0], w[1])));
        if found {
            return Some(len - 1);
        }
    }
    unreachable!("a single vertex is a path")
}

fn connected_without(g: &Graph, removed: &[usize]) -> bool {
    let alive: Vec<usize> = (0..g.order()).filter(|v| !removed.contains(v)).collect();
    let Some(&start) = alive.first() else {
        return true;
    };
    let mut seen = vec![start];
    let mut stack = vec![start];
    while let Some(u) = stack.pop() {
        for &w in &alive {
            if g.has_edge(u, w) && !seen.contains(&w) {
                seen.push(w);
                stack.push(w);
            }
        }
    }
    seen.len() == alive.len()
}

/// Smallest number of vertices whose removal disconnects `g`; `n - 1` for
/// complete graphs.
pub fn connectivity_by_cuts(g: &Graph) -> usize {
    let n = g.order();
    for k in 0..n.saturating_sub(1) {
        for cut in (0..n).combinations(k) {
            if n - k >= 2 && !connected_without(g, &cut) {
                return k;
            }
        }
    }
    n.saturating_sub(1)
}

/// Every vertex set whose removal leaves a disconnected graph.
pub fn cut_sets(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.order();
    (0..n)
        .powerset()
        .filter(|cut| n - cut.len() >= 2 && !connected_without(g, cut))
        .collect()
}

/// Upper-triangle code of `g` relabeled by `perm` (new vertex `i` = old `perm[i]`).
fn code(g: &Graph, perm: &[usize]) -> u64 {
    let n = perm.len();
    let mut bits = 0u64;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if g.has_edge(perm[i], perm[j]) {
                bits |= 1 << k;
            }
            k += 1;
        }
    }
    bits
}

/// Smallest code over all relabelings. Feasible up to about seven vertices.
pub fn min_code(g: &Graph) -> u64 {
    (0..g.order())
        .permutations(g.order())
        .map(|p| code(g, &p))
        .min()
        .unwrap_or(0)
}

pub fn isomorphic_by_permutation(a: &Graph, b: &Graph) -> bool {
    if a.order() != b.order() || a.size() != b.size() {
        return false;
    }
    let target = code(b, &(0..b.order()).collect::<Vec<_>>());
    (0..a.order())
        .permutations(a.order())
        .any(|p| code(a, &p) == target)
}

/// One graph per isomorphism class on `n` vertices, found by rejecting every
/// labeled graph whose minimum code was already seen.
pub fn classes_by_rejection(n: usize) -> Vec<Graph> {
    let mut seen = std::collections::HashSet::new();
    labeled_graphs(n)
        .filter(|g| seen.insert(min_code(g)))
        .collect()
}

/// Number of unlabeled graphs on `n` vertices by Burnside's lemma: the
/// average over all vertex permutations of `2^(cycles on vertex pairs)`.
pub fn count_by_burnside(n: usize) -> u64 {
    let pairs: Vec<(usize, usize)> = (0..n).tuple_combinations().collect();
    let index = |u: usize, v: usize| {
        pairs
            .iter()
            .position(|&e| e == (u.min(v), u.max(v)))
            .unwrap()
    };
    let mut total: u128 = 0;
    let mut group = 0u128;
    for perm in (0..n).permutations(n) {
        let mut seen = vec![false; pairs.len()];
        let mut cycles = 0;
        for start in 0..pairs.len() {
            if seen[start] {
                continue;
            }
            cycles += 1;
            let mut e = start;
            while !seen[e] {
                seen[e] = true;
                let (u, v) = pairs[e];
                e = index(perm[u], perm[v]);
            }
        }
        total += 1u128 << cycles;
        group += 1;
    }
    (total / group) as u64
}
