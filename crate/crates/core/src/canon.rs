//! Canonical labeling by individualization and equitable refinement.
//!
//! The search tree is pruned with automorphisms discovered at the leaves:
//! a leaf equivalent to the first leaf returns control to the node where the
//! two paths diverge, and siblings in the same orbit of the automorphisms
//! fixing the current prefix are skipped.

use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::graph::{Graph, VertexSet, MAX_VERTICES};

/// The canonical relabeling of a graph. Isomorphic graphs have equal forms.
///
/// Equality, hashing and ordering look only at the canonical graph, so the
/// ordering is the lexicographic order of canonical adjacency rows.
#[derive(Clone, Debug)]
pub struct CanonicalForm {
    labeling: Vec<u8>,
    graph: Graph,
}

impl CanonicalForm {
    /// `labeling()[i]` is the original vertex placed at canonical position `i`.
    pub fn labeling(&self) -> impl ExactSizeIterator<Item = usize> + '_ {
        self.labeling.iter().map(|&v| v as usize)
    }

    /// Canonical position of original vertex `v`.
    pub fn position_of(&self, v: usize) -> usize {
        self.labeling
            .iter()
            .position(|&u| u as usize == v)
            .expect("vertex in range")
    }

    /// The input graph relabeled into canonical order.
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn into_graph(self) -> Graph {
        self.graph
    }
}

impl PartialEq for CanonicalForm {
    fn eq(&self, other: &Self) -> bool {
        self.graph == other.graph
    }
}

impl Eq for CanonicalForm {}

impl PartialOrd for CanonicalForm {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for CanonicalForm {
    fn cmp(&self, other: &Self) -> Ordering {
        self.graph.cmp(&other.graph)
    }
}

impl core::hash::Hash for CanonicalForm {
    fn hash<H: core::hash::Hasher>(&self, state: &mut H) {
        self.graph.hash(state);
    }
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    let n = g.order();
    let mut search = Search {
        g,
        first: None,
        best: None,
        autos: Vec::new(),
    };
    let mut cells = Vec::with_capacity(n);
    cells.push(g.vertices().bits());
    refine(g, &mut cells);
    let mut path = Vec::with_capacity(n);
    search.visit(cells, &mut path);
    let best = search.best.expect("search reaches at least one leaf");
    CanonicalForm {
        labeling: best.labeling[..n].to_vec(),
        graph: Graph::from_rows(&best.rows[..n]).expect("relabeling keeps a simple graph"),
    }
}

/// Canonical form of `g`, returned as the relabeled graph only.
pub fn canonical_graph(g: &Graph) -> Graph {
    canonical_form(g).into_graph()
}

pub fn are_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.order() == b.order() && a.size() == b.size() && canonical_graph(a) == canonical_graph(b)
}

/// Splits cells by neighbor counts into other cells until the ordered
/// partition is equitable. Sub-cells keep the position of their parent and
/// are ordered by increasing count, so the result commutes with relabeling.
fn refine(g: &Graph, cells: &mut Vec<u32>) {
    let rows = g.rows();
    let mut scratch = Vec::with_capacity(rows.len());
    loop {
        let mut changed = false;
        let mut w = 0;
        while w < cells.len() {
            let splitter = cells[w];
            scratch.clear();
            for &cell in cells.iter() {
                if cell & (cell - 1) == 0 {
                    scratch.push(cell);
                    continue;
                }
                let mut buckets = [0u32; MAX_VERTICES + 1];
                let (mut lo, mut hi) = (MAX_VERTICES, 0);
                for v in VertexSet::from_bits(cell) {
                    let k = (rows[v] & splitter).count_ones() as usize;
                    buckets[k] |= 1 << v;
                    lo = lo.min(k);
                    hi = hi.max(k);
                }
                scratch.extend(buckets[lo..=hi].iter().copied().filter(|&b| b != 0));
            }
            if scratch.len() != cells.len() {
                changed = true;
                core::mem::swap(cells, &mut scratch);
            }
            w += 1;
        }
        if !changed {
            return;
        }
    }
}

struct Leaf {
    path: Vec<u8>,
    labeling: [u8; MAX_VERTICES],
    rows: [u32; MAX_VERTICES],
}

struct Search<'a> {
    g: &'a Graph,
    first: Option<Leaf>,
    best: Option<Leaf>,
    /// Automorphisms as vertex maps.
    autos: Vec<[u8; MAX_VERTICES]>,
}

impl Search<'_> {
    /// Returns `Some(depth)` when the rest of the tree down to `depth` is
    /// known to repeat leaves already seen.
    fn visit(&mut self, cells: Vec<u32>, path: &mut Vec<u8>) -> Option<usize> {
        let Some(target) = cells.iter().position(|&c| c & (c - 1) != 0) else {
            return self.leaf(&cells, path);
        };
        let depth = path.len();
        let mut explored = 0u32;
        for v in VertexSet::from_bits(cells[target]) {
            if explored != 0 && self.equivalent_to_explored(v, explored, path) {
                continue;
            }
            explored |= 1 << v;
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..target]);
            child.push(1 << v);
            child.push(cells[target] & !(1 << v));
            child.extend_from_slice(&cells[target + 1..]);
            refine(self.g, &mut child);
            path.push(v as u8);
            let jump = self.visit(child, path);
            path.pop();
            if let Some(level) = jump {
                if level < depth {
                    return Some(level);
                }
            }
        }
        None
    }

    fn leaf(&mut self, cells: &[u32], path: &[u8]) -> Option<usize> {
        let n = self.g.order();
        let mut labeling = [0u8; MAX_VERTICES];
        let mut position = [0u8; MAX_VERTICES];
        for (i, &c) in cells.iter().enumerate() {
            let v = c.trailing_zeros() as u8;
            labeling[i] = v;
            position[v as usize] = i as u8;
        }
        let mut rows = [0u32; MAX_VERTICES];
        for i in 0..n {
            let old = self.g.neighbors(labeling[i] as usize);
            rows[i] = old.iter().fold(0, |r, w| r | 1 << position[w]);
        }
        let leaf = Leaf {
            path: path.to_vec(),
            labeling,
            rows,
        };

        let Some(first) = &self.first else {
            self.best = Some(Leaf {
                path: leaf.path.clone(),
                ..leaf
            });
            self.first = Some(leaf);
            return None;
        };
        if first.rows[..n] == leaf.rows[..n] {
            let auto = compose(&first.labeling, &leaf.labeling, n);
            self.autos.push(auto);
            let common = first
                .path
                .iter()
                .zip(&leaf.path)
                .take_while(|(a, b)| a == b)
                .count();
            return Some(common);
        }
        let best = self.best.as_ref().expect("set with first");
        match leaf.rows[..n].cmp(&best.rows[..n]) {
            Ordering::Equal => {
                let auto = compose(&best.labeling, &leaf.labeling, n);
                self.autos.push(auto);
            }
            Ordering::Greater => self.best = Some(leaf),
            Ordering::Less => {}
        }
        None
    }

    /// Whether `v` shares an orbit with an explored sibling under the known
    /// automorphisms that fix every vertex of `path`.
    fn equivalent_to_explored(&self, v: usize, explored: u32, path: &[u8]) -> bool {
        let n = self.g.order();
        let mut parent = [0u8; MAX_VERTICES];
        for (i, p) in parent.iter_mut().enumerate().take(n) {
            *p = i as u8;
        }
        fn find(parent: &mut [u8; MAX_VERTICES], mut x: usize) -> usize {
            while parent[x] as usize != x {
                parent[x] = parent[parent[x] as usize];
                x = parent[x] as usize;
            }
            x
        }
        let mut any = false;
        for auto in &self.autos {
            if path.iter().any(|&p| auto[p as usize] != p) {
                continue;
            }
            any = true;
            for (x, &image) in auto.iter().enumerate().take(n) {
                let (a, b) = (find(&mut parent, x), find(&mut parent, image as usize));
                if a != b {
                    parent[a.max(b)] = a.min(b) as u8;
                }
            }
        }
        if !any {
            return false;
        }
        let root = find(&mut parent, v);
        VertexSet::from_bits(explored)
            .iter()
            .any(|u| find(&mut parent, u) == root)
    }
}

/// The vertex map sending `from[i]` to `to[i]`.
fn compose(from: &[u8; MAX_VERTICES], to: &[u8; MAX_VERTICES], n: usize) -> [u8; MAX_VERTICES] {
    let mut map = [0u8; MAX_VERTICES];
    for i in 0..n {
        map[from[i] as usize] = to[i];
    }
    map
}
