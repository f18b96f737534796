//! Exact longest cycles and paths by depth-first branch and bound.
//!
//! A cycle is grown from its least vertex `s` through vertices larger than
//! `s` only, so each cycle is met from exactly one anchor. The bound is the
//! current path length plus everything still reachable from the path's end
//! through unused vertices.

use alloc::vec::Vec;
use core::fmt;

use thiserror::Error;

use crate::graph::{Graph, VertexSet, MAX_VERTICES};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CycleError {
    #[error("a cycle needs at least 3 vertices, got {0}")]
    TooShort(usize),
    #[error("vertex {0} repeats")]
    Repeated(usize),
    #[error("vertex {0} is not in the graph")]
    OutOfRange(usize),
    #[error("{0} and {1} are not adjacent")]
    NotAdjacent(usize, usize),
}

/// A cycle of length at least 3, stored in canonical orientation: least vertex
/// first, then the smaller of its two cycle neighbors.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cycle {
    verts: Vec<u8>,
}

impl Cycle {
    /// Validates `verts` as a cycle of `g` and rotates/reflects it into canonical orientation.
    pub fn new(g: &Graph, verts: &[usize]) -> Result<Cycle, CycleError> {
        if verts.len() < 3 {
            return Err(CycleError::TooShort(verts.len()));
        }
        check_walk(g, verts)?;
        let (last, first) = (verts[verts.len() - 1], verts[0]);
        if !g.has_edge(last, first) {
            return Err(CycleError::NotAdjacent(last, first));
        }
        let len = verts.len();
        let start = (0..len).min_by_key(|&i| verts[i]).expect("nonempty");
        let next = verts[(start + 1) % len];
        let prev = verts[(start + len - 1) % len];
        let out = if next < prev {
            (0..len).map(|i| verts[(start + i) % len] as u8).collect()
        } else {
            (0..len)
                .map(|i| verts[(start + len - i) % len] as u8)
                .collect()
        };
        Ok(Cycle { verts: out })
    }

    /// Number of edges, which equals the number of vertices.
    pub fn len(&self) -> usize {
        self.verts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.verts.is_empty()
    }

    pub fn vertices(&self) -> impl ExactSizeIterator<Item = usize> + Clone + '_ {
        self.verts.iter().map(|&v| v as usize)
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.vertices().collect()
    }

    /// Position of `v` along the cycle, if it lies on it.
    pub fn position(&self, v: usize) -> Option<usize> {
        self.verts.iter().position(|&u| u as usize == v)
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.vertices().collect()
    }
}

impl fmt::Debug for Cycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cycle{:?}", self.verts)
    }
}

/// A path, possibly a single vertex. Paths returned by the search functions
/// start at the smaller endpoint.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Path {
    verts: Vec<u8>,
}

impl Path {
    pub fn new(g: &Graph, verts: &[usize]) -> Result<Path, CycleError> {
        if verts.is_empty() {
            return Err(CycleError::TooShort(0));
        }
        check_walk(g, verts)?;
        Ok(Path {
            verts: verts.iter().map(|&v| v as u8).collect(),
        })
    }

    /// Number of edges.
    pub fn len(&self) -> usize {
        self.verts.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.verts.len() == 1
    }

    pub fn vertex_count(&self) -> usize {
        self.verts.len()
    }

    pub fn start(&self) -> usize {
        self.verts[0] as usize
    }

    pub fn end(&self) -> usize {
        self.verts[self.verts.len() - 1] as usize
    }

    pub fn vertices(&self) -> impl ExactSizeIterator<Item = usize> + Clone + '_ {
        self.verts.iter().map(|&v| v as usize)
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.vertices().collect()
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.vertices().collect()
    }
}

impl fmt::Debug for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Path{:?}", self.verts)
    }
}

fn check_walk(g: &Graph, verts: &[usize]) -> Result<(), CycleError> {
    let mut seen = VertexSet::EMPTY;
    for &v in verts {
        if v >= g.order() {
            return Err(CycleError::OutOfRange(v));
        }
        if seen.contains(v) {
            return Err(CycleError::Repeated(v));
        }
        seen.insert(v);
    }
    for w in verts.windows(2) {
        if !g.has_edge(w[0], w[1]) {
            return Err(CycleError::NotAdjacent(w[0], w[1]));
        }
    }
    Ok(())
}

/// Upper bound on the number of path vertices that can still follow `end`.
#[inline]
fn reachable(rows: &[u32], end: usize, free: u32) -> usize {
    let mut seen = 0u32;
    let mut frontier = rows[end] & free;
    while frontier != 0 {
        seen |= frontier;
        let mut next = 0;
        let mut f = frontier;
        while f != 0 {
            let v = f.trailing_zeros() as usize;
            f &= f - 1;
            next |= rows[v];
        }
        frontier = next & free & !seen;
    }
    seen.count_ones() as usize
}

struct CycleSearch<'a> {
    rows: &'a [u32],
    start: usize,
    best: usize,
    /// When set, collect every cycle of exactly this length instead of maximising.
    target: Option<usize>,
    path: [u8; MAX_VERTICES],
    found: Vec<Cycle>,
}

impl CycleSearch<'_> {
    /// `len` counts the vertices on the current path, which ends at `end`.
    fn grow(&mut self, end: usize, free: u32, len: usize) {
        let rows = self.rows;
        let closes = len >= 3 && rows[end] >> self.start & 1 == 1;
        match self.target {
            None => {
                if closes && len > self.best {
                    self.best = len;
                }
                if len + reachable(rows, end, free) <= self.best {
                    return;
                }
            }
            Some(target) => {
                if len == target {
                    // reflection twin has path[1] > path[len - 1]
                    if closes && self.path[1] < self.path[len - 1] {
                        self.found.push(Cycle {
                            verts: self.path[..len].to_vec(),
                        });
                    }
                    return;
                }
                if len + reachable(rows, end, free) < target {
                    return;
                }
            }
        }
        let mut next = rows[end] & free;
        while next != 0 {
            let v = next.trailing_zeros() as usize;
            next &= next - 1;
            self.path[len] = v as u8;
            self.grow(v, free & !(1 << v), len + 1);
            if self.target.is_none() && self.best == self.rows.len() {
                return;
            }
        }
    }
}

/// Length of a longest cycle, 0 if the graph is a forest.
pub fn longest_cycle_length(g: &Graph) -> usize {
    let rows = g.rows();
    let n = rows.len();
    let mut best = 0;
    for s in 0..n {
        let free = VertexSet::prefix(n).bits() & !VertexSet::prefix(s + 1).bits();
        if (free.count_ones() as usize) < best {
            break;
        }
        let mut search = CycleSearch {
            rows,
            start: s,
            best,
            target: None,
            path: [0; MAX_VERTICES],
            found: Vec::new(),
        };
        search.path[0] = s as u8;
        search.grow(s, free, 1);
        best = search.best;
        if best == n {
            break;
        }
    }
    best
}

/// Every cycle of length `len`, each once, sorted.
pub fn cycles_of_length(g: &Graph, len: usize) -> Vec<Cycle> {
    let rows = g.rows();
    let n = rows.len();
    let mut out = Vec::new();
    if len < 3 || len > n {
        return out;
    }
    for s in 0..=n - len {
        let free = VertexSet::prefix(n).bits() & !VertexSet::prefix(s + 1).bits();
        let mut search = CycleSearch {
            rows,
            start: s,
            best: 0,
            target: Some(len),
            path: [0; MAX_VERTICES],
            found: Vec::new(),
        };
        search.path[0] = s as u8;
        search.grow(s, free, 1);
        out.append(&mut search.found);
    }
    out.sort();
    out
}

/// Every longest cycle, each once up to rotation and reflection, sorted.
pub fn all_longest_cycles(g: &Graph) -> Vec<Cycle> {
    match longest_cycle_length(g) {
        0 => Vec::new(),
        len => cycles_of_length(g, len),
    }
}

pub fn is_hamiltonian(g: &Graph) -> bool {
    g.order() >= 3 && longest_cycle_length(g) == g.order()
}

/// An edge of `g` with neither endpoint on `c`, if any.
pub fn off_cycle_edge(g: &Graph, c: &Cycle) -> Option<(usize, usize)> {
    let off = g.vertices().difference(c.vertex_set());
    off.iter().find_map(|u| {
        g.neighbors(u)
            .intersection(off)
            .iter()
            .find(|&v| v > u)
            .map(|v| (u, v))
    })
}

/// True iff every edge of `g` meets `c`.
pub fn is_dominating(g: &Graph, c: &Cycle) -> Result<bool, CycleError> {
    Cycle::new(g, &c.to_vec())?;
    Ok(off_cycle_edge(g, c).is_none())
}

/// All longest paths of the subgraph induced by `within`, each listed once
/// starting from its smaller endpoint, sorted lexicographically. Empty when
/// `within` is empty.
pub fn all_longest_paths(g: &Graph, within: VertexSet) -> Vec<Path> {
    struct PathSearch<'a> {
        rows: &'a [u32],
        best: usize,
        path: [u8; MAX_VERTICES],
        found: Vec<Path>,
    }
    impl PathSearch<'_> {
        fn grow(&mut self, end: usize, free: u32, len: usize) {
            if len > self.best {
                self.best = len;
                self.found.clear();
            }
            if len == self.best && (len == 1 || self.path[0] < self.path[len - 1]) {
                self.found.push(Path {
                    verts: self.path[..len].to_vec(),
                });
            }
            if len + reachable(self.rows, end, free) < self.best {
                return;
            }
            let mut next = self.rows[end] & free;
            while next != 0 {
                let v = next.trailing_zeros() as usize;
                next &= next - 1;
                self.path[len] = v as u8;
                self.grow(v, free & !(1 << v), len + 1);
            }
        }
    }

    let mut search = PathSearch {
        rows: g.rows(),
        best: 0,
        path: [0; MAX_VERTICES],
        found: Vec::new(),
    };
    for s in within {
        search.path[0] = s as u8;
        search.grow(s, within.bits() & !(1 << s), 1);
    }
    let mut found = search.found;
    found.sort();
    found
}

/// The off-cycle vertices `V(G) \ V(C)`.
pub fn remainder(g: &Graph, c: &Cycle) -> VertexSet {
    g.vertices().difference(c.vertex_set())
}

/// A longest path of `G \ V(C)`, the lexicographically least one among ties;
/// `None` when `c` is a Hamilton cycle.
pub fn longest_path_in_remainder(g: &Graph, c: &Cycle) -> Option<Path> {
    all_longest_paths(g, remainder(g, c)).into_iter().next()
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn k(n: usize) -> Graph {
        Graph::complete(n).unwrap()
    }

    fn k2_3k1() -> Graph {
        Graph::join(&k(2), &Graph::edgeless(3).unwrap()).unwrap()
    }

    #[test]
    fn longest_lengths() {
        assert_eq!(longest_cycle_length(&k2_3k1()), 4);
        assert_eq!(longest_cycle_length(&Graph::hexagon_with_handle()), 6);
        let tree = Graph::build(5, [(0, 1), (1, 2), (1, 3), (3, 4)]).unwrap();
        assert_eq!(longest_cycle_length(&tree), 0);
        assert_eq!(longest_cycle_length(&k(1)), 0);
        assert_eq!(longest_cycle_length(&k(2)), 0);
        assert_eq!(longest_cycle_length(&k(3)), 3);
    }

    #[test]
    fn enumerates_longest_cycles() {
        assert_eq!(all_longest_cycles(&Graph::cycle(6).unwrap()).len(), 1);
        assert_eq!(all_longest_cycles(&k(4)).len(), 3);
        assert_eq!(all_longest_cycles(&k(5)).len(), 12);
        let w = Graph::hexagon_with_handle();
        let cycles = all_longest_cycles(&w);
        assert_eq!(cycles.len(), 3);
        let hexagon = Cycle::new(&w, &[0, 1, 2, 3, 4, 5]).unwrap();
        assert!(cycles.contains(&hexagon));
        assert!(all_longest_cycles(&k(2)).is_empty());
    }

    #[test]
    fn canonical_orientation() {
        let g = k(5);
        let a = Cycle::new(&g, &[3, 1, 4, 0, 2]).unwrap();
        let b = Cycle::new(&g, &[0, 4, 1, 3, 2]).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.to_vec(), vec![0, 2, 3, 1, 4]);
        assert_eq!(Cycle::new(&g, &[0, 1]), Err(CycleError::TooShort(2)));
        assert_eq!(Cycle::new(&g, &[0, 1, 0]), Err(CycleError::Repeated(0)));
        let c6 = Graph::cycle(6).unwrap();
        assert_eq!(
            Cycle::new(&c6, &[0, 1, 2]),
            Err(CycleError::NotAdjacent(2, 0))
        );
        assert_eq!(Cycle::new(&c6, &[0, 1, 7]), Err(CycleError::OutOfRange(7)));
    }

    #[test]
    fn domination() {
        let w = Graph::hexagon_with_handle();
        let hexagon = Cycle::new(&w, &[0, 1, 2, 3, 4, 5]).unwrap();
        assert_eq!(is_dominating(&w, &hexagon), Ok(false));
        assert_eq!(off_cycle_edge(&w, &hexagon), Some((6, 7)));

        let g = k2_3k1();
        for c in all_longest_cycles(&g) {
            assert_eq!(is_dominating(&g, &c), Ok(true));
        }
        let c6 = Graph::cycle(6).unwrap();
        let ham = Cycle::new(&c6, &[0, 1, 2, 3, 4, 5]).unwrap();
        assert_eq!(is_dominating(&c6, &ham), Ok(true));
        // a cycle that does not belong to the graph
        let foreign = Cycle::new(&k(6), &[0, 2, 4]).unwrap();
        assert!(is_dominating(&c6, &foreign).is_err());
    }

    #[test]
    fn hamiltonicity() {
        assert!(is_hamiltonian(&k(4)));
        assert!(!is_hamiltonian(&k2_3k1()));
        assert!(!is_hamiltonian(
            &Graph::build(4, [(0, 1), (0, 2), (0, 3)]).unwrap()
        ));
        assert!(!is_hamiltonian(&k(2)));
    }

    #[test]
    fn remainder_paths() {
        let c6 = Graph::cycle(6).unwrap();
        let ham = Cycle::new(&c6, &[0, 1, 2, 3, 4, 5]).unwrap();
        assert_eq!(longest_path_in_remainder(&c6, &ham), None);

        let w = Graph::hexagon_with_handle();
        let hexagon = Cycle::new(&w, &[0, 1, 2, 3, 4, 5]).unwrap();
        let p = longest_path_in_remainder(&w, &hexagon).unwrap();
        assert_eq!((p.to_vec(), p.len()), (vec![6, 7], 1));

        let g = k2_3k1();
        for c in all_longest_cycles(&g) {
            let p = longest_path_in_remainder(&g, &c).unwrap();
            assert_eq!(p.len(), 0);
        }
    }

    #[test]
    fn longest_paths_are_listed_once() {
        let p4 = Graph::build(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        let paths = all_longest_paths(&p4, p4.vertices());
        assert_eq!(paths.len(), 1);
        assert_eq!(paths[0].to_vec(), vec![0, 1, 2, 3]);
        let star = Graph::build(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        let paths = all_longest_paths(&star, star.vertices());
        assert_eq!(paths.len(), 3);
        assert_eq!(paths[0].to_vec(), vec![1, 0, 2]);
        let isolated = all_longest_paths(&Graph::edgeless(3).unwrap(), VertexSet::prefix(3));
        assert_eq!(isolated.len(), 3);
        assert!(all_longest_paths(&star, VertexSet::EMPTY).is_empty());
    }
}
