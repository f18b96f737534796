//! Immutable simple graphs on at most 32 vertices, one `u32` adjacency row per vertex.

use alloc::vec::Vec;
use core::fmt;

use thiserror::Error;

/// Largest supported order.
pub const MAX_VERTICES: usize = 32;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("a graph needs at least one vertex")]
    NoVertices,
    #[error("order {0} exceeds the {MAX_VERTICES}-vertex limit")]
    TooManyVertices(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("adjacency is not symmetric between {0} and {1}")]
    Asymmetric(usize, usize),
    #[error("a cycle needs at least 3 vertices, got {0}")]
    CycleTooShort(usize),
}

/// A set of vertices stored as a bitmask.
#[derive(Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexSet(u32);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    #[inline]
    pub const fn from_bits(bits: u32) -> Self {
        VertexSet(bits)
    }

    /// `{0, 1, ..., n-1}`.
    #[inline]
    pub const fn prefix(n: usize) -> Self {
        if n >= 32 {
            VertexSet(u32::MAX)
        } else {
            VertexSet((1u32 << n) - 1)
        }
    }

    #[inline]
    pub const fn singleton(v: usize) -> Self {
        VertexSet(1u32 << v)
    }

    #[inline]
    pub const fn bits(self) -> u32 {
        self.0
    }

    #[inline]
    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub const fn contains(self, v: usize) -> bool {
        v < 32 && self.0 >> v & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        self.0 |= 1 << v;
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1 << v);
    }

    #[inline]
    pub const fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    #[inline]
    pub const fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    #[inline]
    pub const fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    #[inline]
    pub const fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    /// Smallest member.
    #[inline]
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    #[inline]
    pub fn iter(self) -> VertexIter {
        VertexIter(self.0)
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut set = VertexSet::EMPTY;
        for v in iter {
            set.insert(v);
        }
        set
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = VertexIter;

    fn into_iter(self) -> VertexIter {
        self.iter()
    }
}

/// Ascending iterator over the members of a [`VertexSet`].
#[derive(Clone, Debug)]
pub struct VertexIter(u32);

impl Iterator for VertexIter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let k = self.0.count_ones() as usize;
        (k, Some(k))
    }
}

impl ExactSizeIterator for VertexIter {}

/// A simple undirected graph. Rows beyond `n` are always zero, so the derived
/// ordering compares `(n, rows)` lexicographically.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Graph {
    n: u8,
    adj: [u32; MAX_VERTICES],
}

impl Graph {
    /// Builds a graph from an edge list. Repeated edges are harmless.
    pub fn build<I>(n: usize, edges: I) -> Result<Graph, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::edgeless(n)?;
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::Loop(u));
            }
            g.adj[u] |= 1 << v;
            g.adj[v] |= 1 << u;
        }
        Ok(g)
    }

    /// Builds a graph from adjacency rows, validating every representation invariant.
    pub fn from_rows(rows: &[u32]) -> Result<Graph, GraphError> {
        let n = rows.len();
        let mut g = Graph::edgeless(n)?;
        let mask = VertexSet::prefix(n).bits();
        for (v, &row) in rows.iter().enumerate() {
            if row & !mask != 0 {
                let vertex = (row & !mask).trailing_zeros() as usize;
                return Err(GraphError::VertexOutOfRange { vertex, n });
            }
            if row >> v & 1 == 1 {
                return Err(GraphError::Loop(v));
            }
            g.adj[v] = row;
        }
        for u in 0..n {
            for v in VertexSet(rows[u]) {
                if rows[v] >> u & 1 == 0 {
                    return Err(GraphError::Asymmetric(u, v));
                }
            }
        }
        Ok(g)
    }

    /// `K̄_k`, the graph on `k` vertices with no edges.
    pub fn edgeless(k: usize) -> Result<Graph, GraphError> {
        match k {
            0 => Err(GraphError::NoVertices),
            k if k > MAX_VERTICES => Err(GraphError::TooManyVertices(k)),
            k => Ok(Graph {
                n: k as u8,
                adj: [0; MAX_VERTICES],
            }),
        }
    }

    /// `K_k`.
    pub fn complete(k: usize) -> Result<Graph, GraphError> {
        let mut g = Graph::edgeless(k)?;
        let all = VertexSet::prefix(k).bits();
        for v in 0..k {
            g.adj[v] = all & !(1 << v);
        }
        Ok(g)
    }

    /// The cycle `0 1 ... k-1 0`; `k >= 3`.
    pub fn cycle(k: usize) -> Result<Graph, GraphError> {
        if k < 3 {
            return Err(GraphError::CycleTooShort(k));
        }
        Graph::build(k, (0..k).map(|i| (i, (i + 1) % k)))
    }

    /// Disjoint union, vertices numbered block by block in argument order.
    pub fn disjoint_union(parts: &[Graph]) -> Result<Graph, GraphError> {
        let total: usize = parts.iter().map(Graph::order).sum();
        let mut g = Graph::edgeless(total)?;
        let mut offset = 0;
        for part in parts {
            for v in 0..part.order() {
                g.adj[offset + v] = part.adj[v] << offset;
            }
            offset += part.order();
        }
        Ok(g)
    }

    /// `k` disjoint copies of `part`.
    pub fn copies(k: usize, part: &Graph) -> Result<Graph, GraphError> {
        let parts: Vec<Graph> = core::iter::repeat_n(*part, k).collect();
        Graph::disjoint_union(&parts)
    }

    /// The join `g1 + g2`: disjoint union plus every edge between the two sides.
    pub fn join(g1: &Graph, g2: &Graph) -> Result<Graph, GraphError> {
        let mut g = Graph::disjoint_union(&[*g1, *g2])?;
        let (n1, n2) = (g1.order(), g2.order());
        let left = VertexSet::prefix(n1).bits();
        let right = VertexSet::prefix(n2).bits() << n1;
        for v in 0..n1 {
            g.adj[v] |= right;
        }
        for v in n1..n1 + n2 {
            g.adj[v] |= left;
        }
        Ok(g)
    }

    /// The eight-vertex graph made of a hexagon `0..5` and the path `0 6 7 3`.
    pub fn hexagon_with_handle() -> Graph {
        Graph::build(
            8,
            [
                (0, 1),
                (1, 2),
                (2, 3),
                (3, 4),
                (4, 5),
                (5, 0),
                (0, 6),
                (6, 7),
                (7, 3),
            ],
        )
        .expect("fixed edge list is valid")
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n as usize
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.rows()
            .iter()
            .map(|r| r.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn min_degree(&self) -> usize {
        self.rows()
            .iter()
            .map(|r| r.count_ones() as usize)
            .min()
            .unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        self.rows()
            .iter()
            .map(|r| r.count_ones() as usize)
            .max()
            .unwrap_or(0)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::prefix(self.order())
    }

    /// Adjacency rows `0..n`.
    #[inline]
    pub fn rows(&self) -> &[u32] {
        &self.adj[..self.order()]
    }

    /// Edges `(u, v)` with `u < v`, ordered by `u` then `v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.order()).flat_map(move |u| {
            VertexSet(self.adj[u] & !((2u32 << u).wrapping_sub(1)))
                .iter()
                .map(move |v| (u, v))
        })
    }

    pub fn is_complete(&self) -> bool {
        self.size() == self.order() * (self.order() - 1) / 2
    }

    /// Number of edges with both endpoints in `set`.
    pub fn edges_within(&self, set: VertexSet) -> usize {
        set.iter()
            .map(|v| (self.adj[v] & set.0).count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// Vertices reachable from `start` inside `within` (`start` must lie in `within`).
    pub fn reach(&self, start: usize, within: VertexSet) -> VertexSet {
        let mut seen = 1u32 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for v in VertexSet(frontier) {
                next |= self.adj[v];
            }
            next &= within.0 & !seen;
            seen |= next;
            frontier = next;
        }
        VertexSet(seen)
    }

    /// Connected components of the subgraph induced by `within`, ordered by least vertex.
    pub fn components(&self, within: VertexSet) -> Vec<VertexSet> {
        let mut left = within;
        let mut out = Vec::new();
        while let Some(v) = left.first() {
            let comp = self.reach(v, left);
            left = left.difference(comp);
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.reach(0, self.vertices()) == self.vertices()
    }

    /// True iff the graph is connected, has at least three vertices and no cut vertex.
    pub fn is_biconnected(&self) -> bool {
        let all = self.vertices();
        if self.order() < 3 || !self.is_connected() {
            return false;
        }
        all.iter().all(|v| {
            let rest = all.difference(VertexSet::singleton(v));
            let start = rest.first().expect("n >= 3");
            self.reach(start, rest) == rest
        })
    }

    /// The subgraph induced by `set`, its vertices renumbered in increasing order.
    pub fn induced(&self, set: VertexSet) -> Result<Graph, GraphError> {
        let verts: Vec<usize> = set.iter().collect();
        let mut g = Graph::edgeless(verts.len())?;
        for (i, &u) in verts.iter().enumerate() {
            for (j, &v) in verts.iter().enumerate() {
                if self.has_edge(u, v) {
                    g.adj[i] |= 1 << j;
                }
            }
        }
        Ok(g)
    }

    /// Relabels so that new vertex `i` is old vertex `order[i]`; `order` must be a permutation.
    pub fn permuted(&self, order: &[usize]) -> Graph {
        debug_assert_eq!(order.len(), self.order());
        let mut position = [0usize; MAX_VERTICES];
        for (i, &v) in order.iter().enumerate() {
            position[v] = i;
        }
        let mut g = Graph {
            n: self.n,
            adj: [0; MAX_VERTICES],
        };
        for (i, &v) in order.iter().enumerate() {
            g.adj[i] = VertexSet(self.adj[v])
                .iter()
                .fold(0, |row, w| row | 1 << position[w]);
        }
        g
    }

    /// Appends a vertex adjacent to `nbrs`.
    pub fn with_vertex(&self, nbrs: VertexSet) -> Result<Graph, GraphError> {
        let n = self.order();
        if n == MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n + 1));
        }
        if let Some(bad) = nbrs.difference(self.vertices()).first() {
            return Err(GraphError::VertexOutOfRange { vertex: bad, n });
        }
        let mut g = *self;
        g.n += 1;
        g.adj[n] = nbrs.0;
        for v in nbrs {
            g.adj[v] |= 1 << n;
        }
        Ok(g)
    }

    /// Removes `v`, shifting the labels above it down by one.
    pub fn without_vertex(&self, v: usize) -> Result<Graph, GraphError> {
        let n = self.order();
        if v >= n {
            return Err(GraphError::VertexOutOfRange { vertex: v, n });
        }
        let mut g = Graph::edgeless(n - 1)?;
        let low = (1u32 << v) - 1;
        for (i, u) in (0..n).filter(|&u| u != v).enumerate() {
            let row = self.adj[u];
            g.adj[i] = (row & low) | ((row >> 1) & !low);
        }
        Ok(g)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        f.write_str("])")
    }
}
