//! Isomorph-free generation by canonical vertex augmentation.
//!
//! Every class is reached from exactly one parent: the class of the graph
//! with its canonical deletion vertex removed. That vertex is the
//! minimum-degree vertex placed last by the canonical labeling. Children of
//! one parent are deduplicated by canonical form. Degree-deficit and
//! edge-budget bounds cut off parents that cannot grow into a graph meeting
//! the constraints.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use thiserror::Error;

use crate::canon::canonical_form;
use crate::graph::{Graph, VertexSet};

/// Largest order the enumerator accepts.
pub const MAX_ENUM_ORDER: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumError {
    #[error("order {0} outside 1..={MAX_ENUM_ORDER}")]
    Order(usize),
    #[error("minimum degree {min_degree} impossible on {n} vertices")]
    MinDegree { n: usize, min_degree: usize },
    #[error("edge bound {max_edges} exceeds {limit} on {n} vertices")]
    MaxEdges {
        n: usize,
        max_edges: usize,
        limit: usize,
    },
}

/// Constraints for [`enumerate`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct EnumSpec {
    n: usize,
    min_degree: usize,
    max_edges: usize,
    biconnected: bool,
}

impl EnumSpec {
    /// All graphs on `n` vertices.
    pub fn new(n: usize) -> Result<EnumSpec, EnumError> {
        if !(1..=MAX_ENUM_ORDER).contains(&n) {
            return Err(EnumError::Order(n));
        }
        Ok(EnumSpec {
            n,
            min_degree: 0,
            max_edges: n * (n - 1) / 2,
            biconnected: false,
        })
    }

    pub fn min_degree(self, min_degree: usize) -> Result<EnumSpec, EnumError> {
        if min_degree >= self.n && min_degree > 0 {
            return Err(EnumError::MinDegree {
                n: self.n,
                min_degree,
            });
        }
        Ok(EnumSpec { min_degree, ..self })
    }

    pub fn max_edges(self, max_edges: usize) -> Result<EnumSpec, EnumError> {
        let limit = self.n * (self.n - 1) / 2;
        if max_edges > limit {
            return Err(EnumError::MaxEdges {
                n: self.n,
                max_edges,
                limit,
            });
        }
        Ok(EnumSpec { max_edges, ..self })
    }

    /// Like [`EnumSpec::max_edges`] but clamps to the complete graph's size.
    pub fn max_edges_at_most(self, max_edges: usize) -> EnumSpec {
        EnumSpec {
            max_edges: max_edges.min(self.n * (self.n - 1) / 2),
            ..self
        }
    }

    pub fn biconnected(self, required: bool) -> EnumSpec {
        EnumSpec {
            biconnected: required,
            ..self
        }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn min_degree_bound(&self) -> usize {
        self.min_degree
    }

    pub fn max_edges_bound(&self) -> usize {
        self.max_edges
    }

    pub fn requires_biconnected(&self) -> bool {
        self.biconnected
    }

    /// Whether a final graph meets every constraint.
    pub fn accepts(&self, g: &Graph) -> bool {
        g.order() == self.n
            && g.min_degree() >= self.min_degree
            && g.size() <= self.max_edges
            && (!self.biconnected || g.is_biconnected())
    }

    /// Necessary condition for `g` (on at most `n` vertices) to grow into an
    /// accepted graph by adding vertices.
    fn extendable(&self, g: &Graph) -> bool {
        let missing = self.n - g.order();
        let q = g.size();
        if q > self.max_edges {
            return false;
        }
        let mut deficit = 0;
        for v in 0..g.order() {
            let need = self.min_degree.saturating_sub(g.degree(v));
            if need > missing {
                return false;
            }
            deficit += need;
        }
        // edges from new vertices to old ones cover the deficit; new vertices
        // need min_degree endpoints each
        let new_endpoints = missing * self.min_degree;
        let extra = deficit.max((deficit + new_endpoints).div_ceil(2));
        q + extra <= self.max_edges
    }
}

/// The canonical deletion vertex: among minimum-degree vertices, the one
/// with the largest canonical position.
fn deletion_vertex(g: &Graph, labeling: &[usize]) -> usize {
    let delta = g.min_degree();
    *labeling
        .iter()
        .rev()
        .find(|&&v| g.degree(v) == delta)
        .expect("some vertex attains δ")
}

/// Children of the canonical graph `parent` that are canonical augmentations,
/// returned as canonical graphs in sorted order.
pub fn children(spec: &EnumSpec, parent: &Graph) -> Vec<Graph> {
    let k = parent.order();
    debug_assert!(k < spec.n);
    let mut kids = BTreeSet::new();
    for bits in 0u32..1 << k {
        let nbrs = VertexSet::from_bits(bits);
        let child = parent
            .with_vertex(nbrs)
            .expect("order stays below the limit");
        // deleting a vertex of another degree cannot give back `parent`
        if child.degree(k) > child.min_degree() {
            continue;
        }
        if !spec.extendable(&child) {
            continue;
        }
        let form = canonical_form(&child);
        let labeling: Vec<usize> = form.labeling().collect();
        let cut = deletion_vertex(&child, &labeling);
        if cut != k {
            let reduced = child
                .without_vertex(cut)
                .expect("child has k+1 >= 2 vertices");
            if canonical_form(&reduced).graph() != parent {
                continue;
            }
        }
        kids.insert(form.into_graph());
    }
    kids.into_iter().collect()
}

/// Calls `visit` on every accepted graph below the canonical graph `root`
/// (including `root` itself when it already has the full order).
pub fn extend<F: FnMut(Graph)>(spec: &EnumSpec, root: &Graph, visit: &mut F) {
    if root.order() == spec.n {
        if spec.accepts(root) {
            visit(*root);
        }
        return;
    }
    if !spec.extendable(root) {
        return;
    }
    for child in children(spec, root) {
        extend(spec, &child, visit);
    }
}

/// The canonical graphs on `depth` vertices from which the search for `spec`
/// continues; splitting work across these roots partitions the output.
pub fn roots(spec: &EnumSpec, depth: usize) -> Vec<Graph> {
    let depth = depth.clamp(1, spec.n);
    let mut level = Vec::new();
    let k1 = Graph::edgeless(1).expect("one vertex");
    if spec.extendable(&k1) {
        level.push(k1);
    }
    for _ in 1..depth {
        level = level.iter().flat_map(|g| children(spec, g)).collect();
    }
    level
}

/// One canonical representative of every isomorphism class meeting `spec`,
/// sorted by canonical adjacency.
pub fn enumerate(spec: &EnumSpec) -> Vec<Graph> {
    let mut out = Vec::new();
    for root in roots(spec, 1) {
        extend(spec, &root, &mut |g| out.push(g));
    }
    out.sort();
    out
}

/// Number of isomorphism classes meeting `spec`.
pub fn count(spec: &EnumSpec) -> usize {
    let mut total = 0;
    for root in roots(spec, 1) {
        extend(spec, &root, &mut |_| total += 1);
    }
    total
}
