//! Elementary segments of a longest cycle relative to a path off the cycle,
//! intermediate paths between segments, and executable checks of the four
//! structural inequalities about them.
//!
//! Given a cycle `C` and a path `P = x..y` avoiding it, the attachment
//! vertices `ξ_1..ξ_s` are `N_C(x) ∪ N_C(y)` in cycle order. Segment `I_i`
//! runs along `C` from `ξ_i` to `ξ_{i+1}`; its interior `I_i*` excludes both
//! ends. All inequalities are compared in integers, doubled where a half
//! would appear.

use alloc::vec::Vec;

use thiserror::Error;

use crate::bounds::dominating_size_threshold;
use crate::cycles::{all_longest_cycles, off_cycle_edge, Cycle, Path};
use crate::graph::{Graph, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SegmentError {
    #[error("the path shares vertex {0} with the cycle")]
    PathMeetsCycle(usize),
    #[error("neither end of the path has a neighbor on the cycle")]
    NoAttachments,
    #[error("segment index {0} out of range")]
    NoSuchSegment(usize),
    #[error("removing the given set leaves the graph connected")]
    NotACutSet,
    #[error("the graph is not 2-connected")]
    NotBiconnected,
}

/// One elementary segment `ξ_i → ξ_{i+1}` along the cycle's orientation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Segment {
    pub from: usize,
    pub to: usize,
    /// Edge count `|I_i|`.
    pub length: usize,
    /// `V(I_i*)`, the vertices strictly between `from` and `to`.
    pub interior: VertexSet,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SegmentDecomposition {
    xi: Vec<usize>,
    segments: Vec<Segment>,
}

impl SegmentDecomposition {
    /// Attachment vertices in cycle order.
    pub fn attachments(&self) -> &[usize] {
        &self.xi
    }

    pub fn segments(&self) -> &[Segment] {
        &self.segments
    }

    pub fn count(&self) -> usize {
        self.segments.len()
    }

    pub fn total_length(&self) -> usize {
        self.segments.iter().map(|s| s.length).sum()
    }
}

/// `N_C(v)`.
pub fn cycle_neighbors(g: &Graph, c: &Cycle, v: usize) -> VertexSet {
    g.neighbors(v).intersection(c.vertex_set())
}

/// Splits `c` at `N_C(x) ∪ N_C(y)` where `x`, `y` are the ends of `p`.
pub fn decompose(g: &Graph, c: &Cycle, p: &Path) -> Result<SegmentDecomposition, SegmentError> {
    let on_cycle = c.vertex_set();
    if let Some(v) = p.vertex_set().intersection(on_cycle).first() {
        return Err(SegmentError::PathMeetsCycle(v));
    }
    let attach = cycle_neighbors(g, c, p.start()).union(cycle_neighbors(g, c, p.end()));
    if attach.is_empty() {
        return Err(SegmentError::NoAttachments);
    }
    let order = c.to_vec();
    let len = order.len();
    let positions: Vec<usize> = (0..len).filter(|&i| attach.contains(order[i])).collect();
    let xi: Vec<usize> = positions.iter().map(|&i| order[i]).collect();
    let segments = positions
        .iter()
        .enumerate()
        .map(|(k, &i)| {
            let j = positions[(k + 1) % positions.len()];
            let length = match (j + len - i) % len {
                0 => len,
                d => d,
            };
            let interior = (1..length).map(|t| order[(i + t) % len]).collect();
            Segment {
                from: order[i],
                to: order[j],
                length,
                interior,
            }
        })
        .collect();
    Ok(SegmentDecomposition { xi, segments })
}

/// A path `z..w` from the interior of segment `a` to the interior of segment
/// `b` whose other vertices avoid both the cycle and the reference path.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct IntermediatePath {
    pub verts: Vec<usize>,
    pub a: usize,
    pub b: usize,
}

impl IntermediatePath {
    /// Edge count `|L|`.
    pub fn len(&self) -> usize {
        self.verts.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.verts.len() < 2
    }
}

/// The set `M(I_a, I_b)` of all intermediate paths between two segments.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct IntermediatePaths {
    pub paths: Vec<IntermediatePath>,
}

impl IntermediatePaths {
    /// Whether every intermediate path is a single edge, i.e. `M ⊆ E(G)`.
    pub fn all_are_edges(&self) -> bool {
        self.paths.iter().all(|l| l.len() == 1)
    }

    pub fn longest(&self) -> Option<&IntermediatePath> {
        self.paths.iter().max_by_key(|l| l.len())
    }

    pub fn len(&self) -> usize {
        self.paths.len()
    }

    pub fn is_empty(&self) -> bool {
        self.paths.is_empty()
    }
}

/// Exhaustive search for intermediate paths between segments `a` and `b`.
pub fn intermediate_paths(
    g: &Graph,
    c: &Cycle,
    p: &Path,
    dec: &SegmentDecomposition,
    a: usize,
    b: usize,
) -> Result<IntermediatePaths, SegmentError> {
    let seg = |i: usize| dec.segments.get(i).ok_or(SegmentError::NoSuchSegment(i));
    let (from, to) = (seg(a)?.interior, seg(b)?.interior);
    let free = g
        .vertices()
        .difference(c.vertex_set())
        .difference(p.vertex_set());
    let mut out = IntermediatePaths::default();
    if a == b {
        return Ok(out);
    }

    fn walk(
        g: &Graph,
        free: VertexSet,
        to: VertexSet,
        stack: &mut Vec<usize>,
        seen: VertexSet,
        found: &mut Vec<Vec<usize>>,
    ) {
        let end = *stack.last().expect("nonempty");
        for w in g.neighbors(end).intersection(to) {
            stack.push(w);
            found.push(stack.clone());
            stack.pop();
        }
        for w in g.neighbors(end).intersection(free).difference(seen) {
            stack.push(w);
            walk(
                g,
                free,
                to,
                stack,
                seen.union(VertexSet::singleton(w)),
                found,
            );
            stack.pop();
        }
    }

    let mut found = Vec::new();
    for z in from {
        let mut stack = alloc::vec![z];
        walk(g, free, to, &mut stack, VertexSet::singleton(z), &mut found);
    }
    out.paths = found
        .into_iter()
        .map(|verts| IntermediatePath { verts, a, b })
        .collect();
    out.paths.sort();
    Ok(out)
}

/// What a lemma check measured.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    /// Hypotheses failed before anything was measured.
    None,
    Lemma1 {
        p_bar: usize,
        sigma1: usize,
        sigma2: usize,
    },
    Lemma2 {
        a: usize,
        b: usize,
        /// `|M(I_a, I_b)|`.
        intermediate_count: usize,
        longest_intermediate: usize,
        /// Right side of the per-path bound using the longest path.
        general_rhs: i64,
        /// Right side of the all-edges bound, when `M` is 1 to 3 edges.
        edge_rhs: Option<i64>,
    },
    Lemma3 {
        component: VertexSet,
        h: usize,
        q_h: usize,
    },
    Lemma4(Lemma4Branch),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Lemma4Branch {
    /// `q` reached the threshold.
    Size,
    /// Every longest cycle is dominating.
    Dominating,
    /// Neither branch: a non-dominating longest cycle below the threshold.
    Neither {
        cycle: Cycle,
        off_edge: (usize, usize),
    },
}

/// Outcome of one inequality check. `holds` is vacuously true when the
/// hypotheses are not met; `lhs >= rhs` is the checked inequality otherwise.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LemmaVerdict {
    pub applicable: bool,
    pub holds: bool,
    pub lhs: i64,
    pub rhs: i64,
    pub witness: Witness,
}

impl LemmaVerdict {
    fn vacuous(witness: Witness) -> Self {
        LemmaVerdict {
            applicable: false,
            holds: true,
            lhs: 0,
            rhs: 0,
            witness,
        }
    }

    fn compare(lhs: i64, rhs: i64, witness: Witness) -> Self {
        LemmaVerdict {
            applicable: true,
            holds: lhs >= rhs,
            lhs,
            rhs,
            witness,
        }
    }

    pub fn violated(&self) -> bool {
        self.applicable && !self.holds
    }
}

/// Cycle length versus degree when the path ends see different, non-trivial
/// parts of the cycle: for `p̄ = 1`, `|C| >= 3δ + max(σ1, σ2) - 1`; for
/// `p̄ >= 2`, `|C| >= max(2p̄ + 8, 4δ - 2p̄)`.
///
/// `c` is assumed to be a longest cycle and `p` a longest path of `G \ C`.
pub fn check_lemma1(g: &Graph, c: &Cycle, p: &Path) -> LemmaVerdict {
    let (nx, ny) = (
        cycle_neighbors(g, c, p.start()),
        cycle_neighbors(g, c, p.end()),
    );
    let p_bar = p.len();
    let sigma1 = nx.difference(ny).len();
    let sigma2 = ny.difference(nx).len();
    let witness = Witness::Lemma1 {
        p_bar,
        sigma1,
        sigma2,
    };
    if p_bar < 1 || nx.len() < 2 || ny.len() < 2 || nx == ny {
        return LemmaVerdict::vacuous(witness);
    }
    let delta = g.min_degree() as i64;
    let p = p_bar as i64;
    let rhs = if p_bar == 1 {
        3 * delta + sigma1.max(sigma2) as i64 - 1
    } else {
        (2 * p + 8).max(4 * delta - 2 * p)
    };
    LemmaVerdict::compare(c.len() as i64, rhs, witness)
}

/// Segment-pair bounds when both path ends see the same cycle vertices:
/// for every pair `a < b`, `|I_a| + |I_b| >= 2p̄ + 2|L| + 4` for the longest
/// intermediate path `L`, and `|I_a| + |I_b| >= 2p̄ + i + 5` when the
/// intermediate paths are exactly `i ∈ {1,2,3}` single edges.
///
/// Returns no verdicts when `N_C(x) != N_C(y)` or `|N_C(x)| < 2`.
pub fn check_lemma2(g: &Graph, c: &Cycle, p: &Path) -> Vec<LemmaVerdict> {
    let nx = cycle_neighbors(g, c, p.start());
    if nx != cycle_neighbors(g, c, p.end()) || nx.len() < 2 {
        return Vec::new();
    }
    let dec = decompose(g, c, p).expect("two attachments exist");
    let p_bar = p.len() as i64;
    let s = dec.count();
    let mut out = Vec::with_capacity(s * (s - 1) / 2);
    for a in 0..s {
        for b in a + 1..s {
            let m = intermediate_paths(g, c, p, &dec, a, b).expect("indices in range");
            let lhs = (dec.segments[a].length + dec.segments[b].length) as i64;
            let Some(longest) = m.longest() else {
                out.push(LemmaVerdict::vacuous(Witness::Lemma2 {
                    a,
                    b,
                    intermediate_count: 0,
                    longest_intermediate: 0,
                    general_rhs: 0,
                    edge_rhs: None,
                }));
                continue;
            };
            let general_rhs = 2 * p_bar + 2 * longest.len() as i64 + 4;
            let i = m.len();
            let edge_rhs =
                (m.all_are_edges() && (1..=3).contains(&i)).then(|| 2 * p_bar + i as i64 + 5);
            let rhs = general_rhs.max(edge_rhs.unwrap_or(i64::MIN));
            out.push(LemmaVerdict::compare(
                lhs,
                rhs,
                Witness::Lemma2 {
                    a,
                    b,
                    intermediate_count: i,
                    longest_intermediate: longest.len(),
                    general_rhs,
                    edge_rhs,
                },
            ));
        }
    }
    out
}

/// Edge count near each component `H` of `G \ S`: with `h = |V(H)|` and
/// `q_H` the number of edges meeting `V(H)`, checks `2 q_H >= h (2δ - h + 1)`.
pub fn check_lemma3(g: &Graph, cut: VertexSet) -> Result<Vec<LemmaVerdict>, SegmentError> {
    let rest = g.vertices().difference(cut);
    let comps = g.components(rest);
    if comps.len() < 2 {
        return Err(SegmentError::NotACutSet);
    }
    let delta = g.min_degree() as i64;
    Ok(comps
        .into_iter()
        .map(|component| {
            let h = component.len();
            let q_h = g.size() - g.edges_within(g.vertices().difference(component));
            let rhs = h as i64 * (2 * delta - h as i64 + 1);
            LemmaVerdict::compare(2 * q_h as i64, rhs, Witness::Lemma3 { component, h, q_h })
        })
        .collect())
}

/// For 2-connected `g` with `3δ >= n - 2`: either `q` reaches
/// [`dominating_size_threshold`] or every longest cycle is dominating.
pub fn check_lemma4(g: &Graph) -> Result<LemmaVerdict, SegmentError> {
    if !g.is_biconnected() {
        return Err(SegmentError::NotBiconnected);
    }
    let (n, q, delta) = (g.order(), g.size(), g.min_degree());
    let threshold = dominating_size_threshold(delta).expect("2-connected implies δ >= 2");
    if 3 * delta + 2 < n {
        return Ok(LemmaVerdict::vacuous(Witness::None));
    }
    let (lhs, rhs) = (q as i64, threshold as i64);
    if q >= threshold {
        return Ok(LemmaVerdict::compare(
            lhs,
            rhs,
            Witness::Lemma4(Lemma4Branch::Size),
        ));
    }
    let offending = all_longest_cycles(g)
        .into_iter()
        .find_map(|c| off_cycle_edge(g, &c).map(|e| (c, e)));
    Ok(match offending {
        None => LemmaVerdict {
            applicable: true,
            holds: true,
            lhs,
            rhs,
            witness: Witness::Lemma4(Lemma4Branch::Dominating),
        },
        Some((cycle, off_edge)) => LemmaVerdict {
            applicable: true,
            holds: false,
            lhs,
            rhs,
            witness: Witness::Lemma4(Lemma4Branch::Neither { cycle, off_edge }),
        },
    })
}
