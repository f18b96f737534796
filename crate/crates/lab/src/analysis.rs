//! Per-graph facts: order, size, degrees, connectivity and every longest
//! cycle with its domination status.

use domcycle_core::bounds::q_max;
use domcycle_core::graph6;
use domcycle_core::{all_longest_cycles, off_cycle_edge, vertex_connectivity, Graph};
use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CycleStatus {
    pub cycle: Vec<usize>,
    /// An edge with neither end on the cycle; absent when the cycle dominates.
    pub off_cycle_edge: Option<[usize; 2]>,
}

impl CycleStatus {
    pub fn dominating(&self) -> bool {
        self.off_cycle_edge.is_none()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Analysis {
    pub graph6: String,
    pub n: usize,
    pub q: usize,
    pub min_degree: usize,
    pub connectivity: usize,
    /// 0 for forests.
    pub longest_cycle: usize,
    pub hamiltonian: bool,
    /// Size bound for the graph's own minimum degree, when it has one.
    pub q_max: Option<usize>,
    pub cycles: Vec<CycleStatus>,
}

impl Analysis {
    pub fn of(g: &Graph) -> Analysis {
        let cycles: Vec<CycleStatus> = all_longest_cycles(g)
            .iter()
            .map(|c| CycleStatus {
                cycle: c.to_vec(),
                off_cycle_edge: off_cycle_edge(g, c).map(|(u, v)| [u, v]),
            })
            .collect();
        let longest_cycle = cycles.first().map_or(0, |c| c.cycle.len());
        Analysis {
            graph6: graph6::emit(g),
            n: g.order(),
            q: g.size(),
            min_degree: g.min_degree(),
            connectivity: vertex_connectivity(g),
            longest_cycle,
            hamiltonian: g.order() >= 3 && longest_cycle == g.order(),
            q_max: q_max(g.min_degree()).ok(),
            cycles,
        }
    }

    pub fn longest_cycle_count(&self) -> usize {
        self.cycles.len()
    }

    pub fn non_dominating_count(&self) -> usize {
        self.cycles.iter().filter(|c| !c.dominating()).count()
    }

    /// Multi-line text: a header line, then one line per longest cycle.
    pub fn render(&self) -> String {
        let mut text = format!(
            "{}: n={} q={} δ={} κ={}",
            self.graph6, self.n, self.q, self.min_degree, self.connectivity
        );
        if self.cycles.is_empty() {
            text.push_str(" no cycle\n");
            return text;
        }
        text.push_str(&format!(
            " longest={} {} longest_cycles={} non_dominating={}\n",
            self.longest_cycle,
            if self.hamiltonian {
                "hamiltonian"
            } else {
                "non-hamiltonian"
            },
            self.longest_cycle_count(),
            self.non_dominating_count()
        ));
        for c in &self.cycles {
            match c.off_cycle_edge {
                None => text.push_str(&format!("  {:?} dominating\n", c.cycle)),
                Some([u, v]) => {
                    text.push_str(&format!("  {:?} non-dominating, misses {u}-{v}\n", c.cycle))
                }
            }
        }
        text
    }
}
