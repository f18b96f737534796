//! Classical sufficient conditions for long cycles, evaluated as
//! hypothesis / conclusion pairs so that sweeps can look for counterexamples.

use crate::bounds::hamiltonian_size_bound;
use crate::connectivity::vertex_connectivity;
use crate::cycles::{all_longest_cycles, all_longest_paths, longest_cycle_length, remainder};
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Implication {
    pub hypothesis: bool,
    pub conclusion: bool,
}

impl Implication {
    pub fn holds(&self) -> bool {
        !self.hypothesis || self.conclusion
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClassicalPredicates {
    /// `n >= 3` and `q <= δ² + δ - 1` ⟹ hamiltonian.
    pub size_hamiltonian: Implication,
    /// 2-connected ⟹ hamiltonian or a cycle of length at least `2δ`.
    pub two_delta_cycle: Implication,
    /// A longest cycle `C` and a longest path of `G \ C` with `p̄` edges exist
    /// ⟹ `|C| >= (p̄ + 2)(δ - p̄)` for every longest cycle.
    pub remainder_path: Implication,
    /// `n >= 3` and `d(x) + d(y) >= n` for all non-adjacent `x, y` ⟹ hamiltonian.
    pub ore: Implication,
}

impl ClassicalPredicates {
    pub fn all_hold(&self) -> bool {
        self.size_hamiltonian.holds()
            && self.two_delta_cycle.holds()
            && self.remainder_path.holds()
            && self.ore.holds()
    }
}

/// `|C| >= (p̄ + 2)(δ - p̄)` for every longest cycle `C` with a nonempty
/// remainder. Hypothesis is false when no such cycle exists.
pub fn remainder_path_bound(g: &Graph) -> Implication {
    let delta = g.min_degree() as i64;
    let mut out = Implication {
        hypothesis: false,
        conclusion: true,
    };
    if longest_cycle_length(g) == g.order() {
        return out;
    }
    for c in all_longest_cycles(g) {
        let Some(p) = all_longest_paths(g, remainder(g, &c)).into_iter().next() else {
            continue;
        };
        out.hypothesis = true;
        let p_bar = p.len() as i64;
        if (c.len() as i64) < (p_bar + 2) * (delta - p_bar) {
            out.conclusion = false;
        }
    }
    out
}

/// 2-connected graphs are hamiltonian or have a cycle of length `>= 2δ`.
pub fn two_delta_cycle(g: &Graph) -> Implication {
    let hypothesis = g.order() >= 3 && vertex_connectivity(g) >= 2;
    let longest = longest_cycle_length(g);
    Implication {
        hypothesis,
        conclusion: longest == g.order() || longest >= 2 * g.min_degree(),
    }
}

pub fn classical_predicates(g: &Graph) -> ClassicalPredicates {
    let n = g.order();
    let delta = g.min_degree();
    let hamiltonian = n >= 3 && longest_cycle_length(g) == n;
    let size_hamiltonian = Implication {
        hypothesis: n >= 3 && hamiltonian_size_bound(delta).is_some_and(|b| g.size() <= b),
        conclusion: hamiltonian,
    };
    let ore_condition =
        (0..n).all(|x| (x + 1..n).all(|y| g.has_edge(x, y) || g.degree(x) + g.degree(y) >= n));
    ClassicalPredicates {
        size_hamiltonian,
        two_delta_cycle: two_delta_cycle(g),
        remainder_path: remainder_path_bound(g),
        ore: Implication {
            hypothesis: n >= 3 && ore_condition,
            conclusion: hamiltonian,
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn five_cycle_meets_size_bound() {
        let p = classical_predicates(&Graph::cycle(5).unwrap());
        assert!(p.size_hamiltonian.hypothesis && p.size_hamiltonian.conclusion);
        assert!(p.all_hold());
    }

    #[test]
    fn two_delta_on_hub_graph() {
        let g = Graph::join(
            &Graph::complete(2).unwrap(),
            &Graph::copies(3, &Graph::complete(2).unwrap()).unwrap(),
        )
        .unwrap();
        let p = classical_predicates(&g);
        assert!(p.two_delta_cycle.hypothesis);
        assert_eq!(longest_cycle_length(&g), 6);
        assert!(p.two_delta_cycle.conclusion && p.two_delta_cycle.holds());
        assert!(!p.ore.hypothesis);
    }

    #[test]
    fn ore_vacuous_on_complete() {
        let p = classical_predicates(&Graph::complete(4).unwrap());
        assert!(p.ore.hypothesis && p.ore.conclusion && p.ore.holds());
        assert!(!p.remainder_path.hypothesis);
    }

    #[test]
    fn remainder_bound_on_witness() {
        // |C| = 6, p̄ = 1, δ = 2: 6 >= 3
        let imp = remainder_path_bound(&Graph::hexagon_with_handle());
        assert!(imp.hypothesis && imp.conclusion);
    }

    #[test]
    fn tiny_graphs_are_outside_every_hypothesis() {
        for g in [Graph::complete(1).unwrap(), Graph::complete(2).unwrap()] {
            let p = classical_predicates(&g);
            assert!(
                !p.size_hamiltonian.hypothesis
                    && !p.ore.hypothesis
                    && !p.two_delta_cycle.hypothesis
            );
        }
    }
}
