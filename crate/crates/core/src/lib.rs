//! Exact small-graph kernels for checking when longest cycles dominate.
//!
//! Everything here is pure and allocation-light: graphs are at most 32
//! vertices with one `u32` adjacency row each, so the crate builds without
//! `std`. File and stream handling, parallel sweeps and reports live in the
//! `domcycle-lab` crate.

#![no_std]

extern crate alloc;

pub mod bounds;
pub mod canon;
pub mod classical;
pub mod connectivity;
pub mod cycles;
pub mod enumerate;
pub mod graph;
pub mod graph6;
pub mod segments;

pub use bounds::{dominating_size_threshold, q_max, DegreeTooSmall};
pub use canon::{are_isomorphic, canonical_form, canonical_graph, CanonicalForm};
pub use classical::{classical_predicates, ClassicalPredicates, Implication};
pub use connectivity::vertex_connectivity;
pub use cycles::{
    all_longest_cycles, all_longest_paths, is_dominating, is_hamiltonian, longest_cycle_length,
    longest_path_in_remainder, off_cycle_edge, Cycle, CycleError, Path,
};
pub use enumerate::{enumerate, EnumError, EnumSpec};
pub use graph::{Graph, GraphError, VertexSet, MAX_VERTICES};
pub use graph6::Graph6Error;
pub use segments::{
    check_lemma1, check_lemma2, check_lemma3, check_lemma4, decompose, intermediate_paths,
    LemmaVerdict, SegmentDecomposition, SegmentError, Witness,
};
