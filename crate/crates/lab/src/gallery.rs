//! Extremal constructions showing that each hypothesis of the main theorem
//! is needed, with their measured properties.

use domcycle_core::bounds::q_max;
use domcycle_core::{DegreeTooSmall, Graph, GraphError};
use serde::Serialize;
use thiserror::Error;

use crate::analysis::Analysis;

/// Largest minimum degree the gallery builds. Every longest cycle is listed,
/// and `K_{δ+1}` alone has `δ!/2` of them.
pub const MAX_GALLERY_DELTA: usize = 6;

#[derive(Debug, Error)]
pub enum GalleryError {
    #[error(transparent)]
    Degree(#[from] DegreeTooSmall),
    #[error("minimum degree {0} above the gallery limit {MAX_GALLERY_DELTA}")]
    TooLarge(usize),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// The hypothesis an entry is meant to show cannot be dropped or weakened.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Claim {
    /// Connectivity 1 within the size bound, with a non-dominating longest cycle.
    Connectivity,
    /// 2-connected just above the size bound, with a non-dominating longest cycle.
    Size,
    /// Within all hypotheses, every longest cycle dominating, yet no Hamilton cycle.
    NotHamiltonian,
}

#[derive(Debug, Clone, Serialize)]
pub struct GalleryEntry {
    pub name: String,
    pub claim: Claim,
    #[serde(skip)]
    pub graph: Graph,
    pub analysis: Analysis,
    pub q_max: usize,
    pub demonstrates: bool,
    pub notes: Vec<String>,
}

impl GalleryEntry {
    fn new(
        name: String,
        claim: Claim,
        graph: Graph,
        delta: usize,
    ) -> Result<GalleryEntry, GalleryError> {
        let analysis = Analysis::of(&graph);
        let q_max = q_max(delta)?;
        let a = &analysis;
        let non_dominating = a.non_dominating_count() > 0;
        let right_degree = a.min_degree == delta;
        let demonstrates = right_degree
            && match claim {
                Claim::Connectivity => a.connectivity == 1 && a.q <= q_max && non_dominating,
                Claim::Size => a.connectivity >= 2 && a.q > q_max && non_dominating,
                Claim::NotHamiltonian => {
                    a.connectivity >= 2 && a.q <= q_max && !non_dominating && !a.hamiltonian
                }
            };
        let mut notes = Vec::new();
        if claim == Claim::Size && a.q > q_max + 1 {
            notes.push(format!(
                "q={} exceeds q_max={q_max} by {}; 2K1+3K{} reaches q={} with the same defect",
                a.q,
                a.q - q_max,
                delta - 1,
                q_max + 1
            ));
        }
        if claim == Claim::NotHamiltonian && a.q > q_max {
            notes.push(format!(
                "q={} exceeds q_max={q_max}, so this graph lies outside the size hypothesis at δ={delta}",
                a.q
            ));
        }
        Ok(GalleryEntry {
            name,
            claim,
            graph,
            analysis,
            q_max,
            demonstrates,
            notes,
        })
    }

    /// One summary line followed by any notes.
    pub fn render(&self) -> String {
        let a = &self.analysis;
        let status = if a.non_dominating_count() > 0 {
            "non-dominating longest cycle present"
        } else if a.cycles.is_empty() {
            "no cycle"
        } else {
            "every longest cycle dominating"
        };
        let mut text = format!(
            "{}: q={} {status} (n={} δ={} κ={} longest={} longest_cycles={} non_dominating={} {} q_max={}) claim={} demonstrated={}\n",
            self.name,
            a.q,
            a.n,
            a.min_degree,
            a.connectivity,
            a.longest_cycle,
            a.longest_cycle_count(),
            a.non_dominating_count(),
            if a.hamiltonian { "hamiltonian" } else { "non-hamiltonian" },
            self.q_max,
            match self.claim {
                Claim::Connectivity => "connectivity",
                Claim::Size => "size",
                Claim::NotHamiltonian => "not-hamiltonian",
            },
            if self.demonstrates { "yes" } else { "no" },
        );
        for note in &self.notes {
            text.push_str(&format!("  note: {note}\n"));
        }
        text
    }
}

fn k(n: usize) -> Result<Graph, GraphError> {
    Graph::complete(n)
}

/// `K_1 + 2K_δ`, the size counterexamples (the 8-vertex witness for `δ = 2`;
/// `K_2 + 3K_{δ-1}` and `2K_1 + 3K_{δ-1}` otherwise), and `K_δ + (δ+1)K_1`.
pub fn sharpness_gallery(delta: usize) -> Result<Vec<GalleryEntry>, GalleryError> {
    q_max(delta)?;
    if delta > MAX_GALLERY_DELTA {
        return Err(GalleryError::TooLarge(delta));
    }
    let apex = Graph::join(&k(1)?, &Graph::copies(2, &k(delta)?)?)?;
    let (size_name, size_graph) = if delta == 2 {
        ("witness8".to_string(), Graph::hexagon_with_handle())
    } else {
        (
            format!("K2+3K{}", delta - 1),
            Graph::join(&k(2)?, &Graph::copies(3, &k(delta - 1)?)?)?,
        )
    };
    let hub = Graph::join(&k(delta)?, &Graph::edgeless(delta + 1)?)?;
    let mut entries = vec![
        GalleryEntry::new(format!("K1+2K{delta}"), Claim::Connectivity, apex, delta)?,
        GalleryEntry::new(size_name, Claim::Size, size_graph, delta)?,
    ];
    if delta >= 3 {
        // dropping the hub edge leaves δ unchanged and lands exactly on q_max + 1
        let split = Graph::join(&Graph::edgeless(2)?, &Graph::copies(3, &k(delta - 1)?)?)?;
        entries.push(GalleryEntry::new(
            format!("2K1+3K{}", delta - 1),
            Claim::Size,
            split,
            delta,
        )?);
    }
    entries.push(GalleryEntry::new(
        format!("K{delta}+{}K1", delta + 1),
        Claim::NotHamiltonian,
        hub,
        delta,
    )?);
    Ok(entries)
}
