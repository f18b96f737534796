//! Exhaustive and streamed sweeps.
//!
//! Work is split per graph (and, for enumeration, per search-tree root) and
//! run on rayon. Per-graph tallies are merged in input order and violation
//! rows are sorted afterwards, so serial and parallel runs agree exactly.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use domcycle_core::bounds::{max_order, q_max};
use domcycle_core::classical::{remainder_path_bound, two_delta_cycle};
use domcycle_core::cycles::{all_longest_paths, remainder};
use domcycle_core::enumerate::{extend, roots, MAX_ENUM_ORDER};
use domcycle_core::graph6;
use domcycle_core::segments::Witness;
use domcycle_core::{
    all_longest_cycles, canonical_graph, check_lemma1, check_lemma2, check_lemma3, check_lemma4,
    decompose, longest_cycle_length, off_cycle_edge, vertex_connectivity, Cycle, CycleError,
    DegreeTooSmall, EnumError, EnumSpec, Graph, Graph6Error, LemmaVerdict, VertexSet,
};
use rayon::prelude::*;
use thiserror::Error;

use crate::report::{DomainSpec, Summary, VerificationReport, Violation};

/// Search-tree depth at which enumeration is split into parallel tasks.
const ROOT_DEPTH: usize = 5;

#[derive(Debug, Error)]
pub enum DomainError {
    #[error(transparent)]
    Degree(#[from] DegreeTooSmall),
    #[error(transparent)]
    Enum(#[from] EnumError),
    #[error("domain reaches {needed} vertices, past the enumeration limit of {MAX_ENUM_ORDER}; give a smaller n_max")]
    TooLarge { needed: usize },
    #[error("empty size range {from}..={to}")]
    EmptyRange { from: usize, to: usize },
}

/// Every graph meeting `spec`, in canonical form and sorted.
pub fn enumerate_parallel(spec: &EnumSpec) -> Vec<Graph> {
    let tops = roots(spec, spec.order().min(ROOT_DEPTH));
    let mut out: Vec<Graph> = tops
        .par_iter()
        .flat_map_iter(|root| {
            let mut found = Vec::new();
            extend(spec, root, &mut |g| found.push(g));
            found
        })
        .collect();
    out.sort_unstable();
    out
}

/// All graphs on `n_min..=n_max` vertices, optionally only the 2-connected ones.
pub fn graphs_up_to(
    n_min: usize,
    n_max: usize,
    biconnected: bool,
) -> Result<Vec<Graph>, DomainError> {
    if n_max > MAX_ENUM_ORDER {
        return Err(DomainError::TooLarge { needed: n_max });
    }
    let mut out = Vec::new();
    for n in n_min.max(1)..=n_max {
        let spec = if biconnected {
            if n < 3 {
                continue;
            }
            // 2-connected forces δ >= 2, which prunes the search
            EnumSpec::new(n)?.min_degree(2)?.biconnected(true)
        } else {
            EnumSpec::new(n)?
        };
        out.extend(enumerate_parallel(&spec));
    }
    Ok(out)
}

/// Which graphs count as satisfying the hypotheses of the main theorem.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Applicability {
    /// `q <= q_max(δ(G))` for the graph's own minimum degree.
    #[default]
    OwnDegree,
    /// `δ(G) >= d` and `q <= q_max(d)`: the domain swept for a fixed `d`.
    AtLeast(usize),
}

impl Applicability {
    pub fn applies(self, g: &Graph) -> bool {
        let delta = g.min_degree();
        let bound = match self {
            Applicability::OwnDegree => q_max(delta).ok(),
            Applicability::AtLeast(d) if delta >= d => q_max(d).ok(),
            Applicability::AtLeast(_) => None,
        };
        g.order() >= 3 && bound.is_some_and(|b| g.size() <= b) && vertex_connectivity(g) >= 2
    }
}

/// The exhaustive domain for a fixed minimum degree: 2-connected graphs with
/// `δ >= delta` and `q <= q_max(delta)`, which the handshake bound confines
/// to `n <= 2 q_max / delta`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Theorem1Domain {
    pub delta: usize,
    pub q_max: usize,
    pub n_min: usize,
    pub n_max: usize,
}

pub fn theorem1_domain(delta: usize, n_max: Option<usize>) -> Result<Theorem1Domain, DomainError> {
    let q = q_max(delta)?;
    let bound = max_order(delta, q);
    let n_max = n_max.map_or(bound, |k| k.min(bound));
    if n_max > MAX_ENUM_ORDER {
        return Err(DomainError::TooLarge { needed: n_max });
    }
    Ok(Theorem1Domain {
        delta,
        q_max: q,
        n_min: delta + 1,
        n_max,
    })
}

impl Theorem1Domain {
    pub fn specs(&self) -> Result<Vec<EnumSpec>, DomainError> {
        (self.n_min..=self.n_max)
            .map(|n| {
                Ok(EnumSpec::new(n)?
                    .min_degree(self.delta)?
                    .max_edges_at_most(self.q_max)
                    .biconnected(true))
            })
            .collect()
    }

    pub fn graphs(&self) -> Result<Vec<Graph>, DomainError> {
        Ok(self.specs()?.iter().flat_map(enumerate_parallel).collect())
    }

    pub fn describe(&self) -> DomainSpec {
        DomainSpec {
            source: "enumeration".into(),
            delta: Some(self.delta),
            n_min: Some(self.n_min),
            n_max: Some(self.n_max),
            q_to: Some(self.q_max),
            biconnected: Some(true),
            ..Default::default()
        }
    }
}

/// Counters for a run of graphs; merging is associative.
#[derive(Debug, Clone, Default)]
struct Tally {
    scanned: usize,
    applicable: usize,
    instances: usize,
    confirmed: usize,
    violations: Vec<Violation>,
}

impl Tally {
    fn absorb(&mut self, other: Tally) {
        self.scanned += other.scanned;
        self.applicable += other.applicable;
        self.instances += other.instances;
        self.confirmed += other.confirmed;
        self.violations.extend(other.violations);
    }

    /// Records one check on the current graph.
    fn check(&mut self, holds: bool, row: impl FnOnce() -> Violation) {
        self.instances += 1;
        if holds {
            self.confirmed += 1;
        } else {
            self.violations.push(row());
        }
    }
}

fn run<F>(graphs: &[Graph], per_graph: F) -> Tally
where
    F: Fn(&Graph) -> Tally + Sync,
{
    let tallies: Vec<Tally> = graphs
        .par_iter()
        .map(|g| {
            let mut t = per_graph(&canonical_graph(g));
            t.scanned = 1;
            t
        })
        .collect();
    let mut total = Tally::default();
    for t in tallies {
        total.absorb(t);
    }
    total.violations.sort();
    total
}

fn report(kind: &str, domain: DomainSpec, tally: Tally, started: Instant) -> VerificationReport {
    VerificationReport {
        summary: Summary {
            kind: kind.into(),
            domain,
            graphs_scanned: tally.scanned,
            applicable: tally.applicable,
            instances: tally.instances,
            confirmed: tally.confirmed,
            violations: tally.violations.len(),
            errors: 0,
            wall_time_ms: started.elapsed().as_millis() as u64,
        },
        violations: tally.violations,
        errors: Vec::new(),
    }
}

fn row(
    g: &Graph,
    cycle: Option<&Cycle>,
    off_edge: Option<(usize, usize)>,
    detail: Option<String>,
) -> Violation {
    Violation {
        graph6: graph6::emit(g),
        n: g.order(),
        q: g.size(),
        min_degree: g.min_degree(),
        connectivity: vertex_connectivity(g),
        longest_cycle: longest_cycle_length(g),
        cycle: cycle.map(Cycle::to_vec),
        off_cycle_edge: off_edge.map(|(u, v)| [u, v]),
        detail,
    }
}

/// Domination of every longest cycle; one row per graph that has a
/// non-dominating one, showing the first.
fn domination(g: &Graph, t: &mut Tally) {
    let cycles = all_longest_cycles(g);
    let mut bad = Vec::new();
    for c in &cycles {
        t.instances += 1;
        match off_cycle_edge(g, c) {
            None => t.confirmed += 1,
            Some(e) => bad.push((c, e)),
        }
    }
    if let Some(&(c, e)) = bad.first() {
        let detail = format!(
            "{} of {} longest cycles non-dominating",
            bad.len(),
            cycles.len()
        );
        t.violations.push(row(g, Some(c), Some(e), Some(detail)));
    }
}

/// Checks that every longest cycle of every applicable graph is dominating.
/// Graphs are put in canonical form first, so rows refer to canonical labels.
pub fn verify_theorem1(
    graphs: &[Graph],
    rule: Applicability,
    domain: DomainSpec,
) -> VerificationReport {
    let started = Instant::now();
    let tally = run(graphs, |g| {
        let mut t = Tally::default();
        if rule.applies(g) {
            t.applicable = 1;
            domination(g, &mut t);
        }
        t
    });
    report("theorem1", domain, tally, started)
}

/// Looks for 2-connected graphs with minimum degree exactly `delta` and size
/// in `q_from..=q_to` that have a non-dominating longest cycle. Each witness
/// becomes a row.
pub fn tightness_search(
    delta: usize,
    q_from: usize,
    q_to: usize,
    n_max: usize,
) -> Result<VerificationReport, DomainError> {
    let started = Instant::now();
    if delta < 2 {
        return Err(DegreeTooSmall(delta).into());
    }
    if q_from > q_to {
        return Err(DomainError::EmptyRange {
            from: q_from,
            to: q_to,
        });
    }
    let n_max = n_max.min(max_order(delta, q_to));
    if n_max > MAX_ENUM_ORDER {
        return Err(DomainError::TooLarge { needed: n_max });
    }
    let mut graphs = Vec::new();
    for n in delta + 1..=n_max {
        let spec = EnumSpec::new(n)?
            .min_degree(delta)?
            .max_edges_at_most(q_to)
            .biconnected(true);
        graphs.extend(enumerate_parallel(&spec));
    }
    let tally = run(&graphs, |g| {
        let mut t = Tally::default();
        if g.min_degree() == delta && (q_from..=q_to).contains(&g.size()) {
            t.applicable = 1;
            domination(g, &mut t);
        }
        t
    });
    let domain = DomainSpec {
        source: "enumeration".into(),
        delta: Some(delta),
        n_min: Some(delta + 1),
        n_max: Some(n_max),
        q_from: Some(q_from),
        q_to: Some(q_to),
        biconnected: Some(true),
        input: None,
    };
    Ok(report("tightness", domain, tally, started))
}

/// A check for [`lemma_sweep`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Check {
    Lemma1,
    Lemma2,
    Lemma3,
    Lemma4,
    /// With at least two attachment vertices, every elementary segment has
    /// length at least 2.
    Segments,
    TheoremD,
    TheoremE,
}

impl Check {
    pub const ALL: [Check; 7] = [
        Check::Lemma1,
        Check::Lemma2,
        Check::Lemma3,
        Check::Lemma4,
        Check::Segments,
        Check::TheoremD,
        Check::TheoremE,
    ];

    pub fn kind(self) -> &'static str {
        match self {
            Check::Lemma1 => "lemma1",
            Check::Lemma2 => "lemma2",
            Check::Lemma3 => "lemma3",
            Check::Lemma4 => "lemma4",
            Check::Segments => "segments",
            Check::TheoremD => "theorem_d",
            Check::TheoremE => "theorem_e",
        }
    }

    fn selector(self) -> &'static str {
        match self {
            Check::Lemma1 => "1",
            Check::Lemma2 => "2",
            Check::Lemma3 => "3",
            Check::Lemma4 => "4",
            Check::Segments => "S",
            Check::TheoremD => "D",
            Check::TheoremE => "E",
        }
    }

    /// Whether the natural domain is the 2-connected graphs.
    pub fn wants_biconnected(self) -> bool {
        matches!(self, Check::Lemma4 | Check::TheoremD)
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.selector())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown check {0:?}; expected one of 1, 2, 3, 4, S, D, E")]
pub struct UnknownCheck(String);

impl FromStr for Check {
    type Err = UnknownCheck;

    fn from_str(s: &str) -> Result<Check, UnknownCheck> {
        Check::ALL
            .into_iter()
            .find(|c| c.selector().eq_ignore_ascii_case(s) || c.kind() == s)
            .ok_or_else(|| UnknownCheck(s.into()))
    }
}

fn verdict_row(g: &Graph, c: Option<&Cycle>, v: &LemmaVerdict, what: String) -> Violation {
    row(g, c, None, Some(format!("{what}: {} < {}", v.lhs, v.rhs)))
}

fn cycle_path_pairs(g: &Graph) -> Vec<(Cycle, domcycle_core::Path)> {
    let mut out = Vec::new();
    for c in all_longest_cycles(g) {
        for p in all_longest_paths(g, remainder(g, &c)) {
            out.push((c.clone(), p));
        }
    }
    out
}

fn check_graph(g: &Graph, check: Check) -> Tally {
    let mut t = Tally::default();
    match check {
        Check::Lemma1 => {
            for (c, p) in cycle_path_pairs(g) {
                let v = check_lemma1(g, &c, &p);
                if v.applicable {
                    let what = match v.witness {
                        Witness::Lemma1 {
                            p_bar,
                            sigma1,
                            sigma2,
                        } => {
                            format!(
                                "lemma 1 path {:?} p̄={p_bar} σ1={sigma1} σ2={sigma2}",
                                p.to_vec()
                            )
                        }
                        _ => String::new(),
                    };
                    t.check(v.holds, || verdict_row(g, Some(&c), &v, what));
                }
            }
        }
        Check::Lemma2 => {
            for (c, p) in cycle_path_pairs(g) {
                for v in check_lemma2(g, &c, &p) {
                    if v.applicable {
                        let what = match v.witness {
                            Witness::Lemma2 { a, b, intermediate_count, .. } => format!(
                                "lemma 2 path {:?} segments {a},{b} with {intermediate_count} intermediate paths",
                                p.to_vec()
                            ),
                            _ => String::new(),
                        };
                        t.check(v.holds, || verdict_row(g, Some(&c), &v, what));
                    }
                }
            }
        }
        Check::Segments => {
            for (c, p) in cycle_path_pairs(g) {
                let Ok(dec) = decompose(g, &c, &p) else {
                    continue;
                };
                if dec.count() >= 2 {
                    let shortest = dec.segments().iter().map(|s| s.length).min().unwrap_or(0);
                    t.check(shortest >= 2, || {
                        let detail = format!(
                            "path {:?} leaves a segment of length {shortest}",
                            p.to_vec()
                        );
                        row(g, Some(&c), None, Some(detail))
                    });
                }
            }
        }
        Check::Lemma3 => {
            let n = g.order();
            for bits in 0u32..1 << n {
                let cut = VertexSet::from_bits(bits);
                if n - cut.len() < 2 {
                    continue;
                }
                let Ok(verdicts) = check_lemma3(g, cut) else {
                    continue;
                };
                for v in verdicts {
                    if let Witness::Lemma3 { component, h, q_h } = v.witness {
                        let what = format!(
                            "lemma 3 cut {:?} component {:?} h={h} q_H={q_h}",
                            cut.iter().collect::<Vec<_>>(),
                            component.iter().collect::<Vec<_>>()
                        );
                        t.check(v.holds, || verdict_row(g, None, &v, what));
                    }
                }
            }
        }
        Check::Lemma4 => {
            if let Ok(v) = check_lemma4(g) {
                if v.applicable {
                    t.check(v.holds, || match &v.witness {
                        Witness::Lemma4(domcycle_core::segments::Lemma4Branch::Neither {
                            cycle,
                            off_edge,
                        }) => {
                            let detail = format!(
                                "lemma 4: q={} below {} with a non-dominating longest cycle",
                                v.lhs, v.rhs
                            );
                            row(g, Some(cycle), Some(*off_edge), Some(detail))
                        }
                        _ => verdict_row(g, None, &v, "lemma 4".into()),
                    });
                }
            }
        }
        Check::TheoremD => {
            let imp = two_delta_cycle(g);
            if imp.hypothesis {
                t.check(imp.conclusion, || {
                    row(
                        g,
                        None,
                        None,
                        Some(format!("no cycle of length {}", 2 * g.min_degree())),
                    )
                });
            }
        }
        Check::TheoremE => {
            let imp = remainder_path_bound(g);
            if imp.hypothesis {
                t.check(imp.conclusion, || {
                    row(g, None, None, Some("|C| < (p̄+2)(δ-p̄)".into()))
                });
            }
        }
    }
    t.applicable = usize::from(t.instances > 0);
    t
}

/// Runs one check over every graph. A graph is applicable when at least one
/// instance (triple, cut component, ...) meets the check's hypotheses.
pub fn lemma_sweep(graphs: &[Graph], check: Check, domain: DomainSpec) -> VerificationReport {
    let started = Instant::now();
    let tally = run(graphs, |g| check_graph(g, check));
    report(check.kind(), domain, tally, started)
}

#[derive(Debug, Error)]
pub enum RevalidationError {
    #[error(transparent)]
    Graph6(#[from] Graph6Error),
    #[error("recorded {field} is {recorded}, recomputed {actual}")]
    Mismatch {
        field: &'static str,
        recorded: usize,
        actual: usize,
    },
    #[error(transparent)]
    Cycle(#[from] CycleError),
    #[error("recorded cycle is not a longest cycle")]
    NotLongest,
    #[error("recorded edge is missing or touches the cycle")]
    NotOffCycle,
}

/// Rebuilds a row from its graph6 string alone: the recorded invariants must
/// match, and a recorded cycle/edge pair must be a longest cycle and an edge
/// it misses.
pub fn revalidate(row: &Violation) -> Result<(), RevalidationError> {
    let g = graph6::parse(&row.graph6)?;
    let fields = [
        ("n", row.n, g.order()),
        ("q", row.q, g.size()),
        ("min_degree", row.min_degree, g.min_degree()),
        ("connectivity", row.connectivity, vertex_connectivity(&g)),
        ("longest_cycle", row.longest_cycle, longest_cycle_length(&g)),
    ];
    for (field, recorded, actual) in fields {
        if recorded != actual {
            return Err(RevalidationError::Mismatch {
                field,
                recorded,
                actual,
            });
        }
    }
    if let Some(verts) = &row.cycle {
        let c = Cycle::new(&g, verts)?;
        if row.off_cycle_edge.is_some() && c.len() != row.longest_cycle {
            return Err(RevalidationError::NotLongest);
        }
        if let Some([u, v]) = row.off_cycle_edge {
            let on = c.vertex_set();
            if u >= g.order()
                || v >= g.order()
                || !g.has_edge(u, v)
                || on.contains(u)
                || on.contains(v)
            {
                return Err(RevalidationError::NotOffCycle);
            }
        }
    }
    Ok(())
}

/// Runs `f` on a pool of `threads` workers, or on the global pool.
pub fn with_threads<T, F>(threads: Option<usize>, f: F) -> Result<T, rayon::ThreadPoolBuildError>
where
    T: Send,
    F: FnOnce() -> T + Send,
{
    match threads {
        None => Ok(f()),
        Some(k) => Ok(rayon::ThreadPoolBuilder::new()
            .num_threads(k)
            .build()?
            .install(f)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k(n: usize) -> Graph {
        Graph::complete(n).unwrap()
    }

    #[test]
    fn domains() {
        let d2 = theorem1_domain(2, None).unwrap();
        assert_eq!((d2.q_max, d2.n_min, d2.n_max), (8, 3, 8));
        let d3 = theorem1_domain(3, None).unwrap();
        assert_eq!((d3.q_max, d3.n_max), (14, 9));
        assert!(matches!(
            theorem1_domain(4, None),
            Err(DomainError::TooLarge { needed: 13 })
        ));
        assert_eq!(theorem1_domain(4, Some(8)).unwrap().n_max, 8);
        assert!(matches!(
            theorem1_domain(1, None),
            Err(DomainError::Degree(_))
        ));
    }

    #[test]
    fn applicability() {
        let witness = Graph::hexagon_with_handle();
        assert!(!Applicability::OwnDegree.applies(&witness));
        let apex = Graph::join(&k(1), &Graph::copies(2, &k(2)).unwrap()).unwrap();
        assert!(!Applicability::OwnDegree.applies(&apex));
        assert!(Applicability::OwnDegree.applies(&Graph::cycle(5).unwrap()));
        assert!(Applicability::AtLeast(2).applies(&k(4)));
        assert!(!Applicability::AtLeast(4).applies(&k(4)));
    }

    #[test]
    fn parallel_enumeration_matches_serial() {
        for n in 1..=7 {
            let spec = EnumSpec::new(n).unwrap();
            assert_eq!(enumerate_parallel(&spec), domcycle_core::enumerate(&spec));
        }
    }

    #[test]
    fn theorem1_finds_witness_without_size_filter() {
        let graphs = [Graph::hexagon_with_handle(), Graph::cycle(6).unwrap()];
        let clean = verify_theorem1(&graphs, Applicability::OwnDegree, DomainSpec::default());
        assert_eq!(
            (clean.summary.graphs_scanned, clean.summary.applicable),
            (2, 1)
        );
        assert!(clean.is_clean());
        let tight = tightness_search(2, 9, 9, 8).unwrap();
        assert!(tight
            .violations
            .iter()
            .any(|r| r.n == 8 && r.longest_cycle == 6));
        for r in &tight.violations {
            revalidate(r).unwrap();
        }
    }

    #[test]
    fn revalidation_catches_tampering() {
        let mut r = tightness_search(2, 9, 9, 8).unwrap().violations.remove(0);
        revalidate(&r).unwrap();
        r.q += 1;
        assert!(matches!(
            revalidate(&r),
            Err(RevalidationError::Mismatch { field: "q", .. })
        ));
        r.q -= 1;
        r.off_cycle_edge = Some([0, 1]);
        assert!(revalidate(&r).is_err());
    }

    #[test]
    fn check_selectors() {
        for c in Check::ALL {
            assert_eq!(c.to_string().parse::<Check>().unwrap(), c);
            assert_eq!(c.kind().parse::<Check>().unwrap(), c);
        }
        assert_eq!("d".parse::<Check>().unwrap(), Check::TheoremD);
        assert!("5".parse::<Check>().is_err());
    }

    #[test]
    fn lemma3_small_sweep() {
        let graphs = graphs_up_to(1, 5, false).unwrap();
        let r = lemma_sweep(&graphs, Check::Lemma3, DomainSpec::default());
        assert!(r.is_clean());
        assert_eq!(r.summary.graphs_scanned, 1 + 2 + 4 + 11 + 34);
        assert!(r.summary.instances > 0);
    }

    #[test]
    fn thread_count_does_not_change_reports() {
        let graphs = graphs_up_to(1, 6, false).unwrap();
        let serial = with_threads(Some(1), || {
            lemma_sweep(&graphs, Check::Lemma1, DomainSpec::default())
        })
        .unwrap();
        let parallel = with_threads(Some(4), || {
            lemma_sweep(&graphs, Check::Lemma1, DomainSpec::default())
        })
        .unwrap();
        assert_eq!(serial.untimed(), parallel.untimed());
    }
}
