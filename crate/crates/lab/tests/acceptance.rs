//! Acceptance run. Prints one PASS/FAIL line per criterion and fails if any
//! criterion fails.

use std::process::ExitCode;
use std::time::Instant;

use domcycle_core::enumerate::count;
use domcycle_core::graph6::{self, Graph6Error};
use domcycle_core::{
    all_longest_cycles, are_isomorphic, enumerate, longest_cycle_length, vertex_connectivity,
    EnumSpec, Graph,
};
use domcycle_lab::gallery::{sharpness_gallery, Claim};
use domcycle_lab::report::{DomainSpec, VerificationReport};
use domcycle_lab::sweep::{
    graphs_up_to, lemma_sweep, revalidate, theorem1_domain, tightness_search, verify_theorem1,
    Applicability, Check,
};
use domcycle_testkit as oracle;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

type Outcome = Result<String, String>;
type Expectation = fn(&Graph6Error) -> bool;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn clean(r: &VerificationReport) -> Result<(), String> {
    ensure(r.is_clean(), || {
        format!(
            "{} violations, first {:?}",
            r.violations.len(),
            r.violations.first()
        )
    })
}

fn theorem1(delta: usize) -> Outcome {
    let domain = theorem1_domain(delta, None).map_err(|e| e.to_string())?;
    let graphs = domain.graphs().map_err(|e| e.to_string())?;
    let report = verify_theorem1(&graphs, Applicability::AtLeast(delta), domain.describe());
    clean(&report)?;
    ensure(report.summary.applicable == graphs.len(), || {
        "graph outside the hypotheses in the domain".into()
    })?;

    // the pruned domain agrees with filtering unconstrained classes where that is affordable
    let mut filtered = 0;
    for n in domain.n_min..=domain.n_max.min(8) {
        filtered += enumerate(&EnumSpec::new(n).unwrap())
            .iter()
            .filter(|g| {
                g.min_degree() >= delta && g.size() <= domain.q_max && vertex_connectivity(g) >= 2
            })
            .count();
    }
    let pruned = graphs.iter().filter(|g| g.order() <= 8).count();
    ensure(pruned == filtered, || {
        format!("domain has {pruned} graphs on n<=8, filtering gives {filtered}")
    })?;
    Ok(format!(
        "n<={}, q<={}: {} graphs, {} longest cycles, all dominating",
        domain.n_max, domain.q_max, report.summary.applicable, report.summary.instances
    ))
}

fn sharpness_two() -> Outcome {
    let entries = sharpness_gallery(2).map_err(|e| e.to_string())?;
    let by_name = |name: &str| {
        entries
            .iter()
            .find(|e| e.name == name)
            .ok_or(format!("{name} missing"))
    };
    let witness = by_name("witness8")?;
    let apex = by_name("K1+2K2")?;
    let hub = by_name("K2+3K1")?;
    let w = &witness.analysis;
    ensure(
        w.q == 9 && w.connectivity == 2 && w.longest_cycle == 6 && w.non_dominating_count() > 0,
        || format!("witness8 {w:?}"),
    )?;
    let a = &apex.analysis;
    ensure(
        a.connectivity == 1 && a.q == 6 && a.non_dominating_count() > 0,
        || format!("K1+2K2 {a:?}"),
    )?;
    let h = &hub.analysis;
    ensure(
        h.q == 7 && h.non_dominating_count() == 0 && !h.hamiltonian,
        || format!("K2+3K1 {h:?}"),
    )?;
    ensure(entries.iter().all(|e| e.demonstrates), || {
        "an entry does not demonstrate its claim".into()
    })?;

    // brute force on the same graphs
    for e in &entries {
        let len = oracle::longest_cycle_by_permutation(&e.graph);
        let cycles = oracle::cycles_by_permutation(&e.graph, len);
        let stranded = cycles
            .iter()
            .filter(|c| {
                e.graph
                    .edges()
                    .any(|(u, v)| !c.contains(&u) && !c.contains(&v))
            })
            .count();
        ensure(
            len == e.analysis.longest_cycle && cycles.len() == e.analysis.longest_cycle_count(),
            || {
                format!(
                    "{}: brute force finds {} cycles of length {len}",
                    e.name,
                    cycles.len()
                )
            },
        )?;
        ensure(stranded == e.analysis.non_dominating_count(), || {
            format!("{}: domination differs", e.name)
        })?;
        ensure(
            oracle::connectivity_by_cuts(&e.graph) == e.analysis.connectivity,
            || format!("{}: κ", e.name),
        )?;
    }
    Ok(format!(
        "witness8 {}/{} longest 6-cycles non-dominating; K1+2K2 κ=1; K2+3K1 dominating, longest 4 of 5",
        w.non_dominating_count(),
        w.longest_cycle_count()
    ))
}

fn sharpness_higher() -> Outcome {
    let three = sharpness_gallery(3).map_err(|e| e.to_string())?;
    let k2 = three
        .iter()
        .find(|e| e.name == "K2+3K2")
        .ok_or("K2+3K2 missing")?;
    ensure(
        k2.analysis.q == 16 && k2.analysis.non_dominating_count() > 0 && k2.demonstrates,
        || format!("K2+3K2 {:?}", k2.analysis),
    )?;
    ensure(!k2.notes.is_empty(), || {
        "K2+3K2 size discrepancy not reported".into()
    })?;
    let k3 = three
        .iter()
        .find(|e| e.name == "K3+4K1")
        .ok_or("K3+4K1 missing")?;
    ensure(
        k3.analysis.q == 15 && !k3.demonstrates && !k3.notes.is_empty(),
        || "K3+4K1 discrepancy at δ=3 not reported".into(),
    )?;

    let four = sharpness_gallery(4).map_err(|e| e.to_string())?;
    let k4 = four
        .iter()
        .find(|e| e.name == "K4+5K1")
        .ok_or("K4+5K1 missing")?;
    let a = &k4.analysis;
    ensure(
        a.q == 26
            && k4.q_max == 26
            && a.non_dominating_count() == 0
            && !a.hamiltonian
            && a.longest_cycle == 8,
        || format!("K4+5K1 {a:?}"),
    )?;
    ensure(k4.demonstrates && k4.claim == Claim::NotHamiltonian, || {
        "K4+5K1 claim".into()
    })?;

    let q15 = tightness_search(3, 15, 15, 10).map_err(|e| e.to_string())?;
    for row in &q15.violations {
        revalidate(row).map_err(|e| format!("{}: {e}", row.graph6))?;
    }
    let split = three
        .iter()
        .find(|e| e.name == "2K1+3K2")
        .ok_or("2K1+3K2 missing")?;
    let found_split = q15
        .violations
        .iter()
        .any(|r| are_isomorphic(&graph6::parse(&r.graph6).unwrap(), &split.graph));
    let q16 = tightness_search(3, 16, 16, 10).map_err(|e| e.to_string())?;
    let found_k2 = q16
        .violations
        .iter()
        .any(|r| are_isomorphic(&graph6::parse(&r.graph6).unwrap(), &k2.graph));
    ensure(found_k2, || "K2+3K2 not among q=16 witnesses".into())?;
    let answer = match q15.violations.as_slice() {
        [] => "no q=15 witness on n<=10".to_string(),
        rows => format!(
            "{} q=15 witness(es) on n<=10: {}{}",
            rows.len(),
            rows.iter()
                .map(|r| r.graph6.as_str())
                .collect::<Vec<_>>()
                .join(", "),
            if found_split { " (2K1+3K2)" } else { "" }
        ),
    };
    Ok(format!(
        "K2+3K2 q=16 and K4+5K1 q=26 confirmed; K3+4K1 q=15>14 flagged; {answer}"
    ))
}

fn lemma_suites() -> Outcome {
    let upto7 = graphs_up_to(1, 7, false).map_err(|e| e.to_string())?;
    let upto8 = graphs_up_to(1, 8, false).map_err(|e| e.to_string())?;
    let bicon9 = graphs_up_to(3, 9, true).map_err(|e| e.to_string())?;
    let mut rng = StdRng::seed_from_u64(0x5eed);
    let handles: Vec<Graph> = (0..3000)
        .map(|_| {
            let k = rng.random_range(9..=14);
            let len = rng.random_range(1..=2);
            oracle::cycle_with_handle(&mut rng, k, len, 0.03)
        })
        .collect();
    let runs = [
        (Check::Lemma1, &upto8, "n<=8"),
        (Check::Lemma1, &handles, "handles"),
        (Check::Lemma2, &upto8, "n<=8"),
        (Check::Lemma2, &handles, "handles"),
        (Check::Segments, &upto8, "n<=8"),
        (Check::Lemma3, &upto7, "n<=7"),
        (Check::Lemma4, &bicon9, "2-conn n<=9"),
        (Check::TheoremD, &bicon9, "2-conn n<=9"),
        (Check::TheoremE, &upto8, "n<=8"),
        (Check::TheoremE, &handles, "handles"),
    ];
    let mut parts = Vec::new();
    for (check, graphs, label) in runs {
        let r = lemma_sweep(graphs, check, DomainSpec::default());
        clean(&r).map_err(|e| format!("{} on {label}: {e}", check.kind()))?;
        parts.push(format!("{}[{label}] {}", check, r.summary.instances));
    }
    Ok(format!(
        "0 violations; applicable checks: {}",
        parts.join(" ")
    ))
}

fn oracle_equivalence() -> Outcome {
    let mut compared = 0;
    for n in 1..=8 {
        for g in enumerate(&EnumSpec::new(n).unwrap()) {
            let brute = oracle::longest_cycle_by_permutation(&g);
            ensure(longest_cycle_length(&g) == brute, || {
                format!("{} differs", graph6::emit(&g))
            })?;
            compared += 1;
        }
    }
    let mut rng = StdRng::seed_from_u64(2024);
    for i in 0..1000 {
        let n = if i % 2 == 0 { 9 } else { 10 };
        let p = rng.random_range(0.15..0.6);
        let g = oracle::random_graph(&mut rng, n, p);
        let brute = oracle::longest_cycle_by_permutation(&g);
        ensure(longest_cycle_length(&g) == brute, || {
            format!("random {} differs", graph6::emit(&g))
        })?;
    }
    let mut cycles = 0;
    for n in 1..=7 {
        for g in enumerate(&EnumSpec::new(n).unwrap()) {
            let len = longest_cycle_length(&g);
            let brute = oracle::cycles_by_permutation(&g, len);
            let got: Vec<Vec<usize>> = all_longest_cycles(&g).iter().map(|c| c.to_vec()).collect();
            ensure(got == brute, || {
                format!("{}: cycle lists differ", graph6::emit(&g))
            })?;
            cycles += got.len();
        }
    }
    Ok(format!(
        "{compared} enumerated graphs n<=8 + 1000 random n in {{9,10}}; {cycles} longest cycles n<=7 listed identically"
    ))
}

fn enumerator() -> Outcome {
    let expected = [1, 2, 4, 11, 34, 156, 1044];
    for (n, &want) in (1..=7).zip(&expected) {
        let got = count(&EnumSpec::new(n).unwrap());
        ensure(got == want, || {
            format!("n={n}: {got} classes, expected {want}")
        })?;
        let reference = if n <= 6 {
            oracle::classes_by_rejection(n).len() as u64
        } else {
            oracle::count_by_burnside(n)
        };
        ensure(got as u64 == reference, || {
            format!("n={n}: oracle gives {reference}")
        })?;
    }
    let mut pairs = 0;
    for n in 1..=6 {
        let graphs = enumerate(&EnumSpec::new(n).unwrap());
        for (i, a) in graphs.iter().enumerate() {
            for b in &graphs[i + 1..] {
                ensure(!oracle::isomorphic_by_permutation(a, b), || {
                    format!("{a:?} ~ {b:?}")
                })?;
                pairs += 1;
            }
        }
    }
    Ok(format!(
        "counts {expected:?}; {pairs} pairs on n<=6 non-isomorphic"
    ))
}

fn round_trip() -> Outcome {
    let mut graphs = 0;
    for n in 1..=8 {
        for g in enumerate(&EnumSpec::new(n).unwrap()) {
            let line = graph6::emit(&g);
            ensure(graph6::parse(&line) == Ok(g), || {
                format!("{line} does not round-trip")
            })?;
            graphs += 1;
        }
    }
    let mut corpus: Vec<(String, Expectation)> = vec![
        ("".into(), |e| matches!(e, Graph6Error::Empty)),
        ("C".into(), |e| matches!(e, Graph6Error::Length { .. })),
        ("Dh".into(), |e| matches!(e, Graph6Error::Length { .. })),
        ("Dhcc".into(), |e| matches!(e, Graph6Error::Length { .. })),
        ("C\x7f".into(), |e| {
            matches!(e, Graph6Error::ByteOutOfRange { .. })
        }),
        ("C ".into(), |e| {
            matches!(e, Graph6Error::ByteOutOfRange { .. })
        }),
        ("Dh\u{e9}".into(), |e| {
            matches!(
                e,
                Graph6Error::ByteOutOfRange { .. } | Graph6Error::Length { .. }
            )
        }),
        ("\x7fC~".into(), |e| {
            matches!(e, Graph6Error::BadHeader(_) | Graph6Error::TooLarge(_))
        }),
        ("BF".into(), |e| matches!(e, Graph6Error::NonZeroPadding)),
        (":Fa@x^".into(), |e| matches!(e, Graph6Error::Sparse6)),
        ("&C~".into(), |e| matches!(e, Graph6Error::Digraph6)),
    ];
    // every proper prefix of a longer line
    let petersen = "IheA@GUAo";
    for cut in 1..petersen.len() {
        corpus.push((petersen[..cut].into(), |e| {
            matches!(e, Graph6Error::Length { .. })
        }));
    }
    for (line, expected) in &corpus {
        match graph6::parse(line) {
            Ok(g) => return Err(format!("{line:?} parsed as {g:?}")),
            Err(e) if expected(&e) => {}
            Err(e) => return Err(format!("{line:?} rejected with unexpected {e:?}")),
        }
    }
    Ok(format!(
        "{graphs} graphs n<=8 round-trip; {} malformed lines rejected",
        corpus.len()
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("1 main theorem, δ=2 exhaustive", || theorem1(2)),
        ("2 main theorem, δ=3 exhaustive", || theorem1(3)),
        ("3 sharpness, δ=2", sharpness_two),
        ("4 sharpness, δ>=3 and tightness at q=15", sharpness_higher),
        ("5 lemma and classical-bound suites", lemma_suites),
        ("6 oracle equivalence", oracle_equivalence),
        ("7 enumerator correctness", enumerator),
        ("8 graph6 round trip", round_trip),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        let started = Instant::now();
        let outcome = std::panic::catch_unwind(check).unwrap_or_else(|_| Err("panicked".into()));
        let secs = started.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS criterion {name}: {detail} [{secs:.1}s]"),
            Err(detail) => {
                failed += 1;
                println!("FAIL criterion {name}: {detail} [{secs:.1}s]");
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
