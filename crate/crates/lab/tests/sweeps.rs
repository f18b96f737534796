use domcycle_core::{canonical_graph, graph6, Graph};
use domcycle_lab::report::DomainSpec;
use domcycle_lab::stream::{read_all, ErrorPolicy};
use domcycle_lab::sweep::{
    graphs_up_to, lemma_sweep, revalidate, theorem1_domain, tightness_search, verify_theorem1,
    with_threads, Applicability, Check,
};
use domcycle_testkit as oracle;
use rand::rngs::StdRng;
use rand::SeedableRng;

#[test]
fn reports_do_not_depend_on_input_order_or_labels() {
    let mut graphs = graphs_up_to(5, 7, true).unwrap();
    let forward = verify_theorem1(&graphs, Applicability::OwnDegree, DomainSpec::default());
    graphs.reverse();
    let mut rng = StdRng::seed_from_u64(3);
    let relabeled: Vec<Graph> = graphs
        .iter()
        .map(|g| {
            use rand::seq::SliceRandom;
            let mut order: Vec<usize> = (0..g.order()).collect();
            order.shuffle(&mut rng);
            g.permuted(&order)
        })
        .collect();
    let backward = verify_theorem1(&relabeled, Applicability::OwnDegree, DomainSpec::default());
    assert_eq!(forward.untimed(), backward.untimed());
}

#[test]
fn tightness_rows_are_sorted_canonical_and_self_certifying() {
    let report = tightness_search(3, 15, 16, 10).unwrap();
    assert!(report.violations.len() >= 3);
    assert!(report.violations.windows(2).all(|w| w[0] <= w[1]));
    for row in &report.violations {
        revalidate(row).unwrap();
        let g = graph6::parse(&row.graph6).unwrap();
        assert_eq!(canonical_graph(&g), g);
    }
    let serial = with_threads(Some(1), || tightness_search(3, 15, 16, 10).unwrap()).unwrap();
    assert_eq!(serial.untimed(), report.untimed());
}

#[test]
fn theorem1_domain_matches_brute_filter_for_small_orders() {
    let domain = theorem1_domain(2, Some(6)).unwrap();
    let pruned = domain.graphs().unwrap();
    let filtered: Vec<Graph> = (3..=6)
        .flat_map(oracle::classes_by_rejection)
        .filter(|g| g.min_degree() >= 2 && g.size() <= 8 && oracle::connectivity_by_cuts(g) >= 2)
        .map(|g| canonical_graph(&g))
        .collect();
    let mut a = pruned.clone();
    let mut b = filtered;
    a.sort();
    b.sort();
    assert_eq!(a, b);
}

#[test]
fn stream_errors_become_rows() {
    let text = "Dhc\nbad line\n\n>>graph6<<D}o\n";
    let (graphs, errors) = read_all(text.as_bytes(), ErrorPolicy::Skip).unwrap();
    let graphs: Vec<Graph> = graphs.into_iter().map(|n| n.graph).collect();
    let report = verify_theorem1(&graphs, Applicability::OwnDegree, DomainSpec::default())
        .with_errors(errors.iter().map(Into::into).collect());
    assert_eq!(report.summary.graphs_scanned, 2);
    assert_eq!(report.summary.errors, 1);
    assert_eq!(report.errors[0].line, 2);
    let mut buf = Vec::new();
    report.write_ndjson(&mut buf).unwrap();
    assert_eq!(String::from_utf8(buf).unwrap().lines().count(), 2);
}

#[test]
fn lemma_sweeps_count_only_applicable_instances() {
    let graphs = graphs_up_to(1, 6, false).unwrap();
    let lemma4 = lemma_sweep(&graphs, Check::Lemma4, DomainSpec::default());
    let biconnected = graphs.iter().filter(|g| g.is_biconnected()).count();
    assert!(lemma4.summary.applicable <= biconnected);
    assert!(lemma4.is_clean());
    let d = lemma_sweep(&graphs, Check::TheoremD, DomainSpec::default());
    assert_eq!(
        d.summary.applicable,
        graphs
            .iter()
            .filter(|g| g.order() >= 3 && g.is_biconnected())
            .count()
    );
}
