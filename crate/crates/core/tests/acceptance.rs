//! Acceptance suite. Each test checks one criterion exactly and prints a
//! single PASS/FAIL line; run with `-- --nocapture` to see them.

mod common;

use std::time::{Duration, Instant};

use hyperchrome::chromatic::{chromatic_broken_cycle, chromatic_subset_expansion};
use hyperchrome::cycles::{BlockPartition, ClosingRule};
use hyperchrome::generalized::{
    max_closing_involution, verify_generalized_theorem, BrokenCycleSelection, Integers,
    Polynomials, SignedComponentWeight, TheoremOutcome,
};
use hyperchrome::random::{
    random_integer_weights, random_order, random_polynomial_weights, random_selection,
    random_simple_graph, seeded,
};
use hyperchrome::{
    count_proper_colorings, enumerate_delta_cycles, is_delta_cyclic, is_delta_cyclic_witness,
    is_removable, spanning_component_count, CycleIndex, EdgeId, EdgeOrder, EdgeSubset, Hypergraph,
};
use itertools::Itertools;
use num_bigint::BigInt;
use rand::Rng;

use common::{bfs_components, corpus, example, fixture, simple_cycle_edge_sets};

fn report(id: u32, title: &str, failures: &[String], elapsed: Duration, limit: Duration) {
    let status = if failures.is_empty() && elapsed < limit {
        "PASS"
    } else {
        "FAIL"
    };
    println!(
        "[{status}] criterion {id}: {title} ({:.2?} of {:.0?} budget)",
        elapsed, limit
    );
    for failure in failures.iter().take(5) {
        println!("         {failure}");
    }
    assert!(
        failures.is_empty(),
        "criterion {id} failed with {} counterexample(s); first: {}",
        failures.len(),
        failures[0]
    );
    assert!(
        elapsed < limit,
        "criterion {id} took {elapsed:?}, limit {limit:?}"
    );
}

/// Orders to exhaust for a hypergraph: all |E|! when |E| ≤ 5, else 20
/// seeded random orders.
fn orders_for(g: &Hypergraph, seed: u64) -> Vec<EdgeOrder> {
    let m = g.edge_count();
    if m <= 5 {
        (0..m)
            .permutations(m)
            .map(|seq| EdgeOrder::from_sequence(m, &seq).unwrap())
            .collect()
    } else {
        let mut rng = seeded(seed);
        (0..20).map(|_| random_order(&mut rng, m)).collect()
    }
}

#[test]
fn criterion_1_paper_example_fidelity() {
    let started = Instant::now();
    let g = example();
    let mut failures = Vec::new();
    if !is_delta_cyclic(&g).unwrap() {
        failures.push("example is not δ-cyclic".to_string());
    }
    if is_delta_cyclic_witness(&g, g.all_edges()) {
        failures.push("full edge set accepted as a witness".to_string());
    }
    if is_removable(&g, g.all_edges(), EdgeId(1)).unwrap() {
        failures.push("edge {1,2,3} reported removable".to_string());
    }
    let cycles: Vec<EdgeSubset> = enumerate_delta_cycles(&g)
        .unwrap()
        .iter()
        .map(|c| c.edges())
        .collect();
    if cycles != vec![EdgeSubset::from_ids([0, 2, 3])] {
        failures.push(format!("δ-cycles {cycles:?}, expected [{{0,2,3}}]"));
    }
    report(
        1,
        "worked example: δ-cyclic, not a witness itself, unique δ-cycle {13,145,345}",
        &failures,
        started.elapsed(),
        Duration::from_secs(1),
    );
}

#[test]
fn criterion_2_subset_expansion_matches_coloring_counts() {
    let started = Instant::now();
    let mut failures = Vec::new();
    for (i, g) in corpus().iter().enumerate() {
        let p = chromatic_subset_expansion(g).unwrap();
        for k in 0..=g.vertex_count() as u64 {
            let count = count_proper_colorings(g, k).unwrap();
            if p.evaluate(&BigInt::from(k)) != BigInt::from(count) {
                failures.push(format!("corpus[{i}] k={k}: {p} vs {count} colorings"));
            }
        }
    }
    report(
        2,
        "edge-subset expansion equals proper-coloring counts on 200 hypergraphs",
        &failures,
        started.elapsed(),
        Duration::from_secs(60),
    );
}

#[test]
fn criterion_3_broken_cycle_expansion_is_order_independent() {
    let started = Instant::now();
    let mut failures = Vec::new();
    let mut orders_checked = 0usize;
    for (i, g) in corpus().iter().enumerate() {
        let full = chromatic_subset_expansion(g).unwrap();
        for order in orders_for(g, i as u64) {
            orders_checked += 1;
            let pruned = chromatic_broken_cycle(g, &order).unwrap();
            if pruned != full {
                failures.push(format!(
                    "corpus[{i}] order {:?}: {pruned} != {full}",
                    order.sequence()
                ));
            }
        }
    }
    println!("         {orders_checked} (hypergraph, order) pairs");
    report(
        3,
        "broken-cycle expansion equals full expansion under every order",
        &failures,
        started.elapsed(),
        Duration::from_secs(120),
    );
}

#[test]
fn criterion_4_generalized_pruning_identity() {
    let started = Instant::now();
    let graphs = corpus();
    let mut rng = seeded(4);
    let mut failures = Vec::new();
    for (trial, g) in graphs.iter().enumerate().take(200) {
        let order = random_order(&mut rng, g.edge_count());
        let all = CycleIndex::new(g).unwrap().broken_cycles(&order);
        let selection =
            BrokenCycleSelection::from_known(&all, &order, random_selection(&mut rng, &all))
                .unwrap();
        let n = g.vertex_count();

        let ints = SignedComponentWeight::new(random_integer_weights(&mut rng, n));
        let outcome = verify_generalized_theorem(g, &order, &Integers, &ints, &selection).unwrap();
        check_outcome(trial, "integers", &outcome, &mut failures);

        let polys = SignedComponentWeight::new(random_polynomial_weights(&mut rng, n));
        let outcome =
            verify_generalized_theorem(g, &order, &Polynomials, &polys, &selection).unwrap();
        check_outcome(trial, "polynomials", &outcome, &mut failures);
    }
    report(
        4,
        "full sum equals pruned sum for 200 random (G, order, g, selection) trials",
        &failures,
        started.elapsed(),
        Duration::from_secs(60),
    );
}

fn check_outcome<E: std::fmt::Debug>(
    trial: usize,
    group: &str,
    outcome: &TheoremOutcome<E>,
    failures: &mut Vec<String>,
) {
    match outcome {
        TheoremOutcome::Checked { holds: true, .. } => {}
        TheoremOutcome::Checked { full, pruned, .. } => {
            failures.push(format!("trial {trial} ({group}): {full:?} != {pruned:?}"))
        }
        TheoremOutcome::HypothesisViolated(v) => failures.push(format!(
            "trial {trial} ({group}): hypothesis fails at {:?}",
            v
        )),
    }
}

#[test]
fn criterion_5_proof_pairings() {
    let started = Instant::now();
    let mut block_failures = Vec::new();
    let mut involution_failures = Vec::new();
    let mut rng = seeded(5);
    let mut checked = 0usize;
    for (i, g) in corpus().iter().enumerate() {
        if g.edge_count() > 5 {
            continue;
        }
        let index = CycleIndex::new(g).unwrap();
        let edges: Vec<Vec<usize>> = g.edges().map(|(_, e)| e.to_vec()).collect();
        for order in orders_for(g, i as u64) {
            checked += 1;
            let sequence: Vec<usize> = order.sequence().iter().map(|e| e.0).collect();
            let blocks = BlockPartition::new(&index, &order, ClosingRule::Minimal);
            if let Some(v) = blocks.pairing_violation() {
                block_failures.push(format!(
                    "corpus[{i}] edges {edges:?} order {sequence:?}: block pairing fails for \
                     i = {}, A = {} (A in block {}, A ∪ {{e_i}} in block {})",
                    v.block, v.subset, v.block_of_subset, v.block_of_extended
                ));
            }
            let all = index.broken_cycles(&order);
            let selections = [all.clone(), random_selection(&mut rng, &all)];
            for members in selections {
                let selection = BrokenCycleSelection::from_known(&all, &order, members).unwrap();
                if let Some(v) = max_closing_involution(g, &selection).unwrap() {
                    involution_failures.push(format!(
                        "corpus[{i}] edges {edges:?} order {sequence:?}: involution fails: {v:?}"
                    ));
                }
            }
        }
    }
    println!(
        "         {checked} (hypergraph, order) pairs with |E| <= 5: block pairing failed \
         on {}, max-closing involution failed on {}",
        block_failures.len(),
        involution_failures.len()
    );
    let failures: Vec<String> = block_failures
        .into_iter()
        .chain(involution_failures)
        .collect();
    report(
        5,
        "block pairing (minimal closing edge) and max-closing-edge involution",
        &failures,
        started.elapsed(),
        Duration::from_secs(30),
    );
}

#[test]
fn criterion_6_graph_specialization() {
    let started = Instant::now();
    let mut failures = Vec::new();
    let mut rng = seeded(6);
    for trial in 0..100 {
        let n = rng.gen_range(1..=7);
        let m = rng.gen_range(0..=12);
        let g = random_simple_graph(&mut rng, n, m);
        let cycles: Vec<EdgeSubset> = enumerate_delta_cycles(&g)
            .unwrap()
            .iter()
            .map(|c| c.edges())
            .collect();
        let expected = simple_cycle_edge_sets(&g);
        if cycles != expected {
            failures.push(format!(
                "graph {trial}: δ-cycles {cycles:?} vs cycles {expected:?}"
            ));
        }
        let order = random_order(&mut rng, g.edge_count());
        let broken = CycleIndex::new(&g).unwrap().broken_cycles(&order);
        for a in EdgeSubset::all(g.edge_count()) {
            if broken.iter().any(|b| b.is_contained_in(a)) {
                continue;
            }
            let k = bfs_components(&g, a);
            if k != g.vertex_count() - a.len() {
                failures.push(format!("graph {trial}: A = {a} has k = {k}"));
            }
        }
    }
    let hyperedge = Hypergraph::new(3, vec![vec![0, 1, 2]]).unwrap();
    let k = spanning_component_count(&hyperedge, hyperedge.all_edges());
    if k != 1 || k == 3 - 1 {
        failures.push(format!(
            "single 3-vertex edge: k = {k}, expected 1 (≠ |V| − |A| = 2)"
        ));
    }
    report(
        6,
        "graphs: δ-cycles are simple cycles and broken-cycle-free sets are forests",
        &failures,
        started.elapsed(),
        Duration::from_secs(30),
    );
}

#[test]
fn criterion_7_degenerate_cases() {
    let started = Instant::now();
    let mut failures = Vec::new();

    let with_singletons = [
        Hypergraph::new(1, vec![vec![0]]).unwrap(),
        Hypergraph::new(3, vec![vec![0, 1], vec![1], vec![1, 2]]).unwrap(),
        Hypergraph::new(4, vec![vec![0, 1, 2], vec![3], vec![2, 3], vec![3]]).unwrap(),
    ];
    for (i, g) in with_singletons.iter().enumerate() {
        for k in 0..=g.vertex_count() as u64 {
            let count = count_proper_colorings(g, k).unwrap();
            if count != 0 {
                failures.push(format!(
                    "singleton case {i}: {count} colorings with k = {k}"
                ));
            }
        }
        if !chromatic_subset_expansion(g).unwrap().is_zero() {
            failures.push(format!("singleton case {i}: subset expansion is nonzero"));
        }
        for order in orders_for(g, 7) {
            if !chromatic_broken_cycle(g, &order).unwrap().is_zero() {
                failures.push(format!(
                    "singleton case {i}: broken-cycle expansion is nonzero"
                ));
            }
        }
    }

    let parallel = Hypergraph::new(2, vec![vec![0, 1], vec![0, 1]]).unwrap();
    let cycles: Vec<EdgeSubset> = enumerate_delta_cycles(&parallel)
        .unwrap()
        .iter()
        .map(|c| c.edges())
        .collect();
    if cycles != vec![EdgeSubset::from_ids([0, 1])] {
        failures.push(format!("parallel pair: δ-cycles {cycles:?}"));
    }

    let looped = Hypergraph::new(2, vec![vec![0, 1], vec![1]]).unwrap();
    let cycles: Vec<EdgeSubset> = enumerate_delta_cycles(&looped)
        .unwrap()
        .iter()
        .map(|c| c.edges())
        .collect();
    if cycles != vec![EdgeSubset::from_ids([1])] {
        failures.push(format!("loop: δ-cycles {cycles:?}"));
    }

    report(
        7,
        "singleton edges give the zero polynomial; loops and parallel edges are δ-cycles",
        &failures,
        started.elapsed(),
        Duration::from_secs(5),
    );
}

fn bench_counts(file: &str) -> (u64, u64) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let path = fixture(file);
    let code = hyperchrome::cli::run(
        ["hyperchrome", "bench", path.to_str().unwrap()],
        &mut out,
        &mut err,
    );
    assert_eq!(code, 0, "{}", String::from_utf8_lossy(&err));
    let report: serde_json::Value = serde_json::from_slice(&out).unwrap();
    (
        report["term_counts"]["admissible"].as_u64().unwrap(),
        report["term_counts"]["total"].as_u64().unwrap(),
    )
}

#[test]
fn criterion_8_pruning_benchmark_sanity() {
    let started = Instant::now();
    let mut failures = Vec::new();
    for (file, expected) in [("triangle.txt", (6, 8)), ("example.txt", (12, 16))] {
        let counts = bench_counts(file);
        if counts != expected {
            failures.push(format!(
                "{file}: admissible/total {counts:?}, expected {expected:?}"
            ));
        }
    }
    report(
        8,
        "bench reports 6 of 8 subsets on the triangle and 12 of 16 on the example",
        &failures,
        started.elapsed(),
        Duration::from_secs(1),
    );
}
