//! Acceptance suite: every release criterion as one test, printing a
//! PASS/FAIL line (visible with `cargo test --test acceptance -- --show-output`).
//!
//! All tolerances are pinned here, in code.

mod common;

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use btr_core::bounds::{
    self, furedi_identity, lemma1_rhs, theorem_verdict, th3_bound, BoundParams, CheckSpec,
    Removed, TheoremId, Verdict,
};
use btr_core::counting::{find_kst, find_pattern, PatternMode, PatternQuery};
use btr_core::ramsey::{ramsey_brute_force, RamseyOracle};
use btr_core::search::{self, ConstraintSet, ScanObjective, Schedule};
use btr_core::spectral::{self, EigenMethod};
use btr_core::Graph;

const BUDGET: u64 = 10_000_000;

fn pass(criterion: &str, detail: String) {
    println!("ACCEPTANCE {criterion}: PASS — {detail}");
}

/// Deterministic random corpus used by criteria 2 and 3: 100k graphs per
/// order in {8, 16, 32}, edge probability cycling 0.1 / 0.5 / 0.9.
fn random_corpus() -> impl Iterator<Item = Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(0xB7_2024);
    let probabilities = [0.1, 0.5, 0.9];
    let mut out: Vec<(usize, f64, u64)> = Vec::with_capacity(300_000);
    for &n in &[8usize, 16, 32] {
        for i in 0..100_000usize {
            out.push((n, probabilities[i % 3], rng.random()));
        }
    }
    out.into_iter().map(|(n, p, seed)| {
        let mut g_rng = ChaCha8Rng::seed_from_u64(seed);
        let mut edges = Vec::new();
        for u in 0..n {
            for v in (u + 1)..n {
                if g_rng.random_bool(p) {
                    edges.push((u, v));
                }
            }
        }
        Graph::from_edge_list(n, &edges).unwrap()
    })
}

#[test]
fn acceptance_01_exhaustive_identity_suite() {
    let started = Instant::now();
    let checks = vec![
        CheckSpec::IdentityC4,
        CheckSpec::IdentityIn,
        CheckSpec::IdentityIn3,
        CheckSpec::IdentityCw4,
    ];
    let record = search::scan_order(
        6,
        &ConstraintSet::default(),
        &ScanObjective::VerifyInequalities(checks),
    )
    .unwrap();
    assert_eq!(record.graphs_scanned, 32_768);
    assert!(
        record.violations.is_empty(),
        "identity violations: {:?}",
        record.violations
    );
    let elapsed = started.elapsed();
    assert!(
        elapsed.as_secs() <= 300,
        "identity suite took {elapsed:?}, budget 5 minutes"
    );
    pass(
        "1",
        format!(
            "pair/C4, (in), (in3), CW4=Σλ⁴ identities on 32768 graphs of order 6, 0 violations, {elapsed:?}"
        ),
    );
}

#[test]
fn acceptance_02_proposition1_corpus() {
    // Exhaustive order 6.
    let record = search::scan_order(
        6,
        &ConstraintSet::default(),
        &ScanObjective::VerifyInequalities(vec![CheckSpec::Prop1]),
    )
    .unwrap();
    assert!(record.violations.is_empty());

    // 3x10^5 random graphs at n in {8, 16, 32}.
    let mut count = 0u64;
    for g in random_corpus() {
        let report = bounds::verify_proposition1(&g).unwrap();
        assert!(
            report.verdict == Verdict::Holds && report.margin >= -1e-9,
            "prop1 violated on {g:?}: margin {}",
            report.margin
        );
        count += 1;
    }
    assert_eq!(count, 300_000);
    pass(
        "2",
        format!("(in2) margin ≥ -1e-9 on 32768 exhaustive + {count} random graphs, 0 failures"),
    );
}

#[test]
fn acceptance_03_prop2_prop4_prop3() {
    let oracle = RamseyOracle::builtin();
    let h_patterns = [common::k(3), common::path(3)];

    let mut checked = 0u64;
    let mut verify = |g: &Graph| {
        for k in 2..=4 {
            let r = bounds::verify_proposition2(g, k).unwrap();
            assert_ne!(r.verdict, Verdict::Fails, "prop2 k={k} failed on {g:?}");
        }
        for h in &h_patterns {
            for s in 2..=3 {
                let r = bounds::verify_proposition4(g, h, s, &oracle, BUDGET).unwrap();
                assert_ne!(r.verdict, Verdict::Fails, "prop4 s={s} failed on {g:?}");
            }
        }
        checked += 1;
    };
    for mask in 0..(1u64 << 15) {
        let g = common::graph_from_mask(6, mask);
        verify(&g);
    }
    for g in random_corpus() {
        verify(&g);
    }

    // prop3 on complete graphs, exact counts.
    let r = bounds::verify_proposition3(&common::k(27), 3, 2.0).unwrap();
    assert_eq!(r.verdict, Verdict::Holds);
    assert_eq!(r.lhs, 807_300.0);
    assert_eq!(r.rhs, 23_400.0);
    let r = bounds::verify_proposition3(&common::k(64), 3, 2.0).unwrap();
    assert_eq!(r.verdict, Verdict::Holds);
    pass(
        "3",
        format!(
            "prop2 (k=2,3,4) and prop4 (H∈{{K3,P3}}, s∈{{2,3}}) zero fails on {checked} graphs; prop3: 807300 ≥ 23400 on K27, holds on K64"
        ),
    );
}

#[test]
fn acceptance_04_05_lemma1_and_c5_double_count() {
    let oracle = RamseyOracle::builtin();

    // Named cases with H = K3, t = 2.
    let r = lemma1_rhs(&common::petersen(), &common::k(3), 2, Removed::OneVertex, &oracle, BUDGET)
        .unwrap();
    assert_eq!(r.verdict, Verdict::Holds);
    assert!((r.lhs - 9.0).abs() < 1e-6 && (r.rhs - 30.0).abs() < 1e-6);
    let heawood = search::families::pp_incidence(2).unwrap();
    let r = lemma1_rhs(&heawood, &common::k(3), 2, Removed::OneVertex, &oracle, BUDGET).unwrap();
    assert_eq!(r.verdict, Verdict::Holds);
    assert!((r.lhs - 9.0).abs() < 1e-6 && (r.rhs - 42.0).abs() < 1e-6);

    // Exhaustive orders 1..=7 with H = C5, t = 2, shared with the C5
    // double-count criterion.
    let c5 = common::cycle(5);
    let c5_query = PatternQuery::subgraph(c5.clone());
    let mut lemma_checked = 0u64;
    let mut pair_checked = 0u64;
    for n in 1..=7usize {
        let bits = n * n.saturating_sub(1) / 2;
        for mask in 0..(1u64 << bits) {
            let g = common::graph_from_mask(n, mask);
            let c5_free = find_pattern(&g, &c5_query, BUDGET).unwrap().is_none();
            if !c5_free {
                continue;
            }
            // Criterion 5: the pair double-count bound.
            let r = bounds::verify_c5_pair_count(&g, BUDGET).unwrap();
            assert_eq!(r.verdict, Verdict::Holds, "c5pair failed on {g:?}");
            pair_checked += 1;

            // Criterion 4: plus induced-K_{2,2}-freeness for the lemma1 check.
            if n >= 2 && find_kst(&g, 2, 2, PatternMode::Induced, BUDGET).unwrap().is_none() {
                let r = lemma1_rhs(&g, &c5, 2, Removed::OneVertex, &oracle, BUDGET).unwrap();
                assert_eq!(r.verdict, Verdict::Holds, "lemma1 failed on {g:?}");
                lemma_checked += 1;
            }
        }
    }
    pass(
        "4",
        format!("lemma1 doubled form: Petersen 9 ≤ 30, Heawood 9 ≤ 42, {lemma_checked} C5-free+induced-K22-free graphs of order ≤ 7, 0 failures"),
    );

    // K4 equality case.
    let r = bounds::verify_c5_pair_count(&common::k(4), BUDGET).unwrap();
    assert_eq!(r.verdict, Verdict::Holds);
    assert_eq!((r.lhs, r.rhs), (6.0, 6.0));
    pass(
        "5",
        format!("C5 double count Σ C(d(i,j),2) ≤ C(n,2) on {pair_checked} C5-free graphs of order ≤ 7; K4 equality 6 = 6"),
    );
}

#[test]
fn acceptance_06_theorem2_constructive_verdict() {
    let oracle = RamseyOracle::builtin();
    let params = BoundParams {
        s: 2,
        t: 2,
        r: 2,
        h: common::k(3),
        k_const: None,
    };
    let g = common::kab(8, 8);
    let report = theorem_verdict(&g, &params, TheoremId::Th0, &oracle, BUDGET).unwrap();
    assert_eq!(report.verdict, Verdict::Holds);
    assert!((report.lhs - 8.0).abs() <= 1e-8, "λ(K88) = {}", report.lhs);
    assert!((report.rhs - 8.0).abs() <= 1e-8, "threshold = {}", report.rhs);
    let witness = report.witness.as_ref().expect("induced K_{2,2} witness");
    let map = match witness {
        bounds::Witness::Map(m) => m.clone(),
        other => panic!("unexpected witness {other:?}"),
    };
    assert_eq!(map.len(), 4);
    // Verify the witness is an induced K_{2,2}: sides {0,1} and {2,3}.
    for (i, j, adj) in [
        (0, 1, false), (2, 3, false),
        (0, 2, true), (0, 3, true), (1, 2, true), (1, 3, true),
    ] {
        assert_eq!(g.has_edge(map[i], map[j]), adj);
    }
    pass(
        "6",
        format!("K_{{8,8}} th0 premises verified (λ = {:.9} = 2√16), induced K_{{2,2}} witness {map:?}", report.lhs),
    );
}

#[test]
fn acceptance_07_ramsey_brute_force() {
    let started = Instant::now();
    let r33 = ramsey_brute_force(&common::k(3), 3, 7).unwrap();
    assert!(r33.exact && r33.lower == 6 && r33.upper == 6);
    let rp3 = ramsey_brute_force(&common::path(3), 3, 7).unwrap();
    assert!(rp3.exact && rp3.upper == 5, "R(P3,K3) = {rp3:?}");
    // Cross-check the closed form 2t - 1.
    assert_eq!(rp3.upper, 2 * 3 - 1);
    let elapsed = started.elapsed();
    assert!(elapsed.as_secs() <= 60, "brute force took {elapsed:?}");
    pass(
        "7",
        format!("brute force: R(3,3) = 6 and R(P3,K3) = 5 = 2t-1 in {elapsed:?} (≤ 60 s)"),
    );
}

#[test]
fn acceptance_08_furedi_tightness_identity() {
    for (q, t) in [(4u64, 2u64), (5, 3), (7, 4)] {
        let id = furedi_identity(q, t).unwrap();
        assert!(id.holds, "identity failed for q={q}, t={t}: {id:?}");
        assert_eq!(id.lambda_squared, q * q);
    }
    // Factor-of-two tightness at t = 2 for the three derived orders.
    for n in [30usize, 24, 32] {
        let construction_lambda = ((n as f64) / 2.0 + 1.0).sqrt();
        let bound = th3_bound(2, n).unwrap();
        assert!(
            construction_lambda <= 2.0 * bound,
            "tightness slack violated at n={n}: {construction_lambda} vs 2×{bound}"
        );
    }
    pass(
        "8",
        "½(t-1)n + 1 = q² exactly for (q,t) ∈ {(4,2),(5,3),(7,4)}; construction λ within 2× of the t=2 bound at n ∈ {30,24,32}".to_string(),
    );
}

#[test]
fn acceptance_09_spectral_accuracy_and_bounds() {
    let heawood = search::families::pp_incidence(2).unwrap();
    let cases: [(&str, Graph, f64); 4] = [
        ("petersen", common::petersen(), 3.0),
        ("c5", common::cycle(5), 2.0),
        ("k88", common::kab(8, 8), 8.0),
        ("heawood", heawood, 3.0),
    ];
    for (name, g, expect) in &cases {
        for method in [EigenMethod::DenseFull, EigenMethod::PowerIteration] {
            let s = spectral::spectral_radius(g, method, 1e-10).unwrap();
            assert!(
                (s.lambda - expect).abs() <= 1e-8,
                "λ({name}) via {method:?} = {}, want {expect}",
                s.lambda
            );
        }
    }

    // Hofmeister and Motzkin–Straus over the exhaustive order ≤ 6 corpus
    // plus the named graphs.
    let mut checked = 0u64;
    let mut check_graph = |g: &Graph| {
        let margin = spectral::hofmeister_margin(g).unwrap();
        assert!(margin >= -1e-9, "Hofmeister violated on {g:?}: {margin}");
        let r = bounds::verify_motzkin_straus(g).unwrap();
        assert_eq!(r.verdict, Verdict::Holds, "Motzkin-Straus failed on {g:?}");
        checked += 1;
    };
    for n in 1..=6usize {
        let bits = n * n.saturating_sub(1) / 2;
        for mask in 0..(1u64 << bits) {
            check_graph(&common::graph_from_mask(n, mask));
        }
    }
    for (_, g, _) in &cases {
        check_graph(g);
    }
    pass(
        "9",
        format!("λ exact on Petersen/C5/K88/Heawood (both backends, 1e-8); Hofmeister ≥ -1e-9 and Motzkin–Straus hold on {checked} graphs"),
    );
}

#[test]
fn acceptance_10_search_reproducibility_and_strength() {
    let schedule = Schedule::default();
    let petersen_constraints = ConstraintSet {
        forbidden_subgraphs: vec![common::k(3)],
        forbidden_induced_kst: vec![(2, 2)],
        ..Default::default()
    };
    let a = search::local_search(10, &petersen_constraints, 100_000, 2024, 20, &schedule).unwrap();
    assert!(
        a.best_lambda >= 3.0 - 1e-8,
        "search reached only λ = {}",
        a.best_lambda
    );
    let b = search::local_search(10, &petersen_constraints, 100_000, 2024, 20, &schedule).unwrap();
    let ja = serde_json::to_string(&a).unwrap();
    let jb = serde_json::to_string(&b).unwrap();
    assert_eq!(ja, jb, "identical seeds must give byte-identical records");

    // Search matches exhaustive optima at order 6 on three constraint sets.
    let sets: Vec<(&str, ConstraintSet)> = vec![
        ("unconstrained", ConstraintSet::default()),
        (
            "K3-free",
            ConstraintSet {
                forbidden_subgraphs: vec![common::k(3)],
                ..Default::default()
            },
        ),
        (
            "K22-subgraph-free",
            ConstraintSet {
                forbidden_subgraphs: vec![common::kab(2, 2)],
                ..Default::default()
            },
        ),
    ];
    let mut optima = Vec::new();
    for (name, set) in &sets {
        let scan = search::scan_order(6, set, &ScanObjective::MaxLambda).unwrap();
        let best = scan.best_lambda.unwrap();
        let found = search::local_search(6, set, 100_000, 7, 20, &schedule).unwrap();
        assert!(
            (found.best_lambda - best).abs() <= 1e-8,
            "{name}: search λ = {} vs exhaustive {best}",
            found.best_lambda
        );
        optima.push(format!("{name}: {best:.6}"));
    }
    pass(
        "10",
        format!(
            "λ ≥ 3 at n=10 under K3+induced-K22 (budget 1e5, 20 restarts); byte-identical records; order-6 optima matched [{}]",
            optima.join(", ")
        ),
    );
}
