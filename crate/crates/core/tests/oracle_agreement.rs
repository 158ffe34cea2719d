//! Counting and pattern-search results checked against brute-force oracles.

mod common;

use btr_core::counting::{
    self, find_kst, find_pattern, find_pattern_generic, PatternMode, PatternQuery,
};
use btr_core::Graph;
use common::naive;

const BUDGET: u64 = 10_000_000;

fn named_corpus() -> Vec<Graph> {
    vec![
        common::petersen(),
        common::k(4),
        common::k(5),
        common::kab(2, 3),
        common::kab(3, 3),
        common::cycle(5),
        common::cycle(6),
        common::path(4),
        Graph::empty(5),
        Graph::empty(1),
    ]
}

fn random_corpus() -> Vec<Graph> {
    let mut graphs = Vec::new();
    for seed in 0..12u64 {
        for (numer, denom) in [(1, 10), (1, 2), (9, 10)] {
            graphs.push(common::random_graph(9, numer, denom, seed * 31 + numer));
        }
    }
    graphs
}

#[test]
fn counts_match_enumeration_oracles() {
    for g in named_corpus().into_iter().chain(random_corpus()) {
        assert_eq!(
            counting::count_c4(&g).unwrap(),
            naive::c4_count(&g),
            "C4 mismatch on {g:?}"
        );
        assert_eq!(
            counting::count_triangles(&g),
            naive::triangle_count(&g),
            "triangle mismatch on {g:?}"
        );
        assert_eq!(
            counting::clique_number(&g),
            naive::clique_number(&g),
            "omega mismatch on {g:?}"
        );
        for k in 1..=4 {
            assert_eq!(
                counting::pair_degree_moment(&g, k).unwrap(),
                naive::pair_degree_moment(&g, k),
                "moment k={k} mismatch on {g:?}"
            );
        }
        for s in 1..=4 {
            assert_eq!(
                counting::independent_set_count(&g, s, BUDGET).unwrap(),
                naive::independent_set_count(&g, s),
                "i_{s} mismatch on {g:?}"
            );
        }
        for s in 3..=4 {
            assert_eq!(
                counting::count_k2s(&g, s).unwrap(),
                naive::k2s_count(&g, s),
                "K_{{2,{s}}} mismatch on {g:?}"
            );
        }
        for s in 2..=3 {
            assert_eq!(
                counting::independent_pair_degree_sum(&g, s, BUDGET).unwrap(),
                naive::independent_pair_degree_sum(&g, s),
                "independent pair degree sum s={s} mismatch on {g:?}"
            );
        }
    }
}

#[test]
fn independent_set_count_matches_oracle_up_to_n12() {
    for seed in 0..6u64 {
        let g = common::random_graph(12, 1, 2, 1000 + seed);
        for s in 1..=4 {
            assert_eq!(
                counting::independent_set_count(&g, s, BUDGET).unwrap(),
                naive::independent_set_count(&g, s),
            );
        }
    }
}

#[test]
fn pattern_search_agrees_with_permutation_oracle() {
    let patterns: Vec<(&str, Graph)> = vec![
        ("K3", common::k(3)),
        ("P3", common::path(3)),
        ("C4", common::cycle(4)),
        ("C5", common::cycle(5)),
        ("K22", common::kab(2, 2)),
        ("paw", Graph::from_edge_list(4, &[(0, 1), (1, 2), (2, 0), (2, 3)]).unwrap()),
    ];
    // Exhaustive order 5 plus random order 8.
    let mut hosts: Vec<Graph> = (0..1024u64).map(|m| common::graph_from_mask(5, m)).collect();
    for seed in 0..8u64 {
        hosts.push(common::random_graph(8, 1, 2, 777 + seed));
    }
    for host in &hosts {
        for (name, pattern) in &patterns {
            for mode in [PatternMode::Subgraph, PatternMode::Induced] {
                let q = PatternQuery {
                    pattern: pattern.clone(),
                    mode,
                };
                let got = find_pattern(host, &q, BUDGET).unwrap();
                let expect = naive::contains_pattern(host, pattern, mode == PatternMode::Induced);
                assert_eq!(
                    got.is_some(),
                    expect,
                    "{name} {mode:?} disagreement on {host:?}"
                );
                // Any witness must actually embed.
                if let Some(w) = got {
                    let map = w.image();
                    for i in 0..pattern.order() {
                        for j in (i + 1)..pattern.order() {
                            if pattern.has_edge(i, j) {
                                assert!(host.has_edge(map[i], map[j]));
                            } else if mode == PatternMode::Induced {
                                assert!(!host.has_edge(map[i], map[j]));
                            }
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn specialized_kst_matches_generic_search() {
    // Identical existence answers for s, t <= 3, specialized search vs the
    // raw backtracker. Exhaustive at order 5, strided sample at order 6.
    let mut hosts: Vec<Graph> = (0..1024u64).map(|m| common::graph_from_mask(5, m)).collect();
    hosts.extend((0..(1u64 << 15)).step_by(17).map(|m| common::graph_from_mask(6, m)));
    for host in &hosts {
        for s in 1..=3usize {
            for t in 1..=3usize {
                let pattern = common::kab(s, t);
                for mode in [PatternMode::Subgraph, PatternMode::Induced] {
                    let generic = find_pattern_generic(
                        host,
                        &PatternQuery { pattern: pattern.clone(), mode },
                        BUDGET,
                    )
                    .unwrap()
                    .is_some();
                    let special = find_kst(host, s, t, mode, BUDGET).unwrap().is_some();
                    assert_eq!(
                        special, generic,
                        "K_{{{s},{t}}} {mode:?} disagreement on {host:?}"
                    );
                }
            }
        }
    }
}

#[test]
fn find_pattern_routes_bipartite_patterns_with_correct_witnesses() {
    // A scrambled K_{2,3} labeling must come back with a correctly remapped
    // witness: left side {1, 4}, right side {0, 2, 3}.
    let pattern = Graph::from_edge_list(
        5,
        &[(1, 0), (1, 2), (1, 3), (4, 0), (4, 2), (4, 3)],
    )
    .unwrap();
    let host = common::kab(2, 3);
    for mode in [PatternMode::Subgraph, PatternMode::Induced] {
        let w = find_pattern(&host, &PatternQuery { pattern: pattern.clone(), mode }, BUDGET)
            .unwrap()
            .expect("K_{2,3} embeds in itself");
        let map = w.image();
        for i in 0..5 {
            for j in (i + 1)..5 {
                if pattern.has_edge(i, j) {
                    assert!(host.has_edge(map[i], map[j]));
                } else {
                    assert!(!host.has_edge(map[i], map[j]));
                }
            }
        }
    }
}

#[test]
fn pattern_search_exhaustive_order_6() {
    // Full order-6 sweep for the two cheapest patterns, both modes.
    let k3 = common::k(3);
    let p3 = common::path(3);
    for mask in 0..(1u64 << 15) {
        let host = common::graph_from_mask(6, mask);
        for pattern in [&k3, &p3] {
            for mode in [PatternMode::Subgraph, PatternMode::Induced] {
                let got = find_pattern(
                    &host,
                    &PatternQuery { pattern: pattern.clone(), mode },
                    BUDGET,
                )
                .unwrap()
                .is_some();
                let expect =
                    naive::contains_pattern(&host, pattern, mode == PatternMode::Induced);
                assert_eq!(got, expect, "{pattern:?} {mode:?} on {host:?}");
            }
        }
    }
}

#[test]
fn closed_walks_match_walk_enumeration() {
    for g in named_corpus() {
        assert_eq!(
            btr_core::spectral::closed_walks_4(&g).unwrap(),
            naive::closed_walks_4(&g),
            "CW4 mismatch on {g:?}"
        );
    }
    for seed in 0..6u64 {
        let g = common::random_graph(8, 1, 2, 99 + seed);
        assert_eq!(
            btr_core::spectral::closed_walks_4(&g).unwrap(),
            naive::closed_walks_4(&g)
        );
    }
}
