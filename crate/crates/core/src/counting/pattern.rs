//! Subgraph and induced-subgraph search by backtracking.
//!
//! One generic matcher covers arbitrary patterns; a specialized routine
//! handles complete bipartite patterns `K_{s,t}` through candidate s-sets and
//! their common neighborhoods. Both run under an explicit node budget so a
//! pathological instance surfaces as an error instead of a silent "not found".

use std::fmt;

use crate::bitset::Bitset;
use crate::graph::Graph;

/// Default node budget for pattern search.
pub const DEFAULT_PATTERN_BUDGET: u64 = 10_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PatternMode {
    /// Edge-preserving embedding.
    Subgraph,
    /// Edge- and non-edge-preserving embedding.
    Induced,
}

/// A pattern to search for in a host graph.
#[derive(Clone, Debug)]
pub struct PatternQuery {
    pub pattern: Graph,
    pub mode: PatternMode,
}

impl PatternQuery {
    pub fn subgraph(pattern: Graph) -> Self {
        PatternQuery {
            pattern,
            mode: PatternMode::Subgraph,
        }
    }

    pub fn induced(pattern: Graph) -> Self {
        PatternQuery {
            pattern,
            mode: PatternMode::Induced,
        }
    }
}

/// Injective map realizing an embedding: pattern vertex `i` lands on host
/// vertex `map[i]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexMap(pub Vec<usize>);

impl VertexMap {
    pub fn image(&self) -> &[usize] {
        &self.0
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PatternError {
    /// The node budget ran out before the search space was exhausted.
    BudgetExceeded { explored: u64 },
}

impl fmt::Display for PatternError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PatternError::BudgetExceeded { explored } => {
                write!(f, "pattern search budget exceeded after {explored} nodes")
            }
        }
    }
}

impl std::error::Error for PatternError {}

struct Matcher<'a> {
    host: &'a Graph,
    pattern: &'a Graph,
    induced: bool,
    /// Pattern vertices in assignment order: most-constrained first, then by
    /// connectivity to the already-ordered prefix.
    order: Vec<usize>,
    assignment: Vec<usize>,
    used: Bitset,
    budget: u64,
    explored: u64,
    /// Host / pattern neighbor degree sequences (descending), for the
    /// subgraph-mode dominance prune.
    host_nbr_degs: Vec<Vec<usize>>,
    pat_nbr_degs: Vec<Vec<usize>>,
}

const UNSET: usize = usize::MAX;

fn neighbor_degree_seqs(g: &Graph) -> Vec<Vec<usize>> {
    (0..g.order())
        .map(|v| {
            let mut degs: Vec<usize> = g.row(v).iter().map(|w| g.degree(w)).collect();
            degs.sort_unstable_by(|a, b| b.cmp(a));
            degs
        })
        .collect()
}

/// Assignment order: start at a maximum-degree pattern vertex, then greedily
/// append the vertex with the most already-ordered neighbors.
fn assignment_order(pattern: &Graph) -> Vec<usize> {
    let np = pattern.order();
    let mut order = Vec::with_capacity(np);
    let mut placed = vec![false; np];
    for _ in 0..np {
        let mut best = UNSET;
        let mut best_key = (0usize, 0usize);
        for p in 0..np {
            if placed[p] {
                continue;
            }
            let anchored = pattern.row(p).iter().filter(|&q| placed[q]).count();
            let key = (anchored, pattern.degree(p));
            if best == UNSET || key > best_key {
                best = p;
                best_key = key;
            }
        }
        placed[best] = true;
        order.push(best);
    }
    order
}

impl<'a> Matcher<'a> {
    fn new(host: &'a Graph, pattern: &'a Graph, mode: PatternMode, budget: u64) -> Self {
        Matcher {
            host,
            pattern,
            induced: mode == PatternMode::Induced,
            order: assignment_order(pattern),
            assignment: vec![UNSET; pattern.order()],
            used: Bitset::new(host.order()),
            budget,
            explored: 0,
            host_nbr_degs: if mode == PatternMode::Subgraph {
                neighbor_degree_seqs(host)
            } else {
                Vec::new()
            },
            pat_nbr_degs: if mode == PatternMode::Subgraph {
                neighbor_degree_seqs(pattern)
            } else {
                Vec::new()
            },
        }
    }

    fn consistent(&self, p: usize, v: usize) -> bool {
        if !self.induced {
            if self.host.degree(v) < self.pattern.degree(p) {
                return false;
            }
            let want = &self.pat_nbr_degs[p];
            let have = &self.host_nbr_degs[v];
            if have.len() < want.len() || have.iter().zip(want).any(|(h, w)| h < w) {
                return false;
            }
        }
        for q in 0..self.pattern.order() {
            let u = self.assignment[q];
            if u == UNSET {
                continue;
            }
            let pat_adj = self.pattern.has_edge(p, q);
            let host_adj = self.host.has_edge(v, u);
            if pat_adj && !host_adj {
                return false;
            }
            if self.induced && !pat_adj && host_adj {
                return false;
            }
        }
        true
    }

    fn solve(&mut self, depth: usize) -> Result<bool, PatternError> {
        if depth == self.order.len() {
            return Ok(true);
        }
        let p = self.order[depth];
        // Candidates: intersection of host neighborhoods of already-assigned
        // pattern neighbors, or every unused host vertex when unanchored.
        let mut candidates = Bitset::full(self.host.order());
        for q in self.pattern.row(p).iter() {
            let u = self.assignment[q];
            if u != UNSET {
                candidates.intersect_with(self.host.row(u));
            }
        }
        candidates.subtract(&self.used);
        for v in candidates.iter() {
            self.explored += 1;
            if self.explored > self.budget {
                return Err(PatternError::BudgetExceeded {
                    explored: self.explored,
                });
            }
            if !self.consistent(p, v) {
                continue;
            }
            self.assignment[p] = v;
            self.used.insert(v);
            if self.solve(depth + 1)? {
                return Ok(true);
            }
            self.assignment[p] = UNSET;
            self.used.remove(v);
        }
        Ok(false)
    }
}

/// Searches `host` for the query pattern under the given node budget.
///
/// Complete bipartite patterns are routed through the specialized
/// [`find_kst`] search (s-sets and their common neighborhoods); everything
/// else goes through the generic backtracker. Returns the first witness
/// found, or `None` when the pattern provably does not embed. A pattern
/// larger than the host returns `None` immediately.
pub fn find_pattern(
    host: &Graph,
    query: &PatternQuery,
    budget: u64,
) -> Result<Option<VertexMap>, PatternError> {
    if let Some((left, right)) = complete_bipartite_sides(&query.pattern) {
        let found = find_kst(host, left.len(), right.len(), query.mode, budget)?;
        return Ok(found.map(|w| {
            // find_kst labels the s-side 0..s and the t-side s..s+t; undo the
            // pattern's own labeling.
            let mut map = vec![0usize; query.pattern.order()];
            for (rank, &p) in left.iter().enumerate() {
                map[p] = w.0[rank];
            }
            for (rank, &p) in right.iter().enumerate() {
                map[p] = w.0[left.len() + rank];
            }
            VertexMap(map)
        }));
    }
    find_pattern_generic(host, query, budget)
}

/// The generic backtracking matcher, with no specialized dispatch. Public so
/// tests can cross-validate it against the K_{s,t} search.
pub fn find_pattern_generic(
    host: &Graph,
    query: &PatternQuery,
    budget: u64,
) -> Result<Option<VertexMap>, PatternError> {
    let np = query.pattern.order();
    if np > host.order() {
        return Ok(None);
    }
    if np == 0 {
        return Ok(Some(VertexMap(Vec::new())));
    }
    let mut m = Matcher::new(host, &query.pattern, query.mode, budget);
    if m.solve(0)? {
        Ok(Some(VertexMap(m.assignment)))
    } else {
        Ok(None)
    }
}

/// If the pattern is a complete bipartite graph, returns its two sides
/// (ascending vertex lists); the sides are the complement's connected
/// components, which must be pattern-independent with all cross pairs being
/// pattern edges.
fn complete_bipartite_sides(pattern: &Graph) -> Option<(Vec<usize>, Vec<usize>)> {
    if pattern.order() < 2 {
        return None;
    }
    let comps = pattern.complement().connected_components();
    if comps.len() != 2 {
        return None;
    }
    let left: Vec<usize> = comps[0].to_vec();
    let right: Vec<usize> = comps[1].to_vec();
    for side in [&left, &right] {
        for (i, &u) in side.iter().enumerate() {
            for &v in &side[i + 1..] {
                if pattern.has_edge(u, v) {
                    return None;
                }
            }
        }
    }
    for &u in &left {
        for &v in &right {
            if !pattern.has_edge(u, v) {
                return None;
            }
        }
    }
    Some((left, right))
}

/// Like [`find_pattern`] but only admits embeddings whose image contains both
/// `u` and `v`. Used by the search module: after toggling edge `(u, v)`, any
/// newly created copy must cover both endpoints, with the pair mapped from a
/// pattern edge (edge added) or a pattern non-edge (edge removed).
pub fn find_pattern_anchored(
    host: &Graph,
    query: &PatternQuery,
    anchor: (usize, usize),
    anchor_is_edge: bool,
    budget: u64,
) -> Result<Option<VertexMap>, PatternError> {
    let np = query.pattern.order();
    if np > host.order() || np < 2 {
        return Ok(None);
    }
    let (u, v) = anchor;
    let mut remaining = budget;
    for a in 0..np {
        for b in 0..np {
            if a == b || query.pattern.has_edge(a, b) != anchor_is_edge {
                continue;
            }
            // In subgraph mode a pattern non-edge carries no constraint, so a
            // removed host edge cannot create a new copy through (a, b).
            if query.mode == PatternMode::Subgraph && !anchor_is_edge {
                continue;
            }
            let mut m = Matcher::new(host, &query.pattern, query.mode, remaining);
            if !m.consistent(a, u) {
                continue;
            }
            m.assignment[a] = u;
            m.used.insert(u);
            if !m.consistent(b, v) {
                continue;
            }
            m.assignment[b] = v;
            m.used.insert(v);
            m.order.retain(|&p| p != a && p != b);
            let found = m.solve(0).map_err(|_| PatternError::BudgetExceeded {
                explored: budget - remaining + m.explored,
            })?;
            if found {
                return Ok(Some(VertexMap(m.assignment)));
            }
            remaining = remaining.saturating_sub(m.explored);
            if remaining == 0 {
                return Err(PatternError::BudgetExceeded { explored: budget });
            }
        }
    }
    Ok(None)
}

/// Finds an independent set of exactly `size` vertices inside the candidate
/// bitset, by branching on the lowest remaining vertex.
fn independent_subset(
    g: &Graph,
    candidates: &Bitset,
    size: usize,
    chosen: &mut Vec<usize>,
    explored: &mut u64,
    budget: u64,
) -> Result<bool, PatternError> {
    if chosen.len() == size {
        return Ok(true);
    }
    if candidates.count() < size - chosen.len() {
        return Ok(false);
    }
    *explored += 1;
    if *explored > budget {
        return Err(PatternError::BudgetExceeded { explored: *explored });
    }
    let v = match candidates.first() {
        Some(v) => v,
        None => return Ok(false),
    };
    // Include v.
    let mut with_v = candidates.clone();
    with_v.remove(v);
    with_v.subtract(g.row(v));
    chosen.push(v);
    if independent_subset(g, &with_v, size, chosen, explored, budget)? {
        return Ok(true);
    }
    chosen.pop();
    // Exclude v.
    let mut without_v = candidates.clone();
    without_v.remove(v);
    independent_subset(g, &without_v, size, chosen, explored, budget)
}

/// Whether `g` has an independent set of `size` vertices.
pub fn has_independent_set(g: &Graph, size: usize, budget: u64) -> Result<bool, PatternError> {
    if size == 0 {
        return Ok(true);
    }
    if size > g.order() {
        return Ok(false);
    }
    let mut chosen = Vec::with_capacity(size);
    let mut explored = 0u64;
    let candidates = Bitset::full(g.order());
    independent_subset(g, &candidates, size, &mut chosen, &mut explored, budget)
}

/// Specialized search for `K_{s,t}` copies: enumerate candidate s-sets by
/// increasing vertex, maintaining their common neighborhood. Must agree with
/// [`find_pattern`] on the corresponding complete bipartite pattern.
///
/// The witness maps pattern vertices `0..s` to the s-side (ascending) and
/// `s..s+t` to the t-side (ascending).
pub fn find_kst(
    host: &Graph,
    s: usize,
    t: usize,
    mode: PatternMode,
    budget: u64,
) -> Result<Option<VertexMap>, PatternError> {
    assert!(s >= 1 && t >= 1, "K_{{s,t}} sides must be positive");
    if s + t > host.order() {
        return Ok(None);
    }
    let mut side = Vec::with_capacity(s);
    let mut explored = 0u64;
    let mut out = None;
    kst_extend(host, s, t, mode, &mut side, None, &mut explored, budget, &mut out)?;
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn kst_extend(
    host: &Graph,
    s: usize,
    t: usize,
    mode: PatternMode,
    side: &mut Vec<usize>,
    gamma: Option<Bitset>,
    explored: &mut u64,
    budget: u64,
    out: &mut Option<VertexMap>,
) -> Result<bool, PatternError> {
    if side.len() == s {
        let gamma = gamma.expect("s >= 1 so gamma is set");
        match mode {
            PatternMode::Subgraph => {
                if gamma.count() >= t {
                    let right: Vec<usize> = gamma.iter().take(t).collect();
                    let mut map = side.clone();
                    map.extend(right);
                    *out = Some(VertexMap(map));
                    return Ok(true);
                }
            }
            PatternMode::Induced => {
                let mut chosen = Vec::with_capacity(t);
                if independent_subset(host, &gamma, t, &mut chosen, explored, budget)? {
                    chosen.sort_unstable();
                    let mut map = side.clone();
                    map.extend(chosen);
                    *out = Some(VertexMap(map));
                    return Ok(true);
                }
            }
        }
        return Ok(false);
    }
    let start = side.last().map_or(0, |&v| v + 1);
    for v in start..host.order() {
        *explored += 1;
        if *explored > budget {
            return Err(PatternError::BudgetExceeded { explored: *explored });
        }
        // The s-side of an induced copy is independent.
        if mode == PatternMode::Induced && side.iter().any(|&u| host.has_edge(u, v)) {
            continue;
        }
        let next_gamma = match &gamma {
            None => host.row(v).clone(),
            Some(c) => c.intersection(host.row(v)),
        };
        if next_gamma.count() < t {
            continue;
        }
        side.push(v);
        let found = kst_extend(host, s, t, mode, side, Some(next_gamma), explored, budget, out)?;
        side.pop();
        if found {
            return Ok(true);
        }
    }
    Ok(false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    fn petersen() -> Graph {
        // Outer C5, inner pentagram, spokes.
        Graph::from_edge_list(
            10,
            &[
                (0, 1), (1, 2), (2, 3), (3, 4), (4, 0),
                (5, 7), (7, 9), (9, 6), (6, 8), (8, 5),
                (0, 5), (1, 6), (2, 7), (3, 8), (4, 9),
            ],
        )
        .unwrap()
    }

    fn c5() -> Graph {
        Graph::from_edge_list(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap()
    }

    fn k33() -> Graph {
        Graph::from_edge_list(
            6,
            &[(0, 3), (0, 4), (0, 5), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)],
        )
        .unwrap()
    }

    fn check_witness(host: &Graph, pattern: &Graph, mode: PatternMode, w: &VertexMap) {
        let map = w.image();
        assert_eq!(map.len(), pattern.order());
        for i in 0..map.len() {
            for j in (i + 1)..map.len() {
                assert_ne!(map[i], map[j], "witness not injective");
                if pattern.has_edge(i, j) {
                    assert!(host.has_edge(map[i], map[j]), "missing edge in witness");
                } else if mode == PatternMode::Induced {
                    assert!(!host.has_edge(map[i], map[j]), "extra edge in witness");
                }
            }
        }
    }

    #[test]
    fn petersen_contains_c5_subgraph() {
        let host = petersen();
        let q = PatternQuery::subgraph(c5());
        let w = find_pattern(&host, &q, DEFAULT_PATTERN_BUDGET).unwrap().unwrap();
        check_witness(&host, &q.pattern, q.mode, &w);
    }

    #[test]
    fn petersen_has_no_induced_k22() {
        let host = petersen();
        // Every pair of vertices has at most one common neighbor.
        assert!(find_kst(&host, 2, 2, PatternMode::Induced, DEFAULT_PATTERN_BUDGET)
            .unwrap()
            .is_none());
        let pattern = Graph::from_edge_list(4, &[(0, 2), (0, 3), (1, 2), (1, 3)]).unwrap();
        assert!(find_pattern(&host, &PatternQuery::induced(pattern), DEFAULT_PATTERN_BUDGET)
            .unwrap()
            .is_none());
    }

    #[test]
    fn k33_contains_induced_k22() {
        let host = k33();
        let w = find_kst(&host, 2, 2, PatternMode::Induced, DEFAULT_PATTERN_BUDGET)
            .unwrap()
            .unwrap();
        let pattern = Graph::from_edge_list(4, &[(0, 2), (0, 3), (1, 2), (1, 3)]).unwrap();
        check_witness(&host, &pattern, PatternMode::Induced, &w);
    }

    #[test]
    fn pattern_larger_than_host_is_absent() {
        let host = c5();
        let q = PatternQuery::subgraph(k33());
        assert_eq!(find_pattern(&host, &q, DEFAULT_PATTERN_BUDGET).unwrap(), None);
    }

    #[test]
    fn budget_exhaustion_is_an_error() {
        let host = k33();
        let q = PatternQuery::subgraph(k33());
        match find_pattern(&host, &q, 2) {
            Err(PatternError::BudgetExceeded { .. }) => {}
            other => panic!("expected budget error, got {other:?}"),
        }
    }

    #[test]
    fn anchored_matches_full_search_after_toggle() {
        // Adding the edge should create a triangle through the new edge.
        let g = Graph::from_edge_list(3, &[(0, 1), (1, 2)]).unwrap();
        let with_edge = g.with_toggled_edge(0, 2);
        let k3 = Graph::from_edge_list(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        let q = PatternQuery::subgraph(k3);
        let anchored =
            find_pattern_anchored(&with_edge, &q, (0, 2), true, DEFAULT_PATTERN_BUDGET).unwrap();
        assert!(anchored.is_some());
        let w = anchored.unwrap();
        check_witness(&with_edge, &q.pattern, q.mode, &w);
        assert!(w.image().contains(&0) && w.image().contains(&2));
    }

    #[test]
    fn anchored_removal_finds_new_induced_pattern() {
        // K4 minus an edge contains no induced K_{2,2}; removing a second
        // disjoint edge creates an induced C4.
        let k4 = Graph::from_edge_list(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let g = k4.with_toggled_edge(0, 1);
        let c4 = Graph::from_edge_list(4, &[(0, 2), (0, 3), (1, 2), (1, 3)]).unwrap();
        let q = PatternQuery::induced(c4.clone());
        assert!(find_pattern(&g, &q, DEFAULT_PATTERN_BUDGET).unwrap().is_none());
        let g2 = g.with_toggled_edge(2, 3);
        let w = find_pattern_anchored(&g2, &q, (2, 3), false, DEFAULT_PATTERN_BUDGET)
            .unwrap()
            .unwrap();
        check_witness(&g2, &c4, PatternMode::Induced, &w);
    }

    #[test]
    fn kst_subgraph_in_clique() {
        // K5 contains K_{2,3} as a subgraph but not induced.
        let k5 = Graph::from_edge_list(
            5,
            &[(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)],
        )
        .unwrap();
        assert!(find_kst(&k5, 2, 3, PatternMode::Subgraph, DEFAULT_PATTERN_BUDGET)
            .unwrap()
            .is_some());
        assert!(find_kst(&k5, 2, 3, PatternMode::Induced, DEFAULT_PATTERN_BUDGET)
            .unwrap()
            .is_none());
    }
}
