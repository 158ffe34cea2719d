//! Exact combinatorial counts over bitset adjacency.
//!
//! Everything here is integer-exact; overflow is detected, never wrapped.
//! The 4-cycle count runs two algebraically distinct routes and errors when
//! they disagree, which turns counting bugs into loud failures.

use std::collections::BTreeMap;
use std::fmt;

use crate::bitset::{Bitset, VertexSet};
use crate::graph::Graph;

mod pattern;

pub use pattern::{
    find_kst, find_pattern, find_pattern_anchored, find_pattern_generic, has_independent_set,
    PatternError, PatternMode, PatternQuery, VertexMap, DEFAULT_PATTERN_BUDGET,
};

/// Default node budget for set-enumeration counts (independent sets and
/// independent-set degree sums).
pub const DEFAULT_ENUMERATION_BUDGET: u64 = 100_000_000;

#[derive(Clone, Debug, PartialEq)]
pub enum CountError {
    /// Two supposedly-equal counting routes disagreed; a bug, not an input error.
    MethodMismatch { what: &'static str, a: u128, b: u128 },
    Overflow { what: &'static str },
    BudgetExceeded { explored: u64 },
    /// Pair-degree moments support exponents 1..=8.
    ExponentOutOfRange { k: u32 },
    /// `K_{2,s}` counting by pair aggregation requires `s >= 3`; for `s = 2`
    /// the aggregate counts every copy twice.
    SideTooSmall { s: usize },
    NotAPair { size: usize },
    NotNormalized { norm: f64 },
    NegativeEntry { index: usize, value: f64 },
    LengthMismatch { expected: usize, got: usize },
}

impl fmt::Display for CountError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CountError::MethodMismatch { what, a, b } => {
                write!(f, "internal mismatch in {what}: {a} vs {b} (counting bug)")
            }
            CountError::Overflow { what } => write!(f, "integer overflow in {what}"),
            CountError::BudgetExceeded { explored } => {
                write!(f, "enumeration budget exceeded after {explored} nodes")
            }
            CountError::ExponentOutOfRange { k } => {
                write!(f, "pair-degree moment exponent {k} outside 1..=8")
            }
            CountError::SideTooSmall { s } => {
                write!(f, "K_{{2,s}} count requires s >= 3, got {s}")
            }
            CountError::NotAPair { size } => {
                write!(f, "expected a vertex pair, got a set of size {size}")
            }
            CountError::NotNormalized { norm } => {
                write!(f, "vector is not unit 2-norm: |x|^2 = {norm}")
            }
            CountError::NegativeEntry { index, value } => {
                write!(f, "vector entry {index} is negative: {value}")
            }
            CountError::LengthMismatch { expected, got } => {
                write!(f, "vector length {got} does not match graph order {expected}")
            }
        }
    }
}

impl std::error::Error for CountError {}

/// Exact binomial coefficient; `None` on u128 overflow.
pub fn binomial(n: u64, k: u64) -> Option<u128> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 1..=k {
        acc = acc.checked_mul((n - k + i) as u128)?;
        acc /= i as u128;
    }
    Some(acc)
}

/// Exact count of 4-cycles, cross-checked through two routes.
///
/// Route one aggregates pair degrees: `sum over pairs of C(d(X), 2)` counts
/// every 4-cycle twice (once per diagonal). Route two goes through closed
/// 4-walks: `CW4 = 8 C4 + 2 sum d(v)^2 - 2 e`. Disagreement is reported as an
/// error rather than picking a winner.
pub fn count_c4(g: &Graph) -> Result<u64, CountError> {
    let n = g.order();
    let mut pair_choose2: u128 = 0;
    let mut pair_sq: u128 = 0;
    for u in 0..n {
        for v in (u + 1)..n {
            let d = g.pair_degree(u, v) as u128;
            pair_choose2 += d * d.saturating_sub(1) / 2;
            pair_sq += d * d;
        }
    }
    if pair_choose2 % 2 != 0 {
        return Err(CountError::MethodMismatch {
            what: "count_c4 (odd pair aggregate)",
            a: pair_choose2,
            b: 0,
        });
    }
    let by_pairs = pair_choose2 / 2;

    // Closed-walk route: CW4 = sum d(v)^2 + 2 sum_{u<v} d(u,v)^2, and
    // CW4 = 8 C4 + 2 sum d(v)^2 - 2 e.
    let deg_sq: u128 = (0..n).map(|v| (g.degree(v) as u128).pow(2)).sum();
    let cw4 = deg_sq + 2 * pair_sq;
    let numer = cw4 + 2 * g.edge_count() as u128;
    if numer < 2 * deg_sq || (numer - 2 * deg_sq) % 8 != 0 {
        return Err(CountError::MethodMismatch {
            what: "count_c4 (walk route)",
            a: cw4,
            b: deg_sq,
        });
    }
    let by_walks = (numer - 2 * deg_sq) / 8;

    if by_pairs != by_walks {
        return Err(CountError::MethodMismatch {
            what: "count_c4",
            a: by_pairs,
            b: by_walks,
        });
    }
    u64::try_from(by_pairs).map_err(|_| CountError::Overflow { what: "count_c4" })
}

/// Exact triangle count via edge-wise common-neighborhood popcounts.
pub fn count_triangles(g: &Graph) -> u64 {
    let mut total: u64 = 0;
    for u in 0..g.order() {
        for v in g.row(u).iter() {
            if v > u {
                total += g.pair_degree(u, v) as u64;
            }
        }
    }
    total / 3
}

/// Clique number by branch and bound with a greedy-coloring bound.
pub fn clique_number(g: &Graph) -> usize {
    let n = g.order();
    if n == 0 {
        return 0;
    }
    let mut best = 1;
    let p = Bitset::full(n);
    clique_expand(g, &p, 0, &mut best);
    best
}

fn clique_expand(g: &Graph, p: &Bitset, size: usize, best: &mut usize) {
    if p.is_empty() {
        if size > *best {
            *best = size;
        }
        return;
    }
    // Greedy coloring: vertices emitted in color order; a vertex with color c
    // can extend the clique to at most size + c.
    let mut ordered: Vec<(usize, usize)> = Vec::with_capacity(p.count());
    let mut uncolored = p.clone();
    let mut color = 0;
    while !uncolored.is_empty() {
        color += 1;
        let mut class_candidates = uncolored.clone();
        while let Some(v) = class_candidates.first() {
            class_candidates.remove(v);
            class_candidates.subtract(g.row(v));
            uncolored.remove(v);
            ordered.push((v, color));
        }
    }
    let mut remaining = p.clone();
    for &(v, c) in ordered.iter().rev() {
        if size + c <= *best {
            return;
        }
        let next = remaining.intersection(g.row(v));
        clique_expand(g, &next, size + 1, best);
        remaining.remove(v);
    }
}

/// Number of cliques of exactly `size` vertices, by ordered backtracking.
fn clique_count_of_size(
    g: &Graph,
    size: usize,
    budget: u64,
) -> Result<u128, CountError> {
    if size == 0 {
        return Ok(1);
    }
    let mut explored = 0u64;
    let candidates = Bitset::full(g.order());
    clique_count_rec(g, &candidates, size, &mut explored, budget)
}

fn clique_count_rec(
    g: &Graph,
    candidates: &Bitset,
    remaining: usize,
    explored: &mut u64,
    budget: u64,
) -> Result<u128, CountError> {
    if remaining == 0 {
        return Ok(1);
    }
    if candidates.count() < remaining {
        return Ok(0);
    }
    let mut total: u128 = 0;
    let mut upward = candidates.clone();
    for v in candidates.iter() {
        *explored += 1;
        if *explored > budget {
            return Err(CountError::BudgetExceeded { explored: *explored });
        }
        // Only extend upward so each set is counted once.
        upward.remove(v);
        let next = upward.intersection(g.row(v));
        total += clique_count_rec(g, &next, remaining - 1, explored, budget)?;
    }
    Ok(total)
}

/// `i_s(G)`: exact number of independent s-sets, counted as s-cliques of the
/// complement.
pub fn independent_set_count(g: &Graph, s: usize, budget: u64) -> Result<u128, CountError> {
    if s == 0 {
        return Ok(1);
    }
    if s > g.order() {
        return Ok(0);
    }
    clique_count_of_size(&g.complement(), s, budget)
}

/// `sum over pairs X of d(X)^k` for `1 <= k <= 8`, exact.
pub fn pair_degree_moment(g: &Graph, k: u32) -> Result<u128, CountError> {
    if !(1..=8).contains(&k) {
        return Err(CountError::ExponentOutOfRange { k });
    }
    let n = g.order();
    let mut total: u128 = 0;
    for u in 0..n {
        for v in (u + 1)..n {
            let d = g.pair_degree(u, v) as u128;
            let term = d
                .checked_pow(k)
                .ok_or(CountError::Overflow { what: "pair_degree_moment" })?;
            total = total
                .checked_add(term)
                .ok_or(CountError::Overflow { what: "pair_degree_moment" })?;
        }
    }
    Ok(total)
}

/// Number of `K_{2,s}` copies for `s >= 3`: `sum over pairs X of C(d(X), s)`.
pub fn count_k2s(g: &Graph, s: usize) -> Result<u128, CountError> {
    if s < 3 {
        return Err(CountError::SideTooSmall { s });
    }
    let n = g.order();
    let mut total: u128 = 0;
    for u in 0..n {
        for v in (u + 1)..n {
            let d = g.pair_degree(u, v) as u64;
            let term = binomial(d, s as u64).ok_or(CountError::Overflow { what: "count_k2s" })?;
            total = total
                .checked_add(term)
                .ok_or(CountError::Overflow { what: "count_k2s" })?;
        }
    }
    Ok(total)
}

/// `sum over independent s-sets I of C(d(I), 2)`, exact.
pub fn independent_pair_degree_sum(g: &Graph, s: usize, budget: u64) -> Result<u128, CountError> {
    assert!(s >= 1, "independent set size must be positive");
    if s > g.order() {
        return Ok(0);
    }
    let mut explored = 0u64;
    let mut total: u128 = 0;
    let mut chosen = Vec::with_capacity(s);
    ipds_rec(g, 0, s, None, &mut chosen, &mut total, &mut explored, budget)?;
    Ok(total)
}

#[allow(clippy::too_many_arguments)]
fn ipds_rec(
    g: &Graph,
    start: usize,
    s: usize,
    gamma: Option<Bitset>,
    chosen: &mut Vec<usize>,
    total: &mut u128,
    explored: &mut u64,
    budget: u64,
) -> Result<(), CountError> {
    if chosen.len() == s {
        let d = gamma.as_ref().map_or(0, Bitset::count) as u128;
        *total += d * d.saturating_sub(1) / 2;
        return Ok(());
    }
    for v in start..g.order() {
        *explored += 1;
        if *explored > budget {
            return Err(CountError::BudgetExceeded { explored: *explored });
        }
        if chosen.iter().any(|&u| g.has_edge(u, v)) {
            continue;
        }
        let next_gamma = match &gamma {
            None => g.row(v).clone(),
            Some(c) => c.intersection(g.row(v)),
        };
        chosen.push(v);
        ipds_rec(g, v + 1, s, Some(next_gamma), chosen, total, explored, budget)?;
        chosen.pop();
    }
    Ok(())
}

/// `e(G[Γ(x)])` for a vertex pair `x`.
pub fn edges_in_common_neighborhood(g: &Graph, x: &VertexSet) -> Result<u64, CountError> {
    if x.size() != 2 {
        return Err(CountError::NotAPair { size: x.size() });
    }
    let gamma = g
        .common_neighborhood(x)
        .expect("pair is non-empty")
        .members()
        .clone();
    let mut twice: u64 = 0;
    for v in gamma.iter() {
        twice += g.row(v).intersection_count(&gamma) as u64;
    }
    Ok(twice / 2)
}

/// Edge form of the Motzkin–Straus functional: `sum over edges of
/// x_i^2 x_j^2` for a nonnegative unit vector. Bounded above by
/// `(ω(G)-1) / (2 ω(G))`.
pub fn motzkin_straus_value(g: &Graph, x: &[f64], tol: f64) -> Result<f64, CountError> {
    if x.len() != g.order() {
        return Err(CountError::LengthMismatch {
            expected: g.order(),
            got: x.len(),
        });
    }
    let norm_sq: f64 = x.iter().map(|v| v * v).sum();
    if (norm_sq - 1.0).abs() > tol {
        return Err(CountError::NotNormalized { norm: norm_sq });
    }
    for (i, &v) in x.iter().enumerate() {
        if v < -tol {
            return Err(CountError::NegativeEntry { index: i, value: v });
        }
    }
    let mut total = 0.0;
    for (u, v) in g.edges() {
        total += x[u] * x[u] * x[v] * x[v];
    }
    Ok(total)
}

/// Summary of the exact counts the CLI reports per graph.
#[derive(Clone, Debug)]
pub struct CountSummary {
    pub c4: u64,
    pub k3: u64,
    pub omega: usize,
    /// `k -> sum over pairs of d(X)^k` for the requested exponents.
    pub pair_moments: BTreeMap<u32, u128>,
    /// `s -> i_s(G)` for the requested sizes.
    pub is_counts: BTreeMap<usize, u128>,
}

pub fn summarize(
    g: &Graph,
    moment_exponents: &[u32],
    is_sizes: &[usize],
    budget: u64,
) -> Result<CountSummary, CountError> {
    let mut pair_moments = BTreeMap::new();
    for &k in moment_exponents {
        pair_moments.insert(k, pair_degree_moment(g, k)?);
    }
    let mut is_counts = BTreeMap::new();
    for &s in is_sizes {
        is_counts.insert(s, independent_set_count(g, s, budget)?);
    }
    Ok(CountSummary {
        c4: count_c4(g)?,
        k3: count_triangles(g),
        omega: clique_number(g),
        pair_moments,
        is_counts,
    })
}
