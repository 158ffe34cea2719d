//! Named graph constructions, each verified after building.
//!
//! `pp_incidence(q)` is the point–line incidence graph of the projective
//! plane PG(2, q) over a prime field: `2(q² + q + 1)` vertices,
//! `(q+1)`-regular, girth 6, hence 4-cycle-free. It is the standard
//! benchmark for graphs with no `K_{2,2}` at all (induced or not).

use std::fmt;

use crate::counting;
use crate::graph::{Graph, DEFAULT_ORDER_CAP};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Family {
    Complete { n: usize },
    CompleteBipartite { a: usize, b: usize },
    Cycle { n: usize },
    Petersen,
    Kneser { m: usize, k: usize },
    PpIncidence { q: u64 },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ConstructError {
    NotPrime { q: u64 },
    CycleTooShort { n: usize },
    OrderOverflow { order: usize, cap: usize },
    /// A post-construction check failed; a bug in the generator.
    PostCheckFailed { family: String, what: String },
}

impl fmt::Display for ConstructError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConstructError::NotPrime { q } => write!(f, "pp_incidence needs a prime q, got {q}"),
            ConstructError::CycleTooShort { n } => write!(f, "cycle needs n >= 3, got {n}"),
            ConstructError::OrderOverflow { order, cap } => {
                write!(f, "construction order {order} exceeds cap {cap}")
            }
            ConstructError::PostCheckFailed { family, what } => {
                write!(f, "post-construction check failed for {family}: {what}")
            }
        }
    }
}

impl std::error::Error for ConstructError {}

fn is_prime(q: u64) -> bool {
    if q < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= q {
        if q % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn check(family: &str, cond: bool, what: &str) -> Result<(), ConstructError> {
    if cond {
        Ok(())
    } else {
        Err(ConstructError::PostCheckFailed {
            family: family.to_string(),
            what: what.to_string(),
        })
    }
}

pub fn construct(family: &Family) -> Result<Graph, ConstructError> {
    match *family {
        Family::Complete { n } => complete(n),
        Family::CompleteBipartite { a, b } => complete_bipartite(a, b),
        Family::Cycle { n } => cycle(n),
        Family::Petersen => {
            let g = kneser(5, 2)?;
            check("petersen", g.order() == 10, "order 10")?;
            check("petersen", g.degrees().iter().all(|&d| d == 3), "3-regular")?;
            check("petersen", counting::count_triangles(&g) == 0, "triangle-free")?;
            check("petersen", counting::count_c4(&g) == Ok(0), "C4-free")?;
            Ok(g)
        }
        Family::Kneser { m, k } => kneser(m, k),
        Family::PpIncidence { q } => pp_incidence(q),
    }
}

pub fn complete(n: usize) -> Result<Graph, ConstructError> {
    guard_order(n)?;
    let mut edges = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for u in 0..n {
        for v in (u + 1)..n {
            edges.push((u, v));
        }
    }
    let g = Graph::from_edge_list(n, &edges).expect("in-range edges");
    check("complete", g.edge_count() == n * n.saturating_sub(1) / 2, "edge count")?;
    Ok(g)
}

pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph, ConstructError> {
    guard_order(a + b)?;
    let mut edges = Vec::with_capacity(a * b);
    for u in 0..a {
        for v in 0..b {
            edges.push((u, a + v));
        }
    }
    let g = Graph::from_edge_list(a + b, &edges).expect("in-range edges");
    check("complete_bipartite", g.edge_count() == a * b, "edge count")?;
    check(
        "complete_bipartite",
        counting::count_triangles(&g) == 0,
        "triangle-free",
    )?;
    Ok(g)
}

pub fn cycle(n: usize) -> Result<Graph, ConstructError> {
    if n < 3 {
        return Err(ConstructError::CycleTooShort { n });
    }
    guard_order(n)?;
    let edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    let g = Graph::from_edge_list(n, &edges).expect("in-range edges");
    check("cycle", g.degrees().iter().all(|&d| d == 2), "2-regular")?;
    Ok(g)
}

/// Path on `n` vertices (not a search family; used for named patterns).
pub fn path(n: usize) -> Result<Graph, ConstructError> {
    guard_order(n)?;
    let edges: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
    Ok(Graph::from_edge_list(n, &edges).expect("in-range edges"))
}

/// Kneser graph: vertices are k-subsets of an m-set, adjacent iff disjoint.
pub fn kneser(m: usize, k: usize) -> Result<Graph, ConstructError> {
    let order = counting::binomial(m as u64, k as u64)
        .and_then(|v| usize::try_from(v).ok())
        .ok_or(ConstructError::OrderOverflow {
            order: usize::MAX,
            cap: DEFAULT_ORDER_CAP,
        })?;
    guard_order(order)?;
    let subsets = k_subsets(m, k);
    let mut edges = Vec::new();
    for i in 0..subsets.len() {
        for j in (i + 1)..subsets.len() {
            if subsets[i] & subsets[j] == 0 {
                edges.push((i, j));
            }
        }
    }
    let g = Graph::from_edge_list(order, &edges).expect("in-range edges");
    if m >= 2 * k && k >= 1 {
        let degree = counting::binomial((m - k) as u64, k as u64).unwrap_or(0) as usize;
        check("kneser", g.degrees().iter().all(|&d| d == degree), "regularity")?;
    }
    Ok(g)
}

fn k_subsets(m: usize, k: usize) -> Vec<u32> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(k);
    fn rec(m: usize, k: usize, start: usize, current: &mut Vec<usize>, out: &mut Vec<u32>) {
        if current.len() == k {
            let mask = current.iter().fold(0u32, |acc, &i| acc | (1 << i));
            out.push(mask);
            return;
        }
        for i in start..m {
            current.push(i);
            rec(m, k, i + 1, current, out);
            current.pop();
        }
    }
    rec(m, k, 0, &mut current, &mut out);
    out
}

/// Point–line incidence graph of PG(2, q), q prime.
///
/// Vertices are the normalized nonzero triples over F_q up to scalar, once as
/// points and once as lines; a point and line are adjacent iff their dot
/// product vanishes mod q.
pub fn pp_incidence(q: u64) -> Result<Graph, ConstructError> {
    if !is_prime(q) {
        return Err(ConstructError::NotPrime { q });
    }
    let triples = normalized_triples(q);
    let m = triples.len();
    debug_assert_eq!(m as u64, q * q + q + 1);
    guard_order(2 * m)?;

    let mut edges = Vec::new();
    for (p, point) in triples.iter().enumerate() {
        for (l, line) in triples.iter().enumerate() {
            let dot = point[0] * line[0] + point[1] * line[1] + point[2] * line[2];
            if dot % q == 0 {
                edges.push((p, m + l));
            }
        }
    }
    let g = Graph::from_edge_list(2 * m, &edges).expect("in-range edges");

    let expected_edges = m * (q as usize + 1);
    check("pp_incidence", g.order() == 2 * m, "order 2(q^2+q+1)")?;
    check("pp_incidence", g.edge_count() == expected_edges, "(q^2+q+1)(q+1) edges")?;
    check(
        "pp_incidence",
        g.degrees().iter().all(|&d| d == q as usize + 1),
        "(q+1)-regular",
    )?;
    check("pp_incidence", counting::count_c4(&g) == Ok(0), "C4-free")?;
    Ok(g)
}

/// Canonical projective representatives: first nonzero coordinate is 1.
fn normalized_triples(q: u64) -> Vec<[u64; 3]> {
    let mut out = Vec::with_capacity((q * q + q + 1) as usize);
    for y in 0..q {
        for z in 0..q {
            out.push([1, y, z]);
        }
    }
    for z in 0..q {
        out.push([0, 1, z]);
    }
    out.push([0, 0, 1]);
    out
}

fn guard_order(order: usize) -> Result<(), ConstructError> {
    if order > DEFAULT_ORDER_CAP {
        Err(ConstructError::OrderOverflow {
            order,
            cap: DEFAULT_ORDER_CAP,
        })
    } else {
        Ok(())
    }
}
