//! Simple undirected graphs on bitset adjacency rows.
//!
//! A [`Graph`] is immutable after construction: symmetric zero-diagonal
//! adjacency, cached edge count, vertices indexed `0..n`. All heavier
//! machinery (counting, spectra, search) consumes this one representation.

use std::fmt;

use crate::bitset::{Bitset, VertexSet};

/// Default upper limit on the number of vertices. Dense eigensolving is
/// cubic, so anything past this is rejected rather than silently accepted.
pub const DEFAULT_ORDER_CAP: usize = 4096;

/// Immutable simple undirected graph.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    rows: Vec<Bitset>,
    edge_count: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphError {
    VertexOutOfRange { vertex: usize, order: usize },
    SelfLoop { vertex: usize },
    OrderOverCap { order: usize, cap: usize },
    EmptyVertexSet,
    UniverseMismatch { expected: usize, got: usize },
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphError::VertexOutOfRange { vertex, order } => {
                write!(f, "vertex {vertex} out of range for order {order}")
            }
            GraphError::SelfLoop { vertex } => write!(f, "self-loop at vertex {vertex}"),
            GraphError::OrderOverCap { order, cap } => {
                write!(f, "graph order {order} exceeds cap {cap}")
            }
            GraphError::EmptyVertexSet => {
                write!(f, "common neighborhood of the empty set is undefined")
            }
            GraphError::UniverseMismatch { expected, got } => {
                write!(f, "vertex set universe {got} does not match graph order {expected}")
            }
        }
    }
}

impl std::error::Error for GraphError {}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            rows: vec![Bitset::new(n); n],
            edge_count: 0,
        }
    }

    /// Builds from adjacency rows. Rows must be symmetric with a zero
    /// diagonal; violations are a caller bug.
    pub fn from_rows(rows: Vec<Bitset>) -> Self {
        let n = rows.len();
        let mut twice_edges = 0usize;
        for (i, row) in rows.iter().enumerate() {
            debug_assert_eq!(row.universe(), n, "row {i} universe mismatch");
            debug_assert!(!row.contains(i), "self-loop at vertex {i}");
            twice_edges += row.count();
        }
        debug_assert!(twice_edges % 2 == 0, "adjacency is not symmetric");
        #[cfg(debug_assertions)]
        for i in 0..n {
            for j in rows[i].iter() {
                debug_assert!(rows[j].contains(i), "asymmetry at ({i},{j})");
            }
        }
        Graph {
            n,
            rows,
            edge_count: twice_edges / 2,
        }
    }

    /// Builds from an explicit edge list; duplicate edges collapse.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        if n > DEFAULT_ORDER_CAP {
            return Err(GraphError::OrderOverCap {
                order: n,
                cap: DEFAULT_ORDER_CAP,
            });
        }
        let mut rows = vec![Bitset::new(n); n];
        let mut edge_count = 0usize;
        for &(u, v) in edges {
            if u >= n {
                return Err(GraphError::VertexOutOfRange { vertex: u, order: n });
            }
            if v >= n {
                return Err(GraphError::VertexOutOfRange { vertex: v, order: n });
            }
            if u == v {
                return Err(GraphError::SelfLoop { vertex: u });
            }
            if !rows[u].contains(v) {
                rows[u].insert(v);
                rows[v].insert(u);
                edge_count += 1;
            }
        }
        Ok(Graph {
            n,
            rows,
            edge_count,
        })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    #[inline(always)]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u].contains(v)
    }

    /// Neighbor bitset of `v`.
    #[inline(always)]
    pub fn row(&self, v: usize) -> &Bitset {
        &self.rows[v]
    }

    #[inline(always)]
    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    /// Edges as `(u, v)` with `u < v`, lexicographic.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count);
        for u in 0..self.n {
            for v in self.rows[u].iter() {
                if v > u {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Returns the graph with edge `(u, v)` flipped. Panics on `u == v` or
    /// out-of-range vertices.
    pub fn with_toggled_edge(&self, u: usize, v: usize) -> Graph {
        assert!(u < self.n && v < self.n && u != v);
        let mut rows = self.rows.clone();
        let edge_count = if rows[u].contains(v) {
            rows[u].remove(v);
            rows[v].remove(u);
            self.edge_count - 1
        } else {
            rows[u].insert(v);
            rows[v].insert(u);
            self.edge_count + 1
        };
        Graph {
            n: self.n,
            rows,
            edge_count,
        }
    }

    /// Γ(X): vertices adjacent to every member of `x`. Rejects empty `x`.
    pub fn common_neighborhood(&self, x: &VertexSet) -> Result<VertexSet, GraphError> {
        if x.universe() != self.n {
            return Err(GraphError::UniverseMismatch {
                expected: self.n,
                got: x.universe(),
            });
        }
        let mut iter = x.iter();
        let first = iter.next().ok_or(GraphError::EmptyVertexSet)?;
        let mut acc = self.rows[first].clone();
        for v in iter {
            acc.intersect_with(&self.rows[v]);
        }
        Ok(VertexSet::from_bitset(acc))
    }

    /// Γ({u, v}) popcount without allocating.
    #[inline(always)]
    pub fn pair_degree(&self, u: usize, v: usize) -> usize {
        self.rows[u].intersection_count(&self.rows[v])
    }

    /// G[s]: vertex i of the result is the i-th smallest member of `s`.
    pub fn induced_subgraph(&self, s: &VertexSet) -> Graph {
        assert_eq!(s.universe(), self.n, "vertex set universe mismatch");
        let members = s.to_vec();
        let k = members.len();
        let mut rows = vec![Bitset::new(k); k];
        for (i, &u) in members.iter().enumerate() {
            for (j, &v) in members.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    rows[i].insert(j);
                    rows[j].insert(i);
                }
            }
        }
        Graph::from_rows(rows)
    }

    /// Edge iff non-edge in `self`; involution.
    pub fn complement(&self) -> Graph {
        let mut rows = Vec::with_capacity(self.n);
        for i in 0..self.n {
            let mut row = Bitset::full(self.n);
            row.subtract(&self.rows[i]);
            row.remove(i);
            rows.push(row);
        }
        Graph::from_rows(rows)
    }

    /// Connected components as vertex sets, each sorted by smallest member.
    pub fn connected_components(&self) -> Vec<VertexSet> {
        let mut seen = Bitset::new(self.n);
        let mut components = Vec::new();
        for start in 0..self.n {
            if seen.contains(start) {
                continue;
            }
            let mut comp = Bitset::new(self.n);
            let mut stack = vec![start];
            comp.insert(start);
            seen.insert(start);
            while let Some(v) = stack.pop() {
                for w in self.rows[v].iter() {
                    if !seen.contains(w) {
                        seen.insert(w);
                        comp.insert(w);
                        stack.push(w);
                    }
                }
            }
            components.push(VertexSet::from_bitset(comp));
        }
        components
    }

    pub fn is_complete(&self) -> bool {
        self.edge_count == self.n * self.n.saturating_sub(1) / 2
    }

    /// Full vertex set of the graph.
    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::from_bitset(Bitset::full(self.n))
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, m={}, g6={})", self.n, self.edge_count, encode_graph6(self))
    }
}

// ---------------------------------------------------------------------------
// graph6 encoding
// ---------------------------------------------------------------------------

/// Errors from graph6 parsing, each with the byte offset into the record.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Graph6Error {
    Empty,
    NonPrintable { offset: usize, byte: u8 },
    MalformedLengthPrefix { offset: usize },
    OrderOverCap { offset: usize, order: usize, cap: usize },
    PayloadTooShort { offset: usize, expected: usize, got: usize },
    TrailingGarbage { offset: usize },
    NonZeroPadding { offset: usize },
}

impl fmt::Display for Graph6Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Graph6Error::Empty => write!(f, "empty graph6 record"),
            Graph6Error::NonPrintable { offset, byte } => {
                write!(f, "byte {byte:#04x} at offset {offset} outside graph6 range 63..=126")
            }
            Graph6Error::MalformedLengthPrefix { offset } => {
                write!(f, "malformed length prefix at offset {offset}")
            }
            Graph6Error::OrderOverCap { offset, order, cap } => {
                write!(f, "graph6 order {order} at offset {offset} exceeds cap {cap}")
            }
            Graph6Error::PayloadTooShort { offset, expected, got } => write!(
                f,
                "graph6 payload truncated at offset {offset}: expected {expected} bytes, got {got}"
            ),
            Graph6Error::TrailingGarbage { offset } => {
                write!(f, "trailing bytes after graph6 payload at offset {offset}")
            }
            Graph6Error::NonZeroPadding { offset } => {
                write!(f, "nonzero padding bits in final graph6 byte at offset {offset}")
            }
        }
    }
}

impl std::error::Error for Graph6Error {}

const G6_HEADER: &str = ">>graph6<<";

/// Parses a single graph6 record (optional `>>graph6<<` header) with the
/// default order cap.
pub fn parse_graph6(text: &str) -> Result<Graph, Graph6Error> {
    parse_graph6_with_cap(text, DEFAULT_ORDER_CAP)
}

pub fn parse_graph6_with_cap(text: &str, cap: usize) -> Result<Graph, Graph6Error> {
    let text = text.trim_end_matches(['\n', '\r']);
    let (body, base) = match text.strip_prefix(G6_HEADER) {
        Some(rest) => (rest, G6_HEADER.len()),
        None => (text, 0),
    };
    let bytes = body.as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    for (i, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Graph6Error::NonPrintable {
                offset: base + i,
                byte: b,
            });
        }
    }

    // N(n): 1 byte for n <= 62, "~" + 3 bytes for n <= 258047, "~~" + 6 bytes.
    let (n, header_len) = if bytes[0] != 126 {
        ((bytes[0] - 63) as usize, 1)
    } else if bytes.len() >= 2 && bytes[1] != 126 {
        if bytes.len() < 4 {
            return Err(Graph6Error::MalformedLengthPrefix { offset: base });
        }
        let mut v = 0usize;
        for &b in &bytes[1..4] {
            v = (v << 6) | (b - 63) as usize;
        }
        (v, 4)
    } else {
        if bytes.len() < 8 {
            return Err(Graph6Error::MalformedLengthPrefix { offset: base });
        }
        let mut v = 0usize;
        for &b in &bytes[2..8] {
            v = (v << 6) | (b - 63) as usize;
        }
        (v, 8)
    };
    if n > cap {
        return Err(Graph6Error::OrderOverCap { offset: base, order: n, cap });
    }

    let nbits = n * n.saturating_sub(1) / 2;
    let payload_len = nbits.div_ceil(6);
    let got = bytes.len() - header_len;
    if got < payload_len {
        return Err(Graph6Error::PayloadTooShort {
            offset: base + bytes.len(),
            expected: payload_len,
            got,
        });
    }
    if got > payload_len {
        return Err(Graph6Error::TrailingGarbage {
            offset: base + header_len + payload_len,
        });
    }

    let payload = &bytes[header_len..];
    let mut rows = vec![Bitset::new(n); n];
    let mut pos = 0usize;
    // Upper triangle column by column: (0,1), (0,2), (1,2), (0,3), ...
    for j in 1..n {
        for i in 0..j {
            let byte = payload[pos / 6] - 63;
            if (byte >> (5 - pos % 6)) & 1 != 0 {
                rows[i].insert(j);
                rows[j].insert(i);
            }
            pos += 1;
        }
    }
    // Padding bits beyond the triangle must be zero.
    if nbits % 6 != 0 {
        let last = payload[payload_len - 1] - 63;
        let used = nbits % 6;
        if last & ((1u8 << (6 - used)) - 1) != 0 {
            return Err(Graph6Error::NonZeroPadding {
                offset: base + header_len + payload_len - 1,
            });
        }
    }
    Ok(Graph::from_rows(rows))
}

/// Canonical (zero-padded) graph6 encoding; round-trips through
/// [`parse_graph6`].
pub fn encode_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(63 + n as u8);
    } else if n <= 258_047 {
        out.push(126);
        out.push(63 + ((n >> 12) & 0x3f) as u8);
        out.push(63 + ((n >> 6) & 0x3f) as u8);
        out.push(63 + (n & 0x3f) as u8);
    } else {
        out.push(126);
        out.push(126);
        for shift in (0..36).step_by(6).rev() {
            out.push(63 + ((n >> shift) & 0x3f) as u8);
        }
    }
    let mut acc = 0u8;
    let mut used = 0u32;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.has_edge(i, j));
            used += 1;
            if used == 6 {
                out.push(63 + acc);
                acc = 0;
                used = 0;
            }
        }
    }
    if used > 0 {
        out.push(63 + (acc << (6 - used)));
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

// ---------------------------------------------------------------------------
// Edge-list text format: first line "n m", then m lines "u v".
// ---------------------------------------------------------------------------

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EdgeListError {
    MissingHeader,
    BadHeader { line: usize },
    BadEdgeLine { line: usize },
    EdgeCountMismatch { declared: usize, got: usize },
    Graph { line: usize, source: GraphError },
}

impl fmt::Display for EdgeListError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EdgeListError::MissingHeader => write!(f, "edge list is empty; expected header \"n m\""),
            EdgeListError::BadHeader { line } => {
                write!(f, "line {line}: expected header \"n m\"")
            }
            EdgeListError::BadEdgeLine { line } => {
                write!(f, "line {line}: expected edge \"u v\"")
            }
            EdgeListError::EdgeCountMismatch { declared, got } => {
                write!(f, "header declared {declared} edges but {got} edge lines follow")
            }
            EdgeListError::Graph { line, source } => write!(f, "line {line}: {source}"),
        }
    }
}

impl std::error::Error for EdgeListError {}

/// Parses the edge-list text format. Lines are 1-indexed in errors.
pub fn parse_edge_list(text: &str) -> Result<Graph, EdgeListError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (header_line, header) = lines.next().ok_or(EdgeListError::MissingHeader)?;
    let mut parts = header.split_whitespace();
    let n: usize = parts
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or(EdgeListError::BadHeader { line: header_line })?;
    let m: usize = parts
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or(EdgeListError::BadHeader { line: header_line })?;
    if parts.next().is_some() {
        return Err(EdgeListError::BadHeader { line: header_line });
    }
    let mut edges = Vec::with_capacity(m);
    let mut last_line = header_line;
    for (line, text) in lines {
        let mut parts = text.split_whitespace();
        let u: usize = parts
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or(EdgeListError::BadEdgeLine { line })?;
        let v: usize = parts
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or(EdgeListError::BadEdgeLine { line })?;
        if parts.next().is_some() {
            return Err(EdgeListError::BadEdgeLine { line });
        }
        edges.push((u, v));
        last_line = line;
    }
    if edges.len() != m {
        return Err(EdgeListError::EdgeCountMismatch {
            declared: m,
            got: edges.len(),
        });
    }
    Graph::from_edge_list(n, &edges).map_err(|source| EdgeListError::Graph {
        line: last_line,
        source,
    })
}

/// Writes the edge-list text format.
pub fn encode_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.order(), g.edge_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}
