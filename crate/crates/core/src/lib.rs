//! Spectral and combinatorial bound evaluation for graphs with a forbidden
//! subgraph and a forbidden induced complete bipartite subgraph.
//!
//! The crate is organized around one immutable [`graph::Graph`]:
//!
//! - [`graph`] — bitset-adjacency graphs, graph6 and edge-list I/O;
//! - [`spectral`] — spectral radius, full spectra, Perron vectors, closed
//!   4-walk counts;
//! - [`counting`] — exact pattern counts (4-cycles, triangles, cliques,
//!   independent sets, pair-degree moments) and subgraph / induced-subgraph
//!   search;
//! - [`ramsey`] — an oracle for Ramsey numbers `R(H, K_t)`: curated exact
//!   values, closed forms, brute-force verification at tiny orders, certified
//!   intervals;
//! - [`bounds`] — evaluators for spectral Turán thresholds and the inequality
//!   chain behind them, producing margin-carrying reports;
//! - [`search`] — extremal graph search under forbidden-pattern constraints,
//!   exhaustive small-order scans, and named constructions.

pub mod bitset;
pub mod bounds;
pub mod counting;
pub mod graph;
pub mod ramsey;
pub mod search;
pub mod spectral;

pub use bitset::{Bitset, VertexSet};
pub use graph::{encode_graph6, parse_edge_list, parse_graph6, Graph, GraphError};
