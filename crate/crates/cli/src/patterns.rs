//! Named graphs and pattern parsing.
//!
//! Wherever a file path is accepted, the built-in names below work too.
//! Pattern tokens additionally accept `K<n>`, `P<n>`, `C<n>`, `K<a>,<b>`
//! and raw graph6.

use btr_core::graph::parse_graph6;
use btr_core::search::families;
use btr_core::Graph;

/// Exact built-in names (lowercase): petersen, heawood, c5, k4, k33, k88.
/// Note `k33`/`k88` are the complete bipartite graphs, not K_33/K_88.
pub fn builtin_named(token: &str) -> Option<Graph> {
    match token.to_ascii_lowercase().as_str() {
        "petersen" => families::construct(&families::Family::Petersen).ok(),
        "heawood" => families::pp_incidence(2).ok(),
        "c5" => families::cycle(5).ok(),
        "k4" => families::complete(4).ok(),
        "k33" => families::complete_bipartite(3, 3).ok(),
        "k88" => families::complete_bipartite(8, 8).ok(),
        _ => None,
    }
}

/// Parses a pattern token: built-in name, `K<n>` / `P<n>` / `C<n>` /
/// `K<a>,<b>`, or a raw graph6 record.
pub fn parse_pattern(token: &str) -> Result<Graph, String> {
    if let Some(g) = builtin_named(token) {
        return Ok(g);
    }
    let bytes = token.as_bytes();
    if bytes.len() >= 2 {
        let head = bytes[0].to_ascii_uppercase();
        let rest = &token[1..];
        if let Some((a, b)) = rest.split_once(',') {
            if head == b'K' {
                if let (Ok(a), Ok(b)) = (a.parse::<usize>(), b.parse::<usize>()) {
                    return families::complete_bipartite(a, b).map_err(|e| e.to_string());
                }
            }
        } else if let Ok(n) = rest.parse::<usize>() {
            match head {
                b'K' => return families::complete(n).map_err(|e| e.to_string()),
                b'P' => return families::path(n).map_err(|e| e.to_string()),
                b'C' => return families::cycle(n).map_err(|e| e.to_string()),
                _ => {}
            }
        }
    }
    parse_graph6(token)
        .map_err(|e| format!("pattern {token:?} is neither a known name nor valid graph6: {e}"))
}
