//! Input loading: graph6 files (one record per line), edge-list files, or
//! built-in graph names.

use std::fs;
use std::path::Path;

use btr_core::graph::{parse_edge_list, parse_graph6_with_cap};
use btr_core::Graph;

use crate::patterns::builtin_named;

/// A loaded graph with its source label (for reports) and source line.
#[derive(Debug)]
pub struct InputItem {
    pub graph: Graph,
    pub source: String,
}

/// Parse failure with enough context for the exit-2 message.
#[derive(Debug)]
pub struct InputError {
    pub message: String,
}

pub fn load_inputs(tokens: &[String], cap: usize) -> Result<Vec<InputItem>, InputError> {
    let mut items = Vec::new();
    for token in tokens {
        if let Some(graph) = builtin_named(token) {
            items.push(InputItem {
                graph,
                source: token.clone(),
            });
            continue;
        }
        if !Path::new(token).exists() {
            return Err(InputError {
                message: format!("input {token:?} is neither a built-in graph name nor a file"),
            });
        }
        let text = fs::read_to_string(token).map_err(|e| InputError {
            message: format!("{token}: {e}"),
        })?;
        load_text(&text, token, cap, &mut items)?;
    }
    Ok(items)
}

fn load_text(
    text: &str,
    source: &str,
    cap: usize,
    items: &mut Vec<InputItem>,
) -> Result<(), InputError> {
    // Edge-list files start with a "n m" header; anything else is graph6
    // records, one per line.
    let first = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'));
    let looks_edge_list = first.is_some_and(|l| {
        let mut parts = l.split_whitespace();
        let two_ints = parts.next().is_some_and(|t| t.parse::<usize>().is_ok())
            && parts.next().is_some_and(|t| t.parse::<usize>().is_ok());
        two_ints && parts.next().is_none()
    });
    if looks_edge_list {
        let graph = parse_edge_list(text).map_err(|e| InputError {
            message: format!("{source}: {e}"),
        })?;
        items.push(InputItem {
            graph,
            source: source.to_string(),
        });
        return Ok(());
    }
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line == ">>graph6<<" {
            continue;
        }
        let graph = parse_graph6_with_cap(line, cap).map_err(|e| InputError {
            message: format!("{source}:{}: {e}", lineno + 1),
        })?;
        items.push(InputItem {
            graph,
            source: format!("{source}:{}", lineno + 1),
        });
    }
    Ok(())
}
