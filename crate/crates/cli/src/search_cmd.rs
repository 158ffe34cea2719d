//! `btr search`: run the extremal search from a JSON config file.

use serde::Deserialize;

use btr_core::search::{self, ConstraintSet, Schedule, SearchRecord};

use crate::patterns::parse_pattern;

#[derive(Deserialize)]
pub struct SearchConfig {
    pub n: usize,
    #[serde(default)]
    pub constraints: Vec<ConstraintSpec>,
    pub budget: u64,
    #[serde(default = "default_restarts")]
    pub restarts: usize,
    #[serde(default)]
    pub seed: u64,
    #[serde(default)]
    pub schedule: ScheduleOverrides,
}

fn default_restarts() -> usize {
    1
}

#[derive(Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum ConstraintSpec {
    /// Forbid a subgraph copy; the pattern comes from `graph6` or a name.
    Subgraph {
        #[serde(default)]
        graph6: Option<String>,
        #[serde(default)]
        name: Option<String>,
    },
    /// Forbid an induced copy of an arbitrary pattern.
    Induced {
        #[serde(default)]
        graph6: Option<String>,
        #[serde(default)]
        name: Option<String>,
    },
    /// Forbid an induced complete bipartite K_{s,t}.
    InducedKst { s: usize, t: usize },
}

#[derive(Deserialize, Default)]
pub struct ScheduleOverrides {
    pub t0: Option<f64>,
    pub cooling: Option<f64>,
    pub tabu_len: Option<usize>,
    pub plateau_rejections: Option<u64>,
    pub dense_resync_every: Option<u64>,
}

fn resolve_graph(
    graph6: &Option<String>,
    name: &Option<String>,
    what: &str,
) -> Result<btr_core::Graph, String> {
    match (graph6, name) {
        (Some(g6), _) => {
            btr_core::parse_graph6(g6).map_err(|e| format!("{what}: bad graph6 {g6:?}: {e}"))
        }
        (None, Some(n)) => parse_pattern(n),
        (None, None) => Err(format!("{what}: needs \"graph6\" or \"name\"")),
    }
}

pub fn build(config: &SearchConfig) -> Result<(ConstraintSet, Schedule), String> {
    let mut set = ConstraintSet::default();
    for spec in &config.constraints {
        match spec {
            ConstraintSpec::Subgraph { graph6, name } => set
                .forbidden_subgraphs
                .push(resolve_graph(graph6, name, "subgraph constraint")?),
            ConstraintSpec::Induced { graph6, name } => set
                .forbidden_induced
                .push(resolve_graph(graph6, name, "induced constraint")?),
            ConstraintSpec::InducedKst { s, t } => set.forbidden_induced_kst.push((*s, *t)),
        }
    }
    let defaults = Schedule::default();
    let schedule = Schedule {
        t0: config.schedule.t0.unwrap_or(defaults.t0),
        cooling: config.schedule.cooling.unwrap_or(defaults.cooling),
        tabu_len: config.schedule.tabu_len.unwrap_or(defaults.tabu_len),
        plateau_rejections: config
            .schedule
            .plateau_rejections
            .unwrap_or(defaults.plateau_rejections),
        dense_resync_every: config
            .schedule
            .dense_resync_every
            .unwrap_or(defaults.dense_resync_every),
    };
    Ok((set, schedule))
}

pub fn run(config: &SearchConfig, seed_override: Option<u64>) -> Result<SearchRecord, String> {
    let (constraints, schedule) = build(config)?;
    let seed = seed_override.unwrap_or(config.seed);
    search::local_search(
        config.n,
        &constraints,
        config.budget,
        seed,
        config.restarts,
        &schedule,
    )
    .map_err(|e| e.to_string())
}
