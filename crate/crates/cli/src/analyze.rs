//! `btr analyze`: per-graph spectral/counting summary plus bound reports,
//! one JSON line per graph.

use std::collections::BTreeMap;
use std::io::Write;

use rayon::prelude::*;
use serde::Serialize;

use btr_core::bounds::{self, BoundReport, CheckSpec, Verdict};
use btr_core::counting;
use btr_core::ramsey::RamseyOracle;
use btr_core::spectral::{self, EigenMethod};
use btr_core::Graph;

use crate::input::InputItem;

#[derive(Serialize)]
pub struct AnalyzeRecord {
    pub schema: &'static str,
    pub kind: &'static str,
    pub source: String,
    pub index: usize,
    pub order: usize,
    pub size: usize,
    pub lambda: f64,
    pub method: &'static str,
    pub residual: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub spectrum: Option<Vec<f64>>,
    pub c4: u64,
    pub k3: u64,
    pub omega: usize,
    /// Exact counts as decimal strings (may exceed u64).
    pub cw4: String,
    pub is_counts: BTreeMap<String, String>,
    pub pair_moments: BTreeMap<String, String>,
    pub reports: Vec<BoundReport>,
    pub item_verdict: String,
}

pub struct AnalyzeOptions {
    pub checks: Vec<CheckSpec>,
    pub full_spectrum: bool,
    pub is_sizes: Vec<usize>,
    pub moment_exponents: Vec<u32>,
    pub tol: f64,
    pub dense_cap: usize,
    pub budget: u64,
}

pub fn item_verdict(reports: &[BoundReport]) -> &'static str {
    if reports.is_empty() {
        return "analyzed";
    }
    if reports.iter().any(|r| r.verdict == Verdict::Fails) {
        "fails"
    } else if reports.iter().any(|r| r.verdict == Verdict::Holds) {
        "holds"
    } else if reports.iter().any(|r| r.verdict == Verdict::PremiseUnmet) {
        "premise_unmet"
    } else {
        "vacuous"
    }
}

pub fn analyze_one(
    item: &InputItem,
    index: usize,
    opts: &AnalyzeOptions,
    oracle: &RamseyOracle,
) -> Result<AnalyzeRecord, String> {
    let g = &item.graph;
    let method = if opts.full_spectrum || g.order() <= opts.dense_cap {
        EigenMethod::DenseFull
    } else {
        EigenMethod::PowerIteration
    };
    if opts.full_spectrum && g.order() > opts.dense_cap {
        return Err(format!(
            "{}: --full-spectrum needs order <= dense cap {} (got {}); raise BTR_DENSE_CAP",
            item.source,
            opts.dense_cap,
            g.order()
        ));
    }
    let summary =
        spectral::spectral_radius(g, method, opts.tol).map_err(|e| format!("{}: {e}", item.source))?;

    let counts = counting::summarize(g, &opts.moment_exponents, &opts.is_sizes, opts.budget)
        .map_err(|e| format!("{}: {e}", item.source))?;

    let mut reports = Vec::with_capacity(opts.checks.len());
    for spec in &opts.checks {
        if !check_applies(g, spec) {
            continue;
        }
        let report = bounds::run_check(g, spec, oracle, opts.budget)
            .map_err(|e| format!("{}: check {}: {e}", item.source, spec.name()))?;
        reports.push(report);
    }

    Ok(AnalyzeRecord {
        schema: "btr/1",
        kind: "analyze",
        source: item.source.clone(),
        index,
        order: g.order(),
        size: g.edge_count(),
        lambda: summary.lambda,
        method: match summary.method {
            EigenMethod::DenseFull => "dense_full",
            EigenMethod::PowerIteration => "power_iteration",
        },
        residual: summary.residual,
        spectrum: if opts.full_spectrum {
            summary.eigenvalues.clone()
        } else {
            None
        },
        c4: counts.c4,
        k3: counts.k3,
        omega: counts.omega,
        cw4: summary.cw4.to_string(),
        is_counts: counts
            .is_counts
            .iter()
            .map(|(k, v)| (k.to_string(), v.to_string()))
            .collect(),
        pair_moments: counts
            .pair_moments
            .iter()
            .map(|(k, v)| (k.to_string(), v.to_string()))
            .collect(),
        item_verdict: String::new(), // filled after reports settle
        reports,
    })
}

/// Some checks have hard parameter preconditions that depend on the graph
/// (prop3 needs n >= s-1); skip rather than error for corpus runs.
fn check_applies(g: &Graph, spec: &CheckSpec) -> bool {
    match spec {
        CheckSpec::Prop3 { s, .. } => g.order() + 1 >= *s,
        _ => g.order() > 0,
    }
}

/// Runs the full analyze pipeline over items (in parallel, output order
/// preserved). Returns the records and whether any item failed.
pub fn analyze_all(
    items: &[InputItem],
    opts: &AnalyzeOptions,
    oracle: &RamseyOracle,
) -> Result<Vec<AnalyzeRecord>, String> {
    let results: Result<Vec<AnalyzeRecord>, String> = items
        .par_iter()
        .enumerate()
        .map(|(i, item)| {
            let mut record = analyze_one(item, i, opts, oracle)?;
            record.item_verdict = item_verdict(&record.reports).to_string();
            Ok(record)
        })
        .collect();
    results
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeMap;

    fn report(verdict: Verdict) -> BoundReport {
        BoundReport {
            schema: "btr/1",
            which: "test".into(),
            lhs: 0.0,
            rhs: 0.0,
            margin: 0.0,
            verdict,
            witness: None,
            ramsey_provenance: Vec::new(),
            info: BTreeMap::new(),
        }
    }

    #[test]
    fn item_verdict_precedence() {
        assert_eq!(item_verdict(&[]), "analyzed");
        assert_eq!(item_verdict(&[report(Verdict::Holds)]), "holds");
        assert_eq!(
            item_verdict(&[report(Verdict::Holds), report(Verdict::Fails)]),
            "fails"
        );
        assert_eq!(
            item_verdict(&[report(Verdict::Vacuous), report(Verdict::PremiseUnmet)]),
            "premise_unmet"
        );
        assert_eq!(item_verdict(&[report(Verdict::Vacuous)]), "vacuous");
        assert_eq!(
            item_verdict(&[report(Verdict::PremiseUnmet), report(Verdict::Holds)]),
            "holds"
        );
    }
}

pub fn write_pretty<W: Write>(out: &mut W, r: &AnalyzeRecord) -> std::io::Result<()> {
    writeln!(
        out,
        "{}  n={} m={} lambda={:.9} omega={} C4={} k3={} cw4={}",
        r.source, r.order, r.size, r.lambda, r.omega, r.c4, r.k3, r.cw4
    )?;
    for (s, v) in &r.is_counts {
        writeln!(out, "  i_{s} = {v}")?;
    }
    for (k, v) in &r.pair_moments {
        writeln!(out, "  sum d(X)^{k} = {v}")?;
    }
    if let Some(spectrum) = &r.spectrum {
        let shown: Vec<String> = spectrum.iter().take(8).map(|l| format!("{l:.6}")).collect();
        writeln!(
            out,
            "  spectrum = [{}{}]",
            shown.join(", "),
            if spectrum.len() > 8 { ", ..." } else { "" }
        )?;
    }
    for report in &r.reports {
        writeln!(
            out,
            "  {:<22} {:>14} lhs={:.6} rhs={:.6} margin={:.6}",
            report.which,
            format!("[{:?}]", report.verdict).to_lowercase(),
            report.lhs,
            report.rhs,
            report.margin
        )?;
    }
    writeln!(out, "  => {}", r.item_verdict)
}
