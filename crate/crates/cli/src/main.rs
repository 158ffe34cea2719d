//! `btr`: evaluate spectral Turán bounds on graphs, verify the inequality
//! chain behind them, search for extremal graphs, and query Ramsey values.

use std::fs;
use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use btr_core::ramsey::{ramsey_brute_force, RamseyOracle, RamseySource, RamseyValue};
use btr_core::search::{scan_order, ConstraintSet, ScanObjective};
use btr_core::spectral;

mod analyze;
mod checks;
mod input;
mod manifest;
mod patterns;
mod search_cmd;

use analyze::{analyze_all, AnalyzeOptions};
use checks::{parse_checks, CheckParams};
use manifest::ManifestBuilder;

const EXIT_OK: u8 = 0;
const EXIT_CHECK_FAILED: u8 = 1;
const EXIT_INVALID_INPUT: u8 = 2;
const EXIT_NO_IMPROVEMENT: u8 = 3;

#[derive(Parser)]
#[command(name = "btr", version, about = "Spectral Turán bound evaluation and extremal graph search")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze graphs: spectral radius, counts, and bound reports.
    Analyze(AnalyzeArgs),
    /// Run the extremal search from a JSON config.
    Search(SearchArgs),
    /// Exhaustively scan all labeled graphs of one order and verify checks.
    Enumerate(EnumerateArgs),
    /// Query the Ramsey oracle R(H, K_t).
    Ramsey(RamseyArgs),
}

#[derive(Args)]
struct AnalyzeArgs {
    /// Input files (graph6 per line, or edge-list) or built-in names
    /// (petersen, heawood, c5, k4, k33, k88).
    #[arg(required = true)]
    inputs: Vec<String>,
    /// Comma-separated checks to run, or "all".
    #[arg(long, default_value = "")]
    checks: String,
    /// Include the full eigenvalue list in the output.
    #[arg(long)]
    full_spectrum: bool,
    /// Independent-set sizes to count (comma-separated).
    #[arg(long, default_value = "2,3")]
    is_sizes: String,
    /// Pair-degree moment exponents (comma-separated).
    #[arg(long, default_value = "1,2")]
    moments: String,
    /// Eigenvalue tolerance.
    #[arg(long, default_value_t = 1e-10)]
    tol: f64,
    /// Worker threads (default: hardware parallelism).
    #[arg(long)]
    jobs: Option<usize>,
    /// Human-readable output instead of JSON lines.
    #[arg(long)]
    pretty: bool,
    /// Write output here instead of stdout.
    #[arg(long)]
    out: Option<String>,
    /// Omit wall-clock fields so reruns are byte-identical.
    #[arg(long)]
    no_timestamp: bool,
    /// User-supplied Ramsey upper bound: H t VALUE (repeatable).
    #[arg(long, num_args = 3, value_names = ["H", "T", "VALUE"], action = clap::ArgAction::Append)]
    ramsey_upper: Vec<String>,
    #[command(flatten)]
    params: ParamArgs,
}

#[derive(Args)]
struct ParamArgs {
    /// Parameter s for parametrized checks.
    #[arg(long, default_value_t = 2)]
    s: usize,
    /// Parameter t for parametrized checks.
    #[arg(long, default_value_t = 2)]
    t: usize,
    /// Parameter r for parametrized checks.
    #[arg(long, default_value_t = 2)]
    r: usize,
    /// Forbidden subgraph H for parametrized checks (name or graph6).
    #[arg(long, default_value = "K3")]
    pattern_h: String,
    /// Explicit constant K (must be at least the Ramsey-derived minimum).
    #[arg(long)]
    k_const: Option<f64>,
}

#[derive(Args)]
struct SearchArgs {
    /// JSON search config path.
    config: String,
    /// Write the record here instead of stdout.
    #[arg(long)]
    out: Option<String>,
    /// Print improvement trace lines to stderr at this step granularity.
    #[arg(long)]
    log_every: Option<u64>,
    /// Seed override (otherwise from the config).
    #[arg(long)]
    seed: Option<u64>,
    /// Omit wall-clock fields so reruns are byte-identical.
    #[arg(long)]
    no_timestamp: bool,
}

#[derive(Args)]
struct EnumerateArgs {
    /// Graph order to scan exhaustively (all 2^C(n,2) labeled graphs).
    #[arg(long)]
    n: usize,
    /// Comma-separated checks, or "all".
    #[arg(long, default_value = "all")]
    checks: String,
    #[arg(long)]
    out: Option<String>,
    #[arg(long)]
    no_timestamp: bool,
    #[command(flatten)]
    params: ParamArgs,
}

#[derive(Args)]
struct RamseyArgs {
    /// Pattern H: name (K3, P3, C5, ...) or graph6.
    h: String,
    /// Independent-set target t.
    t: usize,
    /// auto: closed forms and table; table: table entries only;
    /// brute: exhaustive verification up to --n-max.
    #[arg(long, default_value = "auto")]
    mode: String,
    /// Brute-force order cap (at most 7).
    #[arg(long, default_value_t = 7)]
    n_max: usize,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match cli.command {
        Command::Analyze(args) => cmd_analyze(args),
        Command::Search(args) => cmd_search(args),
        Command::Enumerate(args) => cmd_enumerate(args),
        Command::Ramsey(args) => cmd_ramsey(args),
    };
    ExitCode::from(code)
}

fn fail(code: u8, message: &str) -> u8 {
    eprintln!("error: {message}");
    code
}

fn dense_cap_from_env() -> usize {
    std::env::var("BTR_DENSE_CAP")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(spectral::DEFAULT_DENSE_CAP)
}

fn configure_jobs(jobs: Option<usize>) {
    if let Some(j) = jobs {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(j.max(1)).build_global();
    }
}

fn parse_list<T: std::str::FromStr>(list: &str, what: &str) -> Result<Vec<T>, String> {
    list.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| s.parse::<T>().map_err(|_| format!("bad {what} entry {s:?}")))
        .collect()
}

fn build_params(args: &ParamArgs) -> Result<CheckParams, String> {
    Ok(CheckParams {
        s: args.s,
        t: args.t,
        r: args.r,
        h: patterns::parse_pattern(&args.pattern_h)?,
        k_const: args.k_const,
    })
}

fn build_oracle(ramsey_upper: &[String]) -> Result<RamseyOracle, String> {
    let mut oracle = RamseyOracle::builtin();
    for chunk in ramsey_upper.chunks(3) {
        if chunk.len() != 3 {
            return Err("--ramsey-upper needs H T VALUE".into());
        }
        let h = patterns::parse_pattern(&chunk[0])?;
        let t: usize = chunk[1].parse().map_err(|_| format!("bad t {:?}", chunk[1]))?;
        let value: u64 = chunk[2]
            .parse()
            .map_err(|_| format!("bad value {:?}", chunk[2]))?;
        oracle.add_user_upper(h, t, value);
    }
    Ok(oracle)
}

fn open_out(path: &Option<String>) -> Result<Box<dyn Write>, String> {
    match path {
        Some(p) => fs::File::create(p)
            .map(|f| Box::new(f) as Box<dyn Write>)
            .map_err(|e| format!("{p}: {e}")),
        None => Ok(Box::new(std::io::stdout())),
    }
}

fn cmd_analyze(args: AnalyzeArgs) -> u8 {
    configure_jobs(args.jobs);
    let mut mf = ManifestBuilder::new("analyze");
    for flag in [
        ("checks", args.checks.clone()),
        ("full_spectrum", args.full_spectrum.to_string()),
        ("is_sizes", args.is_sizes.clone()),
        ("moments", args.moments.clone()),
        ("tol", args.tol.to_string()),
        ("s", args.params.s.to_string()),
        ("t", args.params.t.to_string()),
        ("r", args.params.r.to_string()),
        ("pattern_h", args.params.pattern_h.clone()),
        ("ramsey_upper", args.ramsey_upper.join(" ")),
    ] {
        mf.digest_config(flag.0, &flag.1);
    }

    let params = match build_params(&args.params) {
        Ok(p) => p,
        Err(e) => return fail(EXIT_INVALID_INPUT, &e),
    };
    let specs = match parse_checks(&args.checks, &params) {
        Ok(s) => s,
        Err(e) => return fail(EXIT_INVALID_INPUT, &e),
    };
    let oracle = match build_oracle(&args.ramsey_upper) {
        Ok(o) => o,
        Err(e) => return fail(EXIT_INVALID_INPUT, &e),
    };
    let is_sizes = match parse_list::<usize>(&args.is_sizes, "--is-sizes") {
        Ok(v) => v,
        Err(e) => return fail(EXIT_INVALID_INPUT, &e),
    };
    let moments = match parse_list::<u32>(&args.moments, "--moments") {
        Ok(v) => v,
        Err(e) => return fail(EXIT_INVALID_INPUT, &e),
    };

    let cap = btr_core::graph::DEFAULT_ORDER_CAP;
    let items = match input::load_inputs(&args.inputs, cap) {
        Ok(items) => items,
        Err(e) => return fail(EXIT_INVALID_INPUT, &e.message),
    };
    for token in &args.inputs {
        match fs::read(token) {
            Ok(bytes) => mf.add_input(token, &bytes),
            Err(_) => mf.add_input(token, token.as_bytes()), // built-in name
        }
    }

    let opts = AnalyzeOptions {
        checks: specs,
        full_spectrum: args.full_spectrum,
        is_sizes,
        moment_exponents: moments,
        tol: args.tol,
        dense_cap: dense_cap_from_env(),
        budget: 10_000_000,
    };
    let records = match analyze_all(&items, &opts, &oracle) {
        Ok(r) => r,
        Err(e) => return fail(EXIT_INVALID_INPUT, &e),
    };

    let mut out = match open_out(&args.out) {
        Ok(o) => o,
        Err(e) => return fail(EXIT_INVALID_INPUT, &e),
    };
    let mut any_fail = false;
    for record in &records {
        mf.count_item(&record.item_verdict);
        any_fail |= record.item_verdict == "fails";
        let result = if args.pretty {
            analyze::write_pretty(&mut out, record)
        } else {
            writeln!(out, "{}", serde_json::to_string(record).expect("record serializes"))
        };
        if let Err(e) = result {
            return fail(EXIT_INVALID_INPUT, &e.to_string());
        }
    }
    manifest::emit(&mf.finish(!args.no_timestamp));
    if any_fail {
        EXIT_CHECK_FAILED
    } else {
        EXIT_OK
    }
}

fn cmd_search(args: SearchArgs) -> u8 {
    let mut mf = ManifestBuilder::new("search");
    let text = match fs::read_to_string(&args.config) {
        Ok(t) => t,
        Err(e) => return fail(EXIT_INVALID_INPUT, &format!("{}: {e}", args.config)),
    };
    mf.add_input(&args.config, text.as_bytes());
    if let Some(seed) = args.seed {
        mf.digest_config("seed", &seed.to_string());
    }
    let config: search_cmd::SearchConfig = match serde_json::from_str(&text) {
        Ok(c) => c,
        Err(e) => return fail(EXIT_INVALID_INPUT, &format!("{}: invalid config: {e}", args.config)),
    };
    let record = match search_cmd::run(&config, args.seed) {
        Ok(r) => r,
        Err(e) => return fail(EXIT_INVALID_INPUT, &e),
    };

    if let Some(every) = args.log_every {
        let every = every.max(1);
        let mut next = 0u64;
        for point in &record.trace {
            if point.step >= next {
                eprintln!("step={} best_lambda={:.9}", point.step, point.lambda);
                next = point.step + every;
            }
        }
    }

    let mut out = match open_out(&args.out) {
        Ok(o) => o,
        Err(e) => return fail(EXIT_INVALID_INPUT, &e),
    };
    if let Err(e) = writeln!(out, "{}", serde_json::to_string(&record).expect("record serializes")) {
        return fail(EXIT_INVALID_INPUT, &e.to_string());
    }
    mf.count_item(if record.improved() { "improved" } else { "no_improvement" });
    manifest::emit(&mf.finish(!args.no_timestamp));
    if record.improved() {
        EXIT_OK
    } else {
        EXIT_NO_IMPROVEMENT
    }
}

#[derive(Serialize)]
struct EnumerateSummary<'a> {
    schema: &'static str,
    kind: &'static str,
    n: usize,
    graphs_scanned: u64,
    checks: Vec<String>,
    verdict_counts: &'a std::collections::BTreeMap<String, u64>,
    violations: &'a [btr_core::search::Violation],
    zero_violations: bool,
}

fn cmd_enumerate(args: EnumerateArgs) -> u8 {
    let mut mf = ManifestBuilder::new("enumerate");
    mf.digest_config("n", &args.n.to_string());
    mf.digest_config("checks", &args.checks);

    let params = match build_params(&args.params) {
        Ok(p) => p,
        Err(e) => return fail(EXIT_INVALID_INPUT, &e),
    };
    let specs = match parse_checks(&args.checks, &params) {
        Ok(s) if !s.is_empty() => s,
        Ok(_) => return fail(EXIT_INVALID_INPUT, "enumerate needs at least one check"),
        Err(e) => return fail(EXIT_INVALID_INPUT, &e),
    };
    let names: Vec<String> = specs.iter().map(|s| s.name()).collect();

    let record = match scan_order(
        args.n,
        &ConstraintSet::default(),
        &ScanObjective::VerifyInequalities(specs),
    ) {
        Ok(r) => r,
        Err(e) => return fail(EXIT_INVALID_INPUT, &e.to_string()),
    };

    let summary = EnumerateSummary {
        schema: "btr/1",
        kind: "enumerate_summary",
        n: record.n,
        graphs_scanned: record.graphs_scanned,
        checks: names,
        verdict_counts: &record.verdict_counts,
        violations: &record.violations,
        zero_violations: record.violations.is_empty(),
    };
    let mut out = match open_out(&args.out) {
        Ok(o) => o,
        Err(e) => return fail(EXIT_INVALID_INPUT, &e),
    };
    if let Err(e) = writeln!(out, "{}", serde_json::to_string(&summary).expect("summary serializes")) {
        return fail(EXIT_INVALID_INPUT, &e.to_string());
    }
    mf.count_item(if summary.zero_violations { "holds" } else { "fails" });
    manifest::emit(&mf.finish(!args.no_timestamp));
    if summary.zero_violations {
        EXIT_OK
    } else {
        EXIT_CHECK_FAILED
    }
}

#[derive(Serialize)]
struct RamseyOutput {
    schema: &'static str,
    kind: &'static str,
    h: String,
    t: usize,
    mode: String,
    value: RamseyValue,
}

fn cmd_ramsey(args: RamseyArgs) -> u8 {
    let h = match patterns::parse_pattern(&args.h) {
        Ok(h) => h,
        Err(e) => return fail(EXIT_INVALID_INPUT, &e),
    };
    let value = match args.mode.as_str() {
        "auto" => RamseyOracle::builtin().lookup(&h, args.t),
        "table" => match RamseyOracle::builtin().lookup(&h, args.t) {
            Ok(v) if matches!(v.source, RamseySource::Table { .. }) => Ok(v),
            Ok(_) => {
                return fail(
                    EXIT_INVALID_INPUT,
                    &format!("no table entry for {} vs K_{}", args.h, args.t),
                )
            }
            Err(e) => Err(e),
        },
        "brute" => ramsey_brute_force(&h, args.t, args.n_max),
        other => return fail(EXIT_INVALID_INPUT, &format!("unknown mode {other:?}")),
    };
    let value = match value {
        Ok(v) => v,
        Err(e) => return fail(EXIT_INVALID_INPUT, &e.to_string()),
    };
    let output = RamseyOutput {
        schema: "btr/1",
        kind: "ramsey",
        h: args.h,
        t: args.t,
        mode: args.mode,
        value,
    };
    println!("{}", serde_json::to_string(&output).expect("output serializes"));
    EXIT_OK
}
