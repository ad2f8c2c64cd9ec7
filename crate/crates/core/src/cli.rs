//! Command-line front end. Each command renders to a string so it can be
//! exercised without spawning a process; `main` only handles I/O and exit codes.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::time::{Duration, Instant};

use clap::{Parser, Subcommand};
use serde::Serialize;

use crate::audit::{render_report, sweep_parallel, AuditConfig, ReportFormat};
use crate::closed_form::{cf_invariants, cf_part_sizes};
use crate::error::Result;
use crate::export::{export_graph, ExportOptions, GraphFormat};
use crate::invariants::{compare_invariants, CheckStatus, InvariantCheck, InvariantSet};
use crate::oracle::{IndependentGraph, OracleLimits};
use crate::zn::Modulus;

pub const EXIT_OK: u8 = 0;
pub const EXIT_USAGE: u8 = 1;
pub const EXIT_STRICT_FAILURE: u8 = 2;

#[derive(Debug, Parser)]
#[command(name = "indegraph", version, about = "Independent graph of Z_n: invariants, exports and statement audits")]
pub struct Cli {
    /// Largest n for which the explicit graph is built.
    #[arg(long, global = true, env = "INDEGRAPH_ORACLE_LIMIT", default_value_t = crate::oracle::DEFAULT_BUILD_LIMIT, value_parser = parse_limit)]
    pub oracle_limit: u64,

    /// Largest n for exact clique and chromatic number searches.
    #[arg(long, global = true, env = "INDEGRAPH_EXACT_LIMIT", default_value_t = crate::oracle::DEFAULT_EXACT_SEARCH_LIMIT, value_parser = parse_limit)]
    pub exact_limit: u64,

    /// Largest n for the exhaustive Hamiltonian cycle search.
    #[arg(long, global = true, env = "INDEGRAPH_HAMILTONIAN_LIMIT", default_value_t = crate::oracle::DEFAULT_HAMILTONIAN_LIMIT, value_parser = parse_limit)]
    pub hamiltonian_limit: u64,

    /// Write output to this file instead of stdout.
    #[arg(short, long, global = true)]
    pub output: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Closed-form invariants of I_G(Z_n), optionally cross-checked by brute force.
    Info {
        #[arg(value_parser = parse_modulus)]
        n: Modulus,
        #[arg(long)]
        verify: bool,
        #[arg(long)]
        json: bool,
    },
    /// Audit every statement for a single n.
    Audit {
        #[arg(value_parser = parse_modulus)]
        n: Modulus,
        #[arg(long, default_value = "md")]
        format: ReportFormat,
        /// Exit with status 2 if any statement is contradicted.
        #[arg(long)]
        strict: bool,
    },
    /// Audit every statement for each n in [lo, hi].
    Sweep {
        #[arg(value_parser = parse_modulus)]
        lo: Modulus,
        #[arg(value_parser = parse_modulus)]
        hi: Modulus,
        #[arg(long, default_value = "md")]
        format: ReportFormat,
        /// Worker threads (default: available cores).
        #[arg(short, long, env = "INDEGRAPH_JOBS", value_parser = clap::value_parser!(u64).range(1..))]
        jobs: Option<u64>,
        #[arg(long)]
        strict: bool,
    },
    /// Write the graph as DOT, JSON or an edge list.
    Export {
        #[arg(value_parser = parse_modulus)]
        n: Modulus,
        #[arg(long)]
        format: GraphFormat,
        /// DOT only: append the additive order to each vertex label.
        #[arg(long)]
        label_orders: bool,
    },
    /// Search for a Hamiltonian cycle and print the closed-form prediction.
    Hamiltonian {
        #[arg(value_parser = parse_modulus)]
        n: Modulus,
    },
    /// Time closed-form invariants against brute force for each n in [lo, hi].
    Bench {
        #[arg(value_parser = parse_modulus)]
        lo: Modulus,
        #[arg(value_parser = parse_modulus)]
        hi: Modulus,
    },
}

fn parse_modulus(s: &str) -> std::result::Result<Modulus, String> {
    let n: u64 = s.parse().map_err(|e| format!("'{s}' is not a non-negative integer: {e}"))?;
    Modulus::new(n).map_err(|e| e.to_string())
}

fn parse_limit(s: &str) -> std::result::Result<u64, String> {
    let v: u64 = s.parse().map_err(|e| format!("'{s}': {e}"))?;
    if v < 2 {
        return Err(format!("limits must be at least 2, got {v}"));
    }
    Ok(v)
}

/// Rendered command output plus the process exit status.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub text: String,
    pub exit_code: u8,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Outcome { text, exit_code: EXIT_OK }
    }
}

impl Cli {
    pub fn limits(&self) -> OracleLimits {
        OracleLimits {
            build: self.oracle_limit,
            exact_search: self.exact_limit,
            hamiltonian: self.hamiltonian_limit,
        }
    }
}

pub fn run(cli: &Cli) -> Result<Outcome> {
    let limits = cli.limits();
    match &cli.command {
        Command::Info { n, verify, json } => cmd_info(*n, *verify, *json, &limits).map(Outcome::ok),
        Command::Audit { n, format, strict } => cmd_sweep(*n, *n, *format, 1, *strict, &limits),
        Command::Sweep { lo, hi, format, jobs, strict } => {
            let jobs = jobs.map_or_else(default_jobs, |j| j as usize);
            cmd_sweep(*lo, *hi, *format, jobs, *strict, &limits)
        }
        Command::Export { n, format, label_orders } => {
            cmd_export(*n, *format, ExportOptions { label_orders: *label_orders }, &limits).map(Outcome::ok)
        }
        Command::Hamiltonian { n } => cmd_hamiltonian(*n, &limits).map(Outcome::ok),
        Command::Bench { lo, hi } => cmd_bench(*lo, *hi, &limits).map(Outcome::ok),
    }
}

fn default_jobs() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn opt<T: ToString>(v: Option<T>) -> String {
    v.map_or_else(|| "-".to_string(), |v| v.to_string())
}

#[derive(Serialize)]
struct InfoJson<'a> {
    closed_form: &'a InvariantSet,
    #[serde(skip_serializing_if = "Option::is_none")]
    oracle: Option<&'a InvariantSet>,
    #[serde(skip_serializing_if = "Option::is_none")]
    checks: Option<&'a [InvariantCheck]>,
}

pub fn cmd_info(n: Modulus, verify: bool, json: bool, limits: &OracleLimits) -> Result<String> {
    let cf = cf_invariants(n)?;
    let oracle = if verify && n.get() <= limits.build {
        Some(IndependentGraph::build_with_limit(n, limits.build)?.invariants(limits))
    } else {
        None
    };
    let checks = oracle.as_ref().map(|o| compare_invariants(&cf, o));

    if json {
        let doc = InfoJson { closed_form: &cf, oracle: oracle.as_ref(), checks: checks.as_deref() };
        let mut s = serde_json::to_string_pretty(&doc)?;
        s.push('\n');
        return Ok(s);
    }

    let parts = cf_part_sizes(n);
    let sizes: Vec<String> = parts.sizes.iter().map(u64::to_string).collect();
    let mut s = String::new();
    let _ = writeln!(s, "n: {}", cf.n);
    let _ = writeln!(s, "edges: {}", cf.edge_count);
    let _ = writeln!(s, "degrees: {}", cf.degree_sequence);
    let _ = writeln!(s, "connected: {}", yes_no(cf.connected));
    if cf.complete {
        let _ = writeln!(s, "complete: yes (K_{})", cf.n);
    } else {
        let _ = writeln!(s, "complete: no");
    }
    let _ = writeln!(s, "star: {}", yes_no(cf.star));
    let _ = writeln!(s, "bipartite: {}", yes_no(cf.bipartite));
    let _ = writeln!(s, "girth: {}", cf.girth);
    let _ = writeln!(s, "diameter: {}", cf.diameter);
    let _ = writeln!(s, "clique: {}", opt(cf.clique_number));
    let _ = writeln!(s, "chromatic: {}", opt(cf.chromatic_number));
    let _ = writeln!(s, "hamiltonian: {}", cf.hamiltonian.map_or("-", yes_no));
    let _ = writeln!(s, "parts: {} (sizes {})", cf.partite_count, sizes.join(" "));

    if verify {
        match &checks {
            None => {
                let _ = writeln!(
                    s,
                    "verify: skipped, n = {n} exceeds the oracle build limit {}",
                    limits.build
                );
            }
            Some(checks) => {
                let _ = writeln!(s, "verify (brute-force oracle):");
                for c in checks {
                    let status = match c.status {
                        CheckStatus::Agree => "agree".to_string(),
                        CheckStatus::Disagree => {
                            format!("DISAGREE (closed form {}, oracle {})", c.closed_form, c.oracle)
                        }
                        CheckStatus::Skipped => "skipped (beyond search limit)".to_string(),
                    };
                    let _ = writeln!(s, "  {}: {status}", c.invariant);
                }
            }
        }
    }
    Ok(s)
}

pub fn cmd_sweep(
    lo: Modulus,
    hi: Modulus,
    format: ReportFormat,
    jobs: usize,
    strict: bool,
    limits: &OracleLimits,
) -> Result<Outcome> {
    let config = AuditConfig { limits: *limits, ..AuditConfig::default() };
    let report = sweep_parallel(lo.get(), hi.get(), &config, jobs)?;
    let text = render_report(&report, format)?;
    let exit_code = if strict && report.has_mismatch() { EXIT_STRICT_FAILURE } else { EXIT_OK };
    Ok(Outcome { text, exit_code })
}

pub fn cmd_export(n: Modulus, format: GraphFormat, options: ExportOptions, limits: &OracleLimits) -> Result<String> {
    let g = IndependentGraph::build_with_limit(n, limits.build)?;
    Ok(export_graph(&g, format, options))
}

pub fn cmd_hamiltonian(n: Modulus, limits: &OracleLimits) -> Result<String> {
    let predicted = crate::closed_form::cf_is_hamiltonian(n);
    let mut s = String::new();
    if n.get() > limits.hamiltonian || n.get() > limits.build {
        let _ = writeln!(
            s,
            "search skipped: n = {n} exceeds the Hamiltonian search limit {}",
            limits.hamiltonian.min(limits.build)
        );
    } else {
        let g = IndependentGraph::build_with_limit(n, limits.build)?;
        let search = g.find_hamiltonian_cycle(limits.hamiltonian)?;
        match search.cycle {
            Some(cycle) => {
                assert!(g.is_hamiltonian_cycle(&cycle), "search returned an invalid cycle");
                let items: Vec<String> = cycle.iter().map(u64::to_string).collect();
                let _ = writeln!(s, "{}", items.join(" "));
            }
            None => {
                let _ = writeln!(s, "NONE");
                let _ = writeln!(s, "search: exhausted after {} states", search.nodes_explored);
            }
        }
    }
    let _ = writeln!(
        s,
        "prediction: {} (closed form)",
        if predicted { "hamiltonian" } else { "not hamiltonian" }
    );
    Ok(s)
}

/// Wall-clock timings for one `n`. `oracle` is `None` above the build limit.
#[derive(Debug, Clone, Copy)]
pub struct BenchRow {
    pub n: u64,
    pub closed_form: Duration,
    pub oracle: Option<Duration>,
}

pub fn bench_row(n: Modulus, limits: &OracleLimits) -> Result<BenchRow> {
    let start = Instant::now();
    std::hint::black_box(cf_invariants(n)?);
    let closed_form = start.elapsed();
    let oracle = if n.get() <= limits.build {
        let start = Instant::now();
        let g = IndependentGraph::build_with_limit(n, limits.build)?;
        std::hint::black_box(g.invariants(limits));
        Some(start.elapsed())
    } else {
        None
    };
    Ok(BenchRow { n: n.get(), closed_form, oracle })
}

pub fn cmd_bench(lo: Modulus, hi: Modulus, limits: &OracleLimits) -> Result<String> {
    if lo > hi {
        return Err(crate::error::Error::InvalidRange { lo: lo.get(), hi: hi.get() });
    }
    let mut s = String::from("n,cf_micros,oracle_micros\n");
    for n in lo.get()..=hi.get() {
        let row = bench_row(Modulus::new(n)?, limits)?;
        let oracle = row
            .oracle
            .map_or_else(|| "SKIPPED".to_string(), |d| d.as_micros().to_string());
        let _ = writeln!(s, "{},{},{}", row.n, row.closed_form.as_micros(), oracle);
    }
    Ok(s)
}
