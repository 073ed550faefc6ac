//! Command-line front end.
//!
//! Exit codes: 0 on success, 1 when any verdict is REFUTED (or an oracle
//! disagreement is found), 2 on usage or build errors.

use std::ffi::OsString;
use std::fs;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::construct::{BaseCase, Label, Profile};
use crate::error::{Error, Result};
use crate::graph::{CombineOp, Graph, ProductKind};
use crate::io::report::{now_rfc3339, write_atomic, Report, Target};
use crate::io::{encode_dimacs, encode_graph6};
use crate::solvers::{
    max_clique, max_independent_set, oracle_max_clique, verify_witness, SolverOptions,
    WitnessMode, ORACLE_MAX_N,
};
use crate::verify::{
    check_theorem_1_1, check_theorem_1_2, BoundReport, Computed, Status, TheoremCheck,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_REFUTED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Caps solver parallelism.
pub const THREADS_ENV: &str = "RF_THREADS";

#[derive(Parser, Debug)]
#[command(name = "ramsey-sf", version, about = "Build and verify the SF(t) extremal graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build F(r) or SF(t) and write it as graph6 or DIMACS.
    Build(BuildArgs),
    /// Check one theorem instance and write a JSON report.
    Verify(VerifyArgs),
    /// Check both theorems for every stage up to --t-max.
    Sweep(SweepArgs),
    /// Compare the clique solver against brute force on random graphs.
    OracleCheck(OracleArgs),
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ProfileName {
    Default,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SumArg {
    Union,
    Join,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ProdArg {
    Lex,
    Cart,
    Tensor,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum BaseArg {
    Explicit,
    General,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum YLabelArg {
    #[value(name = "1")]
    One,
    #[value(name = "2")]
    Two,
}

#[derive(Args, Debug, Clone)]
struct ProfileArgs {
    /// Start from a named profile; individual flags override it.
    #[arg(long, value_enum, default_value = "default")]
    profile: ProfileName,
    #[arg(long, value_enum)]
    sum: Option<SumArg>,
    #[arg(long, value_enum)]
    prod: Option<ProdArg>,
    #[arg(long, value_enum)]
    base: Option<BaseArg>,
    #[arg(long = "y-label", value_enum)]
    y_label: Option<YLabelArg>,
}

impl ProfileArgs {
    fn resolve(&self) -> Profile {
        let mut p = match self.profile {
            ProfileName::Default => Profile::DEFAULT,
        };
        if let Some(s) = self.sum {
            p.sum = match s {
                SumArg::Union => CombineOp::DisjointUnion,
                SumArg::Join => CombineOp::Join,
            };
        }
        if let Some(x) = self.prod {
            p.prod = match x {
                ProdArg::Lex => ProductKind::Lexicographic,
                ProdArg::Cart => ProductKind::Cartesian,
                ProdArg::Tensor => ProductKind::Tensor,
            };
        }
        if let Some(b) = self.base {
            p.base_case = match b {
                BaseArg::Explicit => BaseCase::ExplicitPath,
                BaseArg::General => BaseCase::General,
            };
        }
        if let Some(y) = self.y_label {
            p.y_label = match y {
                YLabelArg::One => Label::One,
                YLabelArg::Two => Label::Two,
            };
        }
        p
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum KindArg {
    #[value(name = "F")]
    F,
    #[value(name = "SF")]
    Sf,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FormatArg {
    Graph6,
    Dimacs,
}

#[derive(Args, Debug)]
struct BuildArgs {
    #[arg(long, value_enum)]
    kind: KindArg,
    /// Stage parameter (`--r` and `--t` are interchangeable).
    #[arg(long, visible_alias = "t")]
    r: usize,
    #[command(flatten)]
    profile: ProfileArgs,
    #[arg(long, value_enum, default_value = "graph6")]
    format: FormatArg,
    /// Output file; stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum TheoremArg {
    #[value(name = "1.1")]
    T11,
    #[value(name = "1.2")]
    T12,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(long, value_enum)]
    theorem: TheoremArg,
    #[arg(long)]
    r: usize,
    #[command(flatten)]
    profile: ProfileArgs,
    #[arg(long)]
    report: Option<PathBuf>,
    /// Single-threaded search with reproducible witnesses.
    #[arg(long)]
    deterministic: bool,
}

#[derive(Args, Debug)]
struct SweepArgs {
    #[arg(long = "t-max")]
    t_max: usize,
    #[command(flatten)]
    profile: ProfileArgs,
    #[arg(long = "report-dir")]
    report_dir: PathBuf,
    #[arg(long)]
    deterministic: bool,
}

#[derive(Args, Debug)]
struct OracleArgs {
    #[arg(long, default_value_t = 200)]
    trials: usize,
    #[arg(long = "max-n", default_value_t = 12)]
    max_n: usize,
    #[arg(long, default_value_t = 7)]
    seed: u64,
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    if let Err(msg) = configure_threads() {
        eprintln!("error: {msg}");
        return EXIT_USAGE;
    }
    let outcome = match cli.command {
        Command::Build(a) => build(a),
        Command::Verify(a) => verify(a),
        Command::Sweep(a) => sweep(a),
        Command::OracleCheck(a) => oracle_check(a),
    };
    match outcome {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_USAGE
        }
    }
}

fn configure_threads() -> std::result::Result<(), String> {
    let Ok(v) = std::env::var(THREADS_ENV) else {
        return Ok(());
    };
    let threads: usize = v
        .parse()
        .ok()
        .filter(|&t| t > 0)
        .ok_or_else(|| format!("{THREADS_ENV} must be a positive integer, got {v:?}"))?;
    // a pool may already exist when run() is called more than once in a process
    let _ = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global();
    Ok(())
}

fn build(a: BuildArgs) -> Result<i32> {
    let p = a.profile.resolve();
    let target = match a.kind {
        KindArg::F => Target::f(a.r),
        KindArg::Sf => Target::sf(a.r),
    };
    let lg = target.build(&p)?;
    let text = match a.format {
        FormatArg::Graph6 => encode_graph6(&lg.graph) + "\n",
        FormatArg::Dimacs => encode_dimacs(&lg.graph),
    };
    match &a.out {
        Some(path) => {
            write_atomic(path, &text)?;
            eprintln!(
                "{target} [{p}]: n={} m={} -> {}",
                lg.n(),
                lg.graph.edge_count(),
                path.display()
            );
        }
        None => print!("{text}"),
    }
    Ok(EXIT_OK)
}

fn options(deterministic: bool) -> SolverOptions {
    SolverOptions { deterministic }
}

fn summary_line(c: &TheoremCheck) -> String {
    let computed = match c.computed {
        Computed::MonoClique { size } => format!("computed={size}"),
        Computed::CliqueAndIndependence { omega, alpha } => {
            format!("computed omega={omega} alpha={alpha}")
        }
    };
    let w = &c.witnesses[0];
    format!(
        "{} r={} [{}] claimed: {}; {computed}; {} witness({:?})={{{}}}",
        c.theorem,
        c.r,
        c.profile,
        c.claimed,
        c.status,
        w.kind,
        w.names.join(",")
    )
}

/// Runs one check and assembles its report. Clique/coclique reports also carry
/// the Ramsey bound, computed from the same clique and independence numbers.
fn run_check(theorem: TheoremArg, r: usize, p: &Profile, opts: SolverOptions) -> Result<Report> {
    let started = now_rfc3339();
    let (check, target) = match theorem {
        TheoremArg::T11 => (check_theorem_1_1(r, p, opts)?, Target::f(r)),
        TheoremArg::T12 => (check_theorem_1_2(r, p, opts)?, Target::sf(r + 1)),
    };
    let lg = target.build(p)?;
    let bound = match check.computed {
        Computed::CliqueAndIndependence { omega, alpha } => {
            Some(BoundReport::from_numbers(r + 1, lg.n(), omega, alpha))
        }
        Computed::MonoClique { .. } => None,
    };
    let report = Report::new(target, *p, &lg, vec![check], bound, started);
    report.verify()?;
    Ok(report)
}

fn verify(a: VerifyArgs) -> Result<i32> {
    let p = a.profile.resolve();
    let report = run_check(a.theorem, a.r, &p, options(a.deterministic))?;
    for c in &report.checks {
        println!("{}", summary_line(c));
    }
    if let Some(b) = &report.bound {
        println!("{}", bound_line(b));
    }
    if let Some(path) = &a.report {
        report.write_atomic(path)?;
    }
    Ok(if report.any_refuted() {
        EXIT_REFUTED
    } else {
        EXIT_OK
    })
}

fn bound_line(b: &BoundReport) -> String {
    let mut s = match &b.implied {
        Some(i) => format!("bound t={}: witness ok, implies {i}", b.t),
        None => format!(
            "bound t={}: SF({}) on {} vertices is not a Ramsey witness (omega={}, alpha={})",
            b.t, b.t, b.n, b.omega, b.alpha
        ),
    };
    if let Some(c) = &b.contradiction {
        s.push_str(&format!("; CONTRADICTION: {c}"));
    }
    s
}

#[derive(Serialize)]
struct SweepEntry {
    file: String,
    theorem: String,
    r: usize,
    target: String,
    status: Status,
    computed: Computed,
}

#[derive(Serialize)]
struct SweepSummary {
    schema_version: &'static str,
    profile: Profile,
    t_max: usize,
    entries: Vec<SweepEntry>,
}

fn sweep(a: SweepArgs) -> Result<i32> {
    if a.t_max < 3 {
        return Err(Error::InvalidParameter(format!(
            "--t-max must be at least 3, got {}",
            a.t_max
        )));
    }
    let p = a.profile.resolve();
    let opts = options(a.deterministic);
    fs::create_dir_all(&a.report_dir)?;

    let jobs: Vec<(TheoremArg, usize)> = (3..=a.t_max)
        .map(|r| (TheoremArg::T11, r))
        .chain((2..a.t_max).map(|r| (TheoremArg::T12, r)))
        .collect();
    let reports: Vec<Report> = jobs
        .par_iter()
        .map(|&(th, r)| run_check(th, r, &p, opts))
        .collect::<Result<_>>()?;

    let mut entries = Vec::new();
    for report in &reports {
        let c = &report.checks[0];
        let file = format!("{}_r{}.json", c.theorem.to_string().to_lowercase(), c.r);
        report.write_atomic(a.report_dir.join(&file))?;
        println!("{}", summary_line(c));
        if let Some(b) = &report.bound {
            println!("  {}", bound_line(b));
        }
        entries.push(SweepEntry {
            file,
            theorem: c.theorem.to_string(),
            r: c.r,
            target: report.target.to_string(),
            status: c.status,
            computed: c.computed,
        });
    }
    let summary = SweepSummary {
        schema_version: crate::io::report::SCHEMA_VERSION,
        profile: p,
        t_max: a.t_max,
        entries,
    };
    write_atomic(
        &a.report_dir.join("summary.json"),
        &serde_json::to_string_pretty(&summary)?,
    )?;
    Ok(if reports.iter().any(Report::any_refuted) {
        EXIT_REFUTED
    } else {
        EXIT_OK
    })
}

/// Outcome of comparing the solvers with brute force on seeded random graphs.
#[derive(Debug, Clone, PartialEq)]
pub struct OracleRun {
    pub trials: usize,
    pub agreements: usize,
    /// `(trial, n, density, solver, oracle)` for each disagreement.
    pub failures: Vec<(usize, usize, f64, usize, usize)>,
}

pub const ORACLE_DENSITIES: [f64; 3] = [0.2, 0.5, 0.8];

/// Trial `i` draws `n` uniformly from `1..=max_n` and uses density
/// `ORACLE_DENSITIES[i % 3]`. Each trial checks ω in parallel and
/// deterministic mode, and α via the complement, against the oracle.
pub fn oracle_equivalence(trials: usize, max_n: usize, seed: u64) -> Result<OracleRun> {
    if max_n == 0 || max_n > ORACLE_MAX_N {
        return Err(Error::InvalidParameter(format!(
            "--max-n must be in 1..={ORACLE_MAX_N}, got {max_n}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failures = Vec::new();
    for trial in 0..trials {
        let n = rng.gen_range(1..=max_n);
        let density = ORACLE_DENSITIES[trial % ORACLE_DENSITIES.len()];
        let g = Graph::random(n, density, &mut rng);
        let expected = oracle_max_clique(&g)?;
        let expected_alpha = oracle_max_clique(&g.complement())?;
        let det = max_clique(&g, SolverOptions::DETERMINISTIC);
        let par = max_clique(&g, SolverOptions::default());
        let alpha = max_independent_set(&g, SolverOptions::DETERMINISTIC);
        let witnesses_ok = verify_witness(&g, &det.witness, WitnessMode::Clique)?
            && verify_witness(&g, &par.witness, WitnessMode::Clique)?
            && verify_witness(&g, &alpha.witness, WitnessMode::Independent)?;
        if det.size != expected || par.size != expected || alpha.size != expected_alpha || !witnesses_ok {
            failures.push((trial, n, density, det.size, expected));
        }
    }
    Ok(OracleRun {
        trials,
        agreements: trials - failures.len(),
        failures,
    })
}

fn oracle_check(a: OracleArgs) -> Result<i32> {
    let run = oracle_equivalence(a.trials, a.max_n, a.seed)?;
    for (trial, n, d, got, want) in &run.failures {
        println!("trial {trial}: n={n} p={d} solver={got} oracle={want}");
    }
    println!(
        "oracle-check: {}/{} agree (max n {}, seed {})",
        run.agreements, run.trials, a.max_n, a.seed
    );
    Ok(if run.failures.is_empty() {
        EXIT_OK
    } else {
        EXIT_REFUTED
    })
}
