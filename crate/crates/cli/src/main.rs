use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_rational::BigRational;
use serde::Serialize;

use smearlab::measurement::{parse_state, sequence_tree, simulate_sequence, ConditionalStat};
use smearlab::parallel::Execution;
use smearlab::phase_space::{egup_bound, feasibility_threshold, linspace, BoundCurve};
use smearlab::spin_one::build_one_particle;
use smearlab::suites::{self, Report, StatsConfig};
use smearlab::{Axis, Real, SmearingParams, SuiteReport};

#[derive(Parser)]
#[command(name = "smearlab", version, about = "Verification suites for smeared-space spin")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the identity suites for each delta.
    Verify(VerifyArgs),
    /// Simulate a sequence of spin measurements.
    Measure(MeasureArgs),
    /// Tabulate the observable-uncertainty bound Δp(Δx).
    Curve(CurveArgs),
    /// Constants, identity suites and statistics suites in one JSON document.
    Report(ReportArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Backend {
    Float,
    Exact,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Exec {
    Parallel,
    Sequential,
}

impl From<Exec> for Execution {
    fn from(e: Exec) -> Self {
        match e {
            Exec::Parallel => Execution::Parallel,
            Exec::Sequential => Execution::Sequential,
        }
    }
}

#[derive(Args)]
struct Common {
    /// Smearing parameter β/ħ; repeat for several values.
    #[arg(long = "delta")]
    deltas: Vec<String>,
    #[arg(long, value_enum, default_value = "float")]
    backend: Backend,
    /// Absolute tolerance for float comparisons.
    #[arg(long, default_value_t = 1e-12)]
    tol: f64,
    /// Write here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    #[arg(long, value_enum, default_value = "parallel")]
    execution: Exec,
    /// Include wall-clock times (makes output nondeterministic).
    #[arg(long)]
    timing: bool,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    common: Common,
    #[arg(long, hide = true)]
    inject_failure: bool,
}

#[derive(Args)]
struct MeasureArgs {
    #[command(flatten)]
    common: Common,
    /// Named eigenvector (up_z, down'_x, ...) or four comma-separated amplitudes.
    #[arg(long, default_value = "up_z", allow_hyphen_values = true)]
    state: String,
    /// Measurement axes in order, e.g. z,x.
    #[arg(long, value_delimiter = ',', default_value = "z,x")]
    axes: Vec<Axis>,
    #[arg(long, default_value_t = 100_000)]
    shots: u64,
    #[arg(long, default_value_t = 42)]
    seed: u64,
}

#[derive(Args)]
struct CurveArgs {
    #[arg(long, default_value_t = 0.0)]
    alpha: f64,
    #[arg(long, default_value_t = 0.0)]
    eta: f64,
    #[arg(long, default_value_t = 1.0)]
    hbar: f64,
    #[arg(long, default_value_t = 0.1)]
    dx_min: f64,
    #[arg(long, default_value_t = 10.0)]
    dx_max: f64,
    #[arg(long, default_value_t = 100)]
    points: usize,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "csv")]
    format: Format,
}

#[derive(Args)]
struct ReportArgs {
    #[command(flatten)]
    common: Common,
    #[arg(long, default_value_t = 42)]
    seed: u64,
    #[arg(long, default_value_t = 100_000)]
    shots: u64,
    /// Random states, quaternions and mixings per statistics suite.
    #[arg(long, default_value_t = 10_000)]
    samples: usize,
    #[arg(long, hide = true)]
    inject_failure: bool,
}

/// Bad configuration or unwritable output: exit code 2.
struct Usage(String);

impl<E: std::fmt::Display> From<E> for Usage {
    fn from(e: E) -> Self {
        Usage(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match configure_threads().and_then(|_| run(cli.command)) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Usage(msg)) => {
            eprintln!("smearlab: {msg}");
            ExitCode::from(2)
        }
    }
}

fn configure_threads() -> Result<(), Usage> {
    let Ok(v) = std::env::var("SMEARLAB_THREADS") else {
        return Ok(());
    };
    let n: usize = v.trim().parse().ok().filter(|&n| n > 0).ok_or_else(|| Usage(format!("SMEARLAB_THREADS must be a positive integer, got {v:?}")))?;
    rayon::ThreadPoolBuilder::new().num_threads(n).build_global()?;
    Ok(())
}

/// Returns whether every check passed.
fn run(cmd: Command) -> Result<bool, Usage> {
    match cmd {
        Command::Verify(a) => verify(a),
        Command::Measure(a) => measure(a),
        Command::Curve(a) => curve(a),
        Command::Report(a) => report(a),
    }
}

impl Common {
    fn validate(&self) -> Result<(), Usage> {
        if !(self.tol > 0.0 && self.tol.is_finite()) {
            return Err(Usage(format!("--tol must be positive, got {}", self.tol)));
        }
        Ok(())
    }

    fn deltas(&self) -> Vec<String> {
        if !self.deltas.is_empty() {
            return self.deltas.clone();
        }
        let d: &[&str] = match self.backend {
            Backend::Float => &["0", "1e-6", "0.25", "1"],
            Backend::Exact => &["0", "1/4", "1"],
        };
        d.iter().map(|s| s.to_string()).collect()
    }

    fn verify_suites(&self, deltas: &[String]) -> Result<Vec<SuiteReport>, Usage> {
        let exec = self.execution.into();
        Ok(match self.backend {
            Backend::Float => suites::verify_deltas::<f64>(deltas, self.tol, self.timing, exec)?,
            Backend::Exact => suites::verify_deltas::<BigRational>(deltas, self.tol, self.timing, exec)?,
        })
    }
}

fn emit(out: &Option<PathBuf>, body: &[u8]) -> Result<(), Usage> {
    match out {
        Some(p) => fs::write(p, body).map_err(|e| Usage(format!("cannot write {}: {e}", p.display()))),
        None => {
            let mut s = io::stdout().lock();
            s.write_all(body)?;
            s.flush()?;
            Ok(())
        }
    }
}

fn json<T: Serialize>(v: &T) -> Result<Vec<u8>, Usage> {
    let mut b = serde_json::to_vec_pretty(v)?;
    b.push(b'\n');
    Ok(b)
}

fn csv_rows<T: Serialize>(header: Option<&[&str]>, rows: impl IntoIterator<Item = T>) -> Result<Vec<u8>, Usage> {
    let mut w = csv::WriterBuilder::new().has_headers(header.is_none()).from_writer(Vec::new());
    if let Some(h) = header {
        w.write_record(h)?;
    }
    for r in rows {
        w.serialize(r)?;
    }
    w.into_inner().map_err(|e| Usage(e.to_string()))
}

#[derive(Serialize)]
struct CheckRow<'a> {
    suite: &'a str,
    backend: &'a str,
    delta: &'a str,
    label: &'a str,
    anchor: &'a str,
    residual: f64,
    tolerance: f64,
    pass: bool,
    informational: bool,
}

fn check_rows(reports: &[SuiteReport]) -> Vec<CheckRow<'_>> {
    reports
        .iter()
        .flat_map(|r| {
            r.checks.iter().map(move |c| CheckRow {
                suite: &r.suite,
                backend: &r.backend,
                delta: &r.delta,
                label: &c.label,
                anchor: &c.anchor,
                residual: c.residual,
                tolerance: c.tolerance,
                pass: c.pass,
                informational: c.informational,
            })
        })
        .collect()
}

#[derive(Serialize)]
struct VerifyOutput<'a> {
    schema: &'static str,
    backend: &'static str,
    deltas: &'a [String],
    tolerance: f64,
    suites: &'a [SuiteReport],
    overall_pass: bool,
}

fn verify(a: VerifyArgs) -> Result<bool, Usage> {
    let c = &a.common;
    c.validate()?;
    let deltas = c.deltas();
    let mut reports = c.verify_suites(&deltas)?;
    if a.inject_failure {
        reports.push(suites::injected_failure());
    }
    let pass = reports.iter().all(|r| r.overall_pass);
    let body = match c.format {
        Format::Json => json(&VerifyOutput {
            schema: suites::SCHEMA,
            backend: backend_name(c.backend),
            deltas: &deltas,
            tolerance: c.tol,
            suites: &reports,
            overall_pass: pass,
        })?,
        Format::Csv => csv_rows(None, check_rows(&reports))?,
    };
    emit(&c.out, &body)?;
    Ok(pass)
}

fn backend_name(b: Backend) -> &'static str {
    match b {
        Backend::Float => f64::NAME,
        Backend::Exact => BigRational::NAME,
    }
}

#[derive(Serialize)]
struct BranchRow {
    outcomes: Vec<&'static str>,
    probability: f64,
}

#[derive(Serialize)]
struct MeasureOutput {
    backend: &'static str,
    delta: String,
    state: String,
    axes: Vec<Axis>,
    shots: u64,
    seed: u64,
    branches: Vec<BranchRow>,
    conditionals: Vec<ConditionalStat>,
}

fn measure(a: MeasureArgs) -> Result<bool, Usage> {
    let c = &a.common;
    c.validate()?;
    if c.deltas.len() > 1 {
        return Err(Usage("measure takes a single --delta".into()));
    }
    if a.axes.is_empty() {
        return Err(Usage("--axes needs at least one axis".into()));
    }
    let delta = c.deltas.first().cloned().unwrap_or_else(|| "0.25".into());
    let out = match c.backend {
        Backend::Float => measure_with::<f64>(&a, &delta)?,
        Backend::Exact => measure_with::<BigRational>(&a, &delta)?,
    };
    let body = match c.format {
        Format::Json => json(&out)?,
        Format::Csv => csv_rows(None, out.conditionals.iter().map(ConditionalRow::from))?,
    };
    emit(&c.out, &body)?;
    Ok(true)
}

fn measure_with<R: Real>(a: &MeasureArgs, delta: &str) -> Result<MeasureOutput, Usage> {
    let tol = a.common.tol;
    let params = SmearingParams::from_delta(R::parse_literal(delta)?)?;
    let ops = build_one_particle(&params);
    let state = parse_state(&ops, &a.state)?;
    let tree = sequence_tree(&state, &ops, &a.axes, tol)?;
    let stats = simulate_sequence(&state, &ops, &a.axes, a.shots, a.seed, a.common.execution.into(), tol)?;
    Ok(MeasureOutput {
        backend: R::NAME,
        delta: params.delta().to_string(),
        state: a.state.clone(),
        axes: a.axes.clone(),
        shots: a.shots,
        seed: a.seed,
        branches: tree
            .iter()
            .map(|b| BranchRow {
                outcomes: b.outcomes.iter().map(|&u| if u { "up" } else { "down" }).collect(),
                probability: b.probability.to_f64(),
            })
            .collect(),
        conditionals: stats.conditionals,
    })
}

#[derive(Serialize)]
struct ConditionalRow {
    step: usize,
    axis: String,
    prefix: String,
    outcome: &'static str,
    analytic: f64,
    hits: u64,
    trials: u64,
    frequency: f64,
    wilson_low: f64,
    wilson_high: f64,
}

impl From<&ConditionalStat> for ConditionalRow {
    fn from(c: &ConditionalStat) -> Self {
        Self {
            step: c.step,
            axis: c.axis.to_string(),
            prefix: c.prefix.iter().map(|&u| if u { "u" } else { "d" }).collect(),
            outcome: if c.up { "up" } else { "down" },
            analytic: c.analytic,
            hits: c.hits,
            trials: c.trials,
            frequency: c.frequency,
            wilson_low: c.wilson_low,
            wilson_high: c.wilson_high,
        }
    }
}

#[derive(Serialize)]
struct CurveOutput<'a> {
    #[serde(flatten)]
    curve: &'a BoundCurve,
    /// Δx below which no real Δp exists, if any.
    feasible_from: Option<f64>,
    infeasible: usize,
}

fn curve(a: CurveArgs) -> Result<bool, Usage> {
    if !(a.dx_min > 0.0 && a.dx_max >= a.dx_min && a.dx_max.is_finite()) {
        return Err(Usage(format!("need 0 < dx-min <= dx-max, got {} and {}", a.dx_min, a.dx_max)));
    }
    if a.points == 0 {
        return Err(Usage("--points must be at least 1".into()));
    }
    let curve = egup_bound(a.alpha, a.eta, a.hbar, &linspace(a.dx_min, a.dx_max, a.points))?;
    let body = match a.format {
        Format::Csv => {
            let rows = curve.samples.iter().map(|s| {
                [s.dx.to_string(), s.dp.map(|p| p.to_string()).unwrap_or_default(), s.dp.is_some().to_string()]
            });
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["dx", "dp_bound", "feasible"])?;
            for r in rows {
                w.write_record(&r)?;
            }
            w.into_inner().map_err(|e| Usage(e.to_string()))?
        }
        Format::Json => json(&CurveOutput {
            curve: &curve,
            feasible_from: feasibility_threshold(a.alpha, a.eta, a.hbar),
            infeasible: curve.infeasible_count(),
        })?,
    };
    emit(&a.out, &body)?;
    Ok(true)
}

fn report(a: ReportArgs) -> Result<bool, Usage> {
    let c = &a.common;
    c.validate()?;
    if c.format != Format::Json {
        return Err(Usage("report is JSON only".into()));
    }
    let deltas = c.deltas();
    let mut reports = c.verify_suites(&deltas)?;
    let stats = StatsConfig { seed: a.seed, shots: a.shots, mixings: a.samples.min(100), gur_states: a.samples, su2_samples: a.samples };
    let exec: Execution = c.execution.into();
    // statistics suites always run on the float backend
    let float_deltas = deltas.iter().map(|d| f64::parse_literal(d)).collect::<Result<Vec<f64>, _>>()?;
    for d in float_deltas {
        reports.push(suites::measurement_suite(d, c.tol, &stats, exec, c.timing)?);
        reports.push(suites::gur_suite(d, c.tol, &stats, exec, c.timing)?);
        reports.push(suites::su2_batch_suite(d, c.tol, &stats, exec, c.timing)?);
    }
    reports.push(suites::phase_space_suite(c.tol, exec, c.timing));
    if a.inject_failure {
        reports.push(suites::injected_failure());
    }
    let doc = Report::assemble(backend_name(c.backend), &deltas, c.tol, stats, reports)?;
    emit(&c.out, &json(&doc)?)?;
    Ok(doc.overall_pass)
}
