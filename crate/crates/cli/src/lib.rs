//! The `ccq` command line: validation, apparent singularities, topology
//! graphs and connectivity queries for curves given in JSON problem files.

pub mod export;
pub mod parse;
pub mod problem;

use std::path::PathBuf;

use ccq_core::apparent::{apparent_abscissas, apparent_singularities, ApparentResult};
use ccq_core::connect::{answer_queries, node_resolution, Partition};
use ccq_core::params::{genericity_report, validate_one_dim, validate_zero_dim, CheckStatus};
use ccq_core::poly::Rational;
use ccq_core::topo2d::{topo2d_with, TopologyGraph};
use ccq_core::Error;
use clap::{Parser, Subcommand};
use num_traits::{One, Zero};
use serde::Serialize;

use crate::export::{to_dot, to_svg};
use crate::problem::{Problem, ProblemFile};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_PARSE: i32 = 3;
pub const EXIT_GENERICITY: i32 = 4;
pub const EXIT_INTERNAL: i32 = 5;

#[derive(Parser, Debug)]
#[command(name = "ccq", version, about = "Connectivity queries on real algebraic space curves")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check the parametrizations and report genericity diagnostics.
    Validate(Args),
    /// Print the apparent-singularity polynomial and its real roots.
    Appsing(Args),
    /// Print the topology graph of the plane projection as DOT.
    Topo(Args),
    /// Partition the query points by connected component.
    Connect(Args),
}

type Handler = fn(&Problem, &Args) -> Result<Outcome, Outcome>;

#[derive(clap::Args, Debug)]
struct Args {
    file: PathBuf,
    /// Write DOT output to this path.
    #[arg(long)]
    dot: Option<PathBuf>,
    /// Write SVG output to this path.
    #[arg(long)]
    svg: Option<PathBuf>,
    /// Only count components; queries are not required.
    #[arg(long)]
    components_only: bool,
    /// Width bound for numeric coordinates, e.g. 1/1000000.
    #[arg(long)]
    eps: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { code: EXIT_OK, stdout, stderr: String::new() }
    }

    fn fail(code: i32, stderr: impl Into<String>) -> Self {
        Outcome { code, stdout: String::new(), stderr: stderr.into() }
    }
}

impl From<Error> for Outcome {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::InvalidInput(_) => EXIT_INVALID,
            Error::GenericityViolation(_) => EXIT_GENERICITY,
            Error::DegenerateCurve | Error::CriticalPoint | Error::Internal(_) => EXIT_INTERNAL,
        };
        Outcome::fail(code, format!("error: {e}\n"))
    }
}

/// Applies `CCQ_THREADS` to the global worker pool. Call once at startup.
pub fn configure_threads() {
    if let Some(n) = std::env::var("CCQ_THREADS").ok().and_then(|v| v.trim().parse::<usize>().ok()) {
        if n > 0 {
            let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
        }
    }
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => Outcome::ok(text),
                _ => Outcome::fail(EXIT_INVALID, text),
            };
        }
    };
    let (args, cmd): (&Args, Handler) = match &cli.command {
        Command::Validate(a) => (a, cmd_validate),
        Command::Appsing(a) => (a, cmd_appsing),
        Command::Topo(a) => (a, cmd_topo),
        Command::Connect(a) => (a, cmd_connect),
    };
    match load(args).and_then(|p| cmd(&p, args)) {
        Ok(o) | Err(o) => o,
    }
}

fn load(args: &Args) -> Result<Problem, Outcome> {
    let text = std::fs::read_to_string(&args.file)
        .map_err(|e| Outcome::fail(EXIT_INVALID, format!("error: cannot read {}: {e}\n", args.file.display())))?;
    let file = ProblemFile::from_json(&text).map_err(|e| Outcome::fail(EXIT_PARSE, format!("parse error: {e}\n")))?;
    let mut p = file.to_problem().map_err(|e| Outcome::fail(EXIT_PARSE, format!("parse error: {e}\n")))?;
    if let Some(s) = &args.eps {
        let eps = parse::parse_rational(s)
            .map_err(|e| Outcome::fail(EXIT_PARSE, format!("parse error: --eps: {e}\n")))?;
        p.eps = Some(eps);
    }
    if let Some(e) = &p.eps {
        if !(e > &Rational::zero() && e < &Rational::one()) {
            return Err(Outcome::fail(EXIT_INVALID, "error: eps must lie strictly between 0 and 1\n"));
        }
    }
    Ok(p)
}

fn eps_of(p: &Problem) -> Rational {
    p.eps.clone().unwrap_or_else(|| Rational::new(1.into(), 1_000_000.into()))
}

fn to_json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string(v).expect("plain data serializes");
    s.push('\n');
    s
}

fn write_file(path: &PathBuf, text: &str) -> Result<(), Outcome> {
    std::fs::write(path, text)
        .map_err(|e| Outcome::fail(EXIT_INTERNAL, format!("error: cannot write {}: {e}\n", path.display())))
}

/// Rejects invalid parametrizations with exit code 2.
fn require_valid(p: &Problem) -> Result<(), Outcome> {
    let mut msgs = Vec::new();
    for v in validate_one_dim(&p.curve).violations {
        msgs.push(format!("curve: {v}"));
    }
    if let Some(q) = &p.queries {
        for v in validate_zero_dim(q).violations {
            msgs.push(format!("queries: {v}"));
        }
    }
    if msgs.is_empty() {
        Ok(())
    } else {
        Err(Outcome::fail(EXIT_INVALID, format!("invalid input: {}\n", msgs.join("; "))))
    }
}

/// Rejects inputs failing a decidable genericity check with exit code 4.
fn require_generic(p: &Problem) -> Result<(), Outcome> {
    let failed: Vec<String> = genericity_report(&p.curve, p.queries.as_ref())
        .into_iter()
        .filter(|c| c.status == CheckStatus::Fail)
        .map(|c| c.name.to_string())
        .collect();
    if failed.is_empty() {
        Ok(())
    } else {
        Err(Outcome::fail(EXIT_GENERICITY, format!("genericity violation: failed check {}\n", failed.join(", "))))
    }
}

#[derive(Serialize)]
struct CheckJson {
    name: &'static str,
    status: String,
    detail: String,
}

#[derive(Serialize)]
struct ValidateJson {
    valid: bool,
    violations: Vec<String>,
    warnings: Vec<String>,
    checks: Vec<CheckJson>,
}

fn cmd_validate(p: &Problem, _: &Args) -> Result<Outcome, Outcome> {
    let one = validate_one_dim(&p.curve);
    let zero = p.queries.as_ref().map(validate_zero_dim).unwrap_or_default();
    let mut violations: Vec<String> = one.violations.iter().map(|v| format!("curve: {v}")).collect();
    violations.extend(zero.violations.iter().map(|v| format!("queries: {v}")));
    let mut warnings: Vec<String> = one.warnings.iter().map(|w| format!("curve: {w}")).collect();
    warnings.extend(zero.warnings.iter().map(|w| format!("queries: {w}")));
    let checks: Vec<CheckJson> = if violations.is_empty() {
        genericity_report(&p.curve, p.queries.as_ref())
            .into_iter()
            .map(|c| CheckJson { name: c.name, status: c.status.to_string(), detail: c.detail })
            .collect()
    } else {
        Vec::new()
    };
    let code = if !violations.is_empty() {
        EXIT_INVALID
    } else if checks.iter().any(|c| c.status == "fail") {
        EXIT_GENERICITY
    } else {
        EXIT_OK
    };
    let stderr = if code == EXIT_INVALID { format!("invalid input: {}\n", violations.join("; ")) } else { String::new() };
    let out = ValidateJson { valid: code == EXIT_OK, violations, warnings, checks };
    Ok(Outcome { code, stdout: to_json(&out), stderr })
}

#[derive(Serialize)]
struct RootJson {
    lo: String,
    hi: String,
}

#[derive(Serialize)]
struct AppsingJson {
    q_app: String,
    roots: Vec<RootJson>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    diagnostics: Vec<&'static str>,
}

fn apparent(p: &Problem) -> Result<ApparentResult, Outcome> {
    apparent_singularities(&p.curve).map_err(Outcome::from)
}

fn cmd_appsing(p: &Problem, _: &Args) -> Result<Outcome, Outcome> {
    require_valid(p)?;
    let app = apparent(p)?;
    let roots = apparent_abscissas(&app)
        .iter()
        .map(|a| RootJson { lo: a.interval().lo.to_string(), hi: a.interval().hi.to_string() })
        .collect();
    let diagnostics = if app.criterion_degenerate { vec!["criterion_degenerate"] } else { Vec::new() };
    let out = AppsingJson { q_app: app.q_app.display("x1"), roots, diagnostics };
    Ok(Outcome::ok(to_json(&out)))
}

/// Unresolved topology graph of a validated problem.
fn topology(p: &Problem) -> Result<(ApparentResult, TopologyGraph), Outcome> {
    require_valid(p)?;
    require_generic(p)?;
    let app = apparent(p)?;
    let g = topo2d_with(&p.curve, p.queries.as_ref(), &app, &eps_of(p))?;
    Ok((app, g))
}

fn output_path(flag: &Option<PathBuf>, file: &Option<String>) -> Option<PathBuf> {
    flag.clone().or_else(|| file.as_ref().map(PathBuf::from))
}

fn cmd_topo(p: &Problem, args: &Args) -> Result<Outcome, Outcome> {
    let (app, g) = topology(p)?;
    let dot = to_dot(&g, "unresolved");
    if let Some(path) = output_path(&args.dot, &p.dot) {
        write_file(&path, &dot)?;
    }
    if let Some(path) = output_path(&args.svg, &p.svg) {
        write_file(&path, &to_svg(&[("unresolved", &g)]))?;
    }
    let mut o = Outcome::ok(dot);
    if app.criterion_degenerate {
        o.stderr.push_str("warning: node criterion vanishes at every node abscissa; q_app set to 1\n");
    }
    Ok(o)
}

#[derive(Serialize)]
struct ConnectJson {
    partition: Vec<Vec<usize>>,
    components: usize,
}

/// Runs the whole pipeline: topology, node resolution, query partition.
pub fn connect_problem(p: &Problem) -> Result<(TopologyGraph, TopologyGraph, Partition), Outcome> {
    let (_, g) = topology(p)?;
    let resolved = node_resolution(&g)?;
    let part = answer_queries(&resolved);
    Ok((g, resolved, part))
}

fn cmd_connect(p: &Problem, args: &Args) -> Result<Outcome, Outcome> {
    let has_queries = p.queries.as_ref().is_some_and(|q| !q.lambda.is_constant());
    if !has_queries && !args.components_only {
        return Err(Outcome::fail(EXIT_INVALID, "error: connect needs queries (or --components-only)\n"));
    }
    let (g, resolved, part) = connect_problem(p)?;
    if let Some(path) = output_path(&args.dot, &p.dot) {
        let text = to_dot(&g, "unresolved") + &to_dot(&resolved, "resolved");
        write_file(&path, &text)?;
    }
    if let Some(path) = output_path(&args.svg, &p.svg) {
        write_file(&path, &to_svg(&[("unresolved", &g), ("resolved", &resolved)]))?;
    }
    let partition = if args.components_only { Vec::new() } else { part.blocks };
    Ok(Outcome::ok(to_json(&ConnectJson { partition, components: part.component_count })))
}
