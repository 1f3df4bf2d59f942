//! `curvefill`: bounds, constructions, certificates and oracle checks for
//! filling sets of curves.

mod output;

use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{error::ErrorKind, ArgGroup, Args, CommandFactory, Parser, Subcommand, ValueEnum};
use curvefill::bounds::{self, FormulaId};
use curvefill::constructions::{plan_genus_fill, sine_cylinder, sphere_fill, torus_fill, torus_k1_fill};
use curvefill::hyperbolic::ngon_arrangement;
use curvefill::oracle::{self, SearchParams};
use curvefill::{verify_k_filling, Arrangement, SurfaceSig};
use serde_json::{json, Value};

use output::{emit, render, Format};

#[derive(Debug, Parser)]
#[command(name = "curvefill", version, about = "Filling sets of curves on punctured surfaces")]
struct Cli {
    #[arg(long, value_enum, default_value = "json", global = true)]
    format: Format,
    /// Write output to FILE instead of standard output.
    #[arg(long, value_name = "FILE", global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate a closed-form bound.
    Bounds(BoundsArgs),
    /// Build an explicit arrangement and certify it.
    Construct(ConstructArgs),
    /// Certify an arrangement read from FILE or standard input.
    Verify(VerifyArgs),
    /// Systoles of the doubled regular ideal n-gon.
    Ngon {
        #[arg(short = 'n')]
        n: u32,
    },
    /// Brute-force oracles.
    Oracle(OracleArgs),
    /// Compare every closed-form minimum against brute force on the fixed grid.
    Crosscheck,
}

#[derive(Debug, Clone, Copy, Default, Args)]
struct Surface {
    #[arg(short = 'g')]
    genus: Option<u32>,
    #[arg(short = 'n')]
    punctures: Option<u32>,
    #[arg(short = 'k')]
    k: Option<u32>,
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("formula").required(true)
    .args(["even", "odd", "torus_k1", "window", "systole", "sphere"])))]
struct BoundsArgs {
    /// Minimal N for even k.
    #[arg(long)]
    even: bool,
    /// Minimal N for odd k under a cap on the number of homotopy classes.
    #[arg(long)]
    odd: bool,
    /// Minimal N for k = 1 on the punctured torus.
    #[arg(long)]
    torus_k1: bool,
    /// Window for the minimal N in genus at least 2.
    #[arg(long)]
    window: bool,
    /// Lower bound on the number of filling systoles.
    #[arg(long)]
    systole: bool,
    /// Exact minimum on the punctured sphere.
    #[arg(long)]
    sphere: bool,
    #[command(flatten)]
    surface: Surface,
    #[arg(long)]
    m_cap: Option<u64>,
    #[arg(long)]
    ell: Option<f64>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Construction {
    Sphere,
    Torus,
    TorusK1,
    Cylinder,
    GenusPlan,
}

#[derive(Debug, Args)]
struct ConstructArgs {
    #[arg(value_enum)]
    kind: Construction,
    #[command(flatten)]
    surface: Surface,
    /// Number of curves (cylinder only).
    #[arg(short = 'N')]
    curves: Option<usize>,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    /// Arrangement JSON, bare or wrapped as {"arrangement": ...}; stdin if omitted.
    file: Option<PathBuf>,
    #[arg(short = 'k')]
    k: u32,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Oracle {
    Ksystem,
    Partition,
    MinN,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Formula {
    Even,
    Odd,
    TorusK1,
    Window,
    Systole,
    Sphere,
}

impl From<Formula> for FormulaId {
    fn from(f: Formula) -> Self {
        match f {
            Formula::Even => FormulaId::EvenLower,
            Formula::Odd => FormulaId::OddLower,
            Formula::TorusK1 => FormulaId::TorusK1,
            Formula::Window => FormulaId::GenusWindow,
            Formula::Systole => FormulaId::SystoleCount,
            Formula::Sphere => FormulaId::SphereExact,
        }
    }
}

#[derive(Debug, Args)]
struct OracleArgs {
    #[arg(value_enum)]
    kind: Oracle,
    #[command(flatten)]
    surface: Surface,
    /// Slope bound for the k-system search.
    #[arg(long)]
    bound: Option<u32>,
    /// Number of curves (partition).
    #[arg(short = 'N')]
    curves: Option<u64>,
    /// Number of parts (partition).
    #[arg(short = 'M')]
    parts: Option<u64>,
    /// Formula to search (min-n).
    #[arg(long, value_enum)]
    formula: Option<Formula>,
    #[arg(long)]
    m_cap: Option<u64>,
    #[arg(long)]
    ell: Option<f64>,
}

/// Result of a subcommand: the document to print and whether it succeeded.
struct Outcome {
    doc: Value,
    ok: bool,
}

impl Outcome {
    fn ok(doc: Value) -> Self {
        Self { doc, ok: true }
    }
}

/// Exits with status 2 like any other flag error.
fn missing(flag: &str, context: &str) -> ! {
    Cli::command()
        .error(ErrorKind::MissingRequiredArgument, format!("{context} requires {flag}"))
        .exit()
}

fn need<T>(v: Option<T>, flag: &str, context: &str) -> T {
    v.unwrap_or_else(|| missing(flag, context))
}

fn to_json<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("report serializes")
}

fn run_bounds(a: &BoundsArgs) -> Result<Outcome> {
    let s = a.surface;
    let g = || need(s.genus, "-g", "bounds");
    let n = || need(s.punctures, "-n", "bounds");
    let k = || need(s.k, "-k", "bounds");
    let sig = || SurfaceSig::new(g(), n());
    let report = if a.even {
        bounds::min_filling_even(sig(), k())?
    } else if a.odd {
        bounds::min_filling_odd(sig(), k(), need(a.m_cap, "--m-cap", "bounds --odd"))?
    } else if a.torus_k1 {
        bounds::torus_k1_bound(n())?
    } else if a.window {
        bounds::genus_window(sig(), k())?
    } else if a.systole {
        bounds::systole_count_lower(sig(), need(a.ell, "--ell", "bounds --systole"))?
    } else {
        bounds::sphere_exact(n(), k())?
    };
    Ok(Outcome::ok(to_json(&report)))
}

fn certified(arr: &Arrangement, k: u32) -> Result<Outcome> {
    let cert = verify_k_filling(arr, k)?;
    let ok = cert.pass;
    Ok(Outcome { doc: json!({ "arrangement": arr, "certificate": cert }), ok })
}

fn run_construct(a: &ConstructArgs) -> Result<Outcome> {
    let s = a.surface;
    let n = || need(s.punctures, "-n", "construct");
    let k = || need(s.k, "-k", "construct");
    match a.kind {
        Construction::Sphere => {
            let k = k();
            certified(&sphere_fill(n(), k)?, k)
        }
        Construction::Torus => {
            let k = k();
            certified(&torus_fill(n(), k)?, k)
        }
        Construction::TorusK1 => certified(&torus_k1_fill(n())?, 1),
        Construction::Cylinder => {
            let c = sine_cylinder(need(a.curves, "-N", "construct cylinder"), k())?;
            let mut doc = to_json(&c);
            doc["cylinder_euler"] = json!(c.cylinder_euler());
            Ok(Outcome::ok(doc))
        }
        Construction::GenusPlan => {
            let plan = plan_genus_fill(need(s.genus, "-g", "construct genus-plan"), n(), k())?;
            Ok(Outcome::ok(to_json(&plan)))
        }
    }
}

fn read_arrangement(file: Option<&PathBuf>) -> Result<Arrangement> {
    let text = match file {
        Some(path) => std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?,
        None => {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s).context("reading standard input")?;
            s
        }
    };
    let mut value: Value = serde_json::from_str(&text).context("parsing JSON")?;
    if let Some(inner) = value.get_mut("arrangement") {
        value = inner.take();
    }
    serde_json::from_value(value).context("decoding arrangement")
}

fn run_verify(a: &VerifyArgs) -> Result<Outcome> {
    let arr = read_arrangement(a.file.as_ref())?;
    let cert = verify_k_filling(&arr, a.k)?;
    let ok = cert.pass;
    Ok(Outcome { doc: to_json(&cert), ok })
}

fn run_ngon(n: u32) -> Result<Outcome> {
    let report = ngon_arrangement(n)?;
    let cert = verify_k_filling(&report.arrangement, 2)?;
    let mut doc = to_json(&report);
    doc["certificate"] = to_json(&cert);
    Ok(Outcome::ok(doc))
}

fn run_oracle(a: &OracleArgs) -> Result<Outcome> {
    let s = a.surface;
    let k = || need(s.k, "-k", "oracle");
    let doc = match a.kind {
        Oracle::Ksystem => to_json(&oracle::torus_max_ksystem(
            u64::from(k()),
            need(a.bound, "--bound", "oracle ksystem"),
        )?),
        Oracle::Partition => to_json(&oracle::brute_partition_max(
            need(a.curves, "-N", "oracle partition"),
            need(a.parts, "-M", "oracle partition"),
            k(),
        )?),
        Oracle::MinN => {
            let formula = FormulaId::from(need(a.formula, "--formula", "oracle min-n"));
            let sig = SurfaceSig::new(s.genus.unwrap_or(0), need(s.punctures, "-n", "oracle min-n"));
            let mut params = SearchParams::new(sig, s.k.unwrap_or(1));
            params.m_cap = a.m_cap.unwrap_or(params.m_cap);
            params.ell = a.ell.unwrap_or(params.ell);
            let value = oracle::brute_min_n(formula, params)?;
            json!({ "formula": formula, "surface": sig, "k": params.k, "minimal_n": value })
        }
    };
    Ok(Outcome::ok(doc))
}

fn run_crosscheck() -> Result<Outcome> {
    let report = oracle::crosscheck()?;
    let ok = report.pass();
    let mut doc = to_json(&report);
    doc["pass"] = json!(ok);
    Ok(Outcome { doc, ok })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Bounds(a) => run_bounds(a),
        Command::Construct(a) => run_construct(a),
        Command::Verify(a) => run_verify(a),
        Command::Ngon { n } => run_ngon(*n),
        Command::Oracle(a) => run_oracle(a),
        Command::Crosscheck => run_crosscheck(),
    };
    let outcome = match result {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e:#}");
            let usage = matches!(e.downcast_ref::<curvefill::Error>(), Some(curvefill::Error::Argument(_)));
            return ExitCode::from(if usage { 2 } else { 1 });
        }
    };
    if let Err(e) = emit(&render(&outcome.doc, cli.format), cli.out.as_ref()) {
        eprintln!("error: {e:#}");
        return ExitCode::from(1);
    }
    if outcome.ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
