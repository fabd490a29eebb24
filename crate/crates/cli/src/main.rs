use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use finsleroid_cli::format;
use finsleroid_cli::{ProfileCurve, RevolutionMesh, SweepFamily, SweepTable};
use finsleroid_core::numerics::{self, DiffConfig};
use finsleroid_core::{CoVector, EventVector, MetricBackend, PdParams, Sector, SquareMatrix, SrParams};
use finsleroid_verify::{registry, run_checks, summary_table, to_json, Family, DEFAULT_GRID};

#[derive(Parser)]
#[command(name = "finsleroid", version, about = "Finsleroid metric functions: evaluate, trace, mesh, sweep, verify")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate K, H, F_SR or H_SR at a point.
    Eval(EvalArgs),
    /// Trace the unit profile in the (|R|, T) half-plane to CSV.
    Profile(ProfileArgs),
    /// Export the closed PD unit surface as an OBJ surface of revolution.
    Mesh(MeshArgs),
    /// Tabulate landmark quantities against g.
    Sweep(SweepArgs),
    /// Run the verification battery and write a JSON report.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FamilyArg {
    Pd,
    Sr,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum VerifyFamily {
    Pd,
    Sr,
    All,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SectorArg {
    Forward,
    Spacelike,
    Backward,
}

impl From<SectorArg> for Sector {
    fn from(s: SectorArg) -> Self {
        match s {
            SectorArg::Forward => Sector::Forward,
            SectorArg::Spacelike => Sector::Spacelike,
            SectorArg::Backward => Sector::Backward,
        }
    }
}

#[derive(Args)]
struct Metric {
    #[arg(long, value_enum, default_value = "pd")]
    family: FamilyArg,
    /// Anisotropy parameter; PD needs -2 < g < 2.
    #[arg(long, allow_hyphen_values = true)]
    g: f64,
    /// Use the Hamiltonian (covector) side instead of the metric.
    #[arg(long)]
    dual: bool,
}

#[derive(Args)]
struct EvalArgs {
    #[command(flatten)]
    metric: Metric,
    /// Comma-separated components, T first.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
    point: Vec<f64>,
    #[arg(long, default_value_t = 4)]
    dim: usize,
    /// Also print the gradient of half the squared function.
    #[arg(long)]
    momenta: bool,
    /// Also print the eigenvalues of the metric tensor.
    #[arg(long)]
    eigen: bool,
}

#[derive(Args)]
struct ProfileArgs {
    #[command(flatten)]
    metric: Metric,
    #[arg(long, default_value_t = 181)]
    samples: usize,
    /// SR sector to trace.
    #[arg(long, value_enum, default_value = "forward")]
    sector: SectorArg,
    /// Output file; stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct MeshArgs {
    #[command(flatten)]
    metric: Metric,
    #[arg(long, default_value_t = 32)]
    resolution: usize,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct SweepArgs {
    #[arg(long, value_enum, default_value = "pd")]
    family: FamilyArg,
    #[arg(long, allow_hyphen_values = true, default_value_t = -1.9)]
    g_min: f64,
    #[arg(long, allow_hyphen_values = true, default_value_t = 1.9)]
    g_max: f64,
    #[arg(long, default_value_t = 39)]
    steps: usize,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Comma-separated g values; defaults to ±1.9, ±1.5, ±1, ±0.5, ±0.1, 0.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    grid: Vec<f64>,
    #[arg(long, default_value_t = 42)]
    seed: u64,
    #[arg(long, default_value_t = 4)]
    dim: usize,
    #[arg(long, value_enum, default_value = "all")]
    family: VerifyFamily,
    #[arg(long, default_value = "verify-report.json")]
    out: PathBuf,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Eval(a) => eval(a).map(|_| true),
        Command::Profile(a) => profile(a).map(|_| true),
        Command::Mesh(a) => mesh(a).map(|_| true),
        Command::Sweep(a) => sweep(a).map(|_| true),
        Command::Verify(a) => verify(a),
    };
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn sink(out: &Option<PathBuf>) -> Result<Box<dyn Write>> {
    Ok(match out {
        Some(p) => Box::new(BufWriter::new(
            File::create(p).with_context(|| format!("cannot write {}", p.display()))?,
        )),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn eigenvalues(m: &SquareMatrix) -> Result<Vec<f64>> {
    let mut m = m.clone();
    m.symmetrize();
    Ok(numerics::eigen_sym(&m)?)
}

fn eval(a: EvalArgs) -> Result<()> {
    if a.point.len() != a.dim {
        bail!("--point has {} components but --dim is {}", a.point.len(), a.dim);
    }
    let g = a.metric.g;
    let v = EventVector::from_slice(&a.point);
    let c = CoVector::from_slice(&a.point);
    let cfg = DiffConfig::default();
    let (label, value, grad, tensor) = match (a.metric.family, a.metric.dual) {
        (FamilyArg::Pd, false) => {
            let p = PdParams::new(g, a.dim)?;
            let grad = a.momenta.then(|| p.covariant_momenta(&v)).transpose()?.map(|m| m.to_vec());
            let t = a.eigen.then(|| p.metric_tensor(&v, MetricBackend::Pullback)).transpose()?;
            ("K", p.metric_k(&v), grad, t)
        }
        (FamilyArg::Pd, true) => {
            let p = PdParams::new(g, a.dim)?;
            let grad = a.momenta.then(|| p.hamiltonian_gradient(&c)).transpose()?.map(|m| m.to_vec());
            let half_sq = |q: &[f64]| 0.5 * p.hamiltonian(&CoVector::from_slice(q)).powi(2);
            let t = a.eigen.then(|| numerics::hessian_fd(half_sq, &a.point, &cfg)).transpose()?;
            ("H", p.hamiltonian(&c), grad, t)
        }
        (FamilyArg::Sr, dual) => {
            let p = SrParams::new(g, a.dim)?;
            // H_SR(g) is F_SR(-g) read on covectors
            let q = if dual { p.reflected() } else { p };
            let grad = a.momenta.then(|| q.covariant_momenta(&v)).transpose()?.map(|m| m.to_vec());
            let half_sq = |x: &[f64]| 0.5 * q.metric_f(&EventVector::from_slice(x)).powi(2);
            let t = a.eigen.then(|| numerics::hessian_fd(half_sq, &a.point, &cfg)).transpose()?;
            let value = if dual { p.hamiltonian(&c) } else { p.metric_f(&v) };
            (if dual { "H_SR" } else { "F_SR" }, value, grad, t)
        }
    };
    if !value.is_finite() {
        bail!("{label} is not finite at {:?}", a.point);
    }
    println!("{label} = {}", format::num(value));
    if let Some(m) = grad {
        println!("momenta = {}", format::join(&m));
    }
    if let Some(t) = tensor {
        println!("eigenvalues = {}", format::join(&eigenvalues(&t)?));
    }
    Ok(())
}

fn profile(a: ProfileArgs) -> Result<()> {
    let m = &a.metric;
    let curve = match m.family {
        FamilyArg::Pd => ProfileCurve::pd(m.g, m.dual, a.samples)?,
        FamilyArg::Sr => ProfileCurve::sr(m.g, m.dual, a.sector.into(), a.samples)?,
    };
    curve.write_csv(sink(&a.out)?)?;
    Ok(())
}

fn mesh(a: MeshArgs) -> Result<()> {
    if a.metric.family == FamilyArg::Sr {
        bail!("mesh export needs a closed surface; the SR hyperboloid is unbounded");
    }
    let mesh = RevolutionMesh::pd(a.metric.g, a.metric.dual, a.resolution)?;
    mesh.write_obj(sink(&a.out)?)?;
    Ok(())
}

fn sweep(a: SweepArgs) -> Result<()> {
    let family = match a.family {
        FamilyArg::Pd => SweepFamily::Pd,
        FamilyArg::Sr => SweepFamily::Sr,
    };
    SweepTable::new(family, a.g_min, a.g_max, a.steps)?.write_csv(sink(&a.out)?)?;
    Ok(())
}

fn write_report(path: &Path, json: &str) -> Result<()> {
    std::fs::write(path, format!("{json}\n")).with_context(|| format!("cannot write {}", path.display()))
}

/// `Ok(false)` when a check failed; configuration problems are errors.
fn verify(a: VerifyArgs) -> Result<bool> {
    let grid = if a.grid.is_empty() { DEFAULT_GRID.to_vec() } else { a.grid };
    if a.dim < 2 {
        bail!("--dim must be at least 2");
    }
    let wants_pd = a.family != VerifyFamily::Sr;
    for &g in &grid {
        if !g.is_finite() {
            bail!("grid value {g} is not finite");
        }
        if wants_pd && g.abs() >= 2.0 {
            bail!("grid value g = {g} is outside -2 < g < 2 required by the PD family");
        }
    }
    let checks: Vec<_> = registry()
        .into_iter()
        .filter(|c| match a.family {
            VerifyFamily::Pd => c.family != Family::Sr,
            VerifyFamily::Sr => c.family == Family::Sr,
            VerifyFamily::All => true,
        })
        .collect();
    let reports = run_checks(&checks, &grid, a.seed, a.dim);
    write_report(&a.out, &to_json(&reports))?;
    print!("{}", summary_table(&reports));
    println!("report written to {}", a.out.display());
    Ok(reports.iter().all(|r| r.pass))
}
