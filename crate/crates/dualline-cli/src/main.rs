//! `dualline` command-line interface.
//!
//! Subcommands: `classify` (normal/spherical verdicts as JSON), `frenet`
//! (frame, curvature and torsion table as CSV) and `study-map` (ruled
//! surface mesh as OBJ or CSV). Exit codes: 0 success, 2 input error,
//! 3 mathematical precondition violated, 4 i/o failure.

mod config;
mod report;

use std::fmt;
use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use config::{build_curve, parse_config, parse_grid, parse_range};
use dualline::{
    classify, export_csv, export_obj, frenet_apparatus, ruled_surface_from_dual_curve,
    ClassifyConfig, Curve64, DerivativeMode,
};

#[derive(Debug)]
pub enum CliError {
    /// Bad configuration or flags.
    Input(String),
    /// A mathematical precondition failed.
    Math(dualline::Error),
    /// Output could not be written.
    Io(String),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Input(m) => write!(f, "{m}"),
            CliError::Math(e) => write!(f, "{e}"),
            CliError::Io(m) => write!(f, "{m}"),
        }
    }
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Input(_) => 2,
            CliError::Math(_) => 3,
            CliError::Io(_) => 4,
        }
    }
}

impl From<dualline::Error> for CliError {
    fn from(e: dualline::Error) -> Self {
        match e {
            dualline::Error::IoFailure { message } => CliError::Io(message),
            dualline::Error::ExactDerivativesUnavailable { name } => CliError::Input(format!(
                "curve '{name}' has no exact derivatives; drop --exact-derivatives or use a series/builtin curve"
            )),
            other => CliError::Math(other),
        }
    }
}

#[derive(Parser)]
#[command(
    name = "dualline",
    version,
    about = "Dual-number line geometry: curve classification, Frenet tables and ruled surfaces"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run the normal-curve and dual-sphere classifiers, reporting
    /// verdicts, fitted coefficients and residuals as JSON
    Classify(ClassifyArgs),
    /// Tabulate the dual Frenet frame, curvature and torsion as CSV
    Frenet(FrenetArgs),
    /// Sweep a dual-unit-sphere curve into its ruled surface
    StudyMap(StudyMapArgs),
}

#[derive(Args)]
struct CommonArgs {
    /// Curve configuration file (TOML; see the README for the schema)
    config: PathBuf,
    /// Number of parameter samples
    #[arg(long)]
    samples: Option<usize>,
    /// Differentiate through exact series/jet evaluators instead of
    /// finite differences
    #[arg(long)]
    exact_derivatives: bool,
    /// Restrict the parameter range, as LO:HI
    #[arg(long, value_parser = parse_range, allow_hyphen_values = true)]
    s_range: Option<(f64, f64)>,
    /// Write output to this file instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct ClassifyArgs {
    #[command(flatten)]
    common: CommonArgs,
    /// Verdict tolerance on residuals and drifts
    #[arg(long)]
    tol: Option<f64>,
}

#[derive(Args)]
struct FrenetArgs {
    #[command(flatten)]
    common: CommonArgs,
}

#[derive(Args)]
struct StudyMapArgs {
    #[command(flatten)]
    common: CommonArgs,
    /// Ruling parameter range, as LO:HI
    #[arg(long, value_parser = parse_range, allow_hyphen_values = true)]
    u_range: Option<(f64, f64)>,
    /// Mesh resolution, as SxU (samples along the curve x points per ruling)
    #[arg(long, value_parser = parse_grid)]
    grid: Option<(usize, usize)>,
    /// Mesh file format
    #[arg(long, value_enum)]
    format: Option<MeshFormat>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MeshFormat {
    Obj,
    Csv,
}

/// Effective settings after merging config `[run]` values and flags
/// (flags win).
struct Effective {
    curve: Curve64,
    mode: DerivativeMode,
    samples: Option<usize>,
    tol: Option<f64>,
    u_range: (f64, f64),
    grid: (usize, usize),
    format: MeshFormat,
    out: Option<PathBuf>,
}

fn effective(common: &CommonArgs, tol: Option<f64>, map: Option<&StudyMapArgs>) -> Result<Effective, CliError> {
    let text = fs::read_to_string(&common.config)
        .map_err(|e| CliError::Input(format!("cannot read {}: {e}", common.config.display())))?;
    let doc = parse_config(&text)?;

    let exact = common.exact_derivatives || doc.run.exact_derivatives.unwrap_or(false);
    let mode = if exact {
        DerivativeMode::Exact
    } else {
        DerivativeMode::FiniteDifference
    };

    let mut curve = build_curve(&doc.curve, mode)?;
    let s_range = common.s_range.or_else(|| doc.run.s_range.map(|[a, b]| (a, b)));
    if let Some((lo, hi)) = s_range {
        curve = curve.with_domain((lo, hi));
    }

    let run = &doc.run;
    let u_range = map
        .and_then(|m| m.u_range)
        .or_else(|| run.u_range.map(|[a, b]| (a, b)))
        .unwrap_or((-1.0, 1.0));
    let grid = match map.and_then(|m| m.grid) {
        Some(g) => g,
        None => match &run.grid {
            Some(text) => parse_grid(text).map_err(CliError::Input)?,
            None => (64, 16),
        },
    };
    let format = match map.and_then(|m| m.format) {
        Some(f) => f,
        None => match run.format.as_deref() {
            None | Some("obj") => MeshFormat::Obj,
            Some("csv") => MeshFormat::Csv,
            Some(other) => {
                return Err(CliError::Input(format!(
                    "unknown format `{other}` (expected obj or csv)"
                )))
            }
        },
    };

    Ok(Effective {
        curve,
        mode,
        samples: common.samples.or(run.samples),
        tol: tol.or(run.tol),
        u_range,
        grid,
        format,
        out: common.out.clone().or_else(|| run.out.clone().map(PathBuf::from)),
    })
}

fn write_output(out: &Option<PathBuf>, bytes: &[u8]) -> Result<(), CliError> {
    match out {
        Some(path) => fs::write(path, bytes)
            .map_err(|e| CliError::Io(format!("cannot write {}: {e}", path.display()))),
        None => std::io::stdout()
            .write_all(bytes)
            .map_err(|e| CliError::Io(format!("cannot write to stdout: {e}"))),
    }
}

fn classify_cfg(eff: &Effective) -> ClassifyConfig<f64> {
    let mut cfg = ClassifyConfig::new(eff.mode);
    if let Some(n) = eff.samples {
        cfg = cfg.with_samples(n);
    }
    if let Some(t) = eff.tol {
        cfg = cfg.with_verdict_tol(t);
    }
    cfg
}

fn cmd_classify(args: &ClassifyArgs) -> Result<(), CliError> {
    let eff = effective(&args.common, args.tol, None)?;
    let cfg = classify_cfg(&eff);
    let out = classify(&eff.curve, &cfg)?;
    let exact = eff.mode == DerivativeMode::Exact;
    let text = report::render(&eff.curve, &cfg, exact, &out);
    write_output(&eff.out, text.as_bytes())
}

fn cmd_frenet(args: &FrenetArgs) -> Result<(), CliError> {
    let eff = effective(&args.common, None, None)?;
    let n = eff.samples.unwrap_or(256).max(2);
    let (lo, hi) = eff.curve.domain();
    let margin = eff.curve.stencil_margin(eff.mode);
    let a = lo + margin;
    let b = hi - margin;
    let mut text = String::from(
        "s,Tx,Ty,Tz,Nx,Ny,Nz,Bx,By,Bz,Txd,Tyd,Tzd,Nxd,Nyd,Nzd,Bxd,Byd,Bzd,k1,k1d,k2,k2d\n",
    );
    for i in 0..n {
        let s = a + (b - a) * (i as f64) / ((n - 1) as f64);
        let f = frenet_apparatus(&eff.curve, s, eff.mode)?;
        let mut row = vec![s];
        for v in [f.tangent, f.normal, f.binormal] {
            row.extend([v.real.x, v.real.y, v.real.z]);
        }
        for v in [f.tangent, f.normal, f.binormal] {
            row.extend([v.dual.x, v.dual.y, v.dual.z]);
        }
        row.extend([f.curvature.real, f.curvature.dual, f.torsion.real, f.torsion.dual]);
        let cells: Vec<String> = row.iter().map(|x| x.to_string()).collect();
        text.push_str(&cells.join(","));
        text.push('\n');
    }
    write_output(&eff.out, text.as_bytes())
}

fn cmd_study_map(args: &StudyMapArgs) -> Result<(), CliError> {
    let eff = effective(&args.common, None, Some(args))?;
    let (s_samples, u_count) = eff.grid;
    let mesh = ruled_surface_from_dual_curve(&eff.curve, s_samples, eff.u_range, u_count)?;
    let mut buf = Vec::new();
    match eff.format {
        MeshFormat::Obj => export_obj(&mesh, &mut buf)?,
        MeshFormat::Csv => export_csv(&mesh, &mut buf)?,
    }
    write_output(&eff.out, &buf)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.cmd {
        Cmd::Classify(args) => cmd_classify(args),
        Cmd::Frenet(args) => cmd_frenet(args),
        Cmd::StudyMap(args) => cmd_study_map(args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
