//! Command-line front end.
//!
//! Exit status: 0 on success, 2 on bad flags or parameter values, 3 when a
//! lower-bound certificate is invalid, 4 on file I/O or malformed input
//! files, 1 on any other failure.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};

use crate::bounds::{
    c_const, lower_bound_general, lower_bound_opt, n_min, upper_bound_general, upper_bound_opt,
    BoundParams, MillsEpsilon,
};
use crate::error::Error;
use crate::format::sci;
use crate::harness::{emit_csv, parse_csv, rate_fit, repro_table, Column, ExperimentConfig};
use crate::reconstruct::{optimal_width, reconstruct_gauss, GaussWidth};
use crate::signals::{f0_samples, Bandwidth, SampleSet};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_CERTIFICATE: i32 = 3;
pub const EXIT_IO: i32 = 4;

#[derive(Debug, Parser)]
#[command(
    name = "gauss-shannon",
    version,
    about = "Gaussian-regularized Shannon sampling: reconstruction, certified error bounds, experiments"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Reproduce the lower / measured / upper error table as CSV.
    ReproTable(ReproTableArgs),
    /// Print the lower and upper bounds, the constant C and the admissible n.
    Bounds(BoundsArgs),
    /// Evaluate the regularized series at one or more points.
    Reconstruct(ReconstructArgs),
    /// Tabulate the constant C over a range of bandwidths.
    ScanC(ScanCArgs),
    /// Least-squares slope of ln(error) against n from a table CSV.
    RateFit(RateFitArgs),
}

#[derive(Debug, Args)]
pub struct ReproTableArgs {
    /// Bandwidth, e.g. `pi/4` or `0.785`.
    #[arg(long, value_parser = parse_real)]
    pub delta: f64,
    /// Mills sharpening parameter, e.g. `1/7`.
    #[arg(long, value_parser = parse_real)]
    pub eps: f64,
    /// `start:step:end`, `start:end` or a comma list.
    #[arg(long, value_parser = parse_n_list)]
    pub n_list: NList,
    #[arg(long, default_value_t = crate::harness::DEFAULT_GRID_POINTS)]
    pub grid: usize,
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Write natural logarithms instead of raw values.
    #[arg(long)]
    pub log: bool,
}

#[derive(Debug, Args)]
pub struct BoundsArgs {
    #[arg(long, value_parser = parse_real)]
    pub delta: f64,
    #[arg(long, value_parser = parse_real)]
    pub eps: f64,
    #[arg(long)]
    pub n: usize,
    /// Explicit Gaussian width.
    #[arg(long, value_parser = parse_real, conflicts_with = "opt_r")]
    pub r: Option<f64>,
    /// Use r = √((n−1)/(π−δ)) (the default).
    #[arg(long)]
    pub opt_r: bool,
}

#[derive(Debug, Args)]
pub struct ReconstructArgs {
    #[arg(long, value_parser = parse_real)]
    pub delta: f64,
    /// Window half-size; taken from the sample file when omitted.
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long, value_parser = parse_real, conflicts_with = "opt_r")]
    pub r: Option<f64>,
    #[arg(long)]
    pub opt_r: bool,
    /// `j,value` sample file; defaults to samples of f0.
    #[arg(long)]
    pub samples: Option<PathBuf>,
    /// A point, a comma list or `start:step:end`.
    #[arg(long, value_parser = parse_points)]
    pub at: Points,
}

#[derive(Debug, Args)]
pub struct ScanCArgs {
    #[arg(long, value_parser = parse_real)]
    pub eps: f64,
    #[arg(long, value_parser = parse_real)]
    pub delta_min: f64,
    #[arg(long, value_parser = parse_real)]
    pub delta_max: f64,
    /// Number of grid points, endpoints included.
    #[arg(long)]
    pub steps: usize,
    /// `fixed-min` (r = 1/√(π−δ)), `fixed:<R>` or `opt` (with --n).
    #[arg(long, default_value = "fixed-min", value_parser = parse_r_rule)]
    pub r_rule: RRule,
    /// Window half-size for `--r-rule opt`.
    #[arg(long)]
    pub n: Option<usize>,
}

#[derive(Debug, Args)]
pub struct RateFitArgs {
    #[arg(long)]
    pub csv: PathBuf,
    #[arg(long, value_parser = parse_column)]
    pub column: Column,
    #[arg(long)]
    pub n_from: usize,
    #[arg(long)]
    pub n_to: usize,
    /// The CSV holds natural logarithms.
    #[arg(long)]
    pub log: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NList(pub Vec<usize>);

#[derive(Debug, Clone, PartialEq)]
pub struct Points(pub Vec<f64>);

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum RRule {
    /// `r = 1/√(π−δ)`, the optimal width at `n = 2`.
    FixedMin,
    Fixed(f64),
    Optimal,
}

/// Parses `1.5`, `1/7`, `pi`, `pi/4`, `3pi/4` or `3*pi/4`.
pub fn parse_real(s: &str) -> Result<f64, String> {
    let s = s.trim();
    let bad = || format!("cannot parse `{s}` as a number (try 0.25, 1/7 or pi/4)");
    let (num, den) = match s.split_once('/') {
        Some((a, b)) => (a.trim(), Some(b.trim())),
        None => (s, None),
    };
    let numerator = if let Some(k) = num.strip_suffix("pi") {
        let k = k.trim().trim_end_matches('*').trim();
        let k = match k {
            "" => 1.0,
            "-" => -1.0,
            k => k.parse::<f64>().map_err(|_| bad())?,
        };
        k * std::f64::consts::PI
    } else {
        num.parse::<f64>().map_err(|_| bad())?
    };
    let v = match den {
        Some(d) => numerator / d.parse::<f64>().map_err(|_| bad())?,
        None => numerator,
    };
    if v.is_finite() {
        Ok(v)
    } else {
        Err(bad())
    }
}

pub fn parse_n_list(s: &str) -> Result<NList, String> {
    let bad = || format!("cannot parse `{s}` as an n list (try 7:2:25 or 7,9,11)");
    let ints = |p: &str| p.trim().parse::<usize>().map_err(|_| bad());
    if s.contains(':') {
        let parts: Vec<&str> = s.split(':').collect();
        let (start, step, end) = match parts.as_slice() {
            [a, b] => (ints(a)?, 1, ints(b)?),
            [a, h, b] => (ints(a)?, ints(h)?, ints(b)?),
            _ => return Err(bad()),
        };
        if step == 0 || end < start {
            return Err(bad());
        }
        Ok(NList((start..=end).step_by(step).collect()))
    } else {
        s.split(',').map(ints).collect::<Result<_, _>>().map(NList)
    }
}

pub fn parse_points(s: &str) -> Result<Points, String> {
    let bad = || format!("cannot parse `{s}` as points (try 0.5, 0.1,0.2 or 0.01:0.01:0.99)");
    if s.contains(':') {
        let parts = s
            .split(':')
            .map(parse_real)
            .collect::<Result<Vec<_>, _>>()?;
        let [a, h, b] = parts.as_slice() else {
            return Err(bad());
        };
        if !(*h > 0.0) || b < a {
            return Err(bad());
        }
        let count = ((b - a) / h + 1e-9).floor() as usize + 1;
        Ok(Points((0..count).map(|k| a + k as f64 * h).collect()))
    } else {
        s.split(',')
            .map(parse_real)
            .collect::<Result<_, _>>()
            .map(Points)
    }
}

pub fn parse_r_rule(s: &str) -> Result<RRule, String> {
    match s {
        "fixed-min" => Ok(RRule::FixedMin),
        "opt" => Ok(RRule::Optimal),
        _ => match s.strip_prefix("fixed:") {
            Some(r) => parse_real(r).map(RRule::Fixed),
            None => Err(format!(
                "unknown r rule `{s}` (expected opt, fixed-min or fixed:<R>)"
            )),
        },
    }
}

fn parse_column(s: &str) -> Result<Column, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Domain(_) | Error::Parse(_) => EXIT_USAGE,
            Error::CertificateInvalid(_) => EXIT_CERTIFICATE,
            Error::Io(_) => EXIT_IO,
            Error::Quadrature(_) | Error::Degenerate(_) => EXIT_FAILURE,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_USAGE,
        message: message.into(),
    }
}

/// Errors while loading an input file, parse errors included.
fn file_failure(path: &Path, e: Error) -> Failure {
    Failure {
        code: EXIT_IO,
        message: format!("{}: {e}", path.display()),
    }
}

type Outcome = Result<String, Failure>;

/// Parses `args` (program name first) and runs the subcommand. Data goes to
/// `stdout` (or the `--out` file), diagnostics to `stderr`.
pub fn run<I, T, O, E>(args: I, stdout: &mut O, stderr: &mut E) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
    O: Write + ?Sized,
    E: Write + ?Sized,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                stderr.write_all(text.as_bytes())
            } else {
                stdout.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let outcome = match cli.command {
        Command::ReproTable(a) => repro_table_cmd(a, stderr),
        Command::Bounds(a) => bounds_cmd(a),
        Command::Reconstruct(a) => reconstruct_cmd(a),
        Command::ScanC(a) => scan_c_cmd(a),
        Command::RateFit(a) => rate_fit_cmd(a),
    };
    match outcome {
        Ok(text) => match stdout.write_all(text.as_bytes()) {
            Ok(()) => EXIT_OK,
            Err(e) => {
                let _ = writeln!(stderr, "error: {e}");
                EXIT_IO
            }
        },
        Err(f) => {
            let _ = writeln!(stderr, "error: {}", f.message);
            f.code
        }
    }
}

fn repro_table_cmd<E: Write + ?Sized>(a: ReproTableArgs, stderr: &mut E) -> Outcome {
    let config = ExperimentConfig::new(
        Bandwidth::new(a.delta)?,
        MillsEpsilon::new(a.eps)?,
        a.n_list.0,
        a.grid,
    )?;
    let rows = repro_table(&config)?;
    for row in rows.iter().filter(|r| r.lower < 0.0) {
        let _ = writeln!(
            stderr,
            "warning: n = {}: lower bound {} is negative, shown as 0",
            row.n, row.lower
        );
    }
    let csv = emit_csv(&rows, a.log);
    match a.out {
        Some(path) => {
            fs::write(&path, csv).map_err(|e| file_failure(&path, e.into()))?;
            Ok(String::new())
        }
        None => Ok(csv),
    }
}

fn bounds_cmd(a: BoundsArgs) -> Outcome {
    let delta = Bandwidth::new(a.delta)?;
    let eps = MillsEpsilon::new(a.eps)?;
    if a.n < 2 {
        return Err(usage(format!("--n must be >= 2, got {}", a.n)));
    }
    let (lower, upper, c, need) = match a.r {
        Some(r) => {
            let r = GaussWidth::new(r)?;
            let c = c_const(delta, eps, r);
            let need = n_min(delta, eps, c)?;
            let lower = lower_bound_general(&BoundParams::new(delta, eps, a.n, r)?)?;
            (lower, upper_bound_general(delta, r, a.n)?, c, need)
        }
        None => {
            let r = optimal_width(delta, a.n)?;
            let c = c_const(delta, eps, r);
            let need = n_min(delta, eps, c)?;
            let lower = lower_bound_opt(delta, eps, a.n)?;
            (lower, upper_bound_opt(delta, a.n)?, c, need)
        }
    };
    Ok(format!(
        "lower={}\nupper={}\nc={}\nn_min={need}\n",
        sci(lower, 10),
        sci(upper, 10),
        sci(c, 10)
    ))
}

fn reconstruct_cmd(a: ReconstructArgs) -> Outcome {
    let delta = Bandwidth::new(a.delta)?;
    let samples = match (&a.samples, a.n) {
        (Some(path), n) => {
            let text = fs::read_to_string(path).map_err(|e| file_failure(path, e.into()))?;
            let s = SampleSet::parse(&text).map_err(|e| file_failure(path, e))?;
            if let Some(n) = n {
                if n != s.n() {
                    return Err(usage(format!(
                        "--n {n} does not match the sample file window n = {}",
                        s.n()
                    )));
                }
            }
            s
        }
        (None, Some(n)) => f0_samples(delta, n)?,
        (None, None) => return Err(usage("either --n or --samples is required")),
    };
    let r = match a.r {
        Some(r) => GaussWidth::new(r)?,
        None => optimal_width(delta, samples.n())?,
    };
    let mut out = String::from("t,value\n");
    for &t in &a.at.0 {
        out.push_str(&format!(
            "{},{}\n",
            t,
            sci(reconstruct_gauss(&samples, r, t), 17)
        ));
    }
    Ok(out)
}

fn scan_c_cmd(a: ScanCArgs) -> Outcome {
    let eps = MillsEpsilon::new(a.eps)?;
    if a.steps < 1 {
        return Err(usage("--steps must be >= 1"));
    }
    if a.delta_max < a.delta_min {
        return Err(usage("--delta-max must not be below --delta-min"));
    }
    if a.r_rule == RRule::Optimal && a.n.is_none() {
        return Err(usage("--r-rule opt needs --n"));
    }
    let mut out = String::from("delta,c\n");
    for k in 0..a.steps {
        let frac = if a.steps == 1 {
            0.0
        } else {
            k as f64 / (a.steps - 1) as f64
        };
        let d = a.delta_min + (a.delta_max - a.delta_min) * frac;
        let delta = Bandwidth::new(d)?;
        let r = match a.r_rule {
            RRule::FixedMin => optimal_width(delta, 2)?,
            RRule::Fixed(r) => GaussWidth::new(r)?,
            RRule::Optimal => optimal_width(delta, a.n.unwrap_or(2))?,
        };
        out.push_str(&format!(
            "{},{}\n",
            sci(d, 17),
            sci(c_const(delta, eps, r), 17)
        ));
    }
    Ok(out)
}

fn rate_fit_cmd(a: RateFitArgs) -> Outcome {
    let text = fs::read_to_string(&a.csv).map_err(|e| file_failure(&a.csv, e.into()))?;
    let rows = parse_csv(&text, a.log).map_err(|e| file_failure(&a.csv, e))?;
    let rows: Vec<_> = rows
        .into_iter()
        .filter(|r| (a.n_from..=a.n_to).contains(&r.n))
        .collect();
    let slope = rate_fit(&rows, a.column)?;
    Ok(format!("{slope:.10}\n"))
}
