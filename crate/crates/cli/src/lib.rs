//! Command-line front end for `aalpha-core`.
//!
//! Exit statuses: 0 success, 1 bound violation, 2 usage or I/O error.

pub mod grid;
pub mod output;

use std::f64::consts::FRAC_PI_3;
use std::ffi::OsString;
use std::path::PathBuf;

use aalpha_core::verify::{randomized_suite, sweep_alpha, verify_with, SweepConfig};
use aalpha_core::{parse_graph, random_mixed_graph, Alpha, Beta, BoundReport};
use clap::{Args, Parser, Subcommand, ValueEnum};

pub use grid::{parse_grid, GridError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "aalpha",
    version,
    about = "Spectra and eigenvalue bounds of A_alpha matrices of mixed graphs"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate every bound for one graph at one alpha.
    Report(ReportArgs),
    /// One CSV row per alpha grid point.
    Sweep(SweepArgs),
    /// Emit a random mixed graph in the file format.
    Random(RandomArgs),
    /// Run the randomized bound suite.
    Check(CheckArgs),
}

#[derive(Debug, Args)]
pub struct ReportArgs {
    #[arg(long)]
    pub graph: PathBuf,
    #[arg(long, default_value = "0")]
    pub alpha: String,
    /// Angle of beta; the default pi/3 selects omega.
    #[arg(long, allow_negative_numbers = true)]
    pub beta_arg: Option<f64>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    #[arg(long, default_value_t = 100)]
    pub rayleigh_samples: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    #[arg(long)]
    pub graph: PathBuf,
    /// `start:stop:step` or a single value.
    #[arg(long, default_value = "0:1:0.05")]
    pub alpha: String,
    #[arg(long, allow_negative_numbers = true)]
    pub beta_arg: Option<f64>,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    #[arg(long, default_value_t = 100)]
    pub rayleigh_samples: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Args)]
pub struct RandomArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long, default_value_t = 0.5)]
    pub edge_prob: f64,
    #[arg(long, default_value_t = 0.5)]
    pub orient_prob: f64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    #[arg(long, default_value_t = 1000)]
    pub trials: usize,
    #[arg(long, default_value_t = 1)]
    pub min_n: usize,
    #[arg(long, default_value_t = 12)]
    pub max_n: usize,
    #[arg(long, default_value_t = 7)]
    pub seed: u64,
    /// Alpha grid; defaults to 0:1:0.05.
    #[arg(long)]
    pub alpha: Option<String>,
    /// Beta angles to sample from; repeatable. Defaults to a fixed grid
    /// on [-pi/2, pi/2].
    #[arg(long, allow_negative_numbers = true)]
    pub beta_arg: Vec<f64>,
    /// `lo:hi` range for the edge probability.
    #[arg(long, default_value = "0:1")]
    pub edge_prob: String,
    #[arg(long, default_value_t = 100)]
    pub rayleigh_samples: usize,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

/// Captured result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(code: i32, stdout: String) -> Self {
        Self {
            code,
            stdout,
            stderr: String::new(),
        }
    }

    fn usage(msg: impl std::fmt::Display) -> Self {
        Self {
            code: EXIT_USAGE,
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
        }
    }
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => execute(cli),
        Err(e) => {
            let text = e.render().to_string();
            if e.use_stderr() {
                Outcome {
                    code: EXIT_USAGE,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome::ok(EXIT_OK, text)
            }
        }
    }
}

pub fn execute(cli: Cli) -> Outcome {
    let result = match cli.command {
        Command::Report(a) => cmd_report(&a),
        Command::Sweep(a) => cmd_sweep(&a),
        Command::Random(a) => cmd_random(&a),
        Command::Check(a) => cmd_check(&a),
    };
    result.unwrap_or_else(Outcome::usage)
}

type CmdResult = Result<Outcome, String>;

fn beta_from(arg: Option<f64>) -> Result<Beta, String> {
    let theta = arg.unwrap_or(FRAC_PI_3);
    if !(-std::f64::consts::FRAC_PI_2..=std::f64::consts::FRAC_PI_2).contains(&theta) {
        return Err(format!("--beta-arg {theta} outside [-pi/2, pi/2]"));
    }
    Beta::from_angle(theta).map_err(|e| e.to_string())
}

fn read_graph(path: &PathBuf) -> Result<aalpha_core::MixedGraph, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    parse_graph(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn exit_for(reports: &[BoundReport]) -> i32 {
    if reports.iter().any(BoundReport::has_violation) {
        EXIT_VIOLATION
    } else {
        EXIT_OK
    }
}

pub fn cmd_report(a: &ReportArgs) -> CmdResult {
    let graph = read_graph(&a.graph)?;
    let alphas = parse_grid(&a.alpha).map_err(|e| e.to_string())?;
    let [alpha] = alphas.as_slice() else {
        return Err(format!(
            "report takes a single alpha, `{}` has {} points",
            a.alpha,
            alphas.len()
        ));
    };
    let alpha = Alpha::new(*alpha).map_err(|e| e.to_string())?;
    let beta = beta_from(a.beta_arg)?;
    let report = match verify_with(&graph, alpha, beta, a.rayleigh_samples, a.seed) {
        Ok(r) => r,
        Err(e) => {
            return Ok(Outcome {
                code: EXIT_VIOLATION,
                stdout: String::new(),
                stderr: format!("verification failed: {e}\n"),
            })
        }
    };
    let reports = [report];
    let stdout = match a.format {
        Format::Json => output::report_json(&reports[0]) + "\n",
        Format::Csv => output::sweep_csv(&reports).map_err(|e| e.to_string())?,
    };
    Ok(Outcome::ok(exit_for(&reports), stdout))
}

pub fn cmd_sweep(a: &SweepArgs) -> CmdResult {
    let graph = read_graph(&a.graph)?;
    let alpha_grid = parse_grid(&a.alpha).map_err(|e| e.to_string())?;
    let beta = beta_from(a.beta_arg)?;
    let cfg = SweepConfig {
        alpha_grid,
        beta_args: vec![beta.arg()],
        seed: a.seed,
        rayleigh_samples: a.rayleigh_samples,
        ..SweepConfig::default()
    };
    if cfg.alpha_grid.iter().any(|x| !(0.0..=1.0).contains(x)) {
        return Err(format!("alpha grid `{}` leaves [0, 1]", a.alpha));
    }
    let reports = match sweep_alpha(&graph, &cfg) {
        Ok(r) => r,
        Err(e) => {
            return Ok(Outcome {
                code: EXIT_VIOLATION,
                stdout: String::new(),
                stderr: format!("verification failed: {e}\n"),
            })
        }
    };
    let stdout = match a.format {
        Format::Csv => output::sweep_csv(&reports).map_err(|e| e.to_string())?,
        Format::Json => output::reports_json(&reports) + "\n",
    };
    Ok(Outcome::ok(exit_for(&reports), stdout))
}

pub fn cmd_random(a: &RandomArgs) -> CmdResult {
    let g =
        random_mixed_graph(a.n, a.edge_prob, a.orient_prob, a.seed).map_err(|e| e.to_string())?;
    Ok(Outcome::ok(EXIT_OK, g.to_text()))
}

fn parse_range(spec: &str) -> Result<(f64, f64), String> {
    let parse = |s: &str| {
        s.trim()
            .parse::<f64>()
            .map_err(|_| format!("invalid range `{spec}`"))
    };
    match spec.split_once(':') {
        Some((lo, hi)) => Ok((parse(lo)?, parse(hi)?)),
        None => parse(spec).map(|p| (p, p)),
    }
}

pub fn cmd_check(a: &CheckArgs) -> CmdResult {
    if a.trials == 0 {
        return Err("--trials must be at least 1".into());
    }
    let defaults = SweepConfig::default();
    let cfg = SweepConfig {
        alpha_grid: match &a.alpha {
            Some(spec) => parse_grid(spec).map_err(|e| e.to_string())?,
            None => defaults.alpha_grid.clone(),
        },
        beta_args: if a.beta_arg.is_empty() {
            defaults.beta_args.clone()
        } else {
            a.beta_arg.clone()
        },
        seed: a.seed,
        trials: a.trials,
        n_range: (a.min_n, a.max_n),
        edge_prob_range: parse_range(&a.edge_prob)?,
        rayleigh_samples: a.rayleigh_samples,
    };
    cfg.validate().map_err(|e| e.to_string())?;
    let summary = randomized_suite(&cfg).map_err(|e| e.to_string())?;
    let stdout = match a.format {
        Format::Json => output::summary_json(&summary) + "\n",
        Format::Csv => output::worst_slack_csv(&summary).map_err(|e| e.to_string())?,
    };
    let code = if summary.is_clean() {
        EXIT_OK
    } else {
        EXIT_VIOLATION
    };
    Ok(Outcome::ok(code, stdout))
}
