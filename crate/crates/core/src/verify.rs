//! End-to-end verification: build `A_α^β`, solve it two ways, evaluate the
//! whole bound catalog and aggregate outcomes over random instances.

use std::collections::BTreeMap;
use std::f64::consts::{FRAC_PI_2, FRAC_PI_3, FRAC_PI_4, FRAC_PI_6};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bounds::{evaluate_catalog, BoundResult, BoundsError, Target};
use crate::eig::{self, spectral_radius, spread, trace_norm, EigenError, Spectrum};
use crate::graph::{random_mixed_graph_with, GraphError, GraphStats, MixedGraph};
use crate::matrix::{
    a_alpha_matrix, expected_traces, quadratic_form, Alpha, Beta, ComplexVector, HermitianMatrix,
    MatrixError,
};

/// Uniform slack tolerance for every bound.
pub const SLACK_TOL: f64 = 1e-9;
/// Primary vs oracle eigenvalue agreement, relative to `‖M‖_F`.
pub const ORACLE_TOL: f64 = 1e-8;
/// Absolute tolerance on the closed-form trace identities.
pub const TRACE_TOL: f64 = 1e-9;
/// Numerical-range sampling slack.
pub const RANGE_TOL: f64 = 1e-9;
pub const DEFAULT_RAYLEIGH_SAMPLES: usize = 100;

#[derive(Debug, Error)]
pub enum VerifyError {
    #[error(transparent)]
    Eigen(#[from] EigenError),
    #[error(transparent)]
    Bounds(#[from] BoundsError),
    #[error(transparent)]
    Matrix(#[from] MatrixError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("primary and oracle spectra differ by {discrepancy:e} (allowed {tolerance:e})")]
    OracleMismatch { discrepancy: f64, tolerance: f64 },
    #[error("{which}: closed form {expected} but matrix gives {actual}")]
    TraceIdentity {
        which: &'static str,
        expected: f64,
        actual: f64,
    },
    #[error("invalid configuration: {0}")]
    Config(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Status {
    Holds,
    Violated,
    NotApplicable,
    ExpectedFail,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Holds => "HOLDS",
            Status::Violated => "VIOLATED",
            Status::NotApplicable => "NOT_APPLICABLE",
            Status::ExpectedFail => "EXPECTED_FAIL",
        }
    }

    pub fn of(bound: &BoundResult, slack: Option<f64>) -> Self {
        match slack {
            None => Status::NotApplicable,
            _ if !bound.applicable => Status::NotApplicable,
            Some(s) if s >= -SLACK_TOL => Status::Holds,
            Some(_) if !bound.claimed => Status::ExpectedFail,
            Some(_) => Status::Violated,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct BoundOutcome {
    pub bound: BoundResult,
    pub actual: f64,
    pub slack: Option<f64>,
    pub status: Status,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BoundReport {
    pub graph: MixedGraph,
    pub stats: GraphStats,
    pub alpha: Alpha,
    pub beta: Beta,
    pub spectrum: Spectrum,
    /// Largest primary vs oracle eigenvalue gap.
    pub oracle_discrepancy: f64,
    pub rho: f64,
    pub spread: f64,
    pub trace_norm: f64,
    /// `μ_1/ρ`, 1 when `ρ = 0`.
    pub rho_ratio: f64,
    pub rayleigh_ok: bool,
    pub outcomes: Vec<BoundOutcome>,
}

impl BoundReport {
    pub fn violations(&self) -> impl Iterator<Item = &BoundOutcome> {
        self.outcomes
            .iter()
            .filter(|o| o.status == Status::Violated)
    }

    /// True if any claimed bound failed or numerical-range sampling failed.
    pub fn has_violation(&self) -> bool {
        !self.rayleigh_ok || self.violations().next().is_some()
    }

    pub fn outcome(&self, label: &str) -> Option<&BoundOutcome> {
        self.outcomes.iter().find(|o| o.bound.label() == label)
    }

    /// `‖A_α^β‖_F`, from the closed-form `tr(A²)`.
    pub fn frobenius_norm(&self) -> f64 {
        expected_traces(&self.stats, self.alpha).1.sqrt()
    }
}

fn actual_value(
    target: Target,
    spec: &Spectrum,
    stats: &GraphStats,
    derived: (f64, f64, f64),
) -> f64 {
    let (rho, spread, trace_norm) = derived;
    match target {
        Target::Mu1 => spec.eigenvalues[0],
        Target::MuMin => spec.eigenvalues[spec.len() - 1],
        Target::MuJ(j) => spec.eigenvalues[j - 1],
        Target::Rho => rho,
        Target::Spread => spread,
        Target::TraceNorm => trace_norm,
        Target::Zagreb => stats.zagreb as f64,
    }
}

/// Checks `tr` and `tr²` of a built matrix against the closed forms.
pub fn check_trace_identities(
    m: &HermitianMatrix,
    stats: &GraphStats,
    alpha: Alpha,
) -> Result<(), VerifyError> {
    let (tr, tr2) = expected_traces(stats, alpha);
    let got = m.trace();
    if (got - tr).abs() > TRACE_TOL {
        return Err(VerifyError::TraceIdentity {
            which: "tr(A)",
            expected: tr,
            actual: got,
        });
    }
    let got = m.trace_of_square();
    if (got - tr2).abs() > TRACE_TOL {
        return Err(VerifyError::TraceIdentity {
            which: "tr(A^2)",
            expected: tr2,
            actual: got,
        });
    }
    Ok(())
}

/// True iff every sampled unit vector lands in `[μ_n - tol, μ_1 + tol]`.
pub fn rayleigh_range_check(
    m: &HermitianMatrix,
    spec: &Spectrum,
    samples: usize,
    seed: u64,
) -> bool {
    let (Ok(hi), Ok(lo)) = (spec.max(), spec.min()) else {
        return false;
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..samples).all(|_| {
        let z = ComplexVector::random_unit(m.n(), &mut rng);
        match quadratic_form(m, &z) {
            Ok(q) => q >= lo - RANGE_TOL && q <= hi + RANGE_TOL,
            Err(_) => false,
        }
    })
}

/// Primary spectrum after cross-checking it against the oracle.
pub fn checked_spectrum(m: &HermitianMatrix) -> Result<(Spectrum, f64), VerifyError> {
    let primary = eig::eigenvalues(m, eig::DEFAULT_TOL)?;
    let oracle = eig::oracle_eigenvalues(m)?;
    let discrepancy = primary.max_abs_diff(&oracle);
    let tolerance = ORACLE_TOL * m.frobenius_norm();
    if discrepancy > tolerance {
        return Err(VerifyError::OracleMismatch {
            discrepancy,
            tolerance,
        });
    }
    Ok((primary, discrepancy))
}

pub fn verify_all(g: &MixedGraph, alpha: Alpha, beta: Beta) -> Result<BoundReport, VerifyError> {
    verify_with(g, alpha, beta, DEFAULT_RAYLEIGH_SAMPLES, 0)
}

pub fn verify_with(
    g: &MixedGraph,
    alpha: Alpha,
    beta: Beta,
    rayleigh_samples: usize,
    rayleigh_seed: u64,
) -> Result<BoundReport, VerifyError> {
    let stats = g.stats();
    let m = a_alpha_matrix(g, alpha, beta);
    check_trace_identities(&m, &stats, alpha)?;
    let (spectrum, oracle_discrepancy) = checked_spectrum(&m)?;
    let rayleigh_ok = rayleigh_range_check(&m, &spectrum, rayleigh_samples, rayleigh_seed);

    let rho = spectral_radius(&spectrum)?;
    let spd = spread(&spectrum)?;
    let energy = trace_norm(&spectrum)?;
    let catalog = evaluate_catalog(&stats, alpha, beta, m.max_offdiag_modulus(), &spectrum)?;
    let outcomes = catalog
        .into_iter()
        .map(|bound| {
            let actual = actual_value(bound.target, &spectrum, &stats, (rho, spd, energy));
            let slack = if bound.applicable {
                bound.slack(actual)
            } else {
                None
            };
            let status = Status::of(&bound, slack);
            BoundOutcome {
                bound,
                actual,
                slack,
                status,
            }
        })
        .collect();
    let mu1 = spectrum.eigenvalues[0];

    Ok(BoundReport {
        graph: g.clone(),
        stats,
        alpha,
        beta,
        oracle_discrepancy,
        rho,
        spread: spd,
        trace_norm: energy,
        rho_ratio: if rho == 0.0 { 1.0 } else { mu1 / rho },
        rayleigh_ok,
        outcomes,
        spectrum,
    })
}

/// Grid and random-instance parameters.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepConfig {
    pub alpha_grid: Vec<f64>,
    /// Angles `θ` with `β = e^{iθ}`, each in `[-π/2, π/2]`.
    pub beta_args: Vec<f64>,
    pub seed: u64,
    pub trials: usize,
    /// Inclusive vertex-count range.
    pub n_range: (usize, usize),
    pub edge_prob_range: (f64, f64),
    pub rayleigh_samples: usize,
}

impl Default for SweepConfig {
    fn default() -> Self {
        Self {
            alpha_grid: (0..=20).map(|k| k as f64 / 20.0).collect(),
            beta_args: vec![
                -FRAC_PI_2, -FRAC_PI_3, -FRAC_PI_4, -FRAC_PI_6, 0.0, FRAC_PI_6, FRAC_PI_4,
                FRAC_PI_3, FRAC_PI_2,
            ],
            seed: 7,
            trials: 1000,
            n_range: (1, 12),
            edge_prob_range: (0.0, 1.0),
            rayleigh_samples: DEFAULT_RAYLEIGH_SAMPLES,
        }
    }
}

impl SweepConfig {
    pub fn validate(&self) -> Result<(), VerifyError> {
        let bad = |m: &str| Err(VerifyError::Config(m.to_owned()));
        if self.alpha_grid.is_empty() || self.beta_args.is_empty() {
            return bad("alpha and beta grids must be non-empty");
        }
        if self.alpha_grid.iter().any(|a| !(0.0..=1.0).contains(a)) {
            return bad("alpha values must lie in [0, 1]");
        }
        if self
            .beta_args
            .iter()
            .any(|t| !(-FRAC_PI_2..=FRAC_PI_2).contains(t))
        {
            return bad("beta angles must lie in [-pi/2, pi/2]");
        }
        let (lo, hi) = self.n_range;
        if lo == 0 || lo > hi {
            return bad("vertex range must satisfy 1 <= min <= max");
        }
        let (p, q) = self.edge_prob_range;
        if !(0.0..=1.0).contains(&p) || !(0.0..=1.0).contains(&q) || p > q {
            return bad("edge probability range must lie in [0, 1]");
        }
        Ok(())
    }

    fn betas(&self) -> Result<Vec<Beta>, VerifyError> {
        Ok(self
            .beta_args
            .iter()
            .map(|&t| Beta::from_angle(t))
            .collect::<Result<_, _>>()?)
    }
}

/// One report per `(α, θ)` grid point, α-major.
pub fn sweep_alpha(g: &MixedGraph, cfg: &SweepConfig) -> Result<Vec<BoundReport>, VerifyError> {
    if cfg.alpha_grid.is_empty() || cfg.beta_args.is_empty() {
        return Err(VerifyError::Config("grids must be non-empty".into()));
    }
    let betas = cfg.betas()?;
    let mut out = Vec::with_capacity(cfg.alpha_grid.len() * betas.len());
    for &a in &cfg.alpha_grid {
        let alpha = Alpha::new(a)?;
        for &beta in &betas {
            out.push(verify_with(g, alpha, beta, cfg.rayleigh_samples, cfg.seed)?);
        }
    }
    Ok(out)
}

/// A random instance drawn for one trial of [`randomized_suite`].
#[derive(Debug, Clone, PartialEq)]
pub struct TrialInstance {
    pub graph: MixedGraph,
    pub alpha: Alpha,
    pub beta_arg: f64,
    pub beta: Beta,
    pub rayleigh_seed: u64,
}

/// Rebuilds trial `trial` exactly: ChaCha8 seeded with `cfg.seed`, stream `trial`.
pub fn trial_instance(cfg: &SweepConfig, trial: u64) -> Result<TrialInstance, VerifyError> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    rng.set_stream(trial);
    let n = rng.random_range(cfg.n_range.0..=cfg.n_range.1);
    let (p_lo, p_hi) = cfg.edge_prob_range;
    let edge_prob = p_lo + (p_hi - p_lo) * rng.random::<f64>();
    let orient_prob = rng.random::<f64>();
    let alpha = Alpha::new(cfg.alpha_grid[rng.random_range(0..cfg.alpha_grid.len())])?;
    let beta_arg = cfg.beta_args[rng.random_range(0..cfg.beta_args.len())];
    let beta = Beta::from_angle(beta_arg)?;
    let rayleigh_seed = rng.random();
    let graph = random_mixed_graph_with(n, edge_prob, orient_prob, &mut rng)?;
    Ok(TrialInstance {
        graph,
        alpha,
        beta_arg,
        beta,
        rayleigh_seed,
    })
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct StatusCounts {
    pub holds: usize,
    pub violated: usize,
    pub not_applicable: usize,
    pub expected_fail: usize,
}

impl StatusCounts {
    fn add(&mut self, s: Status) {
        match s {
            Status::Holds => self.holds += 1,
            Status::Violated => self.violated += 1,
            Status::NotApplicable => self.not_applicable += 1,
            Status::ExpectedFail => self.expected_fail += 1,
        }
    }
}

/// Everything needed to replay a failing bound in isolation.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ViolationRecord {
    pub seed: u64,
    pub trial: u64,
    pub bound: String,
    pub bound_value: f64,
    pub actual: f64,
    pub slack: f64,
    pub alpha: f64,
    pub beta_arg: f64,
    pub graph: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TrialFailure {
    pub seed: u64,
    pub trial: u64,
    pub message: String,
    pub graph: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SuiteSummary {
    pub seed: u64,
    pub trials: usize,
    pub status_counts: StatusCounts,
    /// Minimum slack per bound name over all applicable entries.
    pub worst_slack: BTreeMap<String, f64>,
    pub violations: Vec<ViolationRecord>,
    pub expected_failures: Vec<ViolationRecord>,
    /// Hard errors: oracle disagreement, trace identity or numerical range.
    pub failures: Vec<TrialFailure>,
    pub min_rho_ratio_omega: Option<f64>,
    pub min_rho_ratio_general: Option<f64>,
    /// Largest primary vs oracle gap relative to `‖M‖_F`.
    pub max_oracle_discrepancy: f64,
}

impl SuiteSummary {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty() && self.failures.is_empty()
    }
}

enum TrialOutcome {
    Report(Box<BoundReport>, TrialInstance),
    Failed(TrialFailure),
}

fn run_trial(cfg: &SweepConfig, trial: u64) -> TrialOutcome {
    let fail = |message: String, graph: Option<String>| {
        TrialOutcome::Failed(TrialFailure {
            seed: cfg.seed,
            trial,
            message,
            graph,
        })
    };
    let inst = match trial_instance(cfg, trial) {
        Ok(i) => i,
        Err(e) => return fail(e.to_string(), None),
    };
    match verify_with(
        &inst.graph,
        inst.alpha,
        inst.beta,
        cfg.rayleigh_samples,
        inst.rayleigh_seed,
    ) {
        Ok(r) if !r.rayleigh_ok => fail(
            "sampled quadratic form left [mu_n, mu_1]".into(),
            Some(inst.graph.to_text()),
        ),
        Ok(r) => TrialOutcome::Report(Box::new(r), inst),
        Err(e) => fail(e.to_string(), Some(inst.graph.to_text())),
    }
}

fn min_opt(acc: Option<f64>, x: f64) -> Option<f64> {
    Some(acc.map_or(x, |a| a.min(x)))
}

/// Runs `cfg.trials` independent random instances. Trials execute in
/// parallel; reduction happens in trial order so the summary is
/// deterministic.
pub fn randomized_suite(cfg: &SweepConfig) -> Result<SuiteSummary, VerifyError> {
    cfg.validate()?;
    if cfg.trials == 0 {
        return Err(VerifyError::Config("trials must be at least 1".into()));
    }
    let outcomes: Vec<TrialOutcome> = (0..cfg.trials as u64)
        .into_par_iter()
        .map(|t| run_trial(cfg, t))
        .collect();

    let mut summary = SuiteSummary {
        seed: cfg.seed,
        trials: cfg.trials,
        status_counts: StatusCounts::default(),
        worst_slack: BTreeMap::new(),
        violations: Vec::new(),
        expected_failures: Vec::new(),
        failures: Vec::new(),
        min_rho_ratio_omega: None,
        min_rho_ratio_general: None,
        max_oracle_discrepancy: 0.0,
    };
    for (trial, outcome) in outcomes.into_iter().enumerate() {
        let (report, inst) = match outcome {
            TrialOutcome::Report(r, i) => (r, i),
            TrialOutcome::Failed(f) => {
                summary.failures.push(f);
                continue;
            }
        };
        if inst.beta.is_omega() {
            summary.min_rho_ratio_omega = min_opt(summary.min_rho_ratio_omega, report.rho_ratio);
        } else {
            summary.min_rho_ratio_general =
                min_opt(summary.min_rho_ratio_general, report.rho_ratio);
        }
        let frob = report.frobenius_norm();
        if frob > 0.0 {
            summary.max_oracle_discrepancy = summary
                .max_oracle_discrepancy
                .max(report.oracle_discrepancy / frob);
        }
        for o in &report.outcomes {
            summary.status_counts.add(o.status);
            let Some(slack) = o.slack else { continue };
            summary
                .worst_slack
                .entry(o.bound.name.clone())
                .and_modify(|w| *w = w.min(slack))
                .or_insert(slack);
            if matches!(o.status, Status::Violated | Status::ExpectedFail) {
                let record = ViolationRecord {
                    seed: cfg.seed,
                    trial: trial as u64,
                    bound: o.bound.label(),
                    bound_value: o.bound.value.unwrap_or(f64::NAN),
                    actual: o.actual,
                    slack,
                    alpha: inst.alpha.value(),
                    beta_arg: inst.beta_arg,
                    graph: inst.graph.to_text(),
                };
                if o.status == Status::Violated {
                    summary.violations.push(record);
                } else {
                    summary.expected_failures.push(record);
                }
            }
        }
    }
    Ok(summary)
}
