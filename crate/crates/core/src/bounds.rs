//! Closed-form eigenvalue, spread, spectral-radius and trace-norm bounds for
//! `A_α` matrices, each a pure function of graph statistics (plus the
//! spectrum where a bound is relative to `ρ`).
//!
//! A bound whose hypothesis fails is returned with `applicable = false`
//! rather than as an error, so a full catalog is always produced.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::eig::{spectral_radius, Spectrum};
use crate::graph::{zagreb_lower_bound, GraphStats};
use crate::matrix::{expected_traces, Alpha, Beta};

/// Relative size below which a negative variance radicand is rounding noise.
pub const RADICAND_CLAMP: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum BoundsError {
    #[error("requires n >= {required}, got {n}")]
    TooFewVertices { required: usize, n: usize },
    #[error("eigenvalue index {j} outside 1..={n}")]
    IndexOutOfRange { j: usize, n: usize },
    #[error("negative radicand {0:e}")]
    NegativeRadicand(f64),
    #[error("empty spectrum")]
    EmptySpectrum,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BoundKind {
    /// `bound <= actual`
    Lower,
    /// `actual <= bound`
    Upper,
}

/// The quantity a bound constrains.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Target {
    Mu1,
    MuMin,
    /// `μ_j`, 1-based.
    MuJ(usize),
    Rho,
    Spread,
    TraceNorm,
    /// First Zagreb index of the underlying graph.
    Zagreb,
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Target::Mu1 => f.write_str("mu1"),
            Target::MuMin => f.write_str("mu_min"),
            Target::MuJ(j) => write!(f, "mu_{j}"),
            Target::Rho => f.write_str("rho"),
            Target::Spread => f.write_str("spread"),
            Target::TraceNorm => f.write_str("trace_norm"),
            Target::Zagreb => f.write_str("zagreb"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundResult {
    pub name: String,
    pub kind: BoundKind,
    pub target: Target,
    /// `None` exactly when `applicable` is false.
    pub value: Option<f64>,
    pub applicable: bool,
    /// False for forms that are reported but known to be falsifiable.
    pub claimed: bool,
    pub note: String,
}

impl BoundResult {
    fn new(name: &str, kind: BoundKind, target: Target, value: f64) -> Self {
        Self {
            name: name.to_owned(),
            kind,
            target,
            value: Some(value),
            applicable: true,
            claimed: true,
            note: String::new(),
        }
    }

    fn not_applicable(
        name: &str,
        kind: BoundKind,
        target: Target,
        note: impl Into<String>,
    ) -> Self {
        Self {
            name: name.to_owned(),
            kind,
            target,
            value: None,
            applicable: false,
            claimed: true,
            note: note.into(),
        }
    }

    fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = note.into();
        self
    }

    /// Signed margin in the bound's favourable direction.
    pub fn slack(&self, actual: f64) -> Option<f64> {
        self.value.map(|b| match self.kind {
            BoundKind::Lower => actual - b,
            BoundKind::Upper => b - actual,
        })
    }

    /// Display label, including `j` for per-index bounds.
    pub fn label(&self) -> String {
        match self.target {
            Target::MuJ(j) => format!("{}@{j}", self.name),
            _ => self.name.clone(),
        }
    }
}

fn need(n: usize, required: usize) -> Result<(), String> {
    if n < required {
        Err(format!("requires n >= {required}"))
    } else {
        Ok(())
    }
}

fn clamp_radicand(x: f64, scale: f64) -> Result<f64, BoundsError> {
    if x >= 0.0 {
        Ok(x)
    } else if -x <= RADICAND_CLAMP * scale.abs().max(1.0) {
        Ok(0.0)
    } else {
        Err(BoundsError::NegativeRadicand(x))
    }
}

/// `r = tr(A)/n` and `s = √(tr(A²)/n - r²)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WolkowiczMoments {
    pub r: f64,
    pub s: f64,
}

impl WolkowiczMoments {
    pub fn from_traces(trace: f64, trace_sq: f64, n: usize) -> Result<Self, BoundsError> {
        if n == 0 {
            return Err(BoundsError::TooFewVertices { required: 1, n });
        }
        let nf = n as f64;
        let r = trace / nf;
        let second = trace_sq / nf;
        let variance = clamp_radicand(second - r * r, second.max(r * r))?;
        Ok(Self {
            r,
            s: variance.sqrt(),
        })
    }

    /// Moments of `A_α` from the closed-form traces.
    pub fn from_stats(stats: &GraphStats, alpha: Alpha) -> Result<Self, BoundsError> {
        let (tr, tr2) = expected_traces(stats, alpha);
        Self::from_traces(tr, tr2, stats.n)
    }
}

/// Constant-vector Rayleigh quotient: `μ_1 ≥ (2αm + (1-α)(a + 2u))/n`.
/// Holds for `β = ω` only.
pub fn rayleigh_mu1_lower(stats: &GraphStats, alpha: Alpha) -> BoundResult {
    let a = alpha.value();
    let value = (2.0 * a * stats.m as f64
        + (1.0 - a) * (stats.arcs as f64 + 2.0 * stats.undirected as f64))
        / stats.n as f64;
    BoundResult::new("rayleigh_mu1_lower", BoundKind::Lower, Target::Mu1, value)
}

/// `μ_min ≤ tr/n - 2|a_rs|/n` and `μ_max ≥ tr/n + 2|a_rs|/n` for the
/// largest off-diagonal modulus `|a_rs|`. Returns `(μ_max lower, μ_min upper)`.
pub fn garga_extreme_bounds(
    trace: f64,
    n: usize,
    offdiag_modulus: f64,
) -> Result<(BoundResult, BoundResult), BoundsError> {
    if n < 2 {
        return Err(BoundsError::TooFewVertices { required: 2, n });
    }
    let nf = n as f64;
    let shift = 2.0 * offdiag_modulus / nf;
    Ok((
        BoundResult::new(
            "offdiag_mu_max_lower",
            BoundKind::Lower,
            Target::Mu1,
            trace / nf + shift,
        ),
        BoundResult::new(
            "offdiag_mu_min_upper",
            BoundKind::Upper,
            Target::MuMin,
            trace / nf - shift,
        ),
    ))
}

/// The off-diagonal bound with `|a_rs| = 1`: `2(αm ± 1)/n`.
///
/// The entries of `A_α` off the diagonal have modulus `1-α`, so this form is
/// only claimed at `α = 0`; for `α > 0` it is reported unclaimed (the single
/// arc at `α = 0.5` already violates it).
pub fn literal_offdiag_bounds(stats: &GraphStats, alpha: Alpha) -> (BoundResult, BoundResult) {
    const MAX: &str = "offdiag_literal_mu_max_lower";
    const MIN: &str = "offdiag_literal_mu_min_upper";
    let applicability = need(stats.n, 2).and_then(|()| {
        if stats.m == 0 {
            Err("no non-zero off-diagonal entry".to_owned())
        } else {
            Ok(())
        }
    });
    if let Err(note) = applicability {
        return (
            BoundResult::not_applicable(MAX, BoundKind::Lower, Target::Mu1, note.clone()),
            BoundResult::not_applicable(MIN, BoundKind::Upper, Target::MuMin, note),
        );
    }
    let a = alpha.value();
    let (n, m) = (stats.n as f64, stats.m as f64);
    let mut hi = BoundResult::new(MAX, BoundKind::Lower, Target::Mu1, 2.0 * (a * m + 1.0) / n);
    let mut lo = BoundResult::new(
        MIN,
        BoundKind::Upper,
        Target::MuMin,
        2.0 * (a * m - 1.0) / n,
    );
    if a > 0.0 {
        for b in [&mut hi, &mut lo] {
            b.claimed = false;
            b.note = "assumes unit off-diagonal modulus; only valid at alpha = 0".into();
        }
    }
    (hi, lo)
}

/// Trace-moment bounds `r ± s√(n-1)` and `r ± s/√(n-1)`, in the order
/// `[μ_max upper, μ_max lower, μ_min upper, μ_min lower]`.
pub fn wolkowicz_extreme_bounds(mom: WolkowiczMoments, n: usize) -> [BoundResult; 4] {
    let specs = [
        ("variance_mu_max_upper", BoundKind::Upper, Target::Mu1),
        ("variance_mu_max_lower", BoundKind::Lower, Target::Mu1),
        ("variance_mu_min_upper", BoundKind::Upper, Target::MuMin),
        ("variance_mu_min_lower", BoundKind::Lower, Target::MuMin),
    ];
    if let Err(note) = need(n, 2) {
        return specs.map(|(name, kind, target)| {
            BoundResult::not_applicable(name, kind, target, note.clone())
        });
    }
    let root = ((n - 1) as f64).sqrt();
    let WolkowiczMoments { r, s } = mom;
    let values = [r + s * root, r + s / root, r - s / root, r - s * root];
    let mut i = 0;
    specs.map(|(name, kind, target)| {
        let b = BoundResult::new(name, kind, target, values[i]);
        i += 1;
        b
    })
}

/// Degree-refined extreme bounds for `n ≥ 3`, replacing `M1` by its Zagreb
/// lower bound. Returns `(μ_max lower, μ_min upper)`.
pub fn zagreb_refined_extreme_bounds(
    stats: &GraphStats,
    alpha: Alpha,
) -> Result<(BoundResult, BoundResult), BoundsError> {
    const MAX: &str = "zagreb_refined_mu_max_lower";
    const MIN: &str = "zagreb_refined_mu_min_upper";
    if let Err(note) = need(stats.n, 3) {
        return Ok((
            BoundResult::not_applicable(MAX, BoundKind::Lower, Target::Mu1, note.clone()),
            BoundResult::not_applicable(MIN, BoundKind::Upper, Target::MuMin, note),
        ));
    }
    let n = stats.n as f64;
    let centre = 2.0 * alpha.value() * stats.m as f64 / n;
    let t = refined_variance_numerator(stats, alpha);
    let dev = (t / (n * n * (n - 1.0))).sqrt();
    Ok((
        BoundResult::new(MAX, BoundKind::Lower, Target::Mu1, centre + dev),
        BoundResult::new(MIN, BoundKind::Upper, Target::MuMin, centre - dev),
    ))
}

/// `T = (nα²/2)(Δ-δ)² + (2n²α²/(n-2))(2m/n - (Δ+δ)/2)² + (1-α)²·2mn`,
/// a lower estimate of `n²s²`. Needs `n ≥ 3`.
fn refined_variance_numerator(stats: &GraphStats, alpha: Alpha) -> f64 {
    let a = alpha.value();
    let n = stats.n as f64;
    let m = stats.m as f64;
    let (big, small) = (stats.max_degree as f64, stats.min_degree as f64);
    let centre = 2.0 * m / n - (big + small) / 2.0;
    n * a * a / 2.0 * (big - small).powi(2)
        + 2.0 * n * n * a * a / (n - 2.0) * centre * centre
        + (1.0 - a).powi(2) * 2.0 * m * n
}

/// `r - s√((j-1)/(n-j+1)) ≤ μ_j ≤ r + s√((n-j)/j)`; returns `(lower, upper)`.
pub fn jth_eigenvalue_bounds(
    mom: WolkowiczMoments,
    n: usize,
    j: usize,
) -> Result<(BoundResult, BoundResult), BoundsError> {
    if j == 0 || j > n {
        return Err(BoundsError::IndexOutOfRange { j, n });
    }
    let (nf, jf) = (n as f64, j as f64);
    let WolkowiczMoments { r, s } = mom;
    let lower = r - s * ((jf - 1.0) / (nf - jf + 1.0)).sqrt();
    let upper = r + s * ((nf - jf) / jf).sqrt();
    Ok((
        BoundResult::new("jth_lower", BoundKind::Lower, Target::MuJ(j), lower),
        BoundResult::new("jth_upper", BoundKind::Upper, Target::MuJ(j), upper),
    ))
}

/// `n·α²·M1 + (1-α)²·2mn - 4α²m²`, which equals `n²s²`.
fn variance_numerator(stats: &GraphStats, alpha: Alpha) -> Result<f64, BoundsError> {
    let a = alpha.value();
    let n = stats.n as f64;
    let m = stats.m as f64;
    let positive = n * a * a * stats.zagreb as f64 + (1.0 - a).powi(2) * 2.0 * m * n;
    clamp_radicand(positive - 4.0 * a * a * m * m, positive)
}

/// `‖A_α‖_* ≤ 4αm + 2√((n-1)(nα²M1 + (1-α)²·2mn - 4α²m²))`.
pub fn trace_norm_upper(stats: &GraphStats, alpha: Alpha) -> Result<BoundResult, BoundsError> {
    const NAME: &str = "trace_norm_upper";
    if let Err(note) = need(stats.n, 2) {
        return Ok(BoundResult::not_applicable(
            NAME,
            BoundKind::Upper,
            Target::TraceNorm,
            note,
        ));
    }
    let rad = (stats.n as f64 - 1.0) * variance_numerator(stats, alpha)?;
    let value = 4.0 * alpha.value() * stats.m as f64 + 2.0 * rad.sqrt();
    Ok(BoundResult::new(
        NAME,
        BoundKind::Upper,
        Target::TraceNorm,
        value,
    ))
}

/// Spread bounds: the variance upper bound, the parity-dependent variance
/// lower bound, and the same lower bound with `M1` replaced by its Zagreb
/// estimate.
#[derive(Debug, Clone, PartialEq)]
pub struct SpreadBounds {
    pub upper: BoundResult,
    pub lower: BoundResult,
    pub lower_zagreb: BoundResult,
}

pub fn spread_bounds(stats: &GraphStats, alpha: Alpha) -> Result<SpreadBounds, BoundsError> {
    const UPPER: &str = "spread_upper";
    const LOWER: &str = "spread_lower";
    const LOWER_Z: &str = "spread_lower_zagreb";
    let n = stats.n;
    let nf = n as f64;
    let even = n.is_multiple_of(2);
    if let Err(note) = need(n, 2) {
        return Ok(SpreadBounds {
            upper: BoundResult::not_applicable(UPPER, BoundKind::Upper, Target::Spread, &note),
            lower: BoundResult::not_applicable(LOWER, BoundKind::Lower, Target::Spread, &note),
            lower_zagreb: BoundResult::not_applicable(
                LOWER_Z,
                BoundKind::Lower,
                Target::Spread,
                note,
            ),
        });
    }
    let a = alpha.value();
    let m = stats.m as f64;
    let positive = 2.0 * nf * a * a * stats.zagreb as f64 + (1.0 - a).powi(2) * 4.0 * m * nf;
    let upper_rad = clamp_radicand(positive - 8.0 * a * a * m * m, positive)?;
    let upper = BoundResult::new(
        UPPER,
        BoundKind::Upper,
        Target::Spread,
        (upper_rad / nf).sqrt(),
    );

    let var = variance_numerator(stats, alpha)?;
    let lower = if even {
        BoundResult::new(
            LOWER,
            BoundKind::Lower,
            Target::Spread,
            2.0 / nf * var.sqrt(),
        )
        .with_note("even order")
    } else {
        BoundResult::new(
            LOWER,
            BoundKind::Lower,
            Target::Spread,
            2.0 * (var / (nf * nf - 1.0)).sqrt(),
        )
        .with_note("odd order")
    };

    let lower_zagreb = if n < 3 {
        BoundResult::not_applicable(LOWER_Z, BoundKind::Lower, Target::Spread, "requires n >= 3")
    } else {
        let t = refined_variance_numerator(stats, alpha);
        let value = if even {
            2.0 / nf * t.sqrt()
        } else {
            2.0 * (t / (nf * nf - 1.0)).sqrt()
        };
        BoundResult::new(LOWER_Z, BoundKind::Lower, Target::Spread, value).with_note(if even {
            "even order"
        } else {
            "odd order"
        })
    };
    Ok(SpreadBounds {
        upper,
        lower,
        lower_zagreb,
    })
}

/// `c·ρ ≤ μ_1 ≤ ρ` with `c = 1/2` for `β = ω` and `c = 1/3` otherwise.
#[derive(Debug, Clone, PartialEq)]
pub struct RhoSandwich {
    pub lower: BoundResult,
    pub upper: BoundResult,
    /// `μ_1/ρ`, defined as 1 when `ρ = 0`.
    pub ratio: f64,
}

pub fn rho_sandwich(spec: &Spectrum, beta: Beta) -> Result<RhoSandwich, BoundsError> {
    let rho = spectral_radius(spec).map_err(|_| BoundsError::EmptySpectrum)?;
    let mu1 = spec.max().map_err(|_| BoundsError::EmptySpectrum)?;
    let (c, note) = if beta.is_omega() {
        (0.5, "constant 1/2 (beta = omega)")
    } else {
        (1.0 / 3.0, "constant 1/3 (general beta)")
    };
    Ok(RhoSandwich {
        lower: BoundResult::new("rho_lower", BoundKind::Lower, Target::Mu1, c * rho)
            .with_note(note),
        upper: BoundResult::new("rho_upper", BoundKind::Upper, Target::Mu1, rho),
        ratio: if rho == 0.0 { 1.0 } else { mu1 / rho },
    })
}

/// The Zagreb lower estimate as a bound on `M1` itself.
pub fn zagreb_index_bound(stats: &GraphStats) -> BoundResult {
    const NAME: &str = "zagreb_index_lower";
    match zagreb_lower_bound(stats) {
        Ok(v) => BoundResult::new(NAME, BoundKind::Lower, Target::Zagreb, v),
        Err(_) => {
            BoundResult::not_applicable(NAME, BoundKind::Lower, Target::Zagreb, "requires n >= 3")
        }
    }
}

/// Every catalog bound for one `(graph, α, β)` point, in a fixed order that
/// depends only on `n`.
pub fn evaluate_catalog(
    stats: &GraphStats,
    alpha: Alpha,
    beta: Beta,
    offdiag_modulus: f64,
    spectrum: &Spectrum,
) -> Result<Vec<BoundResult>, BoundsError> {
    let n = stats.n;
    let mut out = Vec::with_capacity(20 + 2 * n);

    out.push(if beta.is_omega() {
        rayleigh_mu1_lower(stats, alpha)
    } else {
        BoundResult::not_applicable(
            "rayleigh_mu1_lower",
            BoundKind::Lower,
            Target::Mu1,
            "stated for beta = omega only",
        )
    });

    let (trace, _) = expected_traces(stats, alpha);
    match garga_extreme_bounds(trace, n, offdiag_modulus) {
        Ok((hi, lo)) => out.extend([hi, lo]),
        Err(_) => out.extend([
            BoundResult::not_applicable(
                "offdiag_mu_max_lower",
                BoundKind::Lower,
                Target::Mu1,
                "requires n >= 2",
            ),
            BoundResult::not_applicable(
                "offdiag_mu_min_upper",
                BoundKind::Upper,
                Target::MuMin,
                "requires n >= 2",
            ),
        ]),
    }
    let (hi, lo) = literal_offdiag_bounds(stats, alpha);
    out.extend([hi, lo]);

    let mom = WolkowiczMoments::from_stats(stats, alpha)?;
    out.extend(wolkowicz_extreme_bounds(mom, n));

    let (hi, lo) = zagreb_refined_extreme_bounds(stats, alpha)?;
    out.extend([hi, lo]);

    for j in 1..=n {
        let (lo, hi) = jth_eigenvalue_bounds(mom, n, j)?;
        out.extend([lo, hi]);
    }

    out.push(trace_norm_upper(stats, alpha)?);

    let sb = spread_bounds(stats, alpha)?;
    out.extend([sb.upper, sb.lower, sb.lower_zagreb]);

    let rs = rho_sandwich(spectrum, beta)?;
    out.extend([rs.lower, rs.upper]);

    out.push(zagreb_index_bound(stats));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::parse_graph;

    fn alpha(a: f64) -> Alpha {
        Alpha::new(a).unwrap()
    }

    fn p2() -> GraphStats {
        parse_graph("2\n1 -> 2").unwrap().stats()
    }

    fn c3() -> GraphStats {
        parse_graph("3\n1 -> 2\n2 -> 3\n3 -> 1").unwrap().stats()
    }

    fn approx(a: Option<f64>, b: f64) {
        let a = a.expect("bound should be applicable");
        assert!((a - b).abs() < 1e-12, "{a} vs {b}");
    }

    #[test]
    fn rayleigh_examples() {
        approx(rayleigh_mu1_lower(&p2(), alpha(0.0)).value, 0.5);
        approx(rayleigh_mu1_lower(&c3(), alpha(0.0)).value, 1.0);
        approx(rayleigh_mu1_lower(&c3(), alpha(1.0)).value, 2.0);
    }

    #[test]
    fn offdiag_corrected_and_literal() {
        // P2 at α = 0.5: trace 1, off-diagonal modulus 0.5.
        let (hi, lo) = garga_extreme_bounds(1.0, 2, 0.5).unwrap();
        approx(hi.value, 1.0);
        approx(lo.value, 0.0);
        let (hi, _) = literal_offdiag_bounds(&p2(), alpha(0.5));
        approx(hi.value, 1.5);
        assert!(!hi.claimed);
        let (hi, lo) = literal_offdiag_bounds(&p2(), alpha(0.0));
        approx(hi.value, 1.0);
        approx(lo.value, -1.0);
        assert!(hi.claimed && lo.claimed);
        assert_eq!(
            garga_extreme_bounds(0.0, 1, 0.0),
            Err(BoundsError::TooFewVertices { required: 2, n: 1 })
        );
        let empty = crate::graph::MixedGraph::empty(3).unwrap().stats();
        assert!(!literal_offdiag_bounds(&empty, alpha(0.0)).0.applicable);
    }

    #[test]
    fn wolkowicz_examples() {
        let mom = WolkowiczMoments::from_stats(&p2(), alpha(0.0)).unwrap();
        assert_eq!((mom.r, mom.s), (0.0, 1.0));
        let b = wolkowicz_extreme_bounds(mom, 2);
        approx(b[0].value, 1.0);
        approx(b[1].value, 1.0);
        approx(b[2].value, -1.0);
        approx(b[3].value, -1.0);

        let mom = WolkowiczMoments::from_stats(&c3(), alpha(0.0)).unwrap();
        assert!((mom.s - 2f64.sqrt()).abs() < 1e-15);
        let b = wolkowicz_extreme_bounds(mom, 3);
        approx(b[0].value, 2.0);
        approx(b[1].value, 1.0);
        approx(b[3].value, -2.0);

        let scalar = WolkowiczMoments { r: 0.7, s: 0.0 };
        for bound in wolkowicz_extreme_bounds(scalar, 5) {
            approx(bound.value, 0.7);
        }
        assert!(wolkowicz_extreme_bounds(scalar, 1)
            .iter()
            .all(|b| !b.applicable));
    }

    #[test]
    fn moments_clamp_and_reject() {
        let m = WolkowiczMoments::from_traces(3.0, 3.0 - 1e-15, 3).unwrap();
        assert_eq!(m.s, 0.0);
        assert!(matches!(
            WolkowiczMoments::from_traces(3.0, 1.0, 3),
            Err(BoundsError::NegativeRadicand(_))
        ));
    }

    #[test]
    fn zagreb_refined_examples() {
        let (hi, lo) = zagreb_refined_extreme_bounds(&c3(), alpha(0.5)).unwrap();
        approx(hi.value, 1.5);
        approx(lo.value, 0.5);
        let (hi, _) = zagreb_refined_extreme_bounds(&c3(), alpha(1.0)).unwrap();
        approx(hi.value, 2.0);
        let (hi, lo) = zagreb_refined_extreme_bounds(&p2(), alpha(0.5)).unwrap();
        assert!(!hi.applicable && !lo.applicable);
        assert!(hi.value.is_none());
    }

    #[test]
    fn jth_examples() {
        let mom = WolkowiczMoments::from_stats(&c3(), alpha(0.0)).unwrap();
        let (lo, _) = jth_eigenvalue_bounds(mom, 3, 3).unwrap();
        approx(lo.value, -2.0);
        let (_, hi) = jth_eigenvalue_bounds(mom, 3, 1).unwrap();
        approx(hi.value, 2.0);
        assert_eq!(
            jth_eigenvalue_bounds(mom, 3, 0),
            Err(BoundsError::IndexOutOfRange { j: 0, n: 3 })
        );
        assert!(jth_eigenvalue_bounds(mom, 3, 4).is_err());
    }

    #[test]
    fn trace_norm_examples() {
        approx(trace_norm_upper(&c3(), alpha(0.0)).unwrap().value, 12.0);
        approx(trace_norm_upper(&p2(), alpha(0.0)).unwrap().value, 4.0);
        let empty = crate::graph::MixedGraph::empty(4).unwrap().stats();
        approx(trace_norm_upper(&empty, alpha(0.3)).unwrap().value, 0.0);
    }

    #[test]
    fn spread_examples() {
        let sb = spread_bounds(&p2(), alpha(0.0)).unwrap();
        approx(sb.upper.value, 2.0);
        approx(sb.lower.value, 2.0);
        assert!(!sb.lower_zagreb.applicable);

        let sb = spread_bounds(&c3(), alpha(0.0)).unwrap();
        approx(sb.lower.value, 3.0);
        assert_eq!(sb.lower.note, "odd order");

        let sb = spread_bounds(&c3(), alpha(1.0)).unwrap();
        approx(sb.upper.value, 0.0);
        approx(sb.lower_zagreb.value, 0.0);
    }

    #[test]
    fn rho_examples() {
        let s = Spectrum::from_values(vec![1.0, 1.0, -2.0], 0.0);
        let rs = rho_sandwich(&s, Beta::omega()).unwrap();
        assert_eq!(rs.ratio, 0.5);
        approx(rs.lower.value, 1.0);
        let rs = rho_sandwich(&s, Beta::one()).unwrap();
        approx(rs.lower.value, 2.0 / 3.0);
        let rs = rho_sandwich(&Spectrum::from_values(vec![0.0; 3], 0.0), Beta::omega()).unwrap();
        assert_eq!(rs.ratio, 1.0);
    }

    #[test]
    fn slack_sign_convention() {
        let lower = BoundResult::new("x", BoundKind::Lower, Target::Mu1, 1.0);
        assert_eq!(lower.slack(1.5), Some(0.5));
        let upper = BoundResult::new("x", BoundKind::Upper, Target::Mu1, 1.0);
        assert_eq!(upper.slack(1.5), Some(-0.5));
    }
}
