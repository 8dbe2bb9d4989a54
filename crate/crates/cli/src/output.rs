//! JSON and CSV encodings of reports and suite summaries.
//!
//! Report JSON: `{graph, alpha, beta, spectrum, rho, spread, trace_norm,
//! bounds: [{name, kind, target, bound, actual, slack, status}]}`.
//! Sweep CSV: `alpha, beta_arg, mu1, muN, rho, spread, traceNorm`, then a
//! `<label>:bound, <label>:slack` pair per catalog entry.

use aalpha_core::bounds::BoundKind;
use aalpha_core::verify::{BoundReport, Status, SuiteSummary};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    pub m: usize,
    pub arcs: usize,
    pub undirected: usize,
    pub degrees: Vec<usize>,
    pub max_degree: usize,
    pub min_degree: usize,
    pub zagreb: u64,
    /// Edge lines in the graph file syntax, 1-based.
    pub edges: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundJson {
    pub name: String,
    pub kind: BoundKind,
    pub target: String,
    pub bound: Option<f64>,
    pub actual: f64,
    pub slack: Option<f64>,
    pub status: Status,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportJson {
    pub graph: GraphJson,
    pub alpha: f64,
    pub beta: [f64; 2],
    pub spectrum: Vec<f64>,
    pub rho: f64,
    pub spread: f64,
    pub trace_norm: f64,
    pub bounds: Vec<BoundJson>,
}

impl From<&BoundReport> for ReportJson {
    fn from(r: &BoundReport) -> Self {
        let s = &r.stats;
        let text = r.graph.to_text();
        Self {
            graph: GraphJson {
                n: s.n,
                m: s.m,
                arcs: s.arcs,
                undirected: s.undirected,
                degrees: s.degrees.clone(),
                max_degree: s.max_degree,
                min_degree: s.min_degree,
                zagreb: s.zagreb,
                edges: text.lines().skip(1).map(str::to_owned).collect(),
            },
            alpha: r.alpha.value(),
            beta: [r.beta.re(), r.beta.im()],
            spectrum: r.spectrum.eigenvalues.clone(),
            rho: r.rho,
            spread: r.spread,
            trace_norm: r.trace_norm,
            bounds: r
                .outcomes
                .iter()
                .map(|o| BoundJson {
                    name: o.bound.name.clone(),
                    kind: o.bound.kind,
                    target: o.bound.target.to_string(),
                    bound: o.bound.value,
                    actual: o.actual,
                    slack: o.slack,
                    status: o.status,
                })
                .collect(),
        }
    }
}

pub fn report_json(r: &BoundReport) -> String {
    serde_json::to_string_pretty(&ReportJson::from(r)).expect("report serialises")
}

pub fn reports_json(rs: &[BoundReport]) -> String {
    let all: Vec<ReportJson> = rs.iter().map(ReportJson::from).collect();
    serde_json::to_string_pretty(&all).expect("reports serialise")
}

pub fn summary_json(s: &SuiteSummary) -> String {
    serde_json::to_string_pretty(s).expect("summary serialises")
}

/// 17 significant digits.
pub fn float(x: f64) -> String {
    format!("{x:.16e}")
}

fn opt_float(x: Option<f64>) -> String {
    x.map_or_else(|| "NA".to_owned(), float)
}

pub const FIXED_COLUMNS: [&str; 7] = [
    "alpha",
    "beta_arg",
    "mu1",
    "muN",
    "rho",
    "spread",
    "traceNorm",
];

pub fn sweep_header(r: &BoundReport) -> Vec<String> {
    FIXED_COLUMNS
        .iter()
        .map(|s| (*s).to_owned())
        .chain(r.outcomes.iter().flat_map(|o| {
            let label = o.bound.label();
            [format!("{label}:bound"), format!("{label}:slack")]
        }))
        .collect()
}

pub fn sweep_row(r: &BoundReport) -> Vec<String> {
    let spec = &r.spectrum.eigenvalues;
    [
        r.alpha.value(),
        r.beta.arg(),
        spec[0],
        spec[spec.len() - 1],
        r.rho,
        r.spread,
        r.trace_norm,
    ]
    .into_iter()
    .map(float)
    .chain(
        r.outcomes
            .iter()
            .flat_map(|o| [opt_float(o.bound.value), opt_float(o.slack)]),
    )
    .collect()
}

pub fn sweep_csv(reports: &[BoundReport]) -> Result<String, csv::Error> {
    let mut w = csv::Writer::from_writer(Vec::new());
    if let Some(first) = reports.first() {
        w.write_record(sweep_header(first))?;
    }
    for r in reports {
        w.write_record(sweep_row(r))?;
    }
    let bytes = w.into_inner().map_err(|e| e.into_error())?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

/// `bound,worst_slack` rows.
pub fn worst_slack_csv(s: &SuiteSummary) -> Result<String, csv::Error> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["bound", "worst_slack"])?;
    for (name, slack) in &s.worst_slack {
        w.write_record([name.clone(), float(*slack)])?;
    }
    let bytes = w.into_inner().map_err(|e| e.into_error())?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}
