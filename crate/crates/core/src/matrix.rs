//! Dense Hermitian matrices and the graph matrices `D`, `H^β` and
//! `A_α^β = αD + (1-α)H^β`.

use std::fmt::Write as _;

use num_complex::Complex64;
use rand::Rng;
use rand_distr::StandardNormal;
use thiserror::Error;

use crate::graph::{GraphStats, MixedGraph};

/// Tolerance on `|β| = 1`.
pub const BETA_MODULUS_TOL: f64 = 1e-12;

/// Agreement tolerance for the quadratic form: imaginary residue and the
/// gap between the direct and expanded evaluations.
pub const QUADRATIC_FORM_TOL: f64 = 1e-10;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum MatrixError {
    #[error("beta = {re} + {im}i must have modulus one and non-negative real part")]
    InvalidBeta { re: f64, im: f64 },
    #[error("alpha = {0} outside [0, 1]")]
    InvalidAlpha(f64),
    #[error("dimension mismatch: matrix is {expected}x{expected}, vector has {found} entries")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("quadratic form has imaginary part {0:e}; matrix is not Hermitian")]
    NonReal(f64),
    #[error("quadratic form disagrees: direct {direct}, arc expansion {expansion}")]
    ExpansionMismatch { direct: f64, expansion: f64 },
    #[error("entries ({0},{1}) and ({1},{0}) are not conjugate")]
    NotHermitian(usize, usize),
    #[error("matrix must be at least 1x1")]
    Empty,
    #[error("non-finite entry")]
    NonFinite,
    #[error("matrix text line {line}: {message}")]
    Parse { line: usize, message: String },
}

/// A unit-modulus complex number `β = a + ib` with `a >= 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Beta {
    re: f64,
    im: f64,
}

impl Beta {
    pub fn new(re: f64, im: f64) -> Result<Self, MatrixError> {
        let modulus = re.hypot(im);
        if !modulus.is_finite() || (modulus - 1.0).abs() > BETA_MODULUS_TOL || re < 0.0 {
            return Err(MatrixError::InvalidBeta { re, im });
        }
        Ok(Self { re, im })
    }

    /// `β = e^{iθ}`. `θ = π/3` is mapped onto [`Beta::omega`] exactly.
    pub fn from_angle(theta: f64) -> Result<Self, MatrixError> {
        if (theta - std::f64::consts::FRAC_PI_3).abs() < 1e-12 {
            return Ok(Self::omega());
        }
        let (im, re) = theta.sin_cos();
        Self::new(re, im)
    }

    /// The sixth root of unity `ω = (1 + i√3)/2`.
    pub fn omega() -> Self {
        Self {
            re: 0.5,
            im: 3f64.sqrt() / 2.0,
        }
    }

    pub fn one() -> Self {
        Self { re: 1.0, im: 0.0 }
    }

    pub fn re(self) -> f64 {
        self.re
    }

    pub fn im(self) -> f64 {
        self.im
    }

    pub fn arg(self) -> f64 {
        self.im.atan2(self.re)
    }

    pub fn is_omega(self) -> bool {
        let w = Self::omega();
        (self.re - w.re).abs() <= BETA_MODULUS_TOL && (self.im - w.im).abs() <= BETA_MODULUS_TOL
    }

    pub fn to_complex(self) -> Complex64 {
        Complex64::new(self.re, self.im)
    }
}

/// Convex weight `α ∈ [0, 1]` on the degree matrix.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Alpha(f64);

impl Alpha {
    pub fn new(value: f64) -> Result<Self, MatrixError> {
        if (0.0..=1.0).contains(&value) {
            Ok(Self(value))
        } else {
            Err(MatrixError::InvalidAlpha(value))
        }
    }

    pub fn value(self) -> f64 {
        self.0
    }
}

/// The graph and parameters a matrix was built from.
#[derive(Debug, Clone, PartialEq)]
pub struct Provenance {
    pub graph: MixedGraph,
    pub alpha: Alpha,
    pub beta: Beta,
}

/// Dense row-major Hermitian matrix.
///
/// Every constructor writes `(r, s)` and `(s, r)` together as a conjugate
/// pair, so `m[r][s] == conj(m[s][r])` holds bit for bit.
#[derive(Debug, Clone, PartialEq)]
pub struct HermitianMatrix {
    n: usize,
    data: Vec<Complex64>,
    provenance: Option<Provenance>,
}

impl HermitianMatrix {
    pub fn zeros(n: usize) -> Self {
        Self {
            n,
            data: vec![Complex64::new(0.0, 0.0); n * n],
            provenance: None,
        }
    }

    /// Builds from a real diagonal and a strictly-upper-triangle closure.
    pub fn from_upper(
        n: usize,
        mut diag: impl FnMut(usize) -> f64,
        mut upper: impl FnMut(usize, usize) -> Complex64,
    ) -> Self {
        let mut m = Self::zeros(n);
        for r in 0..n {
            m.data[r * n + r] = Complex64::new(diag(r), 0.0);
            for s in (r + 1)..n {
                m.set_pair(r, s, upper(r, s));
            }
        }
        m
    }

    /// Accepts explicit rows, rejecting anything not exactly Hermitian.
    pub fn from_rows(rows: &[Vec<Complex64>]) -> Result<Self, MatrixError> {
        let n = rows.len();
        if n == 0 {
            return Err(MatrixError::Empty);
        }
        for row in rows {
            if row.len() != n {
                return Err(MatrixError::DimensionMismatch {
                    expected: n,
                    found: row.len(),
                });
            }
            if row.iter().any(|z| !z.is_finite()) {
                return Err(MatrixError::NonFinite);
            }
        }
        for r in 0..n {
            if rows[r][r].im != 0.0 {
                return Err(MatrixError::NotHermitian(r, r));
            }
            for s in (r + 1)..n {
                if rows[r][s] != rows[s][r].conj() {
                    return Err(MatrixError::NotHermitian(r, s));
                }
            }
        }
        Ok(Self {
            n,
            data: rows.iter().flatten().copied().collect(),
            provenance: None,
        })
    }

    /// A random Hermitian matrix with standard normal entries.
    pub fn random<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Self {
        let mut normal = || rng.sample::<f64, _>(StandardNormal);
        let mut m = Self::zeros(n);
        for r in 0..n {
            m.data[r * n + r] = Complex64::new(normal(), 0.0);
            for s in (r + 1)..n {
                let z = Complex64::new(normal(), normal());
                m.set_pair(r, s, z);
            }
        }
        m
    }

    fn set_pair(&mut self, r: usize, s: usize, value: Complex64) {
        self.data[r * self.n + s] = value;
        self.data[s * self.n + r] = value.conj();
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, r: usize, s: usize) -> Complex64 {
        self.data[r * self.n + s]
    }

    pub fn row(&self, r: usize) -> &[Complex64] {
        &self.data[r * self.n..(r + 1) * self.n]
    }

    pub fn provenance(&self) -> Option<&Provenance> {
        self.provenance.as_ref()
    }

    pub fn diagonal(&self) -> Vec<f64> {
        (0..self.n).map(|i| self.get(i, i).re).collect()
    }

    pub fn trace(&self) -> f64 {
        self.diagonal().iter().sum()
    }

    /// `tr(M²)`, which for Hermitian `M` is the sum of squared moduli.
    pub fn trace_of_square(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum()
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.trace_of_square().sqrt()
    }

    pub fn max_offdiag_modulus(&self) -> f64 {
        let mut best = 0.0f64;
        for r in 0..self.n {
            for s in (r + 1)..self.n {
                best = best.max(self.get(r, s).norm());
            }
        }
        best
    }

    pub fn shifted(&self, c: f64) -> Self {
        let mut out = self.clone();
        out.provenance = None;
        for i in 0..self.n {
            out.data[i * self.n + i].re += c;
        }
        out
    }

    pub fn scaled(&self, c: f64) -> Self {
        Self {
            n: self.n,
            data: self.data.iter().map(|z| z * c).collect(),
            provenance: None,
        }
    }

    /// The `2n × 2n` real symmetric matrix `[[X, -Y], [Y, X]]` for
    /// `M = X + iY`, row-major.
    pub fn real_embedding(&self) -> Vec<f64> {
        let n = self.n;
        let size = 2 * n;
        let mut out = vec![0.0; size * size];
        for r in 0..n {
            for s in 0..n {
                let z = self.get(r, s);
                out[r * size + s] = z.re;
                out[(r + n) * size + (s + n)] = z.re;
                out[r * size + (s + n)] = -z.im;
                out[(r + n) * size + s] = z.im;
            }
        }
        out
    }

    /// Plain-text interchange form: `n`, then `n` rows of `re,im` pairs.
    pub fn to_text(&self) -> String {
        let mut out = format!("{}\n", self.n);
        for r in 0..self.n {
            let row: Vec<String> = self
                .row(r)
                .iter()
                .map(|z| format!("{},{}", z.re, z.im))
                .collect();
            let _ = writeln!(out, "{}", row.join(" "));
        }
        out
    }

    pub fn from_text(text: &str) -> Result<Self, MatrixError> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty());
        let parse_err = |line, message: String| MatrixError::Parse { line, message };
        let (line, first) = lines.next().ok_or(MatrixError::Empty)?;
        let n: usize = first
            .parse()
            .map_err(|_| parse_err(line, format!("expected dimension, found `{first}`")))?;
        let mut rows = Vec::with_capacity(n);
        for (line, content) in lines {
            let row = content
                .split_whitespace()
                .map(|tok| {
                    let (re, im) = tok
                        .split_once(',')
                        .ok_or_else(|| parse_err(line, format!("expected re,im: `{tok}`")))?;
                    let num = |s: &str| {
                        s.parse::<f64>()
                            .map_err(|_| parse_err(line, format!("invalid number `{s}`")))
                    };
                    Ok(Complex64::new(num(re)?, num(im)?))
                })
                .collect::<Result<Vec<_>, MatrixError>>()?;
            rows.push(row);
        }
        if rows.len() != n {
            return Err(MatrixError::DimensionMismatch {
                expected: n,
                found: rows.len(),
            });
        }
        Self::from_rows(&rows)
    }
}

/// A complex vector `z = x + iy`.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexVector(pub Vec<Complex64>);

impl ComplexVector {
    pub fn new(components: Vec<Complex64>) -> Self {
        Self(components)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn norm(&self) -> f64 {
        self.0.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Independent standard normal real and imaginary parts, normalised.
    pub fn random_unit<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Self {
        loop {
            let v: Vec<Complex64> = (0..n)
                .map(|_| {
                    Complex64::new(
                        rng.sample::<f64, _>(StandardNormal),
                        rng.sample::<f64, _>(StandardNormal),
                    )
                })
                .collect();
            let norm = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
            if norm > 1e-150 {
                return Self(v.into_iter().map(|z| z / norm).collect());
            }
        }
    }
}

pub fn omega_constant() -> Beta {
    Beta::omega()
}

/// Degree matrix of the underlying graph.
pub fn degree_matrix(g: &MixedGraph) -> HermitianMatrix {
    a_alpha_matrix(g, Alpha(1.0), Beta::omega())
}

/// `H^β`: `β` on `v → u`, `conj(β)` on `u → v`, `1` on undirected edges.
pub fn hermitian_adjacency(g: &MixedGraph, beta: Beta) -> HermitianMatrix {
    a_alpha_matrix(g, Alpha(0.0), beta)
}

/// `A_α^β = αD + (1-α)H^β`, tagged with its provenance.
pub fn a_alpha_matrix(g: &MixedGraph, alpha: Alpha, beta: Beta) -> HermitianMatrix {
    let n = g.n();
    let a = alpha.value();
    let stats = g.stats();
    let mut m = HermitianMatrix::zeros(n);
    for (i, &d) in stats.degrees.iter().enumerate() {
        m.data[i * n + i] = Complex64::new(a * d as f64, 0.0);
    }
    let w = 1.0 - a;
    for &(r, s) in g.undirected() {
        m.set_pair(r, s, Complex64::new(w, 0.0));
    }
    for &(tail, head) in g.arcs() {
        m.set_pair(tail, head, beta.to_complex() * w);
    }
    m.provenance = Some(Provenance {
        graph: g.clone(),
        alpha,
        beta,
    });
    m
}

fn direct_form(m: &HermitianMatrix, z: &ComplexVector) -> Complex64 {
    let mut acc = Complex64::new(0.0, 0.0);
    for r in 0..m.n {
        let row_dot: Complex64 = m.row(r).iter().zip(&z.0).map(|(a, b)| a * b).sum();
        acc += z.0[r].conj() * row_dot;
    }
    acc
}

/// The arc expansion `αΣ d_i|z_i|² + (1-α)Σ_{v→u} 2(a x_v x_u + a y_v y_u - b x_v y_u + b y_v x_u)`,
/// with undirected edges entering as arcs of weight `β = 1`.
fn expanded_form(p: &Provenance, z: &ComplexVector) -> f64 {
    let alpha = p.alpha.value();
    let stats = p.graph.stats();
    let degree_part: f64 = stats
        .degrees
        .iter()
        .zip(&z.0)
        .map(|(&d, zi)| d as f64 * zi.norm_sqr())
        .sum();
    let pair = |v: usize, u: usize, a: f64, b: f64| {
        let (xv, yv) = (z.0[v].re, z.0[v].im);
        let (xu, yu) = (z.0[u].re, z.0[u].im);
        2.0 * a * xv * xu + 2.0 * a * yv * yu - 2.0 * b * xv * yu + 2.0 * b * yv * xu
    };
    let arc_part: f64 = p
        .graph
        .arcs()
        .iter()
        .map(|&(v, u)| pair(v, u, p.beta.re(), p.beta.im()))
        .chain(
            p.graph
                .undirected()
                .iter()
                .map(|&(v, u)| pair(v, u, 1.0, 0.0)),
        )
        .sum();
    alpha * degree_part + (1.0 - alpha) * arc_part
}

/// `z* M z`. When `M` carries graph provenance the arc expansion is
/// evaluated too and the two must agree.
pub fn quadratic_form(m: &HermitianMatrix, z: &ComplexVector) -> Result<f64, MatrixError> {
    if z.len() != m.n {
        return Err(MatrixError::DimensionMismatch {
            expected: m.n,
            found: z.len(),
        });
    }
    let direct = direct_form(m, z);
    let scale = 1f64.max(m.frobenius_norm() * z.norm().powi(2));
    if direct.im.abs() > QUADRATIC_FORM_TOL * scale {
        return Err(MatrixError::NonReal(direct.im));
    }
    if let Some(p) = &m.provenance {
        let expansion = expanded_form(p, z);
        if (expansion - direct.re).abs() > QUADRATIC_FORM_TOL * scale {
            return Err(MatrixError::ExpansionMismatch {
                direct: direct.re,
                expansion,
            });
        }
    }
    Ok(direct.re)
}

/// Closed forms `tr(A_α) = 2αm` and `tr(A_α²) = α²M1 + (1-α)²·2m`.
pub fn expected_traces(stats: &GraphStats, alpha: Alpha) -> (f64, f64) {
    let a = alpha.value();
    let m = stats.m as f64;
    (
        2.0 * a * m,
        a * a * stats.zagreb as f64 + (1.0 - a).powi(2) * 2.0 * m,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::parse_graph;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn p2() -> MixedGraph {
        parse_graph("2\n1 -> 2").unwrap()
    }

    fn c3() -> MixedGraph {
        parse_graph("3\n1 -> 2\n2 -> 3\n3 -> 1").unwrap()
    }

    #[test]
    fn omega_properties() {
        let w = omega_constant();
        assert_eq!(w.re(), 0.5);
        assert_eq!(w.im(), 0.8660254037844386);
        let z = w.to_complex();
        assert!(((z + z.conj()) - c(1.0, 0.0)).norm() < 1e-15);
        assert!(((z * z.conj()) - c(1.0, 0.0)).norm() < 1e-15);
        assert!(Beta::from_angle(std::f64::consts::FRAC_PI_3)
            .unwrap()
            .is_omega());
    }

    #[test]
    fn beta_validation() {
        assert!(Beta::new(0.6, 0.8).is_ok());
        assert!(Beta::new(0.6, 0.81).is_err());
        assert!(Beta::new(-0.6, 0.8).is_err());
        assert!(Beta::from_angle(std::f64::consts::FRAC_PI_2).is_ok());
        assert!(Beta::from_angle(-std::f64::consts::FRAC_PI_2).is_ok());
        assert!(Beta::from_angle(2.0).is_err());
        assert!(Alpha::new(1.2).is_err());
        assert!(Alpha::new(f64::NAN).is_err());
    }

    #[test]
    fn degree_matrices() {
        let d = degree_matrix(&p2());
        assert_eq!(d.diagonal(), vec![1.0, 1.0]);
        assert_eq!(d.get(0, 1), c(0.0, 0.0));
        assert_eq!(degree_matrix(&c3()).diagonal(), vec![2.0; 3]);
        let empty = degree_matrix(&MixedGraph::empty(3).unwrap());
        assert_eq!(empty.frobenius_norm(), 0.0);
    }

    #[test]
    fn adjacency_entries() {
        let w = Beta::omega();
        let h = hermitian_adjacency(&p2(), w);
        assert_eq!(h.get(0, 0), c(0.0, 0.0));
        assert_eq!(h.get(0, 1), w.to_complex());
        assert_eq!(h.get(1, 0), w.to_complex().conj());

        let und = parse_graph("2\n1 -- 2").unwrap();
        let h = hermitian_adjacency(&und, w);
        assert_eq!(h.get(0, 1), c(1.0, 0.0));
        assert_eq!(h.get(1, 0), c(1.0, 0.0));

        let g = parse_graph("4\n1 -> 2\n3 -- 2\n4 -> 3").unwrap();
        let h = hermitian_adjacency(&g, Beta::one());
        for r in 0..4 {
            for s in 0..4 {
                let z = h.get(r, s);
                assert_eq!(z.im, 0.0);
                assert!(z.re == 0.0 || z.re == 1.0);
            }
        }
        assert_eq!(h.get(2, 3), c(1.0, 0.0));
    }

    #[test]
    fn a_alpha_endpoints() {
        let w = Beta::omega();
        let a0 = a_alpha_matrix(&p2(), Alpha::new(0.0).unwrap(), w);
        assert_eq!(a0.get(0, 1), w.to_complex());
        assert_eq!(a0.diagonal(), vec![0.0, 0.0]);
        let a1 = a_alpha_matrix(&p2(), Alpha::new(1.0).unwrap(), w);
        assert_eq!(a1.diagonal(), vec![1.0, 1.0]);
        assert_eq!(a1.get(0, 1).norm(), 0.0);

        let half = a_alpha_matrix(&c3(), Alpha::new(0.5).unwrap(), w);
        assert_eq!(half.diagonal(), vec![1.0; 3]);
        for (r, s) in [(0, 1), (1, 2), (2, 0)] {
            assert!((half.get(r, s).norm() - 0.5).abs() < 1e-15);
        }
    }

    #[test]
    fn quadratic_form_examples() {
        let h = hermitian_adjacency(&p2(), Beta::omega());
        let e1 = ComplexVector::new(vec![c(1.0, 0.0), c(0.0, 0.0)]);
        assert_eq!(quadratic_form(&h, &e1).unwrap(), 0.0);

        let k = std::f64::consts::FRAC_1_SQRT_2;
        let flat = ComplexVector::new(vec![c(k, 0.0), c(k, 0.0)]);
        assert!((quadratic_form(&h, &flat).unwrap() - 0.5).abs() < 1e-15);

        let wbar = Beta::omega().to_complex().conj();
        let eig = ComplexVector::new(vec![c(k, 0.0), wbar * k]);
        assert!((quadratic_form(&h, &eig).unwrap() - 1.0).abs() < 1e-15);

        let short = ComplexVector::new(vec![c(1.0, 0.0)]);
        assert!(matches!(
            quadratic_form(&h, &short),
            Err(MatrixError::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn expected_trace_examples() {
        let half = Alpha::new(0.5).unwrap();
        assert_eq!(expected_traces(&p2().stats(), half), (1.0, 1.0));
        assert_eq!(
            expected_traces(&c3().stats(), Alpha::new(0.0).unwrap()),
            (0.0, 6.0)
        );
        let s = c3().stats();
        assert_eq!(
            expected_traces(&s, Alpha::new(1.0).unwrap()),
            (2.0 * s.m as f64, s.zagreb as f64)
        );
    }

    #[test]
    fn embedding_layout() {
        let h = hermitian_adjacency(&p2(), Beta::omega());
        let e = h.real_embedding();
        let size = 4;
        for r in 0..size {
            for s in 0..size {
                assert_eq!(e[r * size + s], e[s * size + r]);
            }
        }
        assert_eq!(e[1], 0.5);
        assert_eq!(e[3], -h.get(0, 1).im);
    }

    #[test]
    fn text_round_trip_and_rejection() {
        let m = a_alpha_matrix(&c3(), Alpha::new(0.3).unwrap(), Beta::omega());
        let back = HermitianMatrix::from_text(&m.to_text()).unwrap();
        for r in 0..3 {
            for s in 0..3 {
                assert_eq!(back.get(r, s), m.get(r, s));
            }
        }
        assert_eq!(
            HermitianMatrix::from_text("2\n0,0 1,1\n1,1 0,0"),
            Err(MatrixError::NotHermitian(0, 1))
        );
        assert!(HermitianMatrix::from_text("2\n0,0 1,0").is_err());
        assert!(HermitianMatrix::from_text("1\nx,0").is_err());
    }
}
