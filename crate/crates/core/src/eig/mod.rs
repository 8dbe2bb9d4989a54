//! Real spectra of Hermitian matrices.
//!
//! Two independent paths: [`eigenvalues`] runs cyclic complex Jacobi on the
//! matrix itself, [`oracle_eigenvalues`] tridiagonalises the real symmetric
//! embedding and runs implicit-shift QL.

mod jacobi;
mod tridiagonal;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use jacobi::{eigenvalues, DEFAULT_TOL, MAX_SWEEPS};
pub use tridiagonal::{oracle_eigenvalues, symmetric_eigenvalues};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum EigenError {
    #[error("Jacobi did not converge after {sweeps} sweeps (off-diagonal mass {off:e})")]
    NoConvergence { sweeps: usize, off: f64 },
    #[error("QL iteration did not converge for eigenvalue {0}")]
    QlNoConvergence(usize),
    #[error("embedding eigenvalues {index} and {} do not pair: {a} vs {b}", index + 1)]
    PairingFailure { index: usize, a: f64, b: f64 },
    #[error("tolerance must be positive, got {0}")]
    InvalidTolerance(f64),
    #[error("empty spectrum")]
    Empty,
}

/// Eigenvalues in non-increasing order plus a residual estimate.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Spectrum {
    pub eigenvalues: Vec<f64>,
    pub backward_error: f64,
}

impl Spectrum {
    /// Sorts `values` into non-increasing order.
    pub fn from_values(mut values: Vec<f64>, backward_error: f64) -> Self {
        values.sort_by(|a, b| b.total_cmp(a));
        Self {
            eigenvalues: values,
            backward_error,
        }
    }

    pub fn len(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn is_empty(&self) -> bool {
        self.eigenvalues.is_empty()
    }

    pub fn max(&self) -> Result<f64, EigenError> {
        self.eigenvalues.first().copied().ok_or(EigenError::Empty)
    }

    pub fn min(&self) -> Result<f64, EigenError> {
        self.eigenvalues.last().copied().ok_or(EigenError::Empty)
    }

    /// `μ_j`, 1-based.
    pub fn nth(&self, j: usize) -> Option<f64> {
        j.checked_sub(1)
            .and_then(|i| self.eigenvalues.get(i).copied())
    }

    /// Largest elementwise gap to another spectrum of the same length.
    pub fn max_abs_diff(&self, other: &Spectrum) -> f64 {
        assert_eq!(self.len(), other.len(), "spectra of different order");
        self.eigenvalues
            .iter()
            .zip(&other.eigenvalues)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }
}

pub fn spectral_radius(s: &Spectrum) -> Result<f64, EigenError> {
    Ok(s.max()?.abs().max(s.min()?.abs()))
}

pub fn spread(s: &Spectrum) -> Result<f64, EigenError> {
    Ok(s.max()? - s.min()?)
}

/// Sum of absolute eigenvalues (the graph energy).
pub fn trace_norm(s: &Spectrum) -> Result<f64, EigenError> {
    if s.is_empty() {
        return Err(EigenError::Empty);
    }
    Ok(s.eigenvalues.iter().map(|x| x.abs()).sum())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(v: &[f64]) -> Spectrum {
        Spectrum::from_values(v.to_vec(), 0.0)
    }

    #[test]
    fn derived_quantities() {
        let s = spec(&[-1.0, 1.0]);
        assert_eq!(s.eigenvalues, vec![1.0, -1.0]);
        assert_eq!(spectral_radius(&s), Ok(1.0));
        assert_eq!(spread(&s), Ok(2.0));
        assert_eq!(trace_norm(&s), Ok(2.0));

        let s = spec(&[1.0, -2.0, 1.0]);
        assert_eq!(spectral_radius(&s), Ok(2.0));
        assert_eq!(spread(&s), Ok(3.0));
        assert_eq!(trace_norm(&s), Ok(4.0));

        let s = spec(&[1.5, 0.0, 1.5]);
        assert_eq!(spectral_radius(&s), Ok(1.5));
        assert_eq!(trace_norm(&s), Ok(3.0));

        assert_eq!(spread(&spec(&[0.7; 4])), Ok(0.0));
        assert_eq!(s.nth(3), Some(0.0));
        assert_eq!(s.nth(0), None);
    }

    #[test]
    fn empty_spectrum_errors() {
        let s = spec(&[]);
        assert_eq!(spectral_radius(&s), Err(EigenError::Empty));
        assert_eq!(spread(&s), Err(EigenError::Empty));
        assert_eq!(trace_norm(&s), Err(EigenError::Empty));
    }
}
