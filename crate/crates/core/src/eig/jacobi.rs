//! Cyclic Jacobi for complex Hermitian matrices.
//!
//! Each rotation first removes the phase of `a_pq` with a diagonal unitary,
//! then applies the classical real Jacobi rotation to the resulting real
//! symmetric 2×2 block. Sweeps stop once the off-diagonal Frobenius mass
//! drops below `tol · ‖M‖_F`.

use num_complex::Complex64;

use super::{EigenError, Spectrum};
use crate::matrix::HermitianMatrix;

pub const DEFAULT_TOL: f64 = 1e-12;
pub const MAX_SWEEPS: usize = 30;

fn off_diagonal_mass(a: &[Complex64], n: usize) -> f64 {
    let mut acc = 0.0;
    for r in 0..n {
        for s in (r + 1)..n {
            acc += 2.0 * a[r * n + s].norm_sqr();
        }
    }
    acc.sqrt()
}

pub fn eigenvalues(m: &HermitianMatrix, tol: f64) -> Result<Spectrum, EigenError> {
    if tol.is_nan() || tol <= 0.0 {
        return Err(EigenError::InvalidTolerance(tol));
    }
    let n = m.n();
    let mut a: Vec<Complex64> = (0..n).flat_map(|r| m.row(r).to_vec()).collect();
    let threshold = tol * m.frobenius_norm();

    let mut off = off_diagonal_mass(&a, n);
    let mut sweeps = 0;
    while off > threshold {
        if sweeps == MAX_SWEEPS {
            return Err(EigenError::NoConvergence { sweeps, off });
        }
        for p in 0..n {
            for q in (p + 1)..n {
                rotate(&mut a, n, p, q);
            }
        }
        sweeps += 1;
        off = off_diagonal_mass(&a, n);
    }

    let diag = (0..n).map(|i| a[i * n + i].re).collect();
    Ok(Spectrum::from_values(diag, off))
}

/// Annihilates `a[p][q]` with `A ← U* A U`, where `U = diag(1, conj(e)) · R`
/// on the `(p, q)` plane and `e = a_pq / |a_pq|`.
fn rotate(a: &mut [Complex64], n: usize, p: usize, q: usize) {
    let apq = a[p * n + q];
    let g = apq.norm();
    if g == 0.0 {
        return;
    }
    let phase = apq / g;
    let app = a[p * n + p].re;
    let aqq = a[q * n + q].re;

    let tau = (aqq - app) / (2.0 * g);
    let t = if tau.abs() > 1e150 {
        0.5 / tau
    } else {
        let t = 1.0 / (tau.abs() + (1.0 + tau * tau).sqrt());
        if tau < 0.0 {
            -t
        } else {
            t
        }
    };
    let c = 1.0 / (1.0 + t * t).sqrt();
    let s = t * c;
    let cbar = phase.conj();

    for k in 0..n {
        if k == p || k == q {
            continue;
        }
        let akp = a[k * n + p];
        let akq = a[k * n + q];
        let new_kp = akp * c - akq * cbar * s;
        let new_kq = akp * s + akq * cbar * c;
        a[k * n + p] = new_kp;
        a[k * n + q] = new_kq;
        a[p * n + k] = new_kp.conj();
        a[q * n + k] = new_kq.conj();
    }
    a[p * n + p] = Complex64::new(app - t * g, 0.0);
    a[q * n + q] = Complex64::new(aqq + t * g, 0.0);
    a[p * n + q] = Complex64::new(0.0, 0.0);
    a[q * n + p] = Complex64::new(0.0, 0.0);
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::parse_graph;
    use crate::matrix::{a_alpha_matrix, hermitian_adjacency, Alpha, Beta};

    fn close(actual: &[f64], expected: &[f64], tol: f64) {
        assert_eq!(actual.len(), expected.len());
        for (a, e) in actual.iter().zip(expected) {
            assert!((a - e).abs() <= tol, "{actual:?} vs {expected:?}");
        }
    }

    #[test]
    fn single_arc() {
        let g = parse_graph("2\n1 -> 2").unwrap();
        let s = eigenvalues(&hermitian_adjacency(&g, Beta::omega()), DEFAULT_TOL).unwrap();
        close(&s.eigenvalues, &[1.0, -1.0], 1e-12);
    }

    #[test]
    fn cyclic_triangle() {
        let g = parse_graph("3\n1 -> 2\n2 -> 3\n3 -> 1").unwrap();
        let s = eigenvalues(&hermitian_adjacency(&g, Beta::omega()), DEFAULT_TOL).unwrap();
        close(&s.eigenvalues, &[1.0, 1.0, -2.0], 1e-12);
        let m = a_alpha_matrix(&g, Alpha::new(0.5).unwrap(), Beta::omega());
        let s = eigenvalues(&m, DEFAULT_TOL).unwrap();
        close(&s.eigenvalues, &[1.5, 1.5, 0.0], 1e-12);
    }

    #[test]
    fn trivial_inputs() {
        let s = eigenvalues(&HermitianMatrix::zeros(4), DEFAULT_TOL).unwrap();
        assert_eq!(s.eigenvalues, vec![0.0; 4]);
        let s = eigenvalues(&HermitianMatrix::zeros(1).shifted(2.5), DEFAULT_TOL).unwrap();
        assert_eq!(s.eigenvalues, vec![2.5]);
        assert_eq!(
            eigenvalues(&HermitianMatrix::zeros(2), 0.0),
            Err(EigenError::InvalidTolerance(0.0))
        );
    }
}
