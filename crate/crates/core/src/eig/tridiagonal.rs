//! Householder tridiagonalisation and implicit-shift QL for real symmetric
//! matrices, used as the independent oracle path.

use super::{EigenError, Spectrum};
use crate::matrix::HermitianMatrix;

const MAX_QL_ITERATIONS: usize = 60;

/// Relative pairing tolerance for the doubled embedding spectrum.
pub const PAIRING_TOL: f64 = 1e-8;

/// Eigenvalues of `M` from the `2n × 2n` real embedding `[[X, -Y], [Y, X]]`.
///
/// Each eigenvalue of `M` appears twice in the embedding; sorted values are
/// paired greedily `(0,1), (2,3), ...` and each pair is averaged.
pub fn oracle_eigenvalues(m: &HermitianMatrix) -> Result<Spectrum, EigenError> {
    let n = m.n();
    let doubled = symmetric_eigenvalues(m.real_embedding(), 2 * n)?;
    let tol = PAIRING_TOL * m.frobenius_norm();
    let mut out = Vec::with_capacity(n);
    let mut worst = 0.0f64;
    for (i, pair) in doubled.chunks_exact(2).enumerate() {
        let gap = (pair[0] - pair[1]).abs();
        if gap > tol {
            return Err(EigenError::PairingFailure {
                index: 2 * i,
                a: pair[0],
                b: pair[1],
            });
        }
        worst = worst.max(gap);
        out.push(0.5 * (pair[0] + pair[1]));
    }
    Ok(Spectrum::from_values(out, worst))
}

/// All eigenvalues of a dense real symmetric `size × size` matrix (row-major),
/// sorted non-increasing. Only the lower triangle is read.
pub fn symmetric_eigenvalues(mut a: Vec<f64>, size: usize) -> Result<Vec<f64>, EigenError> {
    assert_eq!(a.len(), size * size, "matrix storage does not match size");
    let (mut diag, mut sub) = tridiagonalize(&mut a, size);
    implicit_ql(&mut diag, &mut sub)?;
    diag.sort_by(|x, y| y.total_cmp(x));
    Ok(diag)
}

/// Reduces `a` in place by Householder reflections from the left and right.
/// Returns the diagonal and the subdiagonal (`sub[i]` couples `i` and `i+1`,
/// `sub[size-1] = 0`).
fn tridiagonalize(a: &mut [f64], size: usize) -> (Vec<f64>, Vec<f64>) {
    let mut sub = vec![0.0; size];
    let mut v = vec![0.0; size];
    let mut p = vec![0.0; size];
    for k in 0..size.saturating_sub(2) {
        let len = size - k - 1;
        let norm = (k + 1..size)
            .map(|i| a[i * size + k].powi(2))
            .sum::<f64>()
            .sqrt();
        if norm == 0.0 {
            sub[k] = 0.0;
            continue;
        }
        let x0 = a[(k + 1) * size + k];
        let alpha = if x0 > 0.0 { -norm } else { norm };
        for (j, i) in (k + 1..size).enumerate() {
            v[j] = a[i * size + k];
        }
        v[0] -= alpha;
        let vnorm = v[..len].iter().map(|x| x * x).sum::<f64>().sqrt();
        sub[k] = alpha;
        if vnorm == 0.0 {
            continue;
        }
        v[..len].iter_mut().for_each(|x| *x /= vnorm);

        // p = A_sub v, then q = p - (v·p) v, A_sub -= 2 v qᵀ + 2 q vᵀ.
        for (j, i) in (k + 1..size).enumerate() {
            p[j] = (k + 1..size)
                .enumerate()
                .map(|(l, c)| lower(a, size, i, c) * v[l])
                .sum();
        }
        let vp: f64 = v[..len].iter().zip(&p[..len]).map(|(x, y)| x * y).sum();
        for j in 0..len {
            p[j] -= vp * v[j];
        }
        for j in 0..len {
            for l in 0..=j {
                let (i, c) = (k + 1 + j, k + 1 + l);
                a[i * size + c] -= 2.0 * (v[j] * p[l] + p[j] * v[l]);
            }
        }
    }
    if size >= 2 {
        sub[size - 2] = a[(size - 1) * size + (size - 2)];
    }
    let diag = (0..size).map(|i| a[i * size + i]).collect();
    (diag, sub)
}

fn lower(a: &[f64], size: usize, r: usize, c: usize) -> f64 {
    if r >= c {
        a[r * size + c]
    } else {
        a[c * size + r]
    }
}

/// Implicit-shift QL on a symmetric tridiagonal matrix; eigenvalues replace
/// `diag`.
fn implicit_ql(diag: &mut [f64], sub: &mut [f64]) -> Result<(), EigenError> {
    let n = diag.len();
    if n == 0 {
        return Ok(());
    }
    sub[n - 1] = 0.0;
    for l in 0..n {
        let mut iterations = 0;
        loop {
            let mut m = l;
            while m < n - 1 {
                let scale = diag[m].abs() + diag[m + 1].abs();
                if sub[m].abs() <= f64::EPSILON * scale {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            iterations += 1;
            if iterations > MAX_QL_ITERATIONS {
                return Err(EigenError::QlNoConvergence(l));
            }

            let mut g = (diag[l + 1] - diag[l]) / (2.0 * sub[l]);
            let mut r = g.hypot(1.0);
            g = diag[m] - diag[l] + sub[l] / (g + if g >= 0.0 { r } else { -r });
            let (mut s, mut c, mut p) = (1.0, 1.0, 0.0);
            let mut deflated = false;
            for i in (l..m).rev() {
                let f = s * sub[i];
                let b = c * sub[i];
                r = f.hypot(g);
                sub[i + 1] = r;
                if r == 0.0 {
                    diag[i + 1] -= p;
                    sub[m] = 0.0;
                    deflated = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = diag[i + 1] - p;
                r = (diag[i] - g) * s + 2.0 * c * b;
                p = s * r;
                diag[i + 1] = g + p;
                g = c * r - b;
            }
            if deflated {
                continue;
            }
            diag[l] -= p;
            sub[l] = g;
            sub[m] = 0.0;
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::parse_graph;
    use crate::matrix::{hermitian_adjacency, Beta};
    use num_complex::Complex64;

    #[test]
    fn embedding_doubles_single_arc() {
        let g = parse_graph("2\n1 -> 2").unwrap();
        let h = hermitian_adjacency(&g, Beta::omega());
        let doubled = symmetric_eigenvalues(h.real_embedding(), 4).unwrap();
        for (a, e) in doubled.iter().zip([1.0, 1.0, -1.0, -1.0]) {
            assert!((a - e).abs() < 1e-12, "{doubled:?}");
        }
        let s = oracle_eigenvalues(&h).unwrap();
        assert!((s.eigenvalues[0] - 1.0).abs() < 1e-12);
        assert!((s.eigenvalues[1] + 1.0).abs() < 1e-12);
    }

    #[test]
    fn real_diagonal_and_zero() {
        let c = |x| Complex64::new(x, 0.0);
        let m = HermitianMatrix::from_rows(&[vec![c(3.0), c(0.0)], vec![c(0.0), c(1.0)]]).unwrap();
        assert_eq!(oracle_eigenvalues(&m).unwrap().eigenvalues, vec![3.0, 1.0]);
        assert_eq!(
            oracle_eigenvalues(&HermitianMatrix::zeros(4))
                .unwrap()
                .eigenvalues,
            vec![0.0; 4]
        );
    }

    #[test]
    fn known_tridiagonal_spectrum() {
        // Path P5 adjacency: 2cos(kπ/6), k = 1..5.
        let size = 5;
        let mut a = vec![0.0; size * size];
        for i in 0..size - 1 {
            a[i * size + i + 1] = 1.0;
            a[(i + 1) * size + i] = 1.0;
        }
        let got = symmetric_eigenvalues(a, size).unwrap();
        for (k, x) in got.iter().enumerate() {
            let expected = 2.0 * ((k + 1) as f64 * std::f64::consts::PI / 6.0).cos();
            assert!((x - expected).abs() < 1e-12, "{got:?}");
        }
    }

    #[test]
    fn dense_matrix_against_characteristic_polynomial() {
        // [[2,1,0],[1,2,1],[0,1,2]] has eigenvalues 2-√2, 2, 2+√2.
        let mut a = vec![2.0, 1.0, 0.0, 1.0, 2.0, 1.0, 0.0, 1.0, 2.0];
        // Fill the corner so the reflection path is exercised.
        a[2] = 0.5;
        a[6] = 0.5;
        let got = symmetric_eigenvalues(a.clone(), 3).unwrap();
        let trace: f64 = got.iter().sum();
        assert!((trace - 6.0).abs() < 1e-12);
        let frob: f64 = a.iter().map(|x| x * x).sum();
        let sq: f64 = got.iter().map(|x| x * x).sum();
        assert!((frob - sq).abs() < 1e-12);
    }
}
