//! Cyclic Jacobi eigensolver for dense symmetric matrices.
//!
//! Sweeps visit every pair `(p, q)`, `p < q`, in row order and apply the
//! plane rotation that zeroes `a[p][q]`. The rotation order is fixed, so
//! the output is deterministic.

use super::{RealMatrix, SpectralBasis, SpectralError};

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct JacobiOptions {
    /// Convergence threshold on the largest off-diagonal magnitude.
    pub tol: f64,
    pub max_sweeps: usize,
}

impl Default for JacobiOptions {
    fn default() -> Self {
        JacobiOptions { tol: 1e-12, max_sweeps: 100 }
    }
}

const SYMMETRY_TOL: f64 = 1e-12;

fn max_off_diagonal(a: &[f64], n: usize) -> f64 {
    let mut worst: f64 = 0.0;
    for p in 0..n {
        for &x in &a[p * n + p + 1..(p + 1) * n] {
            worst = worst.max(x.abs());
        }
    }
    worst
}

/// Eigen-decomposes a symmetric matrix. Eigenvalues come back ascending
/// (ties keep diagonal order) and each eigenvector's first entry above
/// `1e-12` in magnitude is positive.
pub fn eig_sym(m: &RealMatrix, options: JacobiOptions) -> Result<SpectralBasis, SpectralError> {
    if !m.is_square() {
        return Err(SpectralError::NotSquare { rows: m.rows(), cols: m.cols() });
    }
    let asym = m.asymmetry();
    if asym > SYMMETRY_TOL {
        return Err(SpectralError::NotSymmetric(asym));
    }
    let n = m.rows();
    let mut a = m.as_slice().to_vec();
    // rows of `vt` are the eigenvectors
    let mut vt = RealMatrix::identity(n).as_slice().to_vec();
    let mut row_p = vec![0.0; n];
    let mut row_q = vec![0.0; n];

    let mut converged = n < 2;
    for _ in 0..options.max_sweeps {
        if max_off_diagonal(&a, n) < options.tol {
            converged = true;
            break;
        }
        for p in 0..n - 1 {
            for q in p + 1..n {
                let apq = a[p * n + q];
                if apq.abs() < options.tol {
                    continue;
                }
                let (app, aqq) = (a[p * n + p], a[q * n + q]);
                let theta = (aqq - app) / (2.0 * apq);
                let t = if theta == 0.0 {
                    1.0
                } else {
                    theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt())
                };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;

                for k in 0..n {
                    let (x, y) = (a[p * n + k], a[q * n + k]);
                    row_p[k] = c * x - s * y;
                    row_q[k] = s * x + c * y;
                }
                row_p[p] = app - t * apq;
                row_q[q] = aqq + t * apq;
                row_p[q] = 0.0;
                row_q[p] = 0.0;
                a[p * n..(p + 1) * n].copy_from_slice(&row_p);
                a[q * n..(q + 1) * n].copy_from_slice(&row_q);
                for k in 0..n {
                    a[k * n + p] = row_p[k];
                    a[k * n + q] = row_q[k];
                }

                let (head, tail) = vt.split_at_mut(q * n);
                let vp = &mut head[p * n..(p + 1) * n];
                let vq = &mut tail[..n];
                for (x, y) in vp.iter_mut().zip(vq.iter_mut()) {
                    let (xp, xq) = (*x, *y);
                    *x = c * xp - s * xq;
                    *y = s * xp + c * xq;
                }
            }
        }
    }
    if !converged {
        let off = max_off_diagonal(&a, n);
        if off >= options.tol {
            return Err(SpectralError::NoConvergence { sweeps: options.max_sweeps, off_diagonal: off });
        }
    }

    let lambdas: Vec<f64> = (0..n).map(|i| a[i * n + i]).collect();
    let vectors: Vec<&[f64]> = vt.chunks(n.max(1)).take(n).collect();
    Ok(SpectralBasis::from_unsorted(lambdas, |j, i| vectors[j][i], n))
}
