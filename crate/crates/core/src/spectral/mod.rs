//! Spectral translation baseline: combinatorial Laplacian `L = D - W`, its
//! eigenbasis `L = U Λ Uᵀ`, the graph Fourier transform `x̂ = Uᵀ x`, the
//! convolution `U (Uᵀ x₁ ⊙ Uᵀ x₂)`, and translation as convolution with a
//! unit impulse.

mod jacobi;
mod matrix;

use thiserror::Error;

use crate::graph::{Graph, GridSpec, VertexId};
use crate::signals::Signal;

pub use jacobi::{eig_sym, JacobiOptions};
pub use matrix::RealMatrix;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SpectralError {
    #[error("matrix is {rows}x{cols}, expected square")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix is not symmetric (max asymmetry {0:e})")]
    NotSymmetric(f64),
    #[error("Jacobi did not converge in {sweeps} sweeps (max off-diagonal {off_diagonal:e})")]
    NoConvergence { sweeps: usize, off_diagonal: f64 },
    #[error("signal has {found} values, basis has {expected}")]
    SizeMismatch { expected: usize, found: usize },
}

/// Magnitude below which an entry counts as zero for the sign convention.
const SIGN_EPS: f64 = 1e-12;

/// Default threshold for counting an entry as part of a signal's support.
pub const SUPPORT_THRESHOLD: f64 = 1e-6;

/// Orthonormal eigenvectors (columns of `u`) with ascending eigenvalues.
#[derive(Clone, Debug, PartialEq)]
pub struct SpectralBasis {
    pub u: RealMatrix,
    pub lambdas: Vec<f64>,
}

impl SpectralBasis {
    /// Sorts eigenpairs ascending (stable in `j`), fixes signs, and lays
    /// the vectors out as columns. `entry(j, i)` is entry `i` of vector `j`.
    fn from_unsorted(lambdas: Vec<f64>, entry: impl Fn(usize, usize) -> f64, n: usize) -> Self {
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&a, &b| lambdas[a].total_cmp(&lambdas[b]));
        let mut u = RealMatrix::zeros(n, n);
        for (col, &j) in order.iter().enumerate() {
            let flip = (0..n)
                .map(|i| entry(j, i))
                .find(|x| x.abs() > SIGN_EPS)
                .is_some_and(|x| x < 0.0);
            let sign = if flip { -1.0 } else { 1.0 };
            for i in 0..n {
                u[(i, col)] = sign * entry(j, i);
            }
        }
        SpectralBasis { u, lambdas: order.iter().map(|&j| lambdas[j]).collect() }
    }

    pub fn n(&self) -> usize {
        self.lambdas.len()
    }

    /// `‖UᵀU − I‖_max`.
    pub fn orthonormality_error(&self) -> f64 {
        let ut = self.u.transpose();
        ut.matmul(&self.u).max_abs_diff(&RealMatrix::identity(self.n()))
    }

    /// `‖L U − U diag(λ)‖_max`.
    pub fn residual(&self, l: &RealMatrix) -> f64 {
        let lu = l.matmul(&self.u);
        let mut worst: f64 = 0.0;
        for i in 0..self.n() {
            for j in 0..self.n() {
                worst = worst.max((lu[(i, j)] - self.u[(i, j)] * self.lambdas[j]).abs());
            }
        }
        worst
    }

    /// `‖U Λ Uᵀ − L‖_max`.
    pub fn reconstruction_error(&self, l: &RealMatrix) -> f64 {
        let n = self.n();
        let mut scaled = self.u.clone();
        for i in 0..n {
            for j in 0..n {
                scaled[(i, j)] *= self.lambdas[j];
            }
        }
        scaled.matmul(&self.u.transpose()).max_abs_diff(l)
    }

    fn check(&self, x: &Signal) -> Result<(), SpectralError> {
        if x.len() != self.n() {
            return Err(SpectralError::SizeMismatch { expected: self.n(), found: x.len() });
        }
        Ok(())
    }
}

/// `D − W` as a dense matrix.
pub fn laplacian(g: &Graph) -> RealMatrix {
    let n = g.num_vertices();
    let mut l = RealMatrix::zeros(n, n);
    for v in g.vertices() {
        l[(v.0, v.0)] = g.degree(v) as f64;
        for &w in g.neighbors(v) {
            l[(v.0, w.0)] = -1.0;
        }
    }
    l
}

/// Laplacian eigenbasis of an arbitrary graph via Jacobi.
pub fn graph_basis(g: &Graph) -> Result<SpectralBasis, SpectralError> {
    eig_sym(&laplacian(g), JacobiOptions::default())
}

/// Laplacian eigenbasis of a grid graph, assembled from the bases of its
/// one-dimensional factors. A grid is the Cartesian product of paths (or
/// cycles), whose Laplacian is `Σ_i I ⊗ .. ⊗ L_i ⊗ .. ⊗ I`, so tensor
/// products of factor eigenvectors are eigenvectors with summed
/// eigenvalues. Only the small factors go through Jacobi, which makes
/// image-sized grids tractable.
pub fn grid_basis(spec: &GridSpec) -> Result<SpectralBasis, SpectralError> {
    let factors = spec
        .lengths()
        .iter()
        .map(|&len| {
            let factor = GridSpec::new(vec![len], spec.is_cyclic()).expect("factor of a valid grid");
            graph_basis(&crate::graph::grid_graph(&factor))
        })
        .collect::<Result<Vec<_>, _>>()?;
    let n = spec.num_vertices();
    let lengths = spec.lengths();

    // vector index j and vertex index i share the row-major encoding
    let mut lambdas = vec![0.0; n];
    for (j, lambda) in lambdas.iter_mut().enumerate() {
        let combo = spec.coord(VertexId(j));
        *lambda = combo.iter().zip(&factors).map(|(&k, f)| f.lambdas[k]).sum();
    }
    let coords: Vec<Vec<usize>> = (0..n).map(|i| spec.coord(VertexId(i))).collect();
    let mut vectors = vec![0.0; n * n];
    for j in 0..n {
        let combo = &coords[j];
        for i in 0..n {
            let mut x = 1.0;
            for d in 0..lengths.len() {
                x *= factors[d].u[(coords[i][d], combo[d])];
            }
            vectors[j * n + i] = x;
        }
    }
    Ok(SpectralBasis::from_unsorted(lambdas, |j, i| vectors[j * n + i], n))
}

/// Graph Fourier transform `Uᵀ x`.
pub fn gft(basis: &SpectralBasis, x: &Signal) -> Result<Signal, SpectralError> {
    basis.check(x)?;
    Ok(Signal::from_finite(basis.u.transpose_mul_vec(x.values())))
}

/// Inverse transform `U x̂`.
pub fn igft(basis: &SpectralBasis, xhat: &Signal) -> Result<Signal, SpectralError> {
    basis.check(xhat)?;
    Ok(Signal::from_finite(basis.u.mul_vec(xhat.values())))
}

/// `U (Uᵀ x₁ ⊙ Uᵀ x₂)`.
pub fn graph_convolution(basis: &SpectralBasis, x1: &Signal, x2: &Signal) -> Result<Signal, SpectralError> {
    let a = gft(basis, x1)?;
    let b = gft(basis, x2)?;
    let product: Vec<f64> = a.values().iter().zip(b.values()).map(|(p, q)| p * q).collect();
    igft(basis, &Signal::from_finite(product))
}

/// Translation of `x` towards vertex `v`: convolution with the impulse at
/// `v`, optionally multiplied by `√n`.
pub fn spectral_translate(
    basis: &SpectralBasis,
    x: &Signal,
    v: VertexId,
    scaled: bool,
) -> Result<Signal, SpectralError> {
    basis.check(x)?;
    if v.0 >= basis.n() {
        return Err(SpectralError::SizeMismatch { expected: basis.n(), found: v.0 + 1 });
    }
    let y = graph_convolution(basis, x, &Signal::delta(basis.n(), v))?;
    Ok(if scaled { y.scaled((basis.n() as f64).sqrt()) } else { y })
}

/// Side-by-side metrics for a graphical and a spectral translation of the
/// same signal.
#[derive(Clone, Debug, PartialEq)]
pub struct ComparisonReport {
    pub l2_distance: f64,
    /// 1 for two zero signals, 0 when exactly one is zero.
    pub cosine_similarity: f64,
    /// `‖y‖² / ‖x‖²`; `None` for a zero original.
    pub energy_ratio_graphical: Option<f64>,
    pub energy_ratio_spectral: Option<f64>,
    pub support_graphical: usize,
    pub support_spectral: usize,
    pub support_threshold: f64,
}

impl std::fmt::Display for ComparisonReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let ratio = |r: Option<f64>| r.map_or("undefined".to_string(), |r| format!("{r:.6}"));
        writeln!(f, "l2_distance: {:.6}", self.l2_distance)?;
        writeln!(f, "cosine_similarity: {:.6}", self.cosine_similarity)?;
        writeln!(f, "energy_ratio_graphical: {}", ratio(self.energy_ratio_graphical))?;
        writeln!(f, "energy_ratio_spectral: {}", ratio(self.energy_ratio_spectral))?;
        writeln!(f, "support_graphical: {}", self.support_graphical)?;
        writeln!(f, "support_spectral: {}", self.support_spectral)?;
        writeln!(f, "support_threshold: {:e}", self.support_threshold)
    }
}

pub fn compare_translations(
    original: &Signal,
    y_graphical: &Signal,
    y_spectral: &Signal,
    support_threshold: f64,
) -> Result<ComparisonReport, SpectralError> {
    let n = original.len();
    for y in [y_graphical, y_spectral] {
        if y.len() != n {
            return Err(SpectralError::SizeMismatch { expected: n, found: y.len() });
        }
    }
    let (a, b) = (y_graphical.values(), y_spectral.values());
    let l2_distance = a.iter().zip(b).map(|(p, q)| (p - q) * (p - q)).sum::<f64>().sqrt();
    let (na, nb) = (y_graphical.norm(), y_spectral.norm());
    let cosine_similarity = match (na == 0.0, nb == 0.0) {
        (true, true) => 1.0,
        (true, false) | (false, true) => 0.0,
        _ => a.iter().zip(b).map(|(p, q)| p * q).sum::<f64>() / (na * nb),
    };
    let energy = original.norm().powi(2);
    let ratio = |y: &Signal| (energy > 0.0).then(|| y.norm().powi(2) / energy);
    Ok(ComparisonReport {
        l2_distance,
        cosine_similarity,
        energy_ratio_graphical: ratio(y_graphical),
        energy_ratio_spectral: ratio(y_spectral),
        support_graphical: y_graphical.support_size(support_threshold),
        support_spectral: y_spectral.support_size(support_threshold),
        support_threshold,
    })
}
