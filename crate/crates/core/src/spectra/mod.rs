//! Adjacency spectra, energy, and exact determinants.

mod eigen;
mod exact;

pub use eigen::{symmetric_eigenvalues, MAX_SWEEPS};
pub use exact::{char_poly, exact_determinant, is_nonsingular, CharPoly, ExactDet, CHARPOLY_MAX_ORDER};

use crate::error::Result;
use crate::graph::Graph;

/// Absolute accuracy guaranteed for each eigenvalue of a 0/1 adjacency matrix
/// of order at most 62.
pub const EIGEN_TOLERANCE: f64 = 1e-10;

#[derive(Clone, Debug, PartialEq)]
pub struct Spectrum {
    /// Sorted descending.
    pub eigenvalues: Vec<f64>,
    pub energy: f64,
    /// Largest absolute eigenvalue; equals the largest eigenvalue.
    pub mu1: f64,
    /// Second-largest absolute eigenvalue, `0` for a single vertex.
    pub mu2: f64,
    pub tolerance: f64,
}

impl Spectrum {
    pub fn from_eigenvalues(mut eigenvalues: Vec<f64>) -> Spectrum {
        eigenvalues.sort_by(|a, b| b.total_cmp(a));
        let n = eigenvalues.len();
        let energy = eigenvalues.iter().map(|x| x.abs()).sum();
        let mu1 = eigenvalues.first().copied().unwrap_or(0.0);
        let mu2 = if n >= 2 { eigenvalues[1].abs().max(eigenvalues[n - 1].abs()) } else { 0.0 };
        Spectrum { eigenvalues, energy, mu1, mu2, tolerance: EIGEN_TOLERANCE }
    }

    pub fn lambda1(&self) -> f64 {
        self.eigenvalues[0]
    }

    pub fn lambda_min(&self) -> f64 {
        *self.eigenvalues.last().expect("non-empty spectrum")
    }

    pub fn product(&self) -> f64 {
        self.eigenvalues.iter().product()
    }
}

pub fn eigenvalues(g: &Graph) -> Result<Spectrum> {
    let n = g.order();
    let mut a = vec![0.0; n * n];
    for (u, v) in g.edges() {
        a[u * n + v] = 1.0;
        a[v * n + u] = 1.0;
    }
    Ok(Spectrum::from_eigenvalues(symmetric_eigenvalues(a, n)?))
}

pub fn energy(g: &Graph) -> Result<f64> {
    Ok(eigenvalues(g)?.energy)
}
