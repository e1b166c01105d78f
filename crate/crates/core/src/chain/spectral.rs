use nalgebra::{DMatrix, SymmetricEigen};
use serde::{Deserialize, Serialize};

use crate::budget::Budget;
use crate::error::Result;
use crate::scalar::{Rational, Scalar};

use super::congestion::{rho0, rho_closed_form};
use super::stationary::{layer_chain, stationary_distribution};
use super::TreeChain;

/// Tolerance on computed eigenvalues.
pub const EIGEN_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SpectralMode {
    /// Dense eigensolve of the full chain.
    Full,
    /// The full chain was over the node cap; only the layer chain was solved.
    LayerOnly,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SpectralReport {
    pub d: usize,
    pub nodes: usize,
    pub mode: SpectralMode,
    /// Descending. Of the full chain in [`SpectralMode::Full`], of the layer
    /// chain otherwise.
    pub eigenvalues: Vec<f64>,
    pub lambda2: f64,
    /// `1 − λ₂`.
    pub gap: f64,
    pub min_eigenvalue: f64,
    /// Gap of the layer chain, always computed.
    pub layer_gap: f64,
    pub rho: Vec<Rational>,
    pub rho_max: Rational,
    /// `1/(8ρ₀²)`.
    pub congestion_bound: f64,
    /// `2⁻⁹ d⁻²`.
    pub inverse_square_bound: f64,
}

impl SpectralReport {
    pub fn top_is_one(&self) -> bool {
        (self.eigenvalues[0] - 1.0).abs() <= EIGEN_TOL
    }

    pub fn nonnegative(&self) -> bool {
        self.min_eigenvalue >= -EIGEN_TOL
    }

    pub fn meets_congestion_bound(&self) -> bool {
        self.gap + EIGEN_TOL >= self.congestion_bound
    }

    pub fn meets_inverse_square_bound(&self) -> bool {
        self.gap > self.inverse_square_bound
    }
}

/// Eigenvalues of a reversible transition matrix, via the symmetric matrix
/// `D^{1/2} P D^{-1/2}` with `D = diag(π)`. Descending.
pub fn reversible_spectrum(p: &DMatrix<f64>, pi: &[f64]) -> Vec<f64> {
    let n = pi.len();
    let root: Vec<f64> = pi.iter().map(|v| v.sqrt()).collect();
    let s = DMatrix::from_fn(n, n, |i, j| root[i] * p[(i, j)] / root[j]);
    // Symmetrize away rounding noise before the solver sees it.
    let s = (&s + s.transpose()) * 0.5;
    let mut values: Vec<f64> = SymmetricEigen::new(s).eigenvalues.iter().copied().collect();
    values.sort_by(|a, b| b.total_cmp(a));
    values
}

/// Spectrum and gap of the tree chain, compared against the congestion
/// bound `1/(8ρ₀²)` and `2⁻⁹d⁻²`.
pub fn spectral_gap<T: Scalar>(chain: &TreeChain<T>, budget: &Budget) -> Result<SpectralReport> {
    let d = chain.d();
    let pi = stationary_distribution(chain);

    let layers = layer_chain(chain);
    let q = DMatrix::from_fn(d + 1, d + 1, |i, j| layers.q[i][j].as_f64());
    let layer_pi: Vec<f64> = layers.stationary.iter().map(Scalar::as_f64).collect();
    let layer_values = reversible_spectrum(&q, &layer_pi);
    let layer_gap = 1.0 - layer_values[1];

    let (mode, eigenvalues) = if chain.len() <= budget.max_eigen_nodes {
        let n = chain.len();
        let mut p = DMatrix::zeros(n, n);
        for i in 0..n {
            for (j, v) in chain.row(i) {
                p[(i, *j)] = v.as_f64();
            }
        }
        let node_pi: Vec<f64> = pi.node.iter().map(Scalar::as_f64).collect();
        (SpectralMode::Full, reversible_spectrum(&p, &node_pi))
    } else {
        (SpectralMode::LayerOnly, layer_values)
    };

    let lambda2 = eigenvalues[1];
    let rho_max = rho0(d)?;
    let r = rho_max.as_f64();
    Ok(SpectralReport {
        d,
        nodes: chain.len(),
        mode,
        min_eigenvalue: *eigenvalues.last().unwrap(),
        lambda2,
        gap: 1.0 - lambda2,
        eigenvalues,
        layer_gap,
        rho: rho_closed_form(d)?,
        rho_max,
        congestion_bound: 1.0 / (8.0 * r * r),
        inverse_square_bound: 1.0 / (512.0 * (d * d) as f64),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chain::build_tree_chain;

    fn report(d: usize) -> SpectralReport {
        let c = build_tree_chain::<f64>(d, &Budget::default()).unwrap();
        spectral_gap(&c, &Budget::default()).unwrap()
    }

    #[test]
    fn d1_spectrum() {
        let r = report(1);
        assert_eq!(r.mode, SpectralMode::Full);
        for (got, want) in r.eigenvalues.iter().zip([1.0, 0.5, 0.0]) {
            assert!((got - want).abs() < EIGEN_TOL, "{:?}", r.eigenvalues);
        }
        assert!((r.gap - 0.5).abs() < EIGEN_TOL);
        assert!((r.congestion_bound - 1.0 / 72.0).abs() < 1e-15);
        assert!((r.inverse_square_bound - 1.0 / 512.0).abs() < 1e-15);
    }

    #[test]
    fn bounds_hold() {
        for d in 1..=3 {
            let r = report(d);
            assert!(r.top_is_one() && r.nonnegative());
            assert!(
                r.meets_congestion_bound() && r.meets_inverse_square_bound(),
                "d = {d}"
            );
            assert!(r.gap > 0.0 && r.gap <= 1.0);
            // Lumping keeps the layer spectrum inside the full one.
            assert!(r.layer_gap + EIGEN_TOL >= r.gap);
        }
        assert!((report(2).gap - (1.0 - 0.5_f64.sqrt()) / 2.0).abs() < 1e-9);
    }

    #[test]
    fn layer_only_above_cap() {
        let c = build_tree_chain::<f64>(2, &Budget::default()).unwrap();
        let small = Budget {
            max_eigen_nodes: 5,
            ..Budget::default()
        };
        let r = spectral_gap(&c, &small).unwrap();
        assert_eq!(r.mode, SpectralMode::LayerOnly);
        assert_eq!(r.eigenvalues.len(), 3);
        assert_eq!(r.gap, r.layer_gap);
    }
}
