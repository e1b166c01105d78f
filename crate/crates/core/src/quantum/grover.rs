use std::collections::BTreeSet;
use std::f64::consts::FRAC_PI_4;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest search space the statevector simulator accepts.
pub const MAX_STATEVECTOR: usize = 1 << 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GroverMode {
    /// `sin²((2t+1)θ)` with `sin θ = √(m/N)`.
    ClosedForm,
    /// Explicit amplitudes, `t` rounds of sign flip and inversion about the
    /// mean.
    Statevector,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GroverRun {
    pub n: usize,
    pub marked: usize,
    pub iterations: u64,
    pub mode: GroverMode,
    /// Probability that measuring returns a marked index.
    pub success_probability: f64,
    /// One oracle call per iteration.
    pub oracle_queries: u64,
    /// Squared norm of the final state (statevector mode).
    pub norm: Option<f64>,
}

/// `sin²((2t+1)·asin(√(m/N)))`.
pub fn grover_success_closed_form(n: usize, m: usize, t: u64) -> f64 {
    if m == 0 {
        return 0.0;
    }
    let theta = (m as f64 / n as f64).sqrt().asin();
    ((2 * t + 1) as f64 * theta).sin().powi(2)
}

pub fn grover_simulate(
    n: usize,
    marked: &BTreeSet<usize>,
    t: u64,
    mode: GroverMode,
) -> Result<GroverRun> {
    if n == 0 {
        return Err(Error::InvalidArgument(
            "search space must be non-empty".into(),
        ));
    }
    if let Some(&bad) = marked.iter().find(|&&i| i >= n) {
        return Err(Error::OutOfRange(format!(
            "marked index {bad} outside 0..{n}"
        )));
    }
    let m = marked.len();
    let (success_probability, norm) = match mode {
        GroverMode::ClosedForm => (grover_success_closed_form(n, m, t), None),
        GroverMode::Statevector => {
            if n > MAX_STATEVECTOR {
                return Err(Error::budget(
                    "statevector size",
                    n as u128,
                    MAX_STATEVECTOR as u128,
                ));
            }
            let mut amp = vec![1.0 / (n as f64).sqrt(); n];
            for _ in 0..t {
                for &i in marked {
                    amp[i] = -amp[i];
                }
                let mean = amp.iter().sum::<f64>() / n as f64;
                for a in &mut amp {
                    *a = 2.0 * mean - *a;
                }
            }
            let success = marked.iter().map(|&i| amp[i] * amp[i]).sum();
            (success, Some(amp.iter().map(|a| a * a).sum()))
        }
    };
    Ok(GroverRun {
        n,
        marked: m,
        iterations: t,
        mode,
        success_probability,
        oracle_queries: t,
        norm,
    })
}

/// `max(⌊(π/4)·√(N/m)⌋, 1)`.
pub fn grover_optimal_iterations(n: usize, m: usize) -> Result<u64> {
    if m == 0 || m > n {
        return Err(Error::InvalidArgument(format!(
            "need 1 <= m <= N, got m = {m}, N = {n}"
        )));
    }
    Ok(((FRAC_PI_4 * (n as f64 / m as f64).sqrt()).floor() as u64).max(1))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn first(m: usize) -> BTreeSet<usize> {
        (0..m).collect()
    }

    #[test]
    fn examples() {
        let r = grover_simulate(4, &first(1), 1, GroverMode::Statevector).unwrap();
        assert!((r.success_probability - 1.0).abs() < 1e-12);
        let c = grover_simulate(16, &first(1), 3, GroverMode::ClosedForm).unwrap();
        assert!((c.success_probability - 0.961).abs() < 1e-3);
        for mode in [GroverMode::ClosedForm, GroverMode::Statevector] {
            assert_eq!(
                grover_simulate(32, &first(0), 4, mode)
                    .unwrap()
                    .success_probability,
                0.0
            );
        }
        assert!(grover_simulate(0, &first(0), 1, GroverMode::ClosedForm).is_err());
        assert!(grover_simulate(4, &[4].into(), 1, GroverMode::ClosedForm).is_err());
    }

    #[test]
    fn optimal_iterations() {
        assert_eq!(grover_optimal_iterations(1024, 1).unwrap(), 25);
        assert_eq!(grover_optimal_iterations(64, 1).unwrap(), 6);
        assert_eq!(grover_optimal_iterations(7, 7).unwrap(), 1);
        assert!(grover_optimal_iterations(8, 0).is_err());
        assert!(grover_optimal_iterations(8, 9).is_err());
        let p = grover_success_closed_form(64, 1, 6);
        assert!(p >= 0.9);
    }

    #[test]
    fn modes_agree_and_norm_is_kept() {
        for n in [1usize, 2, 5, 16, 33, 64] {
            for m in 0..=n.min(6) {
                let tmax = (2.0 * (n as f64).sqrt()) as u64;
                for t in 0..=tmax {
                    let s = grover_simulate(n, &first(m), t, GroverMode::Statevector).unwrap();
                    let c = grover_simulate(n, &first(m), t, GroverMode::ClosedForm).unwrap();
                    assert!(
                        (s.success_probability - c.success_probability).abs() < 1e-9,
                        "{n} {m} {t}"
                    );
                    assert!((s.norm.unwrap() - 1.0).abs() < 1e-12);
                }
            }
        }
    }

    #[test]
    fn statevector_cap() {
        let e = grover_simulate(MAX_STATEVECTOR + 1, &first(1), 1, GroverMode::Statevector)
            .unwrap_err();
        assert!(e.is_refusal());
    }
}
