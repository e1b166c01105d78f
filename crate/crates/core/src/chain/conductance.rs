use serde::{Deserialize, Serialize};

use crate::budget::Budget;
use crate::error::Result;
use crate::scalar::{Rational, Scalar};

use super::congestion::rho0;
use super::{Stationary, TreeChain};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ConductanceMode {
    /// Minimum over every subset of mass at most 1/2.
    Exact,
    /// Only structured cuts were tried; `upper` bounds Φ from above.
    Bound,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Conductance<T> {
    pub mode: ConductanceMode,
    /// Φ itself, in exact mode.
    pub exact: Option<T>,
    /// Smallest cut ratio found; equals Φ in exact mode.
    pub upper: T,
    /// `1/(2ρ₀)`, the congestion lower bound.
    pub lower: Rational,
    /// Nodes of the minimizing set found.
    pub witness: Vec<usize>,
}

impl<T: Scalar> Conductance<T> {
    /// `Φ ≥ 1/(2ρ₀)` for the best value available.
    pub fn meets_congestion_bound(&self) -> bool {
        self.upper.as_f64() + 1e-12 >= self.lower.as_f64()
    }
}

/// `Φ²/2 ≤ δ ≤ 2Φ`.
pub fn sandwich_holds(phi: f64, delta: f64) -> bool {
    let tol = 1e-12;
    phi * phi / 2.0 <= delta + tol && delta <= 2.0 * phi + tol
}

/// `Q(S, Sᶜ) / π(S)` for a membership mask.
pub fn cut_ratio<T: Scalar>(
    chain: &TreeChain<T>,
    pi: &Stationary<T>,
    inside: &[bool],
) -> Option<T> {
    let mut mass = T::zero();
    let mut flow = T::zero();
    for x in (0..chain.len()).filter(|&x| inside[x]) {
        mass = mass + pi.node[x].clone();
        for (y, p) in chain.row(x) {
            if !inside[*y] {
                flow = flow + pi.node[x].clone() * p.clone();
            }
        }
    }
    (!mass.is_zero()).then(|| flow / mass)
}

fn mass_ok<T: Scalar>(pi: &Stationary<T>, inside: &[bool]) -> bool {
    let mass = pi
        .node
        .iter()
        .zip(inside)
        .filter(|(_, &i)| i)
        .fold(T::zero(), |a, (v, _)| a + v.clone());
    !mass.is_zero() && mass <= T::ratio(1, 2)
}

/// Exact Φ by subset enumeration when the chain has at most
/// `max_exact_conductance_nodes` nodes, otherwise the best subtree or layer
/// cut as an upper bound. The lower bound `1/(2ρ₀)` is always attached.
pub fn conductance<T: Scalar>(
    chain: &TreeChain<T>,
    pi: &Stationary<T>,
    budget: &Budget,
) -> Result<Conductance<T>> {
    let n = chain.len();
    let lower = (rho0(chain.d())? * Rational::from_count(2)).recip();
    let exact = n <= budget.max_exact_conductance_nodes && n < 64;

    let mut best: Option<(T, Vec<bool>)> = None;
    let mut consider = |inside: Vec<bool>| {
        if !mass_ok(pi, &inside) {
            return;
        }
        if let Some(r) = cut_ratio(chain, pi, &inside) {
            if best.as_ref().is_none_or(|(b, _)| r < *b) {
                best = Some((r, inside));
            }
        }
    };

    if exact {
        for mask in 1u64..(1u64 << n) {
            consider((0..n).map(|i| mask >> i & 1 == 1).collect());
        }
    } else {
        // Subtrees below one node per layer (all nodes of a layer are
        // equivalent by symmetry), then layer suffixes.
        for l in 1..=chain.d() {
            let root = chain.layer_range(l).start;
            let mut inside = vec![false; n];
            let mut stack = vec![root];
            while let Some(v) = stack.pop() {
                inside[v] = true;
                stack.extend(chain.children(v));
            }
            consider(inside);
        }
        for l in 1..=chain.d() {
            let start = chain.layer_range(l).start;
            consider((0..n).map(|i| i >= start).collect());
        }
    }

    let (upper, inside) = best.expect("some non-empty set has mass at most 1/2");
    Ok(Conductance {
        mode: if exact {
            ConductanceMode::Exact
        } else {
            ConductanceMode::Bound
        },
        exact: exact.then(|| upper.clone()),
        upper,
        lower,
        witness: (0..n).filter(|&i| inside[i]).collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chain::{build_tree_chain, spectral_gap, stationary_distribution};

    #[test]
    fn d1_is_one_half() {
        let c = build_tree_chain::<Rational>(1, &Budget::default()).unwrap();
        let pi = stationary_distribution(&c);
        let phi = conductance(&c, &pi, &Budget::default()).unwrap();
        assert_eq!(phi.mode, ConductanceMode::Exact);
        assert_eq!(phi.exact, Some(Rational::ratio(1, 2)));
        assert_eq!(phi.lower, Rational::ratio(1, 6));
        assert!(phi.meets_congestion_bound());
        assert!(sandwich_holds(0.5, 0.5));
    }

    #[test]
    fn bound_mode_is_an_upper_bound() {
        let budget = Budget::default();
        let c = build_tree_chain::<f64>(2, &budget).unwrap();
        let pi = stationary_distribution(&c);
        let exact = conductance(&c, &pi, &budget).unwrap();
        let tight = Budget {
            max_exact_conductance_nodes: 3,
            ..budget
        };
        let bound = conductance(&c, &pi, &tight).unwrap();
        assert_eq!(bound.mode, ConductanceMode::Bound);
        assert!(bound.exact.is_none());
        assert!(bound.upper >= exact.upper - 1e-15);
        let delta = spectral_gap(&c, &budget).unwrap().gap;
        assert!(sandwich_holds(exact.upper, delta));
        assert!(exact.meets_congestion_bound());
    }

    #[test]
    fn sandwich_rejects_outliers() {
        assert!(!sandwich_holds(0.1, 0.5));
        assert!(!sandwich_holds(0.9, 0.1));
    }
}
