use serde::{Deserialize, Serialize};

use crate::scalar::Scalar;

use super::TreeChain;

/// Stationary law of the tree chain, per layer and per node.
#[derive(Debug, Clone, PartialEq)]
pub struct Stationary<T> {
    /// `π̃_l`, the total mass of layer `l`.
    pub layer: Vec<T>,
    /// `π_j = π̃_l / (d+1)^l`, indexed like the chain.
    pub node: Vec<T>,
}

impl<T: Scalar> Stationary<T> {
    /// Smallest node mass.
    pub fn min(&self) -> T {
        self.node
            .iter()
            .cloned()
            .reduce(|m, v| if v < m { v } else { m })
            .unwrap_or_else(T::zero)
    }
}

/// Closed form: `π̃_0 = π̃_d = 1/(2d)`, `π̃_l = 1/d` in between, spread evenly
/// over each layer.
pub fn stationary_distribution<T: Scalar>(chain: &TreeChain<T>) -> Stationary<T> {
    let d = chain.d();
    let di = d as i64;
    let layer: Vec<T> = (0..=d)
        .map(|l| {
            if l == 0 || l == d {
                T::ratio(1, 2 * di)
            } else {
                T::ratio(1, di)
            }
        })
        .collect();
    let mut node = Vec::with_capacity(chain.len());
    for (l, mass) in layer.iter().enumerate() {
        let range = chain.layer_range(l);
        let share = mass.clone() / T::from_count(range.len());
        node.extend(range.map(|_| share.clone()));
    }
    Stationary { layer, node }
}

/// `πP` computed from the sparse rows.
pub fn apply_left<T: Scalar>(chain: &TreeChain<T>, pi: &[T]) -> Vec<T> {
    let mut out = vec![T::zero(); chain.len()];
    for (i, w) in pi.iter().enumerate() {
        for (j, p) in chain.row(i) {
            out[*j] = out[*j].clone() + w.clone() * p.clone();
        }
    }
    out
}

/// Detailed balance `π_x p_{xy} = π_y p_{yx}` on every transition. For a
/// tree-supported chain this is equivalent to Kolmogorov's loop criterion.
pub fn check_reversibility<T: Scalar>(chain: &TreeChain<T>, pi: &Stationary<T>) -> bool {
    (0..chain.len()).all(|x| {
        chain.row(x).iter().all(|(y, p)| {
            let forward = pi.node[x].clone() * p.clone();
            let backward = pi.node[*y].clone() * chain.p(*y, x);
            forward.approx_eq(&backward)
        })
    })
}

/// Outcome of [`verify_stationary`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct StationaryCheck {
    pub rows_sum_to_one: bool,
    pub invariant: bool,
    pub normalized: bool,
    pub detailed_balance: bool,
}

impl StationaryCheck {
    pub fn all(&self) -> bool {
        self.rows_sum_to_one && self.invariant && self.normalized && self.detailed_balance
    }
}

/// Checks the chain and `π` against each other. Exact when `T` is.
pub fn verify_stationary<T: Scalar>(chain: &TreeChain<T>, pi: &Stationary<T>) -> StationaryCheck {
    let one = T::one();
    let moved = apply_left(chain, &pi.node);
    let total = pi.node.iter().fold(T::zero(), |a, v| a + v.clone());
    StationaryCheck {
        rows_sum_to_one: (0..chain.len()).all(|i| chain.row_sum(i).approx_eq(&one)),
        invariant: moved.iter().zip(&pi.node).all(|(a, b)| a.approx_eq(b)),
        normalized: total.approx_eq(&one),
        detailed_balance: check_reversibility(chain, pi),
    }
}

/// The chain lumped by layer: a birth–death chain on `0..=d`.
#[derive(Debug, Clone, PartialEq)]
pub struct LayerChain<T> {
    /// Tridiagonal `(d+1)×(d+1)` transition matrix.
    pub q: Vec<Vec<T>>,
    /// Stationary law of `q`, from its own detailed-balance recursion.
    pub stationary: Vec<T>,
}

pub fn layer_chain<T: Scalar>(chain: &TreeChain<T>) -> LayerChain<T> {
    let d = chain.d();
    let mut q = vec![vec![T::zero(); d + 1]; d + 1];
    for (l, row) in q.iter_mut().enumerate() {
        let rep = chain.layer_range(l).start;
        for (j, p) in chain.row(rep) {
            let to = chain.layer(*j);
            row[to] = row[to].clone() + p.clone();
        }
    }
    let mut weights = vec![T::one()];
    for l in 0..d {
        let next = weights[l].clone() * q[l][l + 1].clone() / q[l + 1][l].clone();
        weights.push(next);
    }
    let total = weights.iter().fold(T::zero(), |a, w| a + w.clone());
    let stationary = weights.into_iter().map(|w| w / total.clone()).collect();
    LayerChain { q, stationary }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::budget::Budget;
    use crate::chain::build_tree_chain;
    use crate::scalar::Rational;

    fn r(n: i64, d: i64) -> Rational {
        Rational::ratio(n, d)
    }

    fn exact(d: usize) -> TreeChain<Rational> {
        build_tree_chain(d, &Budget::default()).unwrap()
    }

    #[test]
    fn small_cases() {
        let pi = stationary_distribution(&exact(1));
        assert_eq!(pi.layer, [r(1, 2), r(1, 2)]);
        assert_eq!(pi.node, [r(1, 2), r(1, 4), r(1, 4)]);
        assert_eq!(pi.min(), r(1, 4));
        let pi = stationary_distribution(&exact(2));
        assert_eq!(pi.layer, [r(1, 4), r(1, 2), r(1, 4)]);
    }

    #[test]
    fn d1_balance_by_hand() {
        let c = exact(1);
        let pi = stationary_distribution(&c);
        assert_eq!(pi.node[0].clone() * c.p(0, 1), r(1, 8));
        assert_eq!(pi.node[1].clone() * c.p(1, 0), r(1, 8));
    }

    #[test]
    fn identities_hold_exactly() {
        for d in 1..=4 {
            let c = exact(d);
            let check = verify_stationary(&c, &stationary_distribution(&c));
            assert!(check.all(), "d = {d}: {check:?}");
        }
    }

    #[test]
    fn perturbed_edge_breaks_balance() {
        let mut c = exact(2);
        let pi = stationary_distribution(&c);
        c.set_transition(1, 0, r(1, 8));
        c.set_transition(1, 1, r(5, 8));
        assert!(verify_stationary(&c, &pi).rows_sum_to_one);
        assert!(!check_reversibility(&c, &pi));
        assert!(!verify_stationary(&c, &pi).invariant);
    }

    #[test]
    fn layer_chain_agrees() {
        for d in 1..=4 {
            let c = exact(d);
            let lc = layer_chain(&c);
            assert_eq!(lc.stationary, stationary_distribution(&c).layer);
            for (l, row) in lc.q.iter().enumerate() {
                assert_eq!(row.iter().fold(r(0, 1), |a, v| a + v.clone()), r(1, 1));
                for (m, v) in row.iter().enumerate() {
                    if l.abs_diff(m) > 1 {
                        assert_eq!(*v, r(0, 1));
                    }
                }
            }
            let moved: Vec<Rational> = (0..=d)
                .map(|m| {
                    (0..=d).fold(r(0, 1), |a, l| {
                        a + lc.stationary[l].clone() * lc.q[l][m].clone()
                    })
                })
                .collect();
            assert_eq!(moved, lc.stationary);
        }
    }
}
