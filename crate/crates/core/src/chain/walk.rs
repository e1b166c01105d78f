use std::collections::BTreeSet;

use num_bigint::BigInt;
use rand::distributions::{Distribution, WeightedIndex};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::{Rational, Scalar};
use crate::util::mix_seed;

use super::{Stationary, TreeAddress, TreeChain};

/// Result of one run of the classical walk search.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WalkOutcome {
    /// First marked node seen, or `None` for "no marked state".
    pub found: Option<TreeAddress>,
    /// Transitions simulated.
    pub walk_steps: u64,
    /// Membership checks made.
    pub checks: u64,
}

/// Precomputed samplers for the start law and each row of the chain.
#[derive(Debug, Clone)]
pub struct WalkSampler {
    d: usize,
    start: WeightedIndex<f64>,
    rows: Vec<(Vec<usize>, WeightedIndex<f64>)>,
}

impl WalkSampler {
    pub fn new<T: Scalar>(chain: &TreeChain<T>, start: &Stationary<T>) -> Result<Self> {
        let weights = |w: Vec<f64>| {
            WeightedIndex::new(w)
                .map_err(|e| Error::InvalidArgument(format!("bad distribution: {e}")))
        };
        let rows = (0..chain.len())
            .map(|i| {
                let targets = chain.row(i).iter().map(|(j, _)| *j).collect();
                let probs = chain.row(i).iter().map(|(_, p)| p.as_f64()).collect();
                Ok((targets, weights(probs)?))
            })
            .collect::<Result<_>>()?;
        Ok(WalkSampler {
            d: chain.d(),
            start: weights(start.node.iter().map(Scalar::as_f64).collect())?,
            rows,
        })
    }

    /// Sample a start node, then `t₂` times: return it if marked, otherwise
    /// replace it by the node reached after `t₁` steps of the chain.
    pub fn search(&self, marked: &[bool], t1: u64, t2: u64, seed: u64) -> Result<WalkOutcome> {
        if t1 == 0 || t2 == 0 {
            return Err(Error::InvalidArgument(
                "t1 and t2 must be at least 1".into(),
            ));
        }
        if marked.len() != self.rows.len() {
            return Err(Error::InvalidArgument(
                "marked mask does not match the chain".into(),
            ));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut x = self.start.sample(&mut rng);
        let mut out = WalkOutcome {
            found: None,
            walk_steps: 0,
            checks: 0,
        };
        for _ in 0..t2 {
            out.checks += 1;
            if marked[x] {
                out.found = Some(TreeAddress::from_index(self.d, x)?);
                return Ok(out);
            }
            for _ in 0..t1 {
                let (targets, dist) = &self.rows[x];
                x = targets[dist.sample(&mut rng)];
            }
            out.walk_steps += t1;
        }
        Ok(out)
    }
}

/// Marks as a membership vector over the chain's nodes.
pub fn marked_mask<T: Scalar>(
    chain: &TreeChain<T>,
    marked: &BTreeSet<TreeAddress>,
) -> Result<Vec<bool>> {
    let mut mask = vec![false; chain.len()];
    for a in marked {
        mask[chain.index_of(a)?] = true;
    }
    Ok(mask)
}

/// One seeded run of the classical walk search started from `π`.
pub fn classical_walk_search<T: Scalar>(
    chain: &TreeChain<T>,
    pi: &Stationary<T>,
    marked: &BTreeSet<TreeAddress>,
    t1: u64,
    t2: u64,
    seed: u64,
) -> Result<WalkOutcome> {
    WalkSampler::new(chain, pi)?.search(&marked_mask(chain, marked)?, t1, t2, seed)
}

/// Successful runs out of `trials`, trial `i` seeded from `(master_seed, i)`.
pub fn walk_success_count<T: Scalar>(
    chain: &TreeChain<T>,
    pi: &Stationary<T>,
    marked: &BTreeSet<TreeAddress>,
    t1: u64,
    t2: u64,
    trials: u64,
    master_seed: u64,
) -> Result<u64> {
    let sampler = WalkSampler::new(chain, pi)?;
    let mask = marked_mask(chain, marked)?;
    let mut wins = 0;
    for i in 0..trials {
        if sampler
            .search(&mask, t1, t2, mix_seed(master_seed, i))?
            .found
            .is_some()
        {
            wins += 1;
        }
    }
    Ok(wins)
}

/// Probability that the walk search succeeds, by propagating the law of the
/// unmarked walker instead of sampling.
pub fn exact_walk_success_probability<T: Scalar>(
    chain: &TreeChain<T>,
    pi: &Stationary<T>,
    marked: &BTreeSet<TreeAddress>,
    t1: u64,
    t2: u64,
) -> Result<f64> {
    if t1 == 0 || t2 == 0 {
        return Err(Error::InvalidArgument(
            "t1 and t2 must be at least 1".into(),
        ));
    }
    let mask = marked_mask(chain, marked)?;
    let mut law: Vec<f64> = pi.node.iter().map(Scalar::as_f64).collect();
    let mut success = 0.0;
    for round in 0..t2 {
        for (v, &m) in law.iter_mut().zip(&mask) {
            if m {
                success += *v;
                *v = 0.0;
            }
        }
        if round + 1 == t2 {
            break;
        }
        for _ in 0..t1 {
            let mut next = vec![0.0; law.len()];
            for (i, w) in law.iter().enumerate() {
                for (j, p) in chain.row(i) {
                    next[*j] += w * p.as_f64();
                }
            }
            law = next;
        }
    }
    Ok(success)
}

/// `ε ≥ marked/(2d(d+1)^d)`: the stationary mass of `marked` leaves.
pub fn epsilon_marked_bound(d: usize, marked_leaves: u64) -> Result<Rational> {
    if d == 0 {
        return Err(Error::OutOfRange("the tree chain needs d >= 1".into()));
    }
    let den = BigInt::from(2 * d) * BigInt::from(d + 1).pow(d as u32);
    Ok(Rational::new(BigInt::from(marked_leaves), den))
}

/// Stationary mass of a set of nodes.
pub fn marked_mass<T: Scalar>(
    chain: &TreeChain<T>,
    pi: &Stationary<T>,
    marked: &BTreeSet<TreeAddress>,
) -> Result<T> {
    marked.iter().try_fold(T::zero(), |acc, a| {
        Ok(acc + pi.node[chain.index_of(a)?].clone())
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::budget::Budget;
    use crate::chain::{build_tree_chain, stationary_distribution};

    fn setup(d: usize) -> (TreeChain<Rational>, Stationary<Rational>) {
        let c = build_tree_chain(d, &Budget::default()).unwrap();
        let pi = stationary_distribution(&c);
        (c, pi)
    }

    #[test]
    fn everything_marked() {
        let (c, pi) = setup(2);
        let all: BTreeSet<_> = (0..c.len()).map(|i| c.address(i)).collect();
        let out = classical_walk_search(&c, &pi, &all, 3, 5, 1).unwrap();
        assert!(out.found.is_some());
        assert_eq!((out.checks, out.walk_steps), (1, 0));
        assert_eq!(
            exact_walk_success_probability(&c, &pi, &all, 3, 5).unwrap(),
            1.0
        );
    }

    #[test]
    fn nothing_marked() {
        let (c, pi) = setup(2);
        let out = classical_walk_search(&c, &pi, &BTreeSet::new(), 3, 5, 1).unwrap();
        assert_eq!(out.found, None);
        assert_eq!((out.checks, out.walk_steps), (5, 15));
    }

    #[test]
    fn deterministic_per_seed() {
        let (c, pi) = setup(2);
        let leaf: BTreeSet<_> = [TreeAddress::from_path(2, &[1, 1]).unwrap()].into();
        let a = walk_success_count(&c, &pi, &leaf, 7, 36, 50, 9).unwrap();
        let b = walk_success_count(&c, &pi, &leaf, 7, 36, 50, 9).unwrap();
        assert_eq!(a, b);
        let one = classical_walk_search(&c, &pi, &leaf, 7, 36, 4).unwrap();
        assert_eq!(
            one,
            classical_walk_search(&c, &pi, &leaf, 7, 36, 4).unwrap()
        );
    }

    #[test]
    fn rejects_zero_parameters() {
        let (c, pi) = setup(1);
        assert!(classical_walk_search(&c, &pi, &BTreeSet::new(), 0, 1, 0).is_err());
        assert!(classical_walk_search(&c, &pi, &BTreeSet::new(), 1, 0, 0).is_err());
    }

    #[test]
    fn single_check_is_stationary_mass() {
        let (c, pi) = setup(2);
        let leaf: BTreeSet<_> = [TreeAddress::from_path(2, &[3, 2]).unwrap()].into();
        let p = exact_walk_success_probability(&c, &pi, &leaf, 5, 1).unwrap();
        assert!((p - 1.0 / 36.0).abs() < 1e-15);
        assert_eq!(
            marked_mass(&c, &pi, &leaf).unwrap(),
            epsilon_marked_bound(2, 1).unwrap()
        );
    }

    #[test]
    fn monte_carlo_tracks_exact_probability() {
        let (c, pi) = setup(1);
        let leaf: BTreeSet<_> = [TreeAddress::from_path(1, &[2]).unwrap()].into();
        let exact = exact_walk_success_probability(&c, &pi, &leaf, 2, 4).unwrap();
        let wins = walk_success_count(&c, &pi, &leaf, 2, 4, 4000, 3).unwrap();
        assert!((wins as f64 / 4000.0 - exact).abs() < 0.03);
    }

    #[test]
    fn epsilon_values() {
        assert_eq!(epsilon_marked_bound(2, 1).unwrap(), Rational::ratio(1, 36));
        assert_eq!(epsilon_marked_bound(1, 1).unwrap(), Rational::ratio(1, 4));
        assert_eq!(epsilon_marked_bound(3, 0).unwrap(), Rational::ratio(0, 1));
        assert!(epsilon_marked_bound(0, 1).is_err());
    }
}
