use std::f64::consts::FRAC_PI_4;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinFindRun {
    /// Lowest index holding the minimum.
    pub argmin: usize,
    /// Modeled oracle queries over all rounds.
    pub queries: u64,
    /// Threshold updates performed.
    pub rounds: u64,
}

/// Classical model of Dürr–Høyer minimum finding.
///
/// Start from a uniformly random threshold index. While `c > 0` entries lie
/// strictly below the threshold, charge `⌈(π/4)·√(N/c)⌉` queries for the
/// Grover call and move the threshold to one of those entries uniformly.
pub fn min_find_simulate<T: PartialOrd>(values: &[T], seed: u64) -> Result<MinFindRun> {
    if values.is_empty() {
        return Err(Error::InvalidArgument(
            "cannot take the minimum of an empty list".into(),
        ));
    }
    let n = values.len();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut y = rng.gen_range(0..n);
    let mut queries = 0u64;
    let mut rounds = 0u64;
    loop {
        let below: Vec<usize> = (0..n).filter(|&i| values[i] < values[y]).collect();
        if below.is_empty() {
            break;
        }
        queries += (FRAC_PI_4 * (n as f64 / below.len() as f64).sqrt()).ceil() as u64;
        rounds += 1;
        y = below[rng.gen_range(0..below.len())];
    }
    let argmin = (0..n).find(|&i| values[i] == values[y]).unwrap_or(y);
    Ok(MinFindRun {
        argmin,
        queries,
        rounds,
    })
}

#[cfg(test)]
mod tests {
    use proptest::prelude::*;

    use super::*;

    #[test]
    fn trivial_cases() {
        assert_eq!(
            min_find_simulate(&[5], 1).unwrap(),
            MinFindRun {
                argmin: 0,
                queries: 0,
                rounds: 0
            }
        );
        assert!(min_find_simulate::<i32>(&[], 1).is_err());
        let sorted: Vec<u32> = (0..256).collect();
        for seed in 0..20 {
            assert_eq!(min_find_simulate(&sorted, seed).unwrap().argmin, 0);
        }
    }

    #[test]
    fn ties_go_to_lowest_index() {
        let v = [3, 1, 2, 1, 1];
        for seed in 0..20 {
            assert_eq!(min_find_simulate(&v, seed).unwrap().argmin, 1);
        }
    }

    #[test]
    fn deterministic() {
        let v: Vec<i64> = (0..100).map(|i| (i * 37) % 101).collect();
        assert_eq!(
            min_find_simulate(&v, 8).unwrap(),
            min_find_simulate(&v, 8).unwrap()
        );
    }

    proptest! {
        #[test]
        fn always_exact(v in prop::collection::vec(-50i32..50, 1..60), seed in any::<u64>()) {
            let run = min_find_simulate(&v, seed).unwrap();
            let lowest = *v.iter().min().unwrap();
            prop_assert_eq!(run.argmin, v.iter().position(|&x| x == lowest).unwrap());
        }
    }
}
