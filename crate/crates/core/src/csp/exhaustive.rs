use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::strings::{levenshtein_codes, CspInstance, Metric, Seq};
use crate::util::saturating_pow;

/// A center together with its recomputed radius.
#[derive(Debug, Clone, PartialEq)]
pub struct Center<T> {
    pub seq: Seq,
    pub radius: T,
}

/// Candidate lengths for edit metrics, nearest to `|s₁|` first (shorter wins
/// ties).
fn candidate_lengths<T: Scalar>(inst: &CspInstance<T>) -> Vec<usize> {
    let lo = inst.min_len().saturating_sub(inst.d());
    let hi = inst.max_len() + inst.d();
    let anchor = inst.n();
    let mut lengths: Vec<usize> = (lo..=hi).collect();
    lengths.sort_by_key(|&l| (l.abs_diff(anchor), l));
    lengths
}

/// Size of the enumerated candidate space.
pub(crate) fn candidate_space<T: Scalar>(inst: &CspInstance<T>) -> u128 {
    let sigma = inst.alphabet().size() as u128;
    match inst.metric() {
        Metric::Hamming => saturating_pow(sigma, inst.n() as u32),
        _ => candidate_lengths(inst).into_iter().fold(0u128, |acc, l| {
            acc.saturating_add(saturating_pow(sigma, l as u32))
        }),
    }
}

/// Brute-force oracle: enumerates `Σⁿ` (Hamming) or every string whose
/// length lies in `[min|sᵢ| − d, max|sᵢ| + d]` (edit metrics) and returns the
/// first candidate in enumeration order whose radius is at most `d`.
///
/// Enumeration is lexicographic within a length. Under Hamming, prefixes that
/// already mismatch some input in more than `d` places are skipped, which
/// never discards a feasible candidate.
pub fn solve_exhaustive<T: Scalar>(
    inst: &CspInstance<T>,
    budget: &Budget,
) -> Result<Option<Center<T>>> {
    let space = candidate_space(inst);
    if space > budget.max_candidates {
        return Err(Error::budget(
            "exhaustive candidates",
            space,
            budget.max_candidates,
        ));
    }
    let found = match inst.metric() {
        Metric::Hamming => hamming_dfs(inst),
        _ => edit_scan(inst)?,
    };
    found
        .map(|codes| {
            let seq = Seq::from_codes(inst.alphabet(), codes)?;
            let radius = inst.radius(&seq)?;
            Ok(Center { seq, radius })
        })
        .transpose()
}

fn hamming_dfs<T: Scalar>(inst: &CspInstance<T>) -> Option<Vec<u8>> {
    struct Dfs<'a> {
        strings: Vec<&'a [u8]>,
        sigma: u8,
        d: usize,
        mismatches: Vec<usize>,
        current: Vec<u8>,
    }

    impl Dfs<'_> {
        fn go(&mut self, pos: usize) -> bool {
            if pos == self.current.len() {
                return true;
            }
            for c in 0..self.sigma {
                self.current[pos] = c;
                let mut ok = true;
                for (i, s) in self.strings.iter().enumerate() {
                    if s[pos] != c {
                        self.mismatches[i] += 1;
                        if self.mismatches[i] > self.d {
                            ok = false;
                        }
                    }
                }
                if ok && self.go(pos + 1) {
                    return true;
                }
                for (i, s) in self.strings.iter().enumerate() {
                    if s[pos] != c {
                        self.mismatches[i] -= 1;
                    }
                }
            }
            false
        }
    }

    let mut dfs = Dfs {
        strings: inst.strings().iter().map(Seq::codes).collect(),
        sigma: inst.alphabet().size() as u8,
        d: inst.d(),
        mismatches: vec![0; inst.k()],
        current: vec![0; inst.n()],
    };
    dfs.go(0).then_some(dfs.current)
}

/// Next string in lexicographic order; `false` once wrapped around.
pub(crate) fn advance(current: &mut [u8], sigma: u8) -> bool {
    for pos in (0..current.len()).rev() {
        current[pos] += 1;
        if current[pos] < sigma {
            return true;
        }
        current[pos] = 0;
    }
    false
}

fn edit_scan<T: Scalar>(inst: &CspInstance<T>) -> Result<Option<Vec<u8>>> {
    let sigma = inst.alphabet().size() as u8;
    let d = inst.d();
    let strings: Vec<&[u8]> = inst.strings().iter().map(Seq::codes).collect();
    let threshold = inst.threshold();
    for len in candidate_lengths(inst) {
        let mut current = vec![0u8; len];
        loop {
            let feasible = match inst.metric() {
                Metric::Levenshtein => strings.iter().all(|s| levenshtein_codes(&current, s) <= d),
                _ => {
                    let seq = Seq::from_codes(inst.alphabet(), current.clone())?;
                    inst.radius(&seq)? <= threshold
                }
            };
            if feasible {
                return Ok(Some(current));
            }
            if !advance(&mut current, sigma) {
                break;
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::scalar::Rational;
    use crate::strings::{Alphabet, CostScheme};

    fn dna() -> Arc<Alphabet> {
        Arc::new(Alphabet::dna())
    }

    /// Plain odometer over Σⁿ with no pruning, for cross-checking the DFS.
    fn naive_hamming(inst: &CspInstance<Rational>) -> Option<String> {
        let a = inst.alphabet();
        let n = inst.n();
        let total = (a.size() as u64).pow(n as u32);
        (0..total).find_map(|mut x| {
            let mut codes = vec![0u8; n];
            for p in (0..n).rev() {
                codes[p] = (x % a.size() as u64) as u8;
                x /= a.size() as u64;
            }
            let s = Seq::from_codes(a, codes).unwrap();
            inst.is_center(&s).unwrap().then(|| s.to_string())
        })
    }

    #[test]
    fn hamming_examples() {
        let a = dna();
        let inst =
            CspInstance::<Rational>::from_strs(&a, &["AAAA", "TTAA"], 1, Metric::Hamming).unwrap();
        let c = solve_exhaustive(&inst, &Budget::default())
            .unwrap()
            .unwrap();
        assert_eq!(c.radius, Rational::from_count(1));
        assert_eq!(c.seq.to_string(), "ATAA");
        assert_eq!(naive_hamming(&inst).as_deref(), Some("ATAA"));

        let tight = inst.with_d(0);
        assert_eq!(solve_exhaustive(&tight, &Budget::default()).unwrap(), None);
        assert_eq!(naive_hamming(&tight), None);
    }

    #[test]
    fn levenshtein_example() {
        let a = dna();
        let inst =
            CspInstance::<Rational>::from_strs(&a, &["A", "T"], 1, Metric::Levenshtein).unwrap();
        let c = solve_exhaustive(&inst, &Budget::default())
            .unwrap()
            .unwrap();
        assert_eq!(c.seq.to_string(), "A");
        assert_eq!(c.radius, Rational::from_count(1));

        let none =
            CspInstance::<Rational>::from_strs(&a, &["AC", "CA"], 0, Metric::Levenshtein).unwrap();
        assert_eq!(solve_exhaustive(&none, &Budget::default()).unwrap(), None);
    }

    #[test]
    fn weighted_metric_searches_lengths() {
        let a = dna();
        let scheme = CostScheme::<Rational>::uniform(
            a.clone(),
            Rational::ratio(2, 1),
            Rational::ratio(1, 1),
        )
        .unwrap();
        let inst = CspInstance::from_strs(&a, &["AC", "AG"], 1, Metric::Weighted(scheme)).unwrap();
        let c = solve_exhaustive(&inst, &Budget::default())
            .unwrap()
            .unwrap();
        // no length-2 string is within 1 of both; "A" is
        assert_eq!(c.seq.to_string(), "A");
    }

    #[test]
    fn refuses_over_budget() {
        let a = dna();
        let inst =
            CspInstance::<Rational>::from_strs(&a, &["AAAAAAAAAA"], 1, Metric::Hamming).unwrap();
        let budget = Budget {
            max_candidates: 1000,
            ..Budget::default()
        };
        let err = solve_exhaustive(&inst, &budget).unwrap_err();
        assert!(err.is_refusal());
    }

    #[test]
    fn dfs_agrees_with_naive_scan() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        let a = Arc::new(Alphabet::of_size(3).unwrap());
        for _ in 0..200 {
            let n = rng.gen_range(1..=5);
            let k = rng.gen_range(1..=4);
            let d = rng.gen_range(0..=2);
            let strings = (0..k)
                .map(|_| {
                    Seq::from_codes(&a, (0..n).map(|_| rng.gen_range(0..3)).collect()).unwrap()
                })
                .collect();
            let inst = CspInstance::<Rational>::new(strings, d, Metric::Hamming).unwrap();
            let got = solve_exhaustive(&inst, &Budget::default())
                .unwrap()
                .map(|c| c.seq.to_string());
            assert_eq!(got, naive_hamming(&inst));
        }
    }
}
