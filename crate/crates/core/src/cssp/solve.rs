use std::collections::HashSet;

use crate::budget::Budget;
use crate::csp::advance;
use crate::error::{Error, Result};
use crate::strings::Seq;
use crate::util::{binomial, saturating_pow};

use super::{CsspInstance, GeneratorSet};

/// Limits on the generators worth trying for a threshold `d`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GeneratorCaps {
    /// Largest generator size, `⌊log₂ d⌋ + 2` (2 when `d ≤ 1`).
    pub size: usize,
    /// Largest conflict, `d · size`.
    pub conflict: usize,
}

pub fn generator_caps(d: usize) -> GeneratorCaps {
    let log = if d <= 1 { 0 } else { d.ilog2() as usize };
    let size = log + 2;
    GeneratorCaps {
        size,
        conflict: d * size,
    }
}

/// Every distinct length-`L` window of the inputs, sorted by code.
pub fn enumerate_substrings(inst: &CsspInstance) -> Vec<Seq> {
    let mut windows: Vec<&[u8]> = inst
        .strings()
        .iter()
        .flat_map(|s| s.codes().windows(inst.l()))
        .collect();
    windows.sort_unstable();
    windows.dedup();
    windows
        .into_iter()
        .map(|w| Seq::from_codes_unchecked(inst.alphabet(), w.to_vec()))
        .collect()
}

/// Entries kept in the memo of already rejected candidates.
const MEMO_LIMIT: usize = 1 << 22;

/// Searches generator subsets of the window set in enumeration order and
/// returns the first one generating a feasible string, with that string.
pub fn find_generator_witness(
    inst: &CsspInstance,
    budget: &Budget,
) -> Result<Option<(GeneratorSet, Seq)>> {
    let windows = enumerate_substrings(inst);
    let caps = generator_caps(inst.d());
    let max_size = caps.size.min(windows.len());

    let subsets = (1..=max_size).fold(0u128, |acc, m| {
        acc.saturating_add(binomial(windows.len() as u128, m as u128))
    });
    if subsets > budget.max_subsets {
        return Err(Error::budget(
            "generator subsets",
            subsets,
            budget.max_subsets,
        ));
    }
    let widest = caps.conflict.min(inst.l());
    let per_generator = saturating_pow(inst.alphabet().size() as u128, widest as u32);
    if per_generator > budget.max_generated {
        return Err(Error::budget(
            "generated strings",
            per_generator,
            budget.max_generated,
        ));
    }

    let mut rejected: HashSet<Vec<u8>> = HashSet::new();
    for m in 1..=max_size {
        let mut pick: Vec<usize> = (0..m).collect();
        loop {
            let g = GeneratorSet::new(pick.iter().map(|&i| windows[i].clone()).collect())?;
            if g.conflict_positions().len() <= caps.conflict {
                let mut strings = g.generated_strings(budget.max_generated)?;
                while let Some(codes) = strings.next_codes() {
                    if rejected.contains(codes) {
                        continue;
                    }
                    if inst.accepts_codes(codes) {
                        let found = Seq::from_codes_unchecked(inst.alphabet(), codes.to_vec());
                        return Ok(Some((g, found)));
                    }
                    if rejected.len() < MEMO_LIMIT {
                        rejected.insert(codes.to_vec());
                    }
                }
            }
            if !next_combination(&mut pick, windows.len()) {
                break;
            }
        }
    }
    Ok(None)
}

/// Marx's generator algorithm: the first feasible generated string, if any.
pub fn solve_cssp(inst: &CsspInstance, budget: &Budget) -> Result<Option<Seq>> {
    Ok(find_generator_witness(inst, budget)?.map(|(_, s)| s))
}

/// Scans all of `Σ^L` in lexicographic order.
pub fn brute_force_cssp(inst: &CsspInstance, budget: &Budget) -> Result<Option<Seq>> {
    let sigma = inst.alphabet().size();
    let space = saturating_pow(sigma as u128, inst.l() as u32);
    if space > budget.max_candidates {
        return Err(Error::budget(
            "candidate strings",
            space,
            budget.max_candidates,
        ));
    }
    let mut current = vec![0u8; inst.l()];
    loop {
        if inst.accepts_codes(&current) {
            return Ok(Some(Seq::from_codes_unchecked(inst.alphabet(), current)));
        }
        if !advance(&mut current, sigma as u8) {
            return Ok(None);
        }
    }
}

/// Next `m`-subset of `0..n` in lexicographic order.
fn next_combination(pick: &mut [usize], n: usize) -> bool {
    let m = pick.len();
    for i in (0..m).rev() {
        if pick[i] < n - m + i {
            pick[i] += 1;
            for j in i + 1..m {
                pick[j] = pick[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    use super::*;
    use crate::strings::Alphabet;

    fn inst(texts: &[&str], d: usize, l: usize) -> CsspInstance {
        CsspInstance::from_strs(&Arc::new(Alphabet::dna()), texts, d, l).unwrap()
    }

    fn texts(v: &[Seq]) -> Vec<String> {
        v.iter().map(ToString::to_string).collect()
    }

    #[test]
    fn caps() {
        assert_eq!(
            generator_caps(0),
            GeneratorCaps {
                size: 2,
                conflict: 0
            }
        );
        assert_eq!(
            generator_caps(1),
            GeneratorCaps {
                size: 2,
                conflict: 2
            }
        );
        assert_eq!(
            generator_caps(2),
            GeneratorCaps {
                size: 3,
                conflict: 6
            }
        );
        assert_eq!(
            generator_caps(3),
            GeneratorCaps {
                size: 3,
                conflict: 9
            }
        );
        assert_eq!(
            generator_caps(8),
            GeneratorCaps {
                size: 5,
                conflict: 40
            }
        );
    }

    #[test]
    fn substrings() {
        assert_eq!(
            texts(&enumerate_substrings(&inst(&["ACGT"], 0, 2))),
            ["AC", "CG", "GT"]
        );
        assert_eq!(texts(&enumerate_substrings(&inst(&["TTTT"], 0, 2))), ["TT"]);
        let both = enumerate_substrings(&inst(&["ACGT", "TTTT"], 0, 2));
        assert_eq!(texts(&both), ["AC", "CG", "GT", "TT"]);
    }

    #[test]
    fn combinations_are_lexicographic() {
        let mut pick = vec![0, 1];
        let mut seen = vec![pick.clone()];
        while next_combination(&mut pick, 4) {
            seen.push(pick.clone());
        }
        assert_eq!(seen, [[0, 1], [0, 2], [0, 3], [1, 2], [1, 3], [2, 3]]);
    }

    #[test]
    fn examples() {
        let b = Budget::default();
        assert_eq!(
            solve_cssp(&inst(&["GATTACA"], 0, 7), &b)
                .unwrap()
                .unwrap()
                .to_string(),
            "GATTACA"
        );
        let i = inst(&["ACGT", "ACGA"], 1, 3);
        let s = solve_cssp(&i, &b).unwrap().unwrap();
        assert!(i.is_solution(&s).unwrap());
        assert_eq!(
            solve_cssp(&inst(&["AAAA", "TTTT"], 0, 2), &b).unwrap(),
            None
        );
        assert_eq!(
            brute_force_cssp(&inst(&["AAAA", "TTTT"], 0, 2), &b).unwrap(),
            None
        );
    }

    #[test]
    fn brute_force_examples() {
        let b = Budget::default();
        assert_eq!(
            brute_force_cssp(&inst(&["TAG", "GCC"], 0, 1), &b)
                .unwrap()
                .unwrap()
                .to_string(),
            "G"
        );
        let i = inst(&["ACGTT", "ACGTT"], 0, 3);
        let s = brute_force_cssp(&i, &b).unwrap().unwrap();
        assert!(i.is_solution(&s).unwrap());
    }

    #[test]
    fn refusals() {
        let tight = Budget {
            max_candidates: 15,
            max_subsets: 2,
            ..Budget::default()
        };
        let i = inst(&["ACGT", "TTGA"], 1, 2);
        assert!(brute_force_cssp(&i, &tight).unwrap_err().is_refusal());
        assert!(solve_cssp(&i, &tight).unwrap_err().is_refusal());
    }

    #[test]
    fn agrees_with_brute_force() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let b = Budget::default();
        let alphabet = Arc::new(Alphabet::parse("AC").unwrap());
        for _ in 0..60 {
            let k = rng.gen_range(1..=3);
            let n = rng.gen_range(3..=7);
            let l = rng.gen_range(1..=n.min(5));
            let d = rng.gen_range(0..=2);
            let strings = (0..k)
                .map(|_| {
                    Seq::from_codes(&alphabet, (0..n).map(|_| rng.gen_range(0..2)).collect())
                        .unwrap()
                })
                .collect();
            let i = CsspInstance::new(strings, d, l).unwrap();
            let fast = solve_cssp(&i, &b).unwrap();
            let slow = brute_force_cssp(&i, &b).unwrap();
            assert_eq!(fast.is_some(), slow.is_some());
            if let Some(s) = fast {
                assert!(i.is_solution(&s).unwrap());
            }
        }
    }
}
