//! Seeded instance generators. Every generator draws from a ChaCha stream
//! seeded with `seed`, so output is identical across runs and platforms.

use std::sync::Arc;

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cssp::CsspInstance;
use crate::error::{Error, Result};
use crate::scalar::Rational;
use crate::strings::{Alphabet, CspInstance, Metric, Seq};

/// A feasible CSP instance together with the center it was built around.
#[derive(Debug, Clone, PartialEq)]
pub struct PlantedInstance {
    pub instance: CspInstance<Rational>,
    pub center: Seq,
}

#[derive(Debug, Clone, PartialEq)]
pub struct PlantedCssp {
    pub instance: CsspInstance,
    /// The motif, when one was planted.
    pub motif: Option<Seq>,
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn random_codes(rng: &mut ChaCha8Rng, sigma: usize, n: usize) -> Vec<u8> {
    (0..n).map(|_| rng.gen_range(0..sigma) as u8).collect()
}

/// Replaces `r ~ U[0, d]` distinct positions of `codes` with a uniformly
/// chosen different symbol.
fn mutate(rng: &mut ChaCha8Rng, codes: &[u8], sigma: usize, d: usize) -> Vec<u8> {
    let mut out = codes.to_vec();
    let r = rng.gen_range(0..=d.min(codes.len()));
    for pos in sample(rng, codes.len(), r) {
        // shift by 1..σ-1 so the symbol always changes
        let shift = rng.gen_range(1..sigma) as u8;
        out[pos] = ((out[pos] as usize + shift as usize) % sigma) as u8;
    }
    out
}

fn alphabet(sigma: usize) -> Result<Arc<Alphabet>> {
    Ok(Arc::new(Alphabet::of_size(sigma)?))
}

fn seqs(alphabet: &Arc<Alphabet>, codes: Vec<Vec<u8>>) -> Result<Vec<Seq>> {
    codes
        .into_iter()
        .map(|c| Seq::from_codes(alphabet, c))
        .collect()
}

/// Hamming instance of `k` strings of length `n`, each within `d`
/// substitutions of a uniformly random center.
pub fn gen_planted_instance(
    sigma: usize,
    n: usize,
    k: usize,
    d: usize,
    seed: u64,
) -> Result<PlantedInstance> {
    if d > n {
        return Err(Error::InvalidArgument(format!(
            "planted instance needs d <= n, got d={d}, n={n}"
        )));
    }
    if k == 0 {
        return Err(Error::InvalidArgument("k must be at least 1".into()));
    }
    let alphabet = alphabet(sigma)?;
    let mut rng = rng(seed);
    let center = random_codes(&mut rng, sigma, n);
    let strings = (0..k)
        .map(|_| mutate(&mut rng, &center, sigma, d))
        .collect();
    Ok(PlantedInstance {
        instance: CspInstance::new(seqs(&alphabet, strings)?, d, Metric::Hamming)?,
        center: Seq::from_codes(&alphabet, center)?,
    })
}

/// `k` independent uniform strings of length `n` under Hamming distance.
pub fn gen_random_hamming(
    sigma: usize,
    n: usize,
    k: usize,
    d: usize,
    seed: u64,
) -> Result<CspInstance<Rational>> {
    if k == 0 {
        return Err(Error::InvalidArgument("k must be at least 1".into()));
    }
    let alphabet = alphabet(sigma)?;
    let mut rng = rng(seed);
    let strings = (0..k).map(|_| random_codes(&mut rng, sigma, n)).collect();
    CspInstance::new(seqs(&alphabet, strings)?, d, Metric::Hamming)
}

/// `k` uniform strings with lengths drawn from `[1, max_n]`, under
/// Levenshtein distance.
pub fn gen_random_levenshtein(
    sigma: usize,
    max_n: usize,
    k: usize,
    d: usize,
    seed: u64,
) -> Result<CspInstance<Rational>> {
    if k == 0 || max_n == 0 {
        return Err(Error::InvalidArgument(
            "k and max_n must be at least 1".into(),
        ));
    }
    let alphabet = alphabet(sigma)?;
    let mut rng = rng(seed);
    let strings = (0..k)
        .map(|_| {
            let len = rng.gen_range(1..=max_n);
            random_codes(&mut rng, sigma, len)
        })
        .collect();
    CspInstance::new(seqs(&alphabet, strings)?, d, Metric::Levenshtein)
}

/// `k` uniform strings of length `n`. With `plant`, a random motif of
/// length `l`, mutated as in [`gen_planted_instance`], is written at a random
/// offset of every string, which makes the instance feasible.
pub fn gen_cssp_instance(
    sigma: usize,
    n: usize,
    k: usize,
    l: usize,
    d: usize,
    plant: bool,
    seed: u64,
) -> Result<PlantedCssp> {
    if k == 0 || l == 0 || l > n {
        return Err(Error::InvalidArgument(format!(
            "need k >= 1 and 1 <= L <= n, got k={k}, L={l}, n={n}"
        )));
    }
    let alphabet = alphabet(sigma)?;
    let mut rng = rng(seed);
    let mut strings: Vec<Vec<u8>> = (0..k).map(|_| random_codes(&mut rng, sigma, n)).collect();
    let motif = if plant {
        let motif = random_codes(&mut rng, sigma, l);
        for s in &mut strings {
            let at = rng.gen_range(0..=n - l);
            let copy = mutate(&mut rng, &motif, sigma, d);
            s[at..at + l].copy_from_slice(&copy);
        }
        Some(Seq::from_codes(&alphabet, motif)?)
    } else {
        None
    };
    Ok(PlantedCssp {
        instance: CsspInstance::new(seqs(&alphabet, strings)?, d, l)?,
        motif,
    })
}

#[cfg(test)]
mod tests {
    use proptest::prelude::*;

    use super::*;
    use crate::scalar::Scalar;

    #[test]
    fn d_zero_copies_center() {
        let p = gen_planted_instance(4, 12, 5, 0, 3).unwrap();
        assert!(p.instance.strings().iter().all(|s| *s == p.center));
    }

    #[test]
    fn deterministic() {
        assert_eq!(
            gen_planted_instance(4, 10, 4, 3, 11).unwrap(),
            gen_planted_instance(4, 10, 4, 3, 11).unwrap()
        );
        assert_ne!(
            gen_planted_instance(4, 10, 4, 3, 11).unwrap(),
            gen_planted_instance(4, 10, 4, 3, 12).unwrap()
        );
        assert_eq!(
            gen_cssp_instance(2, 9, 3, 4, 1, true, 5).unwrap(),
            gen_cssp_instance(2, 9, 3, 4, 1, true, 5).unwrap()
        );
    }

    #[test]
    fn argument_errors() {
        assert!(gen_planted_instance(4, 3, 2, 4, 0).is_err());
        assert!(gen_planted_instance(4, 3, 0, 1, 0).is_err());
        assert!(gen_planted_instance(1, 3, 2, 1, 0).is_err());
        assert!(gen_cssp_instance(4, 3, 2, 4, 1, true, 0).is_err());
    }

    #[test]
    fn levenshtein_lengths_in_range() {
        for seed in 0..20 {
            let inst = gen_random_levenshtein(2, 4, 3, 1, seed).unwrap();
            assert!(inst.strings().iter().all(|s| (1..=4).contains(&s.len())));
        }
    }

    proptest! {
        #[test]
        fn planted_is_feasible(sigma in 2usize..5, n in 0usize..12, k in 1usize..6, d_raw in 0usize..13, seed: u64) {
            let d = d_raw.min(n);
            let p = gen_planted_instance(sigma, n, k, d, seed).unwrap();
            prop_assert!(p.instance.radius(&p.center).unwrap() <= Rational::from_count(d));
            prop_assert_eq!(p.instance.k(), k);
        }

        #[test]
        fn planted_motif_is_feasible(sigma in 2usize..5, l in 1usize..6, extra in 0usize..5, k in 1usize..5, d in 0usize..3, seed: u64) {
            let p = gen_cssp_instance(sigma, l + extra, k, l, d, true, seed).unwrap();
            prop_assert!(p.instance.is_solution(p.motif.as_ref().unwrap()).unwrap());
        }
    }
}
