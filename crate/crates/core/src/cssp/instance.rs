use std::sync::Arc;

use crate::error::{Error, Result};
use crate::strings::{hamming_codes, Alphabet, Seq};

/// `k` strings, a window length `L` and a Hamming threshold `d`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CsspInstance {
    strings: Vec<Seq>,
    d: usize,
    l: usize,
}

impl CsspInstance {
    pub fn new(strings: Vec<Seq>, d: usize, l: usize) -> Result<Self> {
        let first = strings
            .first()
            .ok_or_else(|| Error::InvalidInstance("at least one string is required".into()))?;
        if strings.iter().any(|s| !s.same_alphabet(first)) {
            return Err(Error::AlphabetMismatch);
        }
        let shortest = strings.iter().map(Seq::len).min().unwrap_or(0);
        if l == 0 || l > shortest {
            return Err(Error::InvalidInstance(format!(
                "window length L = {l} must lie in 1..={shortest}"
            )));
        }
        Ok(CsspInstance { strings, d, l })
    }

    pub fn from_strs(alphabet: &Arc<Alphabet>, texts: &[&str], d: usize, l: usize) -> Result<Self> {
        let strings = texts
            .iter()
            .map(|t| Seq::parse(alphabet, t))
            .collect::<Result<Vec<_>>>()?;
        Self::new(strings, d, l)
    }

    pub fn strings(&self) -> &[Seq] {
        &self.strings
    }

    pub fn k(&self) -> usize {
        self.strings.len()
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn l(&self) -> usize {
        self.l
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        self.strings[0].alphabet()
    }

    pub fn max_len(&self) -> usize {
        self.strings.iter().map(Seq::len).max().unwrap_or(0)
    }

    /// For each input, the smallest Hamming distance from `candidate` to any
    /// of its length-`L` windows.
    pub fn window_distances(&self, candidate: &Seq) -> Result<Vec<usize>> {
        if !candidate.same_alphabet(&self.strings[0]) {
            return Err(Error::AlphabetMismatch);
        }
        if candidate.len() != self.l {
            return Err(Error::LengthMismatch {
                left: candidate.len(),
                right: self.l,
            });
        }
        Ok(self
            .strings
            .iter()
            .map(|s| min_window_distance(candidate.codes(), s.codes()))
            .collect())
    }

    /// Every input has a window within `d` of `candidate`.
    pub fn is_solution(&self, candidate: &Seq) -> Result<bool> {
        Ok(self
            .window_distances(candidate)?
            .iter()
            .all(|&v| v <= self.d))
    }

    pub(crate) fn accepts_codes(&self, candidate: &[u8]) -> bool {
        self.strings.iter().all(|s| {
            s.codes()
                .windows(self.l)
                .any(|w| hamming_codes(candidate, w) <= self.d)
        })
    }
}

fn min_window_distance(candidate: &[u8], s: &[u8]) -> usize {
    s.windows(candidate.len())
        .map(|w| hamming_codes(candidate, w))
        .min()
        .unwrap_or(usize::MAX)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation() {
        let a = Arc::new(Alphabet::dna());
        assert!(CsspInstance::from_strs(&a, &["ACGT", "AC"], 0, 3).is_err());
        assert!(CsspInstance::from_strs(&a, &["ACGT"], 0, 0).is_err());
        assert!(CsspInstance::new(vec![], 0, 1).is_err());
        assert!(CsspInstance::from_strs(&a, &["ACGT", "AC"], 0, 2).is_ok());
    }

    #[test]
    fn window_distance() {
        let a = Arc::new(Alphabet::dna());
        let inst = CsspInstance::from_strs(&a, &["ACGT", "TTTT"], 1, 2).unwrap();
        let s = a.encode("CT").unwrap();
        assert_eq!(inst.window_distances(&s).unwrap(), vec![1, 1]);
        assert!(inst.is_solution(&s).unwrap());
        assert!(inst.window_distances(&a.encode("C").unwrap()).is_err());
    }
}
