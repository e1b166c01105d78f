use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::strings::{CspInstance, Seq};

/// Substitutions applied to `s₁` along one root-to-node path of the search
/// tree: at step `j`, position `positions[j]` takes the symbol of input
/// string `donors[j]` (1-based).
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct WalkHistory {
    donors: Vec<usize>,
    positions: Vec<usize>,
}

impl WalkHistory {
    pub fn new(donors: Vec<usize>, positions: Vec<usize>) -> Result<Self> {
        if donors.len() != positions.len() {
            return Err(Error::InvalidArgument(format!(
                "{} donors but {} positions",
                donors.len(),
                positions.len()
            )));
        }
        Ok(WalkHistory { donors, positions })
    }

    pub fn depth(&self) -> usize {
        self.donors.len()
    }

    pub fn donors(&self) -> &[usize] {
        &self.donors
    }

    pub fn positions(&self) -> &[usize] {
        &self.positions
    }

    pub fn push(&mut self, donor: usize, position: usize) {
        self.donors.push(donor);
        self.positions.push(position);
    }

    /// Drops the last substitution (a move to the parent node).
    pub fn pop(&mut self) -> Option<(usize, usize)> {
        Some((self.donors.pop()?, self.positions.pop()?))
    }
}

/// Rebuilds the candidate of a search node from `s₁` in `O(depth)`.
pub fn candidate_from_history<T: Scalar>(
    s1: &Seq,
    history: &WalkHistory,
    inst: &CspInstance<T>,
) -> Result<Seq> {
    if history.depth() > inst.d() {
        return Err(Error::OutOfRange(format!(
            "history depth {} exceeds d = {}",
            history.depth(),
            inst.d()
        )));
    }
    let mut codes = s1.codes().to_vec();
    for (&donor, &pos) in history.donors.iter().zip(&history.positions) {
        if donor == 0 || donor > inst.k() {
            return Err(Error::OutOfRange(format!(
                "donor {donor} not in 1..={}",
                inst.k()
            )));
        }
        let source = inst.strings()[donor - 1].codes();
        if pos >= codes.len() || pos >= source.len() {
            return Err(Error::OutOfRange(format!(
                "position {pos} beyond string length"
            )));
        }
        codes[pos] = source[pos];
    }
    Seq::from_codes(s1.alphabet(), codes)
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::scalar::Rational;
    use crate::strings::{Alphabet, Metric};

    fn setup() -> CspInstance<Rational> {
        CspInstance::from_strs(
            &Arc::new(Alphabet::dna()),
            &["AAAA", "TTAA", "GGGG"],
            2,
            Metric::Hamming,
        )
        .unwrap()
    }

    #[test]
    fn empty_history_is_identity() {
        let inst = setup();
        let s1 = &inst.strings()[0];
        let out = candidate_from_history(s1, &WalkHistory::default(), &inst).unwrap();
        assert_eq!(&out, s1);
    }

    #[test]
    fn single_substitution() {
        let inst = setup();
        let h = WalkHistory::new(vec![2], vec![0]).unwrap();
        let out = candidate_from_history(&inst.strings()[0], &h, &inst).unwrap();
        assert_eq!(out.to_string(), "TAAA");
    }

    #[test]
    fn later_donor_wins() {
        let inst = setup();
        let h = WalkHistory::new(vec![2, 3], vec![0, 0]).unwrap();
        let out = candidate_from_history(&inst.strings()[0], &h, &inst).unwrap();
        assert_eq!(out.to_string(), "GAAA");
    }

    #[test]
    fn invalid_histories() {
        let inst = setup();
        let s1 = &inst.strings()[0];
        assert!(WalkHistory::new(vec![1], vec![]).is_err());
        let bad_donor = WalkHistory::new(vec![4], vec![0]).unwrap();
        assert!(candidate_from_history(s1, &bad_donor, &inst).is_err());
        let zero_donor = WalkHistory::new(vec![0], vec![0]).unwrap();
        assert!(candidate_from_history(s1, &zero_donor, &inst).is_err());
        let bad_pos = WalkHistory::new(vec![2], vec![4]).unwrap();
        assert!(candidate_from_history(s1, &bad_pos, &inst).is_err());
        let too_deep = WalkHistory::new(vec![2, 2, 2], vec![0, 1, 2]).unwrap();
        assert!(candidate_from_history(s1, &too_deep, &inst).is_err());
    }
}
