use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::strings::{CspInstance, Metric, Seq};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    SolvableUnknown,
    Unsolvable,
}

/// A Hamming instance with its unanimous columns removed.
#[derive(Debug, Clone, PartialEq)]
pub struct PreprocessResult<T> {
    pub reduced: CspInstance<T>,
    /// Original position of each remaining column, strictly increasing.
    pub column_map: Vec<usize>,
    pub verdict: Verdict,
    /// For each original position, the agreed symbol if the column was
    /// removed.
    pub unanimous: Vec<Option<u8>>,
}

impl<T: Scalar> PreprocessResult<T> {
    /// Reinserts the removed columns around a reduced-instance string.
    pub fn lift(&self, reduced: &Seq) -> Result<Seq> {
        if reduced.len() != self.column_map.len() {
            return Err(Error::LengthMismatch {
                left: reduced.len(),
                right: self.column_map.len(),
            });
        }
        let mut kept = reduced.codes().iter();
        let codes = self
            .unanimous
            .iter()
            .map(|slot| match slot {
                Some(c) => *c,
                None => *kept.next().expect("one kept code per free column"),
            })
            .collect();
        Seq::from_codes(self.reduced.alphabet(), codes)
    }
}

/// Drops every column on which all `k` strings agree. More than `k·d`
/// remaining columns means no center can exist.
pub fn preprocess<T: Scalar>(inst: &CspInstance<T>) -> Result<PreprocessResult<T>> {
    if !inst.metric().is_hamming() {
        return Err(Error::UnsupportedMetric {
            operation: "preprocess",
            metric: inst.metric().name(),
        });
    }
    let strings = inst.strings();
    let n = inst.n();
    let first = strings[0].codes();
    let unanimous: Vec<Option<u8>> = (0..n)
        .map(|p| {
            let c = first[p];
            strings.iter().all(|s| s.codes()[p] == c).then_some(c)
        })
        .collect();
    let column_map: Vec<usize> = (0..n).filter(|&p| unanimous[p].is_none()).collect();
    let alphabet = inst.alphabet();
    let reduced_strings = strings
        .iter()
        .map(|s| {
            let codes = column_map.iter().map(|&p| s.codes()[p]).collect();
            Seq::from_codes(alphabet, codes)
        })
        .collect::<Result<Vec<_>>>()?;
    let reduced = CspInstance::new(reduced_strings, inst.d(), Metric::Hamming)?;
    let verdict = if column_map.len() > inst.k() * inst.d() {
        Verdict::Unsolvable
    } else {
        Verdict::SolvableUnknown
    };
    Ok(PreprocessResult {
        reduced,
        column_map,
        verdict,
        unanimous,
    })
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::scalar::Rational;
    use crate::strings::Alphabet;

    fn inst(texts: &[&str], d: usize) -> CspInstance<Rational> {
        CspInstance::from_strs(&Arc::new(Alphabet::dna()), texts, d, Metric::Hamming).unwrap()
    }

    fn texts(p: &PreprocessResult<Rational>) -> Vec<String> {
        p.reduced.strings().iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn removes_unanimous_columns() {
        let p = preprocess(&inst(&["ACGT", "ACGA", "ACCT"], 1)).unwrap();
        assert_eq!(texts(&p), ["GT", "GA", "CT"]);
        assert_eq!(p.column_map, [2, 3]);
        assert_eq!(p.verdict, Verdict::SolvableUnknown);
        let lifted = p.lift(&p.reduced.alphabet().encode("GT").unwrap()).unwrap();
        assert_eq!(lifted.to_string(), "ACGT");
    }

    #[test]
    fn all_unanimous_gives_empty_instance() {
        let p = preprocess(&inst(&["AAAA", "AAAA"], 0)).unwrap();
        assert_eq!(p.reduced.n(), 0);
        assert_eq!(p.verdict, Verdict::SolvableUnknown);
        let empty = Seq::empty(p.reduced.alphabet());
        assert_eq!(p.lift(&empty).unwrap().to_string(), "AAAA");
    }

    #[test]
    fn too_many_columns_is_unsolvable() {
        let p = preprocess(&inst(&["AAAC", "TTTC"], 1)).unwrap();
        assert_eq!(p.column_map.len(), 3);
        assert_eq!(p.verdict, Verdict::Unsolvable);
    }

    #[test]
    fn rejects_edit_metrics() {
        let i = CspInstance::<Rational>::from_strs(
            &Arc::new(Alphabet::dna()),
            &["A"],
            0,
            Metric::Levenshtein,
        )
        .unwrap();
        assert!(matches!(
            preprocess(&i),
            Err(Error::UnsupportedMetric { .. })
        ));
    }
}
