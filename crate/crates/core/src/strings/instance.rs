use std::sync::Arc;

use super::alphabet::{Alphabet, Seq};
use super::cost::CostScheme;
use super::distance::{hamming, levenshtein, weighted_edit};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Distance under which a CSP instance is posed.
#[derive(Debug, Clone, PartialEq)]
pub enum Metric<T> {
    Hamming,
    Levenshtein,
    Weighted(CostScheme<T>),
}

impl<T> Metric<T> {
    pub fn name(&self) -> &'static str {
        match self {
            Metric::Hamming => "hamming",
            Metric::Levenshtein => "levenshtein",
            Metric::Weighted(_) => "weighted",
        }
    }

    pub fn is_hamming(&self) -> bool {
        matches!(self, Metric::Hamming)
    }
}

impl<T: Scalar> Metric<T> {
    pub fn distance(&self, s: &Seq, t: &Seq) -> Result<T> {
        match self {
            Metric::Hamming => hamming(s, t).map(T::from_count),
            Metric::Levenshtein => levenshtein(s, t).map(T::from_count),
            Metric::Weighted(scheme) => weighted_edit(s, t, scheme),
        }
    }
}

/// `k ≥ 1` strings over one alphabet, a threshold `d` and a metric.
#[derive(Debug, Clone, PartialEq)]
pub struct CspInstance<T> {
    strings: Vec<Seq>,
    d: usize,
    metric: Metric<T>,
}

impl<T: Scalar> CspInstance<T> {
    pub fn new(strings: Vec<Seq>, d: usize, metric: Metric<T>) -> Result<Self> {
        let first = strings
            .first()
            .ok_or_else(|| Error::InvalidInstance("at least one string is required".into()))?;
        if strings.iter().any(|s| !s.same_alphabet(first)) {
            return Err(Error::AlphabetMismatch);
        }
        match &metric {
            Metric::Hamming => {
                if let Some(s) = strings.iter().find(|s| s.len() != first.len()) {
                    return Err(Error::LengthMismatch {
                        left: first.len(),
                        right: s.len(),
                    });
                }
            }
            Metric::Weighted(scheme) => {
                if scheme.alphabet().as_ref() != first.alphabet().as_ref() {
                    return Err(Error::AlphabetMismatch);
                }
            }
            Metric::Levenshtein => {}
        }
        Ok(CspInstance { strings, d, metric })
    }

    /// Parses each text over `alphabet`.
    pub fn from_strs(
        alphabet: &Arc<Alphabet>,
        texts: &[&str],
        d: usize,
        metric: Metric<T>,
    ) -> Result<Self> {
        let strings = texts
            .iter()
            .map(|t| Seq::parse(alphabet, t))
            .collect::<Result<Vec<_>>>()?;
        Self::new(strings, d, metric)
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

    pub fn metric(&self) -> &Metric<T> {
        &self.metric
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        self.strings[0].alphabet()
    }

    /// Length of the first string (the common length under Hamming).
    pub fn n(&self) -> usize {
        self.strings[0].len()
    }

    pub fn max_len(&self) -> usize {
        self.strings.iter().map(Seq::len).max().unwrap_or(0)
    }

    pub fn min_len(&self) -> usize {
        self.strings.iter().map(Seq::len).min().unwrap_or(0)
    }

    fn check_candidate(&self, s: &Seq) -> Result<()> {
        if !s.same_alphabet(&self.strings[0]) {
            return Err(Error::AlphabetMismatch);
        }
        if self.metric.is_hamming() && s.len() != self.n() {
            return Err(Error::LengthMismatch {
                left: s.len(),
                right: self.n(),
            });
        }
        Ok(())
    }

    /// Distance from `s` to input string `i` (0-based).
    pub fn distance_to(&self, s: &Seq, i: usize) -> Result<T> {
        self.check_candidate(s)?;
        let target = self
            .strings
            .get(i)
            .ok_or_else(|| Error::OutOfRange(format!("string index {i} of {}", self.k())))?;
        self.metric.distance(s, target)
    }

    /// Maximum distance from `s` to any input string.
    pub fn radius(&self, s: &Seq) -> Result<T> {
        self.check_candidate(s)?;
        let mut worst = T::zero();
        for t in &self.strings {
            let v = self.metric.distance(s, t)?;
            if v > worst {
                worst = v;
            }
        }
        Ok(worst)
    }

    pub fn threshold(&self) -> T {
        T::from_count(self.d)
    }

    pub fn is_center(&self, s: &Seq) -> Result<bool> {
        Ok(self.radius(s)? <= self.threshold())
    }

    /// Same strings and metric with a different threshold.
    pub fn with_d(&self, d: usize) -> Self {
        CspInstance {
            strings: self.strings.clone(),
            d,
            metric: self.metric.clone(),
        }
    }
}
