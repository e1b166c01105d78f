use super::alphabet::Seq;
use super::cost::CostScheme;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

fn check_alphabets(s: &Seq, t: &Seq) -> Result<()> {
    if s.same_alphabet(t) {
        Ok(())
    } else {
        Err(Error::AlphabetMismatch)
    }
}

/// Number of positions at which two equal-length sequences differ.
pub fn hamming(s: &Seq, t: &Seq) -> Result<usize> {
    check_alphabets(s, t)?;
    if s.len() != t.len() {
        return Err(Error::LengthMismatch {
            left: s.len(),
            right: t.len(),
        });
    }
    Ok(hamming_codes(s.codes(), t.codes()))
}

pub(crate) fn hamming_codes(a: &[u8], b: &[u8]) -> usize {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).filter(|(x, y)| x != y).count()
}

/// Unit-cost edit distance.
pub fn levenshtein(s: &Seq, t: &Seq) -> Result<usize> {
    check_alphabets(s, t)?;
    Ok(levenshtein_codes(s.codes(), t.codes()))
}

pub(crate) fn levenshtein_codes(a: &[u8], b: &[u8]) -> usize {
    if a.is_empty() {
        return b.len();
    }
    let mut prev: Vec<usize> = (0..=b.len()).collect();
    let mut cur = vec![0; b.len() + 1];
    for (i, &x) in a.iter().enumerate() {
        cur[0] = i + 1;
        for (j, &y) in b.iter().enumerate() {
            let sub = prev[j] + usize::from(x != y);
            cur[j + 1] = sub.min(prev[j + 1] + 1).min(cur[j] + 1);
        }
        std::mem::swap(&mut prev, &mut cur);
    }
    prev[b.len()]
}

/// Minimum total cost of transforming `s` into `t` under `scheme`.
///
/// Refuses schemes that fail the metric axioms.
pub fn weighted_edit<T: Scalar>(s: &Seq, t: &Seq, scheme: &CostScheme<T>) -> Result<T> {
    check_alphabets(s, t)?;
    if s.alphabet().as_ref() != scheme.alphabet().as_ref() {
        return Err(Error::AlphabetMismatch);
    }
    if !scheme.is_metric() {
        return Err(Error::NonMetric);
    }
    let gap = scheme.gap();
    let (a, b) = (s.codes(), t.codes());
    let mut prev: Vec<T> = Vec::with_capacity(b.len() + 1);
    prev.push(T::zero());
    for &y in b {
        let last = prev.last().unwrap().clone();
        prev.push(last + scheme.cost(gap, y as usize).clone());
    }
    let mut cur = prev.clone();
    for &x in a {
        cur[0] = prev[0].clone() + scheme.cost(x as usize, gap).clone();
        for (j, &y) in b.iter().enumerate() {
            let sub = prev[j].clone() + scheme.cost(x as usize, y as usize).clone();
            let del = prev[j + 1].clone() + scheme.cost(x as usize, gap).clone();
            let ins = cur[j].clone() + scheme.cost(gap, y as usize).clone();
            let mut best = sub;
            if del < best {
                best = del;
            }
            if ins < best {
                best = ins;
            }
            cur[j + 1] = best;
        }
        std::mem::swap(&mut prev, &mut cur);
    }
    Ok(prev.pop().unwrap())
}
