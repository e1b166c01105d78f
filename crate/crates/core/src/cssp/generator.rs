use std::sync::Arc;

use crate::error::{Error, Result};
use crate::strings::{Alphabet, Seq};
use crate::util::saturating_pow;

/// A set of equal-length strings. It generates every string that agrees with
/// the members wherever the members are unanimous.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorSet {
    members: Vec<Seq>,
    /// Agreed symbol per position, `None` on conflict positions.
    template: Vec<Option<u8>>,
}

impl GeneratorSet {
    pub fn new(members: Vec<Seq>) -> Result<Self> {
        let first = members.first().ok_or_else(|| {
            Error::InvalidArgument("a generator needs at least one member".into())
        })?;
        for m in &members {
            if !m.same_alphabet(first) {
                return Err(Error::AlphabetMismatch);
            }
            if m.len() != first.len() {
                return Err(Error::LengthMismatch {
                    left: first.len(),
                    right: m.len(),
                });
            }
        }
        let template = (0..first.len())
            .map(|p| {
                let c = first.codes()[p];
                members.iter().all(|m| m.codes()[p] == c).then_some(c)
            })
            .collect();
        Ok(GeneratorSet { members, template })
    }

    pub fn members(&self) -> &[Seq] {
        &self.members
    }

    /// Number of members.
    pub fn size(&self) -> usize {
        self.members.len()
    }

    /// Common member length `L`.
    pub fn width(&self) -> usize {
        self.template.len()
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        self.members[0].alphabet()
    }

    pub fn unanimous_positions(&self) -> Vec<usize> {
        (0..self.width())
            .filter(|&p| self.template[p].is_some())
            .collect()
    }

    pub fn conflict_positions(&self) -> Vec<usize> {
        (0..self.width())
            .filter(|&p| self.template[p].is_none())
            .collect()
    }

    /// Count and list of positions where the members disagree.
    pub fn conflict(&self) -> (usize, Vec<usize>) {
        let positions = self.conflict_positions();
        (positions.len(), positions)
    }

    /// Whether `s` agrees with every unanimous position.
    pub fn generates(&self, s: &Seq) -> bool {
        s.same_alphabet(&self.members[0])
            && s.len() == self.width()
            && self
                .template
                .iter()
                .zip(s.codes())
                .all(|(t, c)| t.is_none_or(|t| t == *c))
    }

    /// `σ^conflict`.
    pub fn generated_count(&self) -> u128 {
        saturating_pow(
            self.alphabet().size() as u128,
            self.conflict_positions().len() as u32,
        )
    }

    /// All generated strings in lexicographic order. Refuses when there would
    /// be more than `max_generated` of them.
    pub fn generated_strings(&self, max_generated: u128) -> Result<GeneratedStrings> {
        let count = self.generated_count();
        if count > max_generated {
            return Err(Error::budget("generated strings", count, max_generated));
        }
        Ok(GeneratedStrings::new(self))
    }
}

/// Iterator over the strings generated by a [`GeneratorSet`].
#[derive(Debug, Clone)]
pub struct GeneratedStrings {
    alphabet: Arc<Alphabet>,
    current: Vec<u8>,
    free: Vec<usize>,
    fresh: bool,
    exhausted: bool,
}

impl GeneratedStrings {
    fn new(g: &GeneratorSet) -> Self {
        GeneratedStrings {
            alphabet: Arc::clone(g.alphabet()),
            current: g.template.iter().map(|t| t.unwrap_or(0)).collect(),
            free: g.conflict_positions(),
            fresh: true,
            exhausted: false,
        }
    }

    /// Advances and returns the next generated string as raw codes.
    pub(crate) fn next_codes(&mut self) -> Option<&[u8]> {
        if self.exhausted {
            return None;
        }
        if self.fresh {
            self.fresh = false;
            return Some(&self.current);
        }
        let sigma = self.alphabet.size() as u8;
        for &p in self.free.iter().rev() {
            self.current[p] += 1;
            if self.current[p] < sigma {
                return Some(&self.current);
            }
            self.current[p] = 0;
        }
        self.exhausted = true;
        None
    }
}

impl Iterator for GeneratedStrings {
    type Item = Seq;

    fn next(&mut self) -> Option<Seq> {
        let alphabet = Arc::clone(&self.alphabet);
        self.next_codes()
            .map(|codes| Seq::from_codes_unchecked(&alphabet, codes.to_vec()))
    }
}
