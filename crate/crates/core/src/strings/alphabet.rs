use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Reserved gap symbol of the extended alphabet.
pub const GAP: char = '-';

/// An ordered set of at least two distinct symbols. Symbols are stored as
/// dense codes `0..σ` everywhere else in the crate.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Alphabet {
    symbols: Vec<char>,
}

impl Alphabet {
    pub fn new(symbols: impl IntoIterator<Item = char>) -> Result<Self> {
        let symbols: Vec<char> = symbols.into_iter().collect();
        if symbols.len() < 2 {
            return Err(Error::InvalidAlphabet(format!(
                "need at least two symbols, got {}",
                symbols.len()
            )));
        }
        if symbols.len() > u8::MAX as usize {
            return Err(Error::InvalidAlphabet("more than 255 symbols".into()));
        }
        for (i, &c) in symbols.iter().enumerate() {
            if c == GAP {
                return Err(Error::InvalidAlphabet(format!(
                    "{GAP:?} is reserved for gaps"
                )));
            }
            if c.is_whitespace() || c.is_control() {
                return Err(Error::InvalidAlphabet(format!("unprintable symbol {c:?}")));
            }
            if symbols[..i].contains(&c) {
                return Err(Error::InvalidAlphabet(format!("duplicate symbol {c:?}")));
            }
        }
        Ok(Alphabet { symbols })
    }

    pub fn parse(symbols: &str) -> Result<Self> {
        Alphabet::new(symbols.chars())
    }

    pub fn dna() -> Self {
        Alphabet {
            symbols: vec!['A', 'C', 'G', 'T'],
        }
    }

    /// The first `sigma` symbols of `ACGT`, continuing with the remaining
    /// upper-case letters and then lower-case letters.
    pub fn of_size(sigma: usize) -> Result<Self> {
        let pool = "ACGTBDEFHIJKLMNOPQRSUVWXYZabcdefghijklmnopqrstuvwxyz";
        if sigma > pool.len() {
            return Err(Error::InvalidAlphabet(format!(
                "no default alphabet of size {sigma}"
            )));
        }
        Alphabet::new(pool.chars().take(sigma))
    }

    pub fn size(&self) -> usize {
        self.symbols.len()
    }

    pub fn symbols(&self) -> &[char] {
        &self.symbols
    }

    pub fn code(&self, symbol: char) -> Option<u8> {
        self.symbols
            .iter()
            .position(|&c| c == symbol)
            .map(|i| i as u8)
    }

    pub fn symbol(&self, code: u8) -> char {
        self.symbols[code as usize]
    }

    /// Encodes `text` into a sequence over this alphabet.
    pub fn encode(self: &Arc<Self>, text: &str) -> Result<Seq> {
        Seq::parse(self, text)
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.symbols {
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

/// A string over an [`Alphabet`], held as dense symbol codes.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Seq {
    codes: Vec<u8>,
    alphabet: Arc<Alphabet>,
}

impl Seq {
    pub fn parse(alphabet: &Arc<Alphabet>, text: &str) -> Result<Self> {
        let codes = text
            .chars()
            .enumerate()
            .map(|(position, symbol)| {
                alphabet
                    .code(symbol)
                    .ok_or(Error::InvalidSymbol { symbol, position })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Seq {
            codes,
            alphabet: Arc::clone(alphabet),
        })
    }

    pub fn from_codes(alphabet: &Arc<Alphabet>, codes: Vec<u8>) -> Result<Self> {
        if let Some(position) = codes.iter().position(|&c| c as usize >= alphabet.size()) {
            return Err(Error::OutOfRange(format!(
                "code {} at position {position} exceeds alphabet size {}",
                codes[position],
                alphabet.size()
            )));
        }
        Ok(Seq {
            codes,
            alphabet: Arc::clone(alphabet),
        })
    }

    pub(crate) fn from_codes_unchecked(alphabet: &Arc<Alphabet>, codes: Vec<u8>) -> Self {
        debug_assert!(codes.iter().all(|&c| (c as usize) < alphabet.size()));
        Seq {
            codes,
            alphabet: Arc::clone(alphabet),
        }
    }

    pub fn empty(alphabet: &Arc<Alphabet>) -> Self {
        Seq {
            codes: Vec::new(),
            alphabet: Arc::clone(alphabet),
        }
    }

    pub fn len(&self) -> usize {
        self.codes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.codes.is_empty()
    }

    pub fn codes(&self) -> &[u8] {
        &self.codes
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    pub fn same_alphabet(&self, other: &Seq) -> bool {
        Arc::ptr_eq(&self.alphabet, &other.alphabet) || self.alphabet == other.alphabet
    }

    /// Substring `[start, start + len)`.
    pub fn window(&self, start: usize, len: usize) -> Result<Seq> {
        if start + len > self.len() {
            return Err(Error::OutOfRange(format!(
                "window [{start}, {}) of a length-{} sequence",
                start + len,
                self.len()
            )));
        }
        Ok(Seq::from_codes_unchecked(
            &self.alphabet,
            self.codes[start..start + len].to_vec(),
        ))
    }
}

impl fmt::Display for Seq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &c in &self.codes {
            write!(f, "{}", self.alphabet.symbol(c))?;
        }
        Ok(())
    }
}
