use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::strings::{levenshtein_codes, CspInstance, Metric, Seq};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Step {
    Unreachable,
    /// The empty center already works.
    Base,
    /// Last symbol of input `j` is deleted.
    Delete(u8),
    /// Center symbol `symbol` is aligned against the last symbol of every
    /// input in `mask` and inserted relative to the others.
    Extend {
        symbol: u8,
        mask: u16,
    },
}

struct Table<'a> {
    strings: Vec<&'a [u8]>,
    sigma: u8,
    width: usize,
    strides: Vec<usize>,
    radices: Vec<usize>,
    steps: Vec<Step>,
}

impl Table<'_> {
    fn coords(&self, flat: usize, i: &mut [usize], e: &mut [usize]) {
        for j in 0..self.strings.len() {
            let packed = (flat / self.strides[j]) % self.radices[j];
            i[j] = packed / self.width;
            e[j] = packed % self.width;
        }
    }

    fn reachable(&self, flat: usize) -> bool {
        self.steps[flat] != Step::Unreachable
    }

    /// Predecessor cell of an extension move, if the move is legal here.
    fn extend_pred(
        &self,
        flat: usize,
        i: &[usize],
        e: &[usize],
        symbol: u8,
        mask: u16,
    ) -> Option<usize> {
        let mut pred = flat;
        for j in 0..self.strings.len() {
            if mask & (1 << j) != 0 {
                if i[j] == 0 {
                    return None;
                }
                let cost = usize::from(self.strings[j][i[j] - 1] != symbol);
                if e[j] < cost {
                    return None;
                }
                pred -= self.strides[j] * (self.width + cost);
            } else {
                if e[j] == 0 {
                    return None;
                }
                pred -= self.strides[j];
            }
        }
        Some(pred)
    }

    fn fill(&mut self) {
        let k = self.strings.len();
        let mut i = vec![0; k];
        let mut e = vec![0; k];
        for flat in 0..self.steps.len() {
            self.coords(flat, &mut i, &mut e);
            let step = if (0..k).all(|j| e[j] >= i[j]) {
                Step::Base
            } else if let Some(j) = (0..k).find(|&j| {
                i[j] >= 1 && e[j] >= 1 && self.reachable(flat - self.strides[j] * (self.width + 1))
            }) {
                Step::Delete(j as u8)
            } else {
                let mut found = Step::Unreachable;
                'search: for symbol in 0..self.sigma {
                    for mask in 0..(1u32 << k) {
                        let mask = mask as u16;
                        if let Some(pred) = self.extend_pred(flat, &i, &e, symbol, mask) {
                            if self.reachable(pred) {
                                found = Step::Extend { symbol, mask };
                                break 'search;
                            }
                        }
                    }
                }
                found
            };
            self.steps[flat] = step;
        }
    }

    fn witness(&self, mut flat: usize) -> Vec<u8> {
        let k = self.strings.len();
        let mut i = vec![0; k];
        let mut e = vec![0; k];
        let mut reversed = Vec::new();
        loop {
            match self.steps[flat] {
                Step::Base => break,
                Step::Unreachable => unreachable!("backtracking left the feasible region"),
                Step::Delete(j) => flat -= self.strides[j as usize] * (self.width + 1),
                Step::Extend { symbol, mask } => {
                    self.coords(flat, &mut i, &mut e);
                    reversed.push(symbol);
                    flat = self
                        .extend_pred(flat, &i, &e, symbol, mask)
                        .expect("recorded move is legal");
                }
            }
        }
        reversed.reverse();
        reversed
    }
}

/// Decides Levenshtein CSP with the Boolean table
/// `B[(i₁..i_k),(e₁..e_k)]` = "some center is within `e_j` of every prefix
/// `s_j[0, i_j)`", filled by extending the center one symbol at a time (with
/// every subset of inputs consuming a symbol) or deleting an input symbol.
/// A witness is read back from the recorded moves.
pub fn solve_dp_levenshtein<T: Scalar>(
    inst: &CspInstance<T>,
    budget: &Budget,
) -> Result<Option<Seq>> {
    if !matches!(inst.metric(), Metric::Levenshtein) {
        return Err(Error::UnsupportedMetric {
            operation: "solve_dp_levenshtein",
            metric: inst.metric().name(),
        });
    }
    let d = inst.d();
    let alphabet = inst.alphabet();
    if d >= inst.max_len() {
        return Ok(Some(Seq::empty(alphabet)));
    }
    let k = inst.k();
    let width = d + 1;
    let radices: Vec<usize> = inst
        .strings()
        .iter()
        .map(|s| (s.len() + 1) * width)
        .collect();
    let cells = radices
        .iter()
        .fold(1u128, |acc, &r| acc.saturating_mul(r as u128));
    if k > 16 || cells > budget.max_dp_cells {
        return Err(Error::budget(
            "levenshtein table cells",
            cells,
            budget.max_dp_cells,
        ));
    }
    let mut strides = Vec::with_capacity(k);
    let mut stride = 1usize;
    for &r in &radices {
        strides.push(stride);
        stride *= r;
    }
    let mut table = Table {
        strings: inst.strings().iter().map(Seq::codes).collect(),
        sigma: alphabet.size() as u8,
        width,
        strides,
        radices,
        steps: vec![Step::Unreachable; cells as usize],
    };
    table.fill();
    let answer: usize = inst
        .strings()
        .iter()
        .zip(&table.strides)
        .map(|(s, &st)| (s.len() * width + d) * st)
        .sum();
    if !table.reachable(answer) {
        return Ok(None);
    }
    let codes = table.witness(answer);
    debug_assert!(table
        .strings
        .iter()
        .all(|s| levenshtein_codes(&codes, s) <= d));
    Ok(Some(Seq::from_codes(alphabet, codes)?))
}
