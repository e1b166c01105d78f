use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::alphabet::{Alphabet, GAP};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Substitution / insertion / deletion costs over the gap-extended alphabet.
///
/// The table is `(σ+1)×(σ+1)`, indexed by symbol code with the gap in the
/// last row and column. `cost(a, gap)` is the price of deleting `a`,
/// `cost(gap, b)` the price of inserting `b`.
#[derive(Debug, Clone, PartialEq)]
pub struct CostScheme<T> {
    alphabet: Arc<Alphabet>,
    dim: usize,
    table: Vec<T>,
    is_metric: bool,
    is_natural: bool,
}

/// One failed axiom. Symbols are reported as characters, the gap as `'-'`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum MetricViolation {
    /// `δ(a,a) ≠ 0`.
    NonZeroDiagonal {
        a: char,
    },
    /// `δ(a,b) = 0` with `a ≠ b`.
    ZeroOffDiagonal {
        a: char,
        b: char,
    },
    Asymmetric {
        a: char,
        b: char,
    },
    /// `δ(a,c) > δ(a,b) + δ(b,c)`.
    Triangle {
        a: char,
        b: char,
        c: char,
    },
    /// Deleting `a` is not strictly cheaper than substituting to `b` and
    /// deleting `b`.
    Unnatural {
        a: char,
        b: char,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MetricReport {
    pub is_metric: bool,
    pub is_natural: bool,
    pub violations: Vec<MetricViolation>,
}

impl<T: Scalar> CostScheme<T> {
    /// Builds a scheme from a row-major `(σ+1)×(σ+1)` table. Dimensions and
    /// non-negativity are enforced; metric axioms are only recorded.
    pub fn new(alphabet: Arc<Alphabet>, rows: Vec<Vec<T>>) -> Result<Self> {
        let dim = alphabet.size() + 1;
        if rows.len() != dim || rows.iter().any(|r| r.len() != dim) {
            return Err(Error::InvalidArgument(format!(
                "cost table must be {dim}x{dim} for alphabet {alphabet} plus gap"
            )));
        }
        let table: Vec<T> = rows.into_iter().flatten().collect();
        if table.iter().any(|v| v.is_negative()) {
            return Err(Error::InvalidArgument(
                "cost table has negative entries".into(),
            ));
        }
        let mut scheme = CostScheme {
            alphabet,
            dim,
            table,
            is_metric: false,
            is_natural: false,
        };
        let report = scheme.validate();
        scheme.is_metric = report.is_metric;
        scheme.is_natural = report.is_natural;
        Ok(scheme)
    }

    /// Substitution and indel cost 1 everywhere: Levenshtein.
    pub fn unit(alphabet: Arc<Alphabet>) -> Self {
        Self::uniform(alphabet, T::one(), T::one()).expect("unit table is well formed")
    }

    /// Every substitution costs `substitution`, every insertion or deletion
    /// costs `indel`.
    pub fn uniform(alphabet: Arc<Alphabet>, substitution: T, indel: T) -> Result<Self> {
        let dim = alphabet.size() + 1;
        let gap = dim - 1;
        let rows = (0..dim)
            .map(|a| {
                (0..dim)
                    .map(|b| {
                        if a == b {
                            T::zero()
                        } else if a == gap || b == gap {
                            indel.clone()
                        } else {
                            substitution.clone()
                        }
                    })
                    .collect()
            })
            .collect();
        Self::new(alphabet, rows)
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    /// Index of the gap row/column.
    pub fn gap(&self) -> usize {
        self.dim - 1
    }

    pub fn cost(&self, a: usize, b: usize) -> &T {
        &self.table[a * self.dim + b]
    }

    pub fn rows(&self) -> Vec<Vec<T>> {
        self.table.chunks(self.dim).map(|r| r.to_vec()).collect()
    }

    pub fn is_metric(&self) -> bool {
        self.is_metric
    }

    pub fn is_natural(&self) -> bool {
        self.is_natural
    }

    fn label(&self, i: usize) -> char {
        if i == self.gap() {
            GAP
        } else {
            self.alphabet.symbol(i as u8)
        }
    }

    /// Exhaustive check of the metric axioms over `Σ'` and of naturalness.
    pub fn validate(&self) -> MetricReport {
        let n = self.dim;
        let mut violations = Vec::new();
        let mut metric = true;
        for a in 0..n {
            if !self.cost(a, a).is_zero() {
                violations.push(MetricViolation::NonZeroDiagonal { a: self.label(a) });
                metric = false;
            }
            for b in 0..n {
                if a == b {
                    continue;
                }
                if self.cost(a, b).is_zero() {
                    violations.push(MetricViolation::ZeroOffDiagonal {
                        a: self.label(a),
                        b: self.label(b),
                    });
                    metric = false;
                }
                if a < b && self.cost(a, b) != self.cost(b, a) {
                    violations.push(MetricViolation::Asymmetric {
                        a: self.label(a),
                        b: self.label(b),
                    });
                    metric = false;
                }
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if a == c || b == a || b == c {
                        continue;
                    }
                    let detour = self.cost(a, b).clone() + self.cost(b, c).clone();
                    if *self.cost(a, c) > detour {
                        violations.push(MetricViolation::Triangle {
                            a: self.label(a),
                            b: self.label(b),
                            c: self.label(c),
                        });
                        metric = false;
                    }
                }
            }
        }
        let gap = self.gap();
        let mut natural = true;
        for a in 0..gap {
            for b in 0..gap {
                if a == b {
                    continue;
                }
                let detour = self.cost(a, b).clone() + self.cost(b, gap).clone();
                if *self.cost(a, gap) >= detour {
                    violations.push(MetricViolation::Unnatural {
                        a: self.label(a),
                        b: self.label(b),
                    });
                    natural = false;
                }
            }
        }
        MetricReport {
            is_metric: metric,
            is_natural: natural,
            violations,
        }
    }
}

/// Free-function form of [`CostScheme::validate`].
pub fn validate_metric<T: Scalar>(scheme: &CostScheme<T>) -> MetricReport {
    scheme.validate()
}
