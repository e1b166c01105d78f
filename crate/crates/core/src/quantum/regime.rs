use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

/// A row of the summary of the three quantum CSP algorithms.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SummaryRow {
    pub algorithm: String,
    /// Tag of the matching [`CostProfile`](super::CostProfile).
    pub cost_tag: String,
    pub distance_metric: String,
    pub runtime: String,
    pub optimality_conditions: String,
}

pub fn algorithm_summary() -> Vec<SummaryRow> {
    let row = |algorithm: &str, tag: &str, metric: &str, runtime: &str, when: &str| SummaryRow {
        algorithm: algorithm.into(),
        cost_tag: tag.into(),
        distance_metric: metric.into(),
        runtime: runtime.into(),
        optimality_conditions: when.into(),
    };
    vec![
        row(
            "Trivial Search",
            "quantum_trivial",
            "Any weighted edit",
            "σ^{n/2} · √k · D(n)",
            "σ small, d and k large",
        ),
        row(
            "Random Walk",
            "quantum_walk",
            "Hamming",
            "kn + k² · d^{(d+5)/2}",
            "d small",
        ),
        row(
            "Dynamic Programming",
            "quantum_dp",
            "Levenshtein",
            "σ · 2^k · T(n)^{2k}",
            "k small",
        ),
    ]
}

/// How the number of input strings grows with `n`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "class", rename_all = "snake_case")]
pub enum KGrowth {
    Const,
    LogN,
    /// `k = Θ(n^p)`.
    Poly {
        p: f64,
    },
    /// `k = Θ(2^{qn})`.
    Exp {
        q: f64,
    },
}

impl fmt::Display for KGrowth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KGrowth::Const => write!(f, "O(1)"),
            KGrowth::LogN => write!(f, "O(log n)"),
            KGrowth::Poly { p } => write!(f, "O(n^{p})"),
            KGrowth::Exp { q } => write!(f, "O(2^({q}n))"),
        }
    }
}

/// Asymptotic shape `2^{qn} · n^a · (log n)^b` of a function of `n`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Growth {
    pub exp: f64,
    pub poly: f64,
    pub log: f64,
}

impl Growth {
    pub const ZERO: Growth = Growth::new(0.0, 0.0, 0.0);

    pub const fn new(exp: f64, poly: f64, log: f64) -> Self {
        Growth { exp, poly, log }
    }

    fn key(&self) -> (f64, f64, f64) {
        (self.exp, self.poly, self.log)
    }

    /// Growth of a sum, i.e. the larger one.
    pub fn max(self, other: Growth) -> Growth {
        match self.key().partial_cmp(&other.key()) {
            Some(Ordering::Less) => other,
            _ => self,
        }
    }

    pub fn times(self, other: Growth) -> Growth {
        Growth::new(
            self.exp + other.exp,
            self.poly + other.poly,
            self.log + other.log,
        )
    }

    /// Growth of `log₂ k`.
    pub fn log2_of(k: KGrowth) -> Growth {
        match k {
            KGrowth::Const => Growth::ZERO,
            // log log n, bounded by log n
            KGrowth::LogN | KGrowth::Poly { .. } => Growth::new(0.0, 0.0, 1.0),
            KGrowth::Exp { .. } => Growth::new(0.0, 1.0, 0.0),
        }
    }

    /// Growth of `k` itself.
    pub fn of(k: KGrowth) -> Growth {
        match k {
            KGrowth::Const => Growth::ZERO,
            KGrowth::LogN => Growth::new(0.0, 0.0, 1.0),
            KGrowth::Poly { p } => Growth::new(0.0, p, 0.0),
            KGrowth::Exp { q } => Growth::new(q, 0.0, 0.0),
        }
    }
}

/// Scaling class of a runtime, from the growth of its `log₂`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Regime {
    #[serde(rename = "poly.")]
    Poly,
    #[serde(rename = "super-poly.")]
    SuperPoly,
    #[serde(rename = "exp.")]
    Exp,
    #[serde(rename = "slightly super-exp.")]
    SlightlySuperExp,
    #[serde(rename = "super-exp.")]
    SuperExp,
    #[serde(rename = "doubly exp.")]
    DoublyExp,
}

impl Regime {
    pub fn label(self) -> &'static str {
        match self {
            Regime::Poly => "poly.",
            Regime::SuperPoly => "super-poly.",
            Regime::Exp => "exp.",
            Regime::SlightlySuperExp => "slightly super-exp.",
            Regime::SuperExp => "super-exp.",
            Regime::DoublyExp => "doubly exp.",
        }
    }

    /// Classifies a runtime `2^{f(n)}` by the growth of `f`.
    pub fn of_log2_cost(f: Growth) -> Regime {
        if f.exp > 0.0 {
            Regime::DoublyExp
        } else if f.poly == 0.0 {
            if f.log <= 1.0 {
                Regime::Poly
            } else {
                Regime::SuperPoly
            }
        } else if f.poly < 1.0 {
            Regime::SuperPoly
        } else if f.poly == 1.0 {
            match f.log.partial_cmp(&1.0) {
                Some(Ordering::Less) => Regime::Exp,
                Some(Ordering::Equal) => Regime::SlightlySuperExp,
                _ => Regime::SuperExp,
            }
        } else {
            Regime::SuperExp
        }
    }
}

impl fmt::Display for Regime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// One cell of the regime table.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RegimeCell {
    pub algorithm: String,
    pub k_growth: KGrowth,
    pub beta: f64,
    /// Growth of `log₂` of the runtime.
    pub log2_growth: Growth,
    pub regime: Regime,
}

/// Growth of `log₂` runtime for the three quantum CSP algorithms with a
/// fixed alphabet and `d = βn`, `β > 0` constant.
pub fn log2_cost_growth(cost_tag: &str, k: KGrowth) -> Option<Growth> {
    let log_n = Growth::new(0.0, 0.0, 1.0);
    let n = Growth::new(0.0, 1.0, 0.0);
    let lk = Growth::log2_of(k);
    Some(match cost_tag {
        // (n/2)·log σ + (1/2)·log k + log D(n)
        "quantum_trivial" => n.max(lk).max(log_n),
        // log(kn + k²·d^{(d+5)/2}) with d = βn: (d+5)/2 · log d ~ n log n
        "quantum_walk" => Growth::new(0.0, 1.0, 1.0).max(lk).max(log_n),
        // log σ + k + 2k·log T(n)
        "quantum_dp" => Growth::of(k).times(log_n).max(Growth::of(k)),
        _ => return None,
    })
}

pub fn classify(cost_tag: &str, k: KGrowth, beta: f64) -> Option<RegimeCell> {
    let g = log2_cost_growth(cost_tag, k)?;
    Some(RegimeCell {
        algorithm: cost_tag.into(),
        k_growth: k,
        beta,
        log2_growth: g,
        regime: Regime::of_log2_cost(g),
    })
}

/// Default `k` classes: constant, logarithmic, quadratic and exponential.
pub fn default_k_classes() -> [KGrowth; 4] {
    [
        KGrowth::Const,
        KGrowth::LogN,
        KGrowth::Poly { p: 2.0 },
        KGrowth::Exp { q: 1.0 },
    ]
}

/// Every algorithm of [`algorithm_summary`] against every `k` class.
pub fn regime_table(beta: f64, classes: &[KGrowth]) -> Vec<RegimeCell> {
    algorithm_summary()
        .iter()
        .flat_map(|row| {
            classes
                .iter()
                .filter_map(|&k| classify(&row.cost_tag, k, beta))
        })
        .collect()
}
