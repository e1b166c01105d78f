//! Exact solvers for the Closest String (CSP) and Closest Substring (CSSP)
//! problems, together with an exact analysis of the lazy random walk on the
//! perfect `(d+1)`-ary search tree and closed-form cost models for the
//! corresponding quantum search routines.
//!
//! The numeric core is generic over a [`Scalar`]: exact rationals
//! ([`Rational`]) are used wherever an identity has to hold with zero
//! tolerance, `f64` wherever a float is good enough. The aliases below name
//! the common instantiations.
//!
//! Module map:
//!
//! - [`strings`]: alphabets, sequences, Hamming / Levenshtein / weighted edit
//!   distances, cost-table validation and CSP instances.
//! - [`csp`]: column preprocessing, the exhaustive oracle, the bounded search
//!   tree and the Boolean dynamic program for Levenshtein centers.
//! - [`cssp`]: generator enumeration for the closest substring problem and its
//!   brute-force oracle.
//! - [`chain`]: the tree Markov chain, its stationary law, congestion,
//!   spectrum, conductance and the classical walk search.
//! - [`quantum`]: Grover and minimum-finding simulation plus cost reports.
//! - [`harness`]: FASTA and JSON ingestion, instance generation, benchmarks and
//!   report export.

pub mod budget;
pub mod chain;
pub mod csp;
pub mod cssp;
pub mod error;
pub mod harness;
pub mod quantum;
pub mod scalar;
pub mod strings;
mod util;

pub use budget::Budget;
pub use error::{Error, Result};
pub use scalar::{parse_rational, Rational, Scalar};
pub use strings::{Alphabet, CostScheme, CspInstance, Metric, Seq};

/// Cost scheme with exact rational entries.
pub type ExactCostScheme = CostScheme<Rational>;
/// CSP instance whose weighted metric (if any) is exact.
pub type ExactCspInstance = CspInstance<Rational>;
/// Tree chain with exact transition probabilities.
pub type ExactTreeChain = chain::TreeChain<Rational>;
/// Tree chain with `f64` transition probabilities.
pub type FloatTreeChain = chain::TreeChain<f64>;
/// Stationary distribution in exact arithmetic.
pub type ExactStationary = chain::Stationary<Rational>;
