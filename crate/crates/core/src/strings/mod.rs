//! Alphabets, sequences and the three distance families.

mod alphabet;
mod cost;
mod distance;
mod instance;

pub use alphabet::{Alphabet, Seq, GAP};
pub use cost::{validate_metric, CostScheme, MetricReport, MetricViolation};
pub use distance::{hamming, levenshtein, weighted_edit};
pub(crate) use distance::{hamming_codes, levenshtein_codes};
pub use instance::{CspInstance, Metric};
