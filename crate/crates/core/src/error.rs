use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid alphabet: {0}")]
    InvalidAlphabet(String),

    #[error("symbol {symbol:?} at position {position} is not in the alphabet")]
    InvalidSymbol { symbol: char, position: usize },

    #[error("record {record:?}: symbol {symbol:?} at position {position} is not in the alphabet")]
    InvalidRecord {
        record: String,
        position: usize,
        symbol: char,
    },

    #[error("sequences are over different alphabets")]
    AlphabetMismatch,

    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("invalid instance: {0}")]
    InvalidInstance(String),

    #[error("cost scheme is not a metric")]
    NonMetric,

    #[error("{operation} does not support the {metric} metric")]
    UnsupportedMetric {
        operation: &'static str,
        metric: &'static str,
    },

    #[error("budget exceeded: {what} requires {required}, limit is {limit}")]
    BudgetExceeded {
        what: &'static str,
        required: u128,
        limit: u128,
    },

    #[error("index out of range: {0}")]
    OutOfRange(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("i/o error on {path}: {message}")]
    Io { path: String, message: String },
}

impl Error {
    pub(crate) fn budget(what: &'static str, required: u128, limit: u128) -> Self {
        Error::BudgetExceeded {
            what,
            required,
            limit,
        }
    }

    pub fn is_refusal(&self) -> bool {
        matches!(self, Error::BudgetExceeded { .. })
    }
}
