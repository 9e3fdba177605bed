use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid degree {n}: expected {min} <= n <= {max}")]
    InvalidDegree { n: usize, min: usize, max: usize },

    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("not a permutation of 1..={n}: {reason}")]
    NotAPermutation { n: usize, reason: String },

    #[error("invalid position(s) for degree {n}: {detail}")]
    InvalidPosition { n: usize, detail: String },

    #[error("generator X needs degree >= 2")]
    SwapOnDegreeOne,

    #[error("rank {index} out of range for degree {n} (n! = {count})")]
    RankOutOfRange { n: usize, index: u64, count: u64 },

    #[error("cannot parse permutation {text:?}: {reason}")]
    ParsePermutation { text: String, reason: String },

    #[error("unknown generator token {0:?}")]
    UnknownToken(String),

    #[error("negative run length in token {0:?}")]
    NegativeRunLength(String),

    #[error("parameter out of range: {0}")]
    OutOfRange(String),

    #[error("resource limit: {what} needs {needed} bytes, budget is {budget} bytes")]
    ResourceLimit {
        what: String,
        needed: u64,
        budget: u64,
    },

    /// A constructive builder produced a word that does not do what it claims.
    #[error("builder validation failed: {0}")]
    Validation(String),

    #[error("malformed distance table: {0}")]
    BadTable(String),

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}
