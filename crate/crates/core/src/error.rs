use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed canonical text; `pos` is the byte offset of the offending token.
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("parts must be weakly decreasing: {0:?}")]
    NotAPartition(Vec<i64>),

    #[error("not a permutation of 1..{n}: {window:?}")]
    NotAPermutation { window: Vec<u32>, n: usize },

    #[error("inner shape {inner} is not contained in outer shape {outer}")]
    NotContained { inner: String, outer: String },

    #[error("descent position {p} is smaller than the length {len} of the partition")]
    DescentTooSmall { p: usize, len: usize },

    #[error("rank conditions cannot occur: {0}")]
    InvalidRanks(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("too many variables: {0}")]
    TooManyVariables(String),

    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
