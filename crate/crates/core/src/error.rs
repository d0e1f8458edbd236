use std::path::PathBuf;

use thiserror::Error;

/// Errors raised by the engine. Validation failures carry a one-line
/// diagnostic naming the violated precondition.
#[derive(Debug, Error)]
pub enum Error {
    #[error("{0}")]
    UnsupportedGroup(String),

    #[error("marked node k={k} out of range [1,{n}]")]
    MarkedNodeOutOfRange { k: usize, n: usize },

    #[error("index {index} out of range [1,{n}]")]
    IndexOutOfRange { index: usize, n: usize },

    #[error("dimension mismatch: expected {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },

    #[error("weight {0} is not in the weight lattice")]
    NotLatticePoint(String),

    #[error("weight {weight} is not dominant off node k={k}: a_{index} = {value} < 0")]
    NotDominant {
        weight: String,
        k: usize,
        index: usize,
        value: i64,
    },

    #[error("weight {weight} is not dominant: a_{index} = {value} < 0")]
    NotGroupDominant {
        weight: String,
        index: usize,
        value: i64,
    },

    #[error("weight {weight} is not initialized: a_{k} = {value} != 0")]
    NotInitialized {
        weight: String,
        k: usize,
        value: i64,
    },

    #[error("weight is singular (pairs to zero with {0})")]
    Singular(String),

    #[error("arithmetic overflow in {0}")]
    Overflow(&'static str),

    #[error("unknown format '{0}'")]
    UnknownFormat(String),

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
