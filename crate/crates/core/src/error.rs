use thiserror::Error;

/// Errors raised by the engine.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("unknown root datum type `{0}` (expected A1xA1, A2 or C2)")]
    UnknownTypeLabel(String),

    #[error("unknown group `{0}`")]
    UnknownGroup(String),

    #[error("group order exceeds the materialization bound of {bound}")]
    Capacity { bound: usize },

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("representations of dimension {0} are not supported (max 2)")]
    UnsupportedRank(usize),

    #[error("classification error: {0}")]
    Classification(String),

    #[error("data error: {0}")]
    Data(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
