use std::path::PathBuf;

use crate::partitions::Partition;

/// Errors produced by the library.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("weight mismatch: {left} has weight {left_weight}, {right} has weight {right_weight}")]
    WeightMismatch {
        left: Partition,
        left_weight: usize,
        right: Partition,
        right_weight: usize,
    },

    #[error("degree {degree} exceeds the configured maximum {max}")]
    DegreeTooLarge { degree: usize, max: usize },

    #[error("enumeration budget exceeded: {needed} steps requested, budget is {budget}")]
    BudgetExceeded { needed: u128, budget: u128 },

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("invalid surface: {0}")]
    InvalidSurface(String),

    #[error("malformed map: {0}")]
    MalformedMap(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("cache I/O error at {path}: {source}")]
    CacheIo {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// True for refusals caused by size limits rather than bad input.
    pub fn is_refusal(&self) -> bool {
        matches!(
            self,
            Error::BudgetExceeded { .. } | Error::DegreeTooLarge { .. }
        )
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
