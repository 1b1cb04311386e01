use thiserror::Error;

use crate::partitions::Partition;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty: operation needs a nonempty partition")]
    Empty,
    #[error("case mismatch: {0}")]
    CaseMismatch(String),
    #[error("uncovered-case: no proven filtration for xi = {0}")]
    UncoveredCase(Partition),
    #[error("malformed partition {input:?}: {reason}")]
    ParsePartition { input: String, reason: String },
    #[error("invalid partition {0:?}: parts must be positive and weakly decreasing")]
    InvalidPartition(Vec<u32>),
    #[error("invalid basis tuple: {0}")]
    InvalidTuple(String),
    #[error("invalid super POP: {0}")]
    InvalidSuperPop(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
