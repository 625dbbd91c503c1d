use num_rational::BigRational;
use thiserror::Error;

use crate::partitions::Partition;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("series order mismatch: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },

    #[error("substitute_power needs a positive exponent")]
    ZeroPower,

    #[error("exp needs a zero constant term, got {0}")]
    NonzeroConstantTerm(BigRational),

    /// A coefficient that should count something is not an integer. This is
    /// always an engine bug, never bad input.
    #[error("coefficient of x^{degree} is not an integer: {value}")]
    NotIntegral { degree: usize, value: BigRational },

    #[error("{partition} is not a partition of {expected}")]
    WrongPartitionSize { partition: Partition, expected: usize },

    #[error("k must be at least 1")]
    ZeroK,

    #[error("brute-force enumeration refused for k={k}, n={n} (limits: k <= {max_k}, n <= {max_n})")]
    OracleLimit {
        k: usize,
        n: usize,
        max_k: usize,
        max_n: usize,
    },

    #[error("invalid coding tree: {0}")]
    InvalidCodingTree(String),

    #[error("invalid canonical code: {0}")]
    InvalidCode(String),

    #[error("not a permutation of the colors 1..={colors}: {perm:?}")]
    InvalidPermutation { perm: Vec<u8>, colors: usize },
}
