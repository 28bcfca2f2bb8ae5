use alloc::string::String;

use crate::cactus::CactusViolation;
use crate::tree::TreeViolation;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("incompatible degrees: {left} and {right}")]
    IncompatibleDegrees { left: usize, right: usize },
    #[error("not a permutation: {0}")]
    InvalidPermutation(String),
    #[error("not a set partition: {0}")]
    InvalidPartition(String),
    #[error("size {requested} exceeds the enumeration limit {limit}; raise the limit explicitly (and split the range across jobs) to go further")]
    LimitExceeded { requested: usize, limit: usize },
    #[error("reciprocal of a series with zero constant term")]
    ZeroConstantTerm,
    #[error("series shapes differ")]
    ShapeMismatch,
    #[error("closed form needs p1, p2, p3 >= 1 (got {0:?}); use tree enumeration for degenerate profiles")]
    DegenerateProfile([u32; 3]),
    #[error("index {index} out of range 1..={n}")]
    OutOfRange { index: usize, n: usize },
    #[error(transparent)]
    Cactus(#[from] CactusViolation),
    #[error(transparent)]
    Tree(#[from] TreeViolation),
    #[error("inconsistent tuple: {0}")]
    InvalidTuple(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}
