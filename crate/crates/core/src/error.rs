use thiserror::Error;

use crate::partition::Partition;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("polynomial is not divisible by the given divisor")]
    NotDivisible,

    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("invalid partition {rows:?}: {reason}")]
    InvalidPartition { rows: Vec<i64>, reason: String },

    #[error("partition {partition} does not fit in the {d} x {cols} rectangle")]
    NotInRectangle {
        partition: Partition,
        d: usize,
        cols: usize,
    },

    #[error("partitions have different row bounds ({0} vs {1})")]
    RowBoundMismatch(usize, usize),

    #[error("internal error: determinant not divisible by the Vandermonde product for {0}")]
    InternalNonDivisible(Partition),

    #[error("element is not in the span of the basis: {0}")]
    NotInSpan(String),

    #[error("coefficient of {partition} leaves the localized ring: {reason}")]
    MembershipViolation { partition: Partition, reason: String },

    #[error("w-index {index} exceeds the configured stage n = {n}")]
    IndexOutOfConfig { index: u32, n: usize },

    #[error("denominator generator {0} has no image under this map")]
    UnmappedDenominator(String),

    #[error("invalid weight configuration: {0}")]
    InvalidConfig(String),

    #[error("mismatch: {0}")]
    Mismatch(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("unsupported input: {0}")]
    Unsupported(String),
}
