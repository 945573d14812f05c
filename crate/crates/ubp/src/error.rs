use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid integer partition: {0}")]
    InvalidPartition(String),

    #[error("not a partition of {expected}: {found}")]
    WrongPartitionSum { expected: u32, found: String },

    #[error("invalid set partition of [{ground_size}]: {reason}")]
    InvalidSetPartition { ground_size: usize, reason: String },

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("ground size mismatch: {left} vs {right}")]
    GroundSizeMismatch { left: usize, right: usize },

    #[error("partition size mismatch: |{left}| = {left_sum} vs |{right}| = {right_sum}")]
    PartitionSizeMismatch {
        left: String,
        left_sum: u32,
        right: String,
        right_sum: u32,
    },

    #[error("not a partition of [{k}]\u{222a}[{k}\u{0305}]: {reason}")]
    NotABlockPartition { k: usize, reason: String },

    #[error("non-uniform block: top {top:?} has {top_len} points, bottom {bottom:?} has {bottom_len}")]
    NonUniformBlock {
        top: Vec<usize>,
        top_len: usize,
        bottom: Vec<usize>,
        bottom_len: usize,
    },

    #[error("\u{03c2} undefined: every part of {0} equals 1")]
    NoNontrivialPart(String),

    #[error("oracle infeasible: k = {k} exceeds the join-closure bound {bound}")]
    OracleInfeasible { k: u32, bound: u32 },

    #[error("not comparable: {lower} \u{2aaf} {upper} does not hold")]
    NotComparable { lower: String, upper: String },

    #[error("no lower covers below 1^k: {0} has only unit parts")]
    AllOnes(String),

    #[error("not a downset: {missing} \u{2aaf} {present} but {missing} is absent")]
    NotADownset { missing: String, present: String },

    #[error("downset may not contain 1^{0}")]
    ContainsAllOnes(u32),

    #[error("{what} bound exceeded: k = {k} > {bound}")]
    BoundExceeded {
        what: &'static str,
        k: usize,
        bound: usize,
    },

    #[error("enumeration bound exceeded: {count} downsets at k = {k} (limit {bound})")]
    EnumerationBoundExceeded { k: u32, count: String, bound: u64 },

    #[error("element JSON: {0}")]
    ElementJson(String),
}

pub type Result<T> = std::result::Result<T, Error>;
