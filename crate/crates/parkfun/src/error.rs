//! Error type shared by every module of the crate.

use thiserror::Error;

/// Errors reported by library operations. Each variant names the violated
/// precondition so command-line messages can surface it directly.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("length mismatch: sequence has {seq} entries, bound vector has {bound}")]
    LengthMismatch { seq: usize, bound: usize },

    #[error("sequence is not a weakly increasing ({r},{k})-parking function")]
    NotParkingFunction { r: u32, k: u32 },

    #[error("conversion degree {degree} exceeds the configured cap {cap}")]
    DegreeTooLarge { degree: u32, cap: u32 },

    #[error("prefactor k/(rn+k) is undefined at n={n}, r={r}, k={k}; use the power-sum form")]
    ZeroPrefactor { n: u32, r: u32, k: i64 },

    #[error("series constant term must be the scalar 1 for {op}")]
    NonUnitConstantTerm { op: &'static str },

    #[error("requested truncation degree {requested} exceeds the available degree {available}")]
    TruncationExceeded { requested: usize, available: usize },

    #[error("dual parameters require rn-k > 0, got n={n}, r={r}, k={k}")]
    DualDomain { n: u32, r: u32, k: u32 },

    #[error("tuple component {index} is not a weakly increasing ({r},1)-parking function")]
    InvalidComponent { index: usize, r: u32 },

    #[error("expected a weakly increasing sequence")]
    NotWeaklyIncreasing,

    #[error("input vector is periodic; decompose it before applying this operation")]
    PeriodicInput,

    #[error("vector does not satisfy the dual membership properties")]
    NotInDualSet,

    #[error("vector does not have the replicated periodic form for period {period}")]
    NotReplicated { period: u32 },

    #[error("degree mismatch: |lambda| = {left} but |mu| = {right}")]
    SizeMismatch { left: u32, right: u32 },

    #[error("zero denominator in {what}")]
    ZeroDenominator { what: String },

    #[error("the adjoining construction requires 1 <= k <= r, got k={k}, r={r}")]
    KExceedsR { k: u32, r: u32 },

    #[error("invalid parameter: {0}")]
    BadParameter(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
