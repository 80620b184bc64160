use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{p}/{q} is not a fraction with p > q >= 1")]
    OutOfRange { p: i64, q: i64 },

    #[error("{p}/{q} is not reduced (gcd = {gcd})")]
    NotReduced { p: i64, q: i64, gcd: i64 },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid string: {0}")]
    InvalidString(String),

    #[error("integer overflow while {0}")]
    Overflow(&'static str),

    #[error("positive string must have even length, got {0}")]
    OddLength(usize),

    #[error("division by zero while evaluating a continued fraction")]
    DivisionByZero,

    #[error("K({p},{q}) is a two-component link (p even)")]
    EvenNumerator { p: i64, q: i64 },

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("conditions (0/1 chain products, squares <= -2) violated: {0}")]
    Conditions(String),

    #[error("rank {0} outside the supported range {1}..={2}")]
    RankBound(usize, usize, usize),

    #[error("invalid family parameters: {0}")]
    InvalidFamily(String),

    #[error("search exceeded the node budget of {0}")]
    ResourceExceeded(u64),

    #[error("internal invariant broken: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
