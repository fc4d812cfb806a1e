use thiserror::Error;

/// Errors raised by the algebra, datum and I/O layers.
#[derive(Debug, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("cyclotomic order mismatch: {0} vs {1}")]
    OrderMismatch(u32, u32),

    #[error("group mismatch: {0}")]
    GroupMismatch(String),

    #[error("group of order {order} exceeds the enumeration bound {bound}")]
    GroupTooLarge { order: u128, bound: u64 },

    #[error("index {index} out of range for rank {rank}")]
    IndexOutOfRange { index: usize, rank: usize },

    #[error("invalid Cartan matrix: {0}")]
    InvalidCartan(String),

    #[error("Cartan matrix is not of finite type (root closure exceeded {0} roots)")]
    NotFiniteType(usize),

    #[error("word is not reduced: {0}")]
    NotReduced(String),

    #[error("root has a negative coefficient")]
    NegativeRoot,

    #[error("operation requires a Cartan matrix of type A1 x ... x A1")]
    WrongCartanType,

    #[error("invalid datum: {0}")]
    InvalidDatum(String),

    #[error("invalid rewrite rule: {0}")]
    InvalidRule(String),

    #[error("degree {degree} exceeds the degree bound {bound}")]
    DegreeBoundExceeded { degree: usize, bound: usize },

    #[error("rewriting system is not confluent up to degree {0}")]
    NonConfluent(usize),

    #[error("invalid Lie algebra data: {0}")]
    InvalidLie(String),

    #[error("internal invariant violated: {0}")]
    InvariantViolation(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error("{path}: {source}")]
    File { path: String, source: std::io::Error },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
