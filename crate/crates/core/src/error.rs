use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parts are not weakly decreasing: {0:?}")]
    NotAPartition(Vec<i64>),

    #[error("interlacing violated: {0}")]
    Interlacing(String),

    #[error("invalid pattern: {0}")]
    InvalidPattern(String),

    #[error("invalid tableau: {0}")]
    InvalidTableau(String),

    #[error("partition {shape} has {len} parts, more than the {max} allowed")]
    ShapeTooLong { shape: String, len: usize, max: usize },

    #[error("variable count mismatch: {0} vs {1}")]
    VariableMismatch(usize, usize),

    #[error("symplectic determinant has an odd coefficient; halving is not exact")]
    InexactHalving,

    #[error("cannot evaluate a negative power of zero (variable x{0})")]
    ZeroToNegativePower(usize),

    #[error("invalid filling: {0}")]
    InvalidFilling(String),

    #[error("passage time {time} exceeds the bound {bound}")]
    BoundExceeded { time: u64, bound: u64 },

    #[error("enumeration exceeded the node budget of {0}")]
    BudgetExceeded(u64),

    #[error("parameter out of range: {0}")]
    OutOfRange(String),

    #[error("inverse growth failed: {0}")]
    Inverse(String),

    #[error("parse error: {0}")]
    Parse(String),
}
