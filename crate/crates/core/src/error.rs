use alloc::string::String;
use core::fmt;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Norm exponent below 1 (or NaN).
    InvalidNorm(f64),
    DimensionMismatch { left: u64, right: u64 },
    IndexOutOfRange { index: u64, dim: u64 },
    DuplicateIndex(u64),
    NonFiniteValue { index: u64 },
    /// A negative entry was given to an operation whose guarantee needs
    /// non-negative input.
    NegativeEntry { index: u64 },
    InvalidParameter(String),
    /// Enumeration or table size beyond the supported budget.
    TooLarge { what: &'static str, value: u64, limit: u64 },
    TooFewPoints { needed: usize, got: usize },
    /// The linear map has `m >= d / 100`.
    PreconditionShape { rows: usize, cols: usize },
    /// Some column of the linear map has no entry of magnitude at least 1/2.
    PreconditionColumns { column: usize },
    /// A guarantee that must hold deterministically was observed broken.
    InvariantBreach(String),
}

impl Error {
    pub(crate) fn param(msg: impl Into<String>) -> Self {
        Error::InvalidParameter(msg.into())
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidNorm(p) => write!(f, "invalid norm exponent {p}: need p >= 1 or inf"),
            Error::DimensionMismatch { left, right } => {
                write!(f, "dimension mismatch: {left} vs {right}")
            }
            Error::IndexOutOfRange { index, dim } => {
                write!(f, "index {index} out of range for dimension {dim}")
            }
            Error::DuplicateIndex(i) => write!(f, "duplicate index {i}"),
            Error::NonFiniteValue { index } => write!(f, "non-finite value at index {index}"),
            Error::NegativeEntry { index } => {
                write!(f, "negative entry at index {index} in a non-negative mode")
            }
            Error::InvalidParameter(msg) => write!(f, "invalid parameter: {msg}"),
            Error::TooLarge { what, value, limit } => {
                write!(f, "{what} = {value} exceeds the limit {limit}")
            }
            Error::TooFewPoints { needed, got } => {
                write!(f, "need at least {needed} points, got {got}")
            }
            Error::PreconditionShape { rows, cols } => write!(
                f,
                "map has {rows} rows and {cols} columns; the witness needs rows < cols / 100"
            ),
            Error::PreconditionColumns { column } => {
                write!(f, "column {column} has no entry with magnitude >= 1/2")
            }
            Error::InvariantBreach(msg) => write!(f, "invariant breach: {msg}"),
        }
    }
}

impl core::error::Error for Error {}
