use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid field: {0}")]
    InvalidField(String),

    #[error("shape mismatch: {0}")]
    Shape(String),

    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("unknown variable x{index} at position {pos} (ring has x0..x{max})")]
    UnknownVariable { pos: usize, index: u64, max: usize },

    #[error("exponent overflow at position {pos}")]
    ExponentOverflow { pos: usize },

    #[error("invalid degree data: {0}")]
    DegreeData(String),

    #[error("index {index} out of range {lo}..={hi}")]
    IndexOutOfRange { index: i64, lo: i64, hi: i64 },

    #[error("entry ({i}, {j}): {msg}")]
    Entry { i: usize, j: usize, msg: String },

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("integer overflow evaluating {0}")]
    Overflow(String),

    #[error("line {line}: {msg}")]
    MatrixFile { line: usize, msg: String },

    #[error("internal consistency check failed: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
