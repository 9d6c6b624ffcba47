use thiserror::Error;

/// Errors produced by the exact kernels, pseudoinverse engines and solvers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    /// `position` is the 0-based character offset inside the literal.
    #[error("invalid scalar literal at position {position}: {message}")]
    ParseScalar { position: usize, message: String },

    /// `line` and `column` are 1-based.
    #[error("parse error at line {line}, column {column}: {message}")]
    ParseMatrix {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("{op}: dimension mismatch, expected {expected}, got {got}")]
    DimensionMismatch {
        op: &'static str,
        expected: String,
        got: String,
    },

    #[error("{op}: matrix must be square, got {rows}x{cols}")]
    NotSquare {
        op: &'static str,
        rows: usize,
        cols: usize,
    },

    #[error("matrices must have at least one row and one column")]
    EmptyMatrix,

    #[error("{what} index {index} out of range 1..={bound}")]
    IndexOutOfRange {
        what: &'static str,
        index: usize,
        bound: usize,
    },

    #[error("invalid subset cardinality {k} for universe of size {n}")]
    InvalidCardinality { k: usize, n: usize },

    #[error("matrix is singular")]
    Singular,

    #[error("determinantal representation undefined for a rank-zero matrix")]
    RankZero,

    #[error("lambda schedule must be strictly positive and strictly decreasing")]
    InvalidLambdaSchedule,

    /// The d^B and d^A formulas produced different matrices. Always a defect.
    #[error("internal consistency failure: column-vector and row-vector formulas disagree")]
    PathDisagreement,
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn mismatch(
    op: &'static str,
    expected: impl Into<String>,
    got: impl Into<String>,
) -> Error {
    Error::DimensionMismatch {
        op,
        expected: expected.into(),
        got: got.into(),
    }
}
