//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Error, Debug)]
pub enum Error {
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("index {index} out of range for {len} qubits")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("invalid code: {0}")]
    InvalidCode(String),

    #[error("enumeration budget exceeded: {required} candidates needed, cap is {cap}")]
    BudgetExceeded { required: u128, cap: u128 },

    #[error("invalid diagram: {0}")]
    InvalidDiagram(String),

    #[error("compilation failed: {0}")]
    Compilation(String),

    #[error("invalid transformation: {0}")]
    Transform(String),

    #[error("unsatisfiable padding: {0}")]
    UnsatisfiablePadding(String),

    #[error("invalid detection sequence: {0}")]
    InvalidSequence(String),

    #[error("no observable: {0}")]
    NoObservable(String),

    #[error("infinite group: {0}")]
    InfiniteGroup(String),

    #[error("parse error in {what}: {detail}")]
    Parse { what: &'static str, detail: String },

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

impl Error {
    /// CLI exit code classification.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::BudgetExceeded { .. } => 3,
            Error::Io(_) => 4,
            _ => 2,
        }
    }

    /// Short machine-parsable code used in CLI error lines.
    pub fn code(&self) -> &'static str {
        match self {
            Error::DimensionMismatch { .. } => "DIM",
            Error::IndexOutOfRange { .. } => "RANGE",
            Error::InvalidCode(_) => "CODE",
            Error::BudgetExceeded { .. } => "BUDGET",
            Error::InvalidDiagram(_) => "DIAGRAM",
            Error::Compilation(_) => "COMPILE",
            Error::Transform(_) => "TRANSFORM",
            Error::UnsatisfiablePadding(_) => "PADDING",
            Error::InvalidSequence(_) => "SEQUENCE",
            Error::NoObservable(_) => "NOOBS",
            Error::InfiniteGroup(_) => "INFINITE",
            Error::Parse { .. } => "PARSE",
            Error::Io(_) => "IO",
        }
    }
}
