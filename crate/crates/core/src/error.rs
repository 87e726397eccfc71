use std::path::PathBuf;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("instance must contain at least one square")]
    EmptyInstance,

    #[error("square {index} has side length 0; all lengths must be positive")]
    ZeroLength { index: usize },

    #[error("infeasible instance: largest square {largest} exceeds strip width {strip_width}")]
    Infeasible { largest: u64, strip_width: u64 },

    #[error("instance too large: {0}")]
    Overflow(String),

    #[error("invalid layout: {0}")]
    InvalidLayout(String),

    #[error("layout is not sorted")]
    NotSorted,

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("invalid RC sequence: {0}")]
    InvalidSequence(String),

    #[error("rectangles violate the ordering w_1 >= ... >= w_n and h_1 >= ... >= h_n at position {index}")]
    RippOrdering { index: usize },

    #[error("instance too large for oracle (n = {n}, limit {limit})")]
    OracleTooLarge { n: usize, limit: usize },

    #[error("dynamic programming table needs {cells} cells, limit is {limit}")]
    TableTooLarge { cells: u128, limit: u128 },

    #[error("invalid epsilon {0:?}: expected a positive decimal or fraction")]
    InvalidEpsilon(String),

    #[error("{}line {line}: {message}", path.as_ref().map(|p| format!("{}: ", p.display())).unwrap_or_default())]
    Parse {
        path: Option<PathBuf>,
        line: usize,
        message: String,
    },

    #[error("unknown variable {0:?}")]
    UnknownVariable(String),

    #[error("variable {0:?} has no value in the assignment")]
    MissingVariable(String),

    #[error("binary variable {name:?} has non-binary value {value}")]
    NonBinary { name: String, value: i64 },

    #[error("benchmark suite mismatch: {0}")]
    SuiteMismatch(String),

    #[error("external solver: {0}")]
    ExternalSolver(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            path: None,
            line,
            message: message.into(),
        }
    }

    pub(crate) fn with_path(self, path: &std::path::Path) -> Self {
        match self {
            Error::Parse { line, message, .. } => Error::Parse {
                path: Some(path.to_path_buf()),
                line,
                message,
            },
            other => other,
        }
    }
}
