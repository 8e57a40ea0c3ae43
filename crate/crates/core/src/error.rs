//! Error type shared by the whole engine.

use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum EngineError {
    #[error("characteristic {0} is not prime")]
    NotPrime(u64),
    #[error("characteristic {0} is too large (must fit in 31 bits)")]
    CharTooLarge(u64),
    #[error("ring must have at least one variable")]
    NoVariables,
    #[error("duplicate variable name `{0}`")]
    DuplicateVariable(String),
    #[error("cannot combine homogeneous parts of degrees {0} and {1}")]
    DegreeMismatch(u32, u32),
    #[error("exponent overflow while multiplying monomials")]
    ExponentOverflow,
    #[error("vector components disagree on twisted degree")]
    InhomogeneousVector,
    #[error("parse error at {line}:{col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },
    #[error("betti table requires a minimal resolution")]
    NonMinimal,
    #[error("empty betti table has no shift profile")]
    EmptyTable,
    #[error("time budget exceeded during {0}")]
    Timeout(&'static str),
    #[error("presentation matrix too large for minor computation ({rows} rows x {cols} cols)")]
    MinorCap { rows: usize, cols: usize },
    #[error("shift profile malformed: pd {pd} is smaller than codim {codim}")]
    MalformedProfile { pd: usize, codim: usize },
    #[error("unknown report format `{0}`")]
    UnknownFormat(String),
    #[error("{0}")]
    Unsupported(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl EngineError {
    /// Attach a file line number to a single-line parse error.
    pub fn at_line(self, line: usize) -> Self {
        match self {
            EngineError::Parse { col, msg, .. } => EngineError::Parse { line, col, msg },
            other => other,
        }
    }
}

pub type Result<T> = std::result::Result<T, EngineError>;
