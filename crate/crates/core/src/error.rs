use thiserror::Error;

/// Errors raised by the exact kernel and the constructions built on it.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("division by zero")]
    DivisionByZero,

    #[error("degenerate triangle: {0}")]
    DegenerateTriangle(String),

    #[error("cannot parse `{0}` as a rational number")]
    Parse(String),

    #[error("precision exhausted: {0}")]
    PrecisionExhausted(String),

    #[error("no sign change found: {0}")]
    BracketNotFound(String),

    #[error("no solution found: {0}")]
    NoSolution(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    /// Process exit status used by the command line front end.
    ///
    /// Usage and domain problems map to 2, numerical failures to 3.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Domain(_) | Error::DegenerateTriangle(_) | Error::Parse(_) | Error::DivisionByZero => 2,
            Error::PrecisionExhausted(_) | Error::BracketNotFound(_) | Error::NoSolution(_) => 3,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
