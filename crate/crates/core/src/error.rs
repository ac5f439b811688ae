use thiserror::Error;

/// Errors raised by ideal, homology, clutter and graph operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("objects live in different variable contexts")]
    ContextMismatch,

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("resource cap exceeded: {what} > {cap}")]
    Resource { what: &'static str, cap: usize },

    #[error("exponent overflow")]
    Overflow,

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}

impl Error {
    pub(crate) fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }

    pub fn is_resource(&self) -> bool {
        matches!(self, Error::Resource { .. })
    }
}

pub type Result<T> = std::result::Result<T, Error>;
