use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A caller-supplied argument violated an operation's precondition.
    #[error("invalid argument: {0}")]
    Argument(String),

    /// The requested index lies beyond the configured cap.
    #[error("index {index} out of supported range (|m| <= {cap})")]
    IndexOutOfRange { index: i64, cap: u64 },

    /// An arithmetic step that must be exact was not.
    #[error("internal arithmetic error: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn arg(msg: impl Into<String>) -> Self {
        Error::Argument(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
