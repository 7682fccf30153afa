use thiserror::Error;

/// Crate-wide error type.
///
/// `Input` marks problems with caller-provided data (malformed numbers,
/// model mismatches, violated preconditions). `Internal` marks a broken
/// invariant inside the library; it should never surface on valid inputs.
#[derive(Debug, Error)]
pub enum Error {
    #[error("input error: {0}")]
    Input(String),
    #[error("internal error: {0}")]
    Internal(String),
}

impl Error {
    pub fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    pub fn internal(msg: impl Into<String>) -> Self {
        Error::Internal(msg.into())
    }

    pub fn is_input(&self) -> bool {
        matches!(self, Error::Input(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
