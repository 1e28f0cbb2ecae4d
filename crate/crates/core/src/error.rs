use thiserror::Error;

/// Failure modes shared by every operation in the crate.
///
/// The CLI exits with code 2 for `Input` and `Contract` and 3 for `Resource`.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed or semantically invalid input (bad file, disconnected graph, ...).
    #[error("input: {0}")]
    Input(String),
    /// A documented precondition of the operation was violated by the caller.
    #[error("contract: {0}")]
    Contract(String),
    /// The request exceeds a configured resource bound and was refused.
    #[error("resource: {0}")]
    Resource(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn input<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Input(msg.into()))
}

pub(crate) fn contract<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Contract(msg.into()))
}

pub(crate) fn resource<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Resource(msg.into()))
}
