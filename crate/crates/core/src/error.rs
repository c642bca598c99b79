use thiserror::Error;

/// Errors raised by graph construction, the exact solvers and the certificate tooling.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("capacity exceeded: {what} is {actual}, limit is {limit} ({flag})")]
    Capacity {
        what: &'static str,
        actual: usize,
        limit: usize,
        flag: &'static str,
    },

    #[error("graph is not an interval graph")]
    NotRepresentable,

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("parse error: {0}")]
    Parse(String),

    /// A produced certificate failed its own verification. Always a bug.
    #[error("internal inconsistency: {0}")]
    HardFault(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidArgument(msg.into())
}
