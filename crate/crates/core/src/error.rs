use thiserror::Error;

/// Errors raised by graph construction, parsing and the verification gates.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("capacity exceeded: {what} needs {requested}, limit is {limit}")]
    Capacity {
        what: &'static str,
        requested: usize,
        limit: usize,
    },

    #[error("invalid argument: {0}")]
    Argument(String),

    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("not a switching set: vertex {vertex} {reason}")]
    SwitchingSet { vertex: usize, reason: String },

    #[error("contract violation: {0}")]
    ContractViolation(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn capacity(what: &'static str, requested: usize, limit: usize) -> Self {
        Error::Capacity {
            what,
            requested,
            limit,
        }
    }

    pub(crate) fn parse(offset: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            offset,
            message: message.into(),
        }
    }
}
