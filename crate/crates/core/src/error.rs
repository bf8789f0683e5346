use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// A table, sequence or integer range is too small for the request.
    #[error("capacity exceeded: {0}")]
    Capacity(String),

    /// The objective is undefined at the requested point.
    #[error("outside the function domain: {0}")]
    Domain(String),

    #[error("none of the {trials} trial points was feasible")]
    NoFeasiblePoint { trials: u64 },

    #[error("malformed direction table: {0}")]
    Table(String),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }

    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}
