use thiserror::Error;

use crate::crystal::IsoError;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{what} {index} out of range {min}..={max}")]
    Range {
        what: &'static str,
        index: i64,
        min: i64,
        max: i64,
    },

    #[error("{0}")]
    Domain(String),

    #[error("node limit of {limit} exceeded during generation")]
    NodeLimit { limit: usize },

    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("monomial is not a product of X-variables: {0}")]
    NotRepresentable(String),

    #[error(transparent)]
    Iso(#[from] IsoError),

    /// A convention-level invariant failed. Never expected on valid input.
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn range(what: &'static str, index: impl TryInto<i64>, min: i64, max: i64) -> Self {
        Error::Range {
            what,
            index: index.try_into().unwrap_or(i64::MAX),
            min,
            max,
        }
    }

    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn internal(msg: impl Into<String>) -> Self {
        Error::Internal(msg.into())
    }
}
