use thiserror::Error;

use crate::model::TreeViolation;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A generator or expansion would exceed one of the configured [`Bounds`](crate::Bounds).
    #[error("{what} is {value}, above the configured bound {limit}")]
    SizeBound {
        what: &'static str,
        value: u64,
        limit: u64,
    },
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("invalid tree: {0}")]
    Tree(#[from] TreeViolation),
    #[error("invalid cactus: {0}")]
    Cactus(String),
    /// A count that must be an integer came out fractional. Always a bug.
    #[error("non-integral count {0}")]
    NonIntegral(String),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::Invalid(msg.into())
    }

    pub(crate) fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }

    pub(crate) fn check_bound(what: &'static str, value: usize, limit: usize) -> Result<()> {
        if value > limit {
            Err(Error::SizeBound {
                what,
                value: value as u64,
                limit: limit as u64,
            })
        } else {
            Ok(())
        }
    }
}
