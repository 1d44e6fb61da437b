use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("negative radicand")]
    NegativeRadicand,
    #[error("not representable: {0}")]
    NotRepresentable(String),
    /// An argument outside the operation's domain (nonpositive magnitude,
    /// species out of range, perfect-square base, ...).
    #[error("domain error: {0}")]
    Domain(String),
    #[error("not a binomial pair: {0}")]
    InvalidPair(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn not_representable(msg: impl Into<String>) -> Self {
        Error::NotRepresentable(msg.into())
    }
}
