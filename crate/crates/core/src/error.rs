use thiserror::Error;

/// Errors shared by every module of the crate.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    /// A precondition on the inputs was violated.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// An enumeration exceeded its configured cap instead of hanging.
    #[error("{what} enumeration exceeded the configured cap of {cap}")]
    ResourceLimit { what: &'static str, cap: usize },

    /// A shape from the classification list that this crate does not construct.
    #[error("unsupported shape: {0}")]
    UnsupportedShape(String),

    /// A checked claim did not hold; carries a human-readable witness.
    #[error("verification failure in {claim}: {witness}")]
    VerificationFailure { claim: String, witness: String },

    /// Input text could not be parsed.
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }

    pub fn verification(claim: impl Into<String>, witness: impl Into<String>) -> Self {
        Error::VerificationFailure {
            claim: claim.into(),
            witness: witness.into(),
        }
    }
}
