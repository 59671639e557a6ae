use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// An argument outside the operation's domain.
    #[error("domain error: {0}")]
    Domain(String),

    #[error("C_k is singular for k = {0}")]
    SingularFamily(String),

    #[error("singular Weierstrass model (discriminant zero)")]
    SingularCurve,

    #[error("integer {0} exceeds the trial-division cap of 10^18")]
    SizeCap(String),

    #[error("p = {p} is a bad prime: it divides {what}")]
    BadReduction { p: u64, what: String },

    #[error("{path}: {message}")]
    Parse { path: String, message: String },

    #[error("i/o error on {path}: {message}")]
    Io { path: String, message: String },

    /// Two routes that must agree did not.
    #[error("integrity check failed: {0}")]
    Integrity(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}
