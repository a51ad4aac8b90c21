use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// An argument lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// The preconditions of a certified bound do not hold, so the bound
    /// carries no guarantee.
    #[error("certificate invalid: {0}")]
    CertificateInvalid(String),

    #[error("quadrature did not converge: {0}")]
    Quadrature(String),

    #[error("degenerate data: {0}")]
    Degenerate(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}

pub(crate) fn invalid_certificate<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::CertificateInvalid(msg.into()))
}
