use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("invalid kernel spec `{0}`")]
    KernelSyntax(String),

    #[error("bound not applicable: {0}")]
    Inapplicable(String),

    #[error("invalid quadrature grid: {0}")]
    InvalidGrid(String),

    #[error("unknown suite `{0}`")]
    UnknownSuite(String),

    #[error("unknown norm method `{0}`")]
    UnknownMethod(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}
