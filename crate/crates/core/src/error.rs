use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CudError {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("malformed cycles: {0}")]
    MalformedCycles(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("unknown name `{0}`")]
    UnknownName(String),

    #[error("i/o error: {0}")]
    Io(String),

    #[error("size {n} exceeds the cap {cap} for {what}")]
    CapExceeded { what: String, n: usize, cap: usize },
}

pub type Result<T> = std::result::Result<T, CudError>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(CudError::Domain(msg.into()))
}
