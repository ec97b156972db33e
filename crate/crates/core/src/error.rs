use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("malformed input: {0}")]
    Malformed(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("resource cap exceeded: {what} needs {size} > cap {cap}")]
    Cap { what: String, size: u128, cap: u128 },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn malformed(msg: impl Into<String>) -> Self {
        Error::Malformed(msg.into())
    }

    pub fn pre(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }
}

/// Errors out when `size` exceeds `cap`.
pub fn check_cap(what: &str, size: u128, cap: u128) -> Result<()> {
    if size > cap {
        return Err(Error::Cap { what: what.to_string(), size, cap });
    }
    Ok(())
}
