use thiserror::Error;

/// Errors raised by the core library.
///
/// Everything except [`Error::Internal`] describes bad input or an input that
/// falls outside an operation's mathematical domain.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("{e} is not an exact divisor of {n}")]
    NotExactDivisor { e: String, n: String },
    #[error("cusp {cusp} is not equivalent to infinity for {symbol}")]
    NotEquivalentToInfinity { cusp: String, symbol: String },
    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),
    #[error("data error: {0}")]
    Data(String),
    #[error("{path}: {msg}")]
    Io { path: String, msg: String },
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
