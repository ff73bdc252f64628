use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid domain: {0}")]
    InvalidDomain(String),
    #[error("no unique minimizer of the dual norm on i+j={q}")]
    NonUniqueMinimizer { q: u32 },
    #[error("truncation too small for degree {degree}: need length {need_len} and weight {need_weight}")]
    TruncationTooSmall { degree: i64, need_len: usize, need_weight: u32 },
    #[error("no k solves 3d-1 = k + floor(k/x) for d={d}, x={x}")]
    NoValidK { d: u32, x: String },
    #[error("p+q={0} is not a multiple of three")]
    PQNotMultipleOfThree(u64),
    #[error("p+q != 3d (p={p}, q={q}, d={d})")]
    PQDMismatch { p: u64, q: u64, d: u64 },
    #[error("cache error: {0}")]
    Cache(String),
}

impl Error {
    /// True for errors that come from the mathematics rather than from malformed input.
    pub fn is_domain_error(&self) -> bool {
        matches!(
            self,
            Error::NonUniqueMinimizer { .. } | Error::TruncationTooSmall { .. } | Error::NoValidK { .. }
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
