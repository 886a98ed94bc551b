use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("conductor mismatch: {left} vs {right}")]
    ConductorMismatch { left: u64, right: u64 },
    #[error("attempted to invert zero")]
    ZeroInverse,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("{what} has size {size}, exceeding the configured bound {bound}")]
    BoundExceeded { what: String, size: usize, bound: usize },
    #[error("not a reflection system: {0}")]
    NotReflectionSystem(String),
    #[error("H does not contain H_L: {0}")]
    MissingHL(String),
    #[error("not a reflection group: {0}")]
    NotReflectionGroup(String),
    #[error("invalid index {0}")]
    InvalidIndex(String),
    #[error("construction failed: {0}")]
    Construction(String),
}

pub type Result<T> = std::result::Result<T, Error>;
