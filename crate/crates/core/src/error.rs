use thiserror::Error;

/// Errors raised by the library.
///
/// Variants that signal a violated precondition are distinguished from
/// [`Error::NotExact`] and [`Error::RouteMismatch`], which indicate an internal
/// inconsistency (a formula that should hold did not).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("division is not exact: {0}")]
    NotExact(String),

    #[error("polynomial is not symmetric (differs under swapping x{0} and x{1})")]
    NotSymmetric(usize, usize),

    #[error("incompatible truncation caps: {0}")]
    IncompatibleCaps(String),

    #[error("truncation caps too small: {0}")]
    CapsTooSmall(String),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("rank bound violated: {0}")]
    RankBound(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("unsupported operator word: {0}")]
    UnsupportedWord(String),

    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("independent routes disagree: {0}")]
    RouteMismatch(String),
}

pub type Result<T> = std::result::Result<T, Error>;
