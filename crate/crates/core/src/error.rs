use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    /// A parameter violates an operation's precondition (bad `n`, `p ∤ n`, ...).
    #[error("{0}")]
    Invalid(String),

    #[error("parse error: {0}")]
    Parse(String),

    /// An arithmetic identity that must hold did not; signals misuse of a formula.
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;

macro_rules! ensure {
    ($cond:expr, $($arg:tt)+) => {
        if !$cond {
            return Err($crate::Error::Invalid(format!($($arg)+)));
        }
    };
}
pub(crate) use ensure;
