use thiserror::Error;

/// Errors raised when an operation's input contract is violated.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("pattern must not be empty")]
    EmptyPattern,

    #[error("pattern of length {pattern} is longer than text of length {text}")]
    PatternLongerThanText { pattern: usize, text: usize },

    #[error("strings must have equal length (got {left} and {right})")]
    LengthMismatch { left: usize, right: usize },

    #[error("enumeration refused: length {len} exceeds the limit of {limit}")]
    EnumerationTooLarge { len: usize, limit: usize },

    #[error("suffix length {k} out of range 1..={max} for state {state}")]
    SuffixLengthOutOfRange { state: u32, k: usize, max: usize },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
