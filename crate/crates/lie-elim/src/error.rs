use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LieError {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// A bracket or substitution would produce an element above the cutoff.
    #[error("degree {degree} exceeds the cutoff {cutoff}")]
    Overflow { degree: u32, cutoff: u32 },

    #[error("not applicable: {0}")]
    Inapplicable(String),

    /// A Magnus series equals 1 in every degree up to its cutoff.
    #[error("series is trivial up to degree {0}")]
    TrivialToCutoff(u32),

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, LieError>;

pub(crate) fn invalid<T>(msg: impl Into<String>) -> Result<T> {
    Err(LieError::InvalidArgument(msg.into()))
}
