use thiserror::Error;

/// Errors raised by the engine. Every variant is a refusal, never a silently wrong value.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("mixed-variable expression ({0} with {1}); substitute first")]
    MixedVariable(&'static str, &'static str),

    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("generator index {index} out of range for {strands} strands (position {pos})")]
    IndexOutOfRange { index: usize, strands: usize, pos: usize },

    #[error("strand count mismatch: {0} vs {1}")]
    StrandMismatch(usize, usize),

    #[error("unsupported class: {0}")]
    Unsupported(String),

    #[error("state cap exceeded: {crossings} crossings need 2^{crossings} states, cap is 2^{cap}")]
    StateCap { crossings: usize, cap: usize },

    #[error("outside the validated diagram class: {0}")]
    OutOfDomain(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
