//! Runtime errors shared by the evaluator, the iteration schemes, and the
//! step-function DSL.

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RunError {
    /// A produced word grew past the configured cap. The intro example
    /// (self-concatenation iterated) makes this reachable by design.
    #[error("resource exceeded: word of length {len} over cap {cap}")]
    ResourceExceeded { len: usize, cap: usize },
    #[error("unbound variable {0:?}")]
    Unbound(String),
    #[error("a ground word was applied as a function")]
    NotAFunction,
}

/// Default cap on any produced ground word, in symbols.
pub const DEFAULT_CAP: usize = 1 << 20;

/// Checks a freshly produced word length against the cap.
pub fn guard_len(len: usize, cap: usize) -> Result<(), RunError> {
    if len > cap {
        Err(RunError::ResourceExceeded { len, cap })
    } else {
        Ok(())
    }
}
