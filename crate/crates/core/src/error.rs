//! Error type shared by all engines.

use thiserror::Error;

/// Failure modes of the laboratory, split so that callers (notably the CLI)
/// can map them to distinct exit codes.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// A precondition on user-supplied values was violated (bad coordinates,
    /// probabilities out of range, malformed words, ...).
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// A domain-validity condition of a formula does not hold, e.g. the
    /// upper bound requires `lambda_h < 4^-3`, or a vertex is not interior
    /// to the requested region.
    #[error("domain violation: {0}")]
    Domain(String),

    /// An explicit resource budget (edge count, frontier width, search
    /// nodes) was exceeded. Results are never silently truncated.
    #[error("budget exceeded for {what}: limit {limit}, needed {needed}")]
    Budget {
        what: &'static str,
        limit: u64,
        needed: u64,
    },
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }

    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}
