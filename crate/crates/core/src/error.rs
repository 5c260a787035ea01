use thiserror::Error;

/// Errors raised by the calculus and the decision procedure.
///
/// `Validation` marks malformed or inconsistent input, `Unsupported` marks
/// well-formed input that needs data or machinery this library does not
/// have, and `Inconsistency` marks an internal disagreement between two
/// computation routes (always a bug, never reconciled).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("validation error: {0}")]
    Validation(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("internal inconsistency: {0}")]
    Inconsistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;
