use thiserror::Error;

use crate::report::ValidationReport;

/// Errors raised by constructions and validators.
///
/// Validation failures of a well-formed structure are not errors: validators
/// return a [`ValidationReport`]. The `Invalid` variant is used only when an
/// operation requires a valid input and did not get one.
#[derive(Debug, Error)]
pub enum Error {
    #[error("shape mismatch: {0}")]
    Shape(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("{context}: input failed validation\n{report}")]
    Invalid {
        context: String,
        report: ValidationReport,
    },

    #[error("base algebra mismatch: {0}")]
    BaseMismatch(String),

    /// A construction could not be completed for the given data, for instance
    /// because an induced structure on a quotient is not well defined.
    #[error("{0}")]
    Diagnostic(String),

    #[error("parse error at {path}: {message}")]
    Parse { path: String, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn shape(msg: impl Into<String>) -> Error {
    Error::Shape(msg.into())
}

pub(crate) fn ensure_shape(cond: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::Shape(msg()))
    }
}
