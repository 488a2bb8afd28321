//! Error type shared by all modules.

use std::fmt;

/// Errors reported by the exact and numeric routines.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Shape mismatch (non-square matrix, wrong signature length, ...).
    Dimension(String),
    /// Invalid argument value (repeated evaluation points, negative parts, ...).
    Domain(String),
    /// Evaluation at a pole of the function in question.
    Pole(String),
    /// Input outside the supported class (pole on the unit circle, basis
    /// interval too short, non-rational case where exactness was requested).
    Unsupported(String),
    /// A checked precondition of a formula failed; the message names the
    /// offending indices.
    Precondition(String),
    /// Quadrature did not reach the requested tolerance before the node cap.
    ToleranceNotMet { best: f64, requested: f64 },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Dimension(m) => write!(f, "dimension error: {m}"),
            Error::Domain(m) => write!(f, "domain error: {m}"),
            Error::Pole(m) => write!(f, "pole error: {m}"),
            Error::Unsupported(m) => write!(f, "unsupported: {m}"),
            Error::Precondition(m) => write!(f, "precondition failed: {m}"),
            Error::ToleranceNotMet { best, requested } => write!(
                f,
                "tolerance not met: best estimate {best} did not reach {requested}"
            ),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
