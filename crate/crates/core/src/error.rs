use thiserror::Error;

use crate::diagnostics::Diagnostic;
use crate::money::MoneyError;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Money(#[from] MoneyError),
    #[error("{path}: {message}")]
    Validation { path: String, message: String },
    #[error("ROI is undefined for a zero investment")]
    UndefinedRoi,
    #[error("scenario has {} error(s)", .0.iter().filter(|d| d.is_error()).count())]
    Invalid(Vec<Diagnostic>),
}

impl Error {
    pub fn validation(path: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Validation { path: path.into(), message: message.into() }
    }

    /// Diagnostics view of the error, for reporting.
    pub fn diagnostics(&self) -> Vec<Diagnostic> {
        match self {
            Error::Invalid(diags) => diags.clone(),
            Error::Validation { path, message } => vec![Diagnostic::error(path.clone(), message.clone())],
            other => vec![Diagnostic::error("", other.to_string())],
        }
    }
}
