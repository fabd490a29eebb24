use finsleroid_core::FinslerError;
use thiserror::Error;

pub type Result<T> = std::result::Result<T, ExportError>;

#[derive(Debug, Error)]
pub enum ExportError {
    #[error(transparent)]
    Domain(#[from] FinslerError),

    #[error("{0}")]
    Usage(String),

    /// A generated point failed to re-evaluate to the unit level.
    #[error("{what} re-evaluates to {level} (tolerance {tol:e})")]
    OffSurface { what: String, level: f64, tol: f64 },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl ExportError {
    pub fn usage(msg: impl Into<String>) -> Self {
        ExportError::Usage(msg.into())
    }
}
