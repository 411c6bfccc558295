use thiserror::Error;

/// Errors raised by the numerical routines.
///
/// The CLI maps each variant onto a process exit code (see [`Error::exit_code`]).
#[derive(Error, Debug, Clone, PartialEq)]
pub enum Error {
    /// Argument outside the region where the routine is defined.
    #[error("domain error: {0}")]
    Domain(String),

    /// Inconsistent or invalid parameters (moment mismatch, bad regime, ...).
    #[error("validation error: {0}")]
    Validation(String),

    /// The requested precision could not be met; `achieved` is the best
    /// relative accuracy bound that was obtained.
    #[error("precision error: {context} (achieved relative bound {achieved:.3e})")]
    Precision { context: String, achieved: f64 },

    /// Evaluation at a pole or essential singularity.
    #[error("singularity: {0}")]
    Singularity(String),

    /// A configured work budget would be exceeded.
    #[error("resource limit: {0}")]
    Resource(String),
}

impl Error {
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Domain(_) | Error::Validation(_) | Error::Singularity(_) => 2,
            Error::Precision { .. } => 3,
            Error::Resource(_) => 4,
        }
    }

    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn validation(msg: impl Into<String>) -> Self {
        Error::Validation(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
