//! Crate-wide error type.

/// Errors reported by samplers, solvers and diagnostics.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// A caller-supplied argument violated a precondition.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// A numerical operation failed (factorization, solver convergence, NaN).
    #[error("numerical failure: {0}")]
    Numerical(String),

    /// The forward model failed while a chain was running. Carries the step
    /// index and the parameter state at the time of failure.
    #[error("forward model failed at step {step}: {message}")]
    Forward {
        step: usize,
        message: String,
        state: Vec<f64>,
    },

    /// File or serialization problem while reading/writing chains or configs.
    #[error("io failure: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
