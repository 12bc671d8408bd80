//! Error type shared by every solver module.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum SimError {
    /// A precondition on an operation's inputs was violated.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// Explicit diffusion step requested with a time step above the stability bound.
    #[error("time step {dt} exceeds the explicit stability bound {max_dt}")]
    StepSize { dt: f64, max_dt: f64 },

    /// A non-finite value appeared in the solution; reports where the run died.
    #[error("numerical blow-up at step {step} (t = {time}): {context}")]
    BlowUp {
        step: usize,
        time: f64,
        context: String,
    },
}

pub type Result<T> = std::result::Result<T, SimError>;

impl SimError {
    pub fn invalid(msg: impl Into<String>) -> Self {
        SimError::InvalidArgument(msg.into())
    }
}
