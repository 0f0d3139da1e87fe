use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// Input outside the mathematical domain of an operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// The ODE stepper failed (blow-up, step underflow, step budget).
    #[error("solver failure at z = {z}: {msg}")]
    Solver { z: f64, msg: String },

    /// A quantity violated an identity the formulation guarantees
    /// (Wronskian sign, finite integrand). Indicates a numerical bug,
    /// not a user error.
    #[error("integrity violation at (zeta = {zeta}, k = {k}): {msg}")]
    Integrity { zeta: f64, k: f64, msg: String },

    /// Inconsistent run configuration.
    #[error("invalid configuration: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, Error>;
