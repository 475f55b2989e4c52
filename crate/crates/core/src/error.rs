use thiserror::Error;

/// Errors shared across the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("zero denominator")]
    ZeroDenominator,

    #[error("precision {got} outside supported range {min}..={max}")]
    PrecisionOutOfRange { got: usize, min: usize, max: usize },

    #[error("Bernoulli table covers indices 0..={have}, need {need}")]
    TableTooSmall { need: u32, have: u32 },

    #[error("missing prior coefficient for l = {missing} (have {have} priors)")]
    MissingPrior { missing: u32, have: usize },

    #[error("pair `{id}` has no closed-form derivative")]
    NoClosedFormDerivative { id: String },

    #[error("finite-difference step {h} outside (0, {max}]")]
    StepOutOfRange { h: f64, max: f64 },

    #[error("quadrature did not converge on [{a}, {b}]: depth {depth} exceeded (error estimate {error_estimate:e}, tolerance {tolerance:e})")]
    QuadratureNonConvergence {
        a: f64,
        b: f64,
        depth: u32,
        error_estimate: f64,
        tolerance: f64,
    },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
