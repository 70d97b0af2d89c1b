use thiserror::Error;

/// Errors produced by the numeric core.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid parameter {name} = {value}: {reason}")]
    InvalidParameter {
        name: &'static str,
        value: f64,
        reason: &'static str,
    },

    #[error("argument {value} outside the domain of {function}")]
    Domain { function: &'static str, value: f64 },

    #[error("sample must contain at least {required} observations, got {actual}")]
    SampleTooSmall { required: usize, actual: usize },

    #[error("observation {index} is {value}; observations must be finite and > 0")]
    InvalidObservation { index: usize, value: f64 },

    #[error("degenerate sample: {0}")]
    DegenerateSample(&'static str),

    #[error(
        "shape iteration did not converge after {iterations} iterations (last shape {last_shape}, score {last_score})"
    )]
    NonConvergence {
        iterations: usize,
        last_shape: f64,
        last_score: f64,
    },

    #[error("{coefficient} diverges for shape {shape} (requires shape > 1/2)")]
    DivergentIntegral { coefficient: &'static str, shape: f64 },

    #[error(
        "quadrature reached error estimate {estimate:e} against tolerance {tolerance:e} after {intervals} subintervals"
    )]
    Accuracy {
        estimate: f64,
        tolerance: f64,
        intervals: usize,
    },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("empty estimate list")]
    NoEstimates,

    #[error("invalid scenario: {0}")]
    InvalidScenario(String),

    #[error("scenario aborted: {failures} of {replications} replications failed (limit 5%); first failure: {first}")]
    TooManyFailures {
        failures: usize,
        replications: usize,
        first: String,
    },

    #[error("config: {0}")]
    Config(String),

    #[error("report: {0}")]
    Report(String),

    #[error("io: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(err: std::io::Error) -> Self {
        Error::Io(err.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
