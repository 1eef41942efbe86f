use std::fmt;

/// Errors from numerical evaluation.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Input outside the function's domain.
    Domain(String),
    /// Evaluation requested at (or too close to) a pole.
    Pole(String),
    /// Adaptive quadrature exhausted its panel budget above the tolerance.
    NonConvergence {
        error_estimate: f64,
        evaluations: u64,
    },
    /// Iteration failed to converge (root finding, series).
    IterationFailure(String),
    /// A computed value came out NaN or infinite.
    NotFinite(String),
    /// Parameter classified as integer where a non-integer was required, or vice versa.
    Classification(String),
    /// Unsupported parameter (e.g. Bernoulli degree outside {1, 2}).
    Unsupported(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Domain(msg) => write!(f, "domain error: {msg}"),
            Error::Pole(msg) => write!(f, "pole: {msg}"),
            Error::NonConvergence {
                error_estimate,
                evaluations,
            } => write!(
                f,
                "quadrature did not converge (error estimate {error_estimate:.3e} after {evaluations} evaluations)"
            ),
            Error::IterationFailure(msg) => write!(f, "iteration failed: {msg}"),
            Error::NotFinite(msg) => write!(f, "non-finite result: {msg}"),
            Error::Classification(msg) => write!(f, "classification error: {msg}"),
            Error::Unsupported(msg) => write!(f, "unsupported: {msg}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// True for errors caused by bad arguments rather than numerical failure.
    pub fn is_usage(&self) -> bool {
        matches!(
            self,
            Error::Domain(_) | Error::Pole(_) | Error::Classification(_) | Error::Unsupported(_)
        )
    }
}
