use thiserror::Error;

/// Errors produced by geometric constructors and operations.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("dimension {0} is not supported here (need n >= {1})")]
    UnsupportedDimension(usize, usize),

    #[error("degenerate body: {0}")]
    Degenerate(String),

    #[error("generator cap exceeded: {count} generators, cap {cap}")]
    GeneratorCapExceeded { count: usize, cap: usize },

    #[error("surface area measure is not available: {0}")]
    UnsupportedMeasure(String),

    #[error("inconsistent measure: {0}")]
    InconsistentMeasure(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("objective returned a non-finite value at a sampled direction")]
    NonFiniteEvaluation,
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn dim(expected: usize, got: usize) -> Self {
        Error::DimensionMismatch { expected, got }
    }

    /// True when the error reports a degenerate (rank-deficient) body rather
    /// than a caller mistake; suites map these to not-applicable outcomes.
    pub fn is_degeneracy(&self) -> bool {
        matches!(self, Error::Degenerate(_))
    }
}
