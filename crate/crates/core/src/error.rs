use thiserror::Error;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("matrix dimension must be at least 1")]
    EmptyMatrix,
    #[error("expected {expected} entries, found {actual}")]
    EntryCount { expected: usize, actual: usize },
    #[error("non-finite value at position {index}")]
    NonFinite { index: usize },
    #[error("tolerance `{name}` must be finite and nonnegative, got {value}")]
    InvalidTolerance { name: &'static str, value: f64 },
    #[error("spectrum is empty")]
    EmptySpectrum,
    #[error("congruence modulus must be nonzero")]
    ZeroModulus,
    #[error("QR iteration did not converge within {iterations} iterations")]
    NoConvergence { iterations: usize },
    #[error("matrix is singular to working precision")]
    Singular,
    #[error("matrix is not normal")]
    NotNormal,
    #[error("eigenvector basis condition {condition:e} exceeds {limit:e}; oracle unavailable")]
    OracleUnavailable { condition: f64, limit: f64 },
    #[error("hypothesis undecidable: eigensolver did not converge within {iterations} iterations")]
    HypothesisUndecidable { iterations: usize },
    #[error("precondition violated: {0}")]
    Precondition(&'static str),
    #[error("generator gave up after {attempts} attempts")]
    GenerationExhausted { attempts: usize },
    #[error("invalid argument: {0}")]
    InvalidArgument(&'static str),
    #[error("computation overflowed to a non-finite value")]
    Overflow,
}

impl Error {
    /// Eigensolver failures seen through a theorem verifier.
    pub(crate) fn undecidable(self) -> Error {
        match self {
            Error::NoConvergence { iterations } => Error::HypothesisUndecidable { iterations },
            other => other,
        }
    }
}
