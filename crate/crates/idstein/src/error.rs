use thiserror::Error;

/// Unified error type for the whole library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("quadrature failed to reach tolerance: {0}")]
    QuadratureFailure(String),
    #[error("invalid Lévy triplet: {0}")]
    InvalidTriplet(String),
    #[error("representation unavailable: {0}")]
    RepresentationUnavailable(String),
    #[error("infinite mean: {0}")]
    InfiniteMean(String),
    #[error("domain error: {0}")]
    DomainError(String),
    #[error("series truncation too coarse: {0}")]
    TruncationTooCoarse(String),
    #[error("assumption violated: {0}")]
    AssumptionViolated(String),
    #[error("derivative required but unavailable: {0}")]
    MissingDerivative(String),
    #[error("canonical k-function unavailable: {0}")]
    MissingKFunction(String),
    #[error("characteristic function modulus decays too slowly: {0}")]
    SlowDecay(String),
    #[error("first-moment tail cannot be certified: {0}")]
    TailDivergence(String),
    #[error("characteristic-function modulus underflow: {0}")]
    NearZeroModulus(String),
    #[error("phase unwrapping failed: {0}")]
    PhaseUnwrapFailure(String),
    #[error("tabulation grid too coarse: {0}")]
    GridTooCoarse(String),
    #[error("time-truncation tail budget exceeded: {0}")]
    TailBudgetExceeded(String),
    #[error("no sampler available for the interpolated measure: {0}")]
    NoMuTSampler(String),
    #[error("fit failed: {0}")]
    FitFailure(String),
    #[error("invalid configuration: {0}")]
    ConfigInvalid(String),
    #[error("numerical failure: {0}")]
    NumericalFailure(String),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
