use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("coordinate {index} is zero; compression requires nonzero coordinates")]
    ZeroCoordinate { index: usize },
    #[error("dimension {dim} is below the minimum of 2")]
    DimensionTooSmall { dim: usize },
    #[error("scale must be at least 1, got {0}")]
    ScaleTooSmall(String),
    #[error("input must be a positive integer")]
    NonPositiveInput,
    #[error("coordinates must be pairwise distinct for this bound")]
    NonDistinctCoordinates,
    #[error("point set must contain at least two points")]
    EmptyOrSingleton,
    #[error("point set must be nonempty")]
    EmptyInput,
    #[error("mixed dimensions: expected {expected}, found {found}")]
    MixedDimensions { expected: usize, found: usize },
    #[error("point count must be even")]
    OddCount,
    #[error("radius too small: need {needed} lattice points, only {available} available")]
    RadiusTooSmall { needed: usize, available: usize },
    #[error("budget exceeded: requested {requested}, limit {budget}")]
    BudgetExceeded { requested: u128, budget: u128 },
    #[error("unknown corollary variant: {0}")]
    UnknownVariant(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("io error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
