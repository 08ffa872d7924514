use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("expression is not in the span of the generators")]
    NotInSpan,
    #[error("the f basis needs omega > 0; zero mode is only available in the LF basis")]
    ZeroModeUnsupported,
    #[error("algebra mode or size mismatch")]
    ModeMismatch,
    #[error("unsupported combination: {0}")]
    Unsupported(String),
    #[error("singular step: Delta_{index} = 0")]
    SingularStep { index: usize },
    #[error("weights must be uniform: {0}")]
    NonUniformWeights(String),
    #[error("degenerate angular momentum: L12 = 0, the Nambu structure is singular")]
    DegenerateAngularMomentum,
    #[error("singular family matrix: {0}")]
    SingularFamilyMatrix(String),
    #[error("expected {expected} functions, found {found}")]
    CountMismatch { expected: usize, found: usize },
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("cannot parse a rational from {0:?}")]
    ParseRational(String),
}

pub type Result<T> = std::result::Result<T, Error>;
