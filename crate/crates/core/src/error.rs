use thiserror::Error;

/// Errors produced by the cone, geometry and dynamics routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("reference point is the zero vector")]
    ZeroDenominator,
    #[error("point is not in the interior of the cone")]
    NotInterior,
    #[error("point lies outside the cone")]
    NotInCone,
    #[error("empty input")]
    EmptyInput,
    #[error("invalid cone: {0}")]
    InvalidCone(String),
    #[error("polytope has empty interior or is degenerate: {0}")]
    DegeneratePolytope(String),
    #[error("polytope is unbounded along direction {0:?}")]
    UnboundedPolytope(Vec<f64>),
    #[error("points coincide")]
    PointsCoincide,
    #[error("projective diameter must be nonnegative, got {0}")]
    NegativeDiameter(f64),
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix has a negative or non-finite entry at ({row}, {col})")]
    NegativeEntry { row: usize, col: usize },
    #[error("no convergence after {0} iterations")]
    NoConvergence(usize),
    #[error("Jordan elements belong to different algebras")]
    AlgebraMismatch,
    #[error("element is not invertible")]
    NotInvertible,
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("negative input coordinate at index {0}")]
    NegativeInput(usize),
    #[error("argument too small: {0}")]
    ArgumentTooSmall(usize),
    #[error("map evaluation failed: {0}")]
    EvaluationFailure(String),
}

impl Error {
    /// True for failures of an iterative numerical procedure, as opposed to
    /// invalid input.
    pub fn is_numerical(&self) -> bool {
        matches!(self, Error::NoConvergence(_) | Error::EvaluationFailure(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check_dim(expected: usize, got: usize) -> Result<()> {
    if expected != got {
        return Err(Error::DimensionMismatch { expected, got });
    }
    Ok(())
}
