use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("duplicate point {0}")]
    DuplicatePoint(String),
    #[error("need at least {need} points, got {got}")]
    TooFewPoints { need: usize, got: usize },
    #[error("point {0} is not on the boundary")]
    NotOnBoundary(String),
    #[error("degenerate configuration: {0}")]
    Degenerate(String),
    #[error("boundary polygon is not strictly convex")]
    NotConvex,
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("graph mismatch: {0}")]
    GraphMismatch(String),
    #[error("drawing is not injective: vertices {0} and {1} share a point")]
    NotInjective(usize, usize),
    #[error("point set position does not fit: {0}")]
    WrongPosition(String),
    #[error("drawing does not have the expected form: {0}")]
    WrongForm(String),
    #[error("drawing is not plane")]
    NotPlane,
    #[error("point set of {0} points exceeds the exact-search cap of {1}")]
    SizeCap(usize, usize),
}

pub type Result<T> = std::result::Result<T, Error>;
