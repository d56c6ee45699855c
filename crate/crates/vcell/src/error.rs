use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("variable mismatch: {0}")]
    VariableMismatch(String),
    #[error("expected {expected} values, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("division is not exact")]
    NotDivisible,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("argument out of range: {0}")]
    OutOfRange(String),
    #[error("point is not admissible: {0}")]
    NotAdmissible(String),
    #[error("curve is not a denominator factor of the form")]
    FactorAbsent,
    #[error("pole along the curve has order {0}, expected 1")]
    NotSimplePole(u32),
    #[error("orientation conventions differ")]
    OrientationMismatch,
    #[error("invalid polygon: {0}")]
    InvalidPolygon(String),
    #[error("invalid scaffold: {0}")]
    InvalidScaffold(String),
    #[error("construction failed: {0}")]
    Construction(String),
}

pub type Result<T> = std::result::Result<T, Error>;
