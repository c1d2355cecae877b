use thiserror::Error;

use crate::sphere::ModeIndex;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("unsupported dimension d = {0}")]
    UnsupportedDimension(usize),

    #[error("basis index {l} out of range 1..={max} for degree {k}")]
    ModeOutOfRange { k: usize, l: usize, max: usize },

    #[error("expected a unit vector, got |theta| = {0}")]
    NotUnitVector(f64),

    #[error("point has {got} coordinates, expected {expected}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("radius {r} outside the domain [{lo}, {hi}]")]
    OutsideDomain { r: f64, lo: f64, hi: f64 },

    #[error("invalid radii: {0}")]
    InvalidRadii(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("finite-difference stencil [{lo}, {hi}] leaves the domain")]
    StencilOutsideDomain { lo: f64, hi: f64 },

    #[error("singular linear system for mode {0:?}")]
    SingularSystem(ModeIndex),

    #[error("unknown test field `{0}`")]
    UnknownField(String),
}

pub type Result<T> = std::result::Result<T, Error>;
