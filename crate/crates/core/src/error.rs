use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("vector has zero norm")]
    ZeroVector,
    #[error("basis label {0} appears more than once")]
    DuplicateLabel(i64),
    #[error("operands are defined on different bases")]
    BasisMismatch,
    #[error("matrix is not Hermitian (deviation {0:e})")]
    NotHermitian(f64),
    #[error("matrix shape {rows}x{cols} does not match a basis of {dim} labels")]
    ShapeMismatch {
        rows: usize,
        cols: usize,
        dim: usize,
    },
    #[error("pointer width must be positive and finite, got {0}")]
    InvalidWidth(f64),
    #[error("pointer states have different widths")]
    WidthMismatch,
    #[error("grid [{q_min}, {q_max}] does not cover the pointer support [{need_min}, {need_max}]")]
    RangeTooNarrow {
        q_min: f64,
        q_max: f64,
        need_min: f64,
        need_max: f64,
    },
    #[error("invalid grid: {0}")]
    InvalidGrid(String),
    #[error("invalid mixture weights: {0}")]
    InvalidWeights(String),
    #[error("pre- and post-selected states are orthogonal; weak value undefined")]
    OrthogonalSelection,
    #[error("post-selection has zero probability")]
    PostSelectionImpossible,
    #[error("invalid coupling configuration: {0}")]
    InvalidConfig(String),
    #[error("angle must lie strictly between 0 and pi, got {0}")]
    InvalidAngle(f64),
    #[error("invalid data: {0}")]
    InvalidData(String),
    #[error("need at least {needed} points, got {got}")]
    InsufficientData { needed: usize, got: usize },
}

impl Error {
    /// Errors that come from the physics of the request rather than its form.
    pub fn is_physics_domain(&self) -> bool {
        matches!(
            self,
            Error::OrthogonalSelection | Error::PostSelectionImpossible
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
