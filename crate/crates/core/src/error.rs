use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("state is not normalized (norm = {norm})")]
    NotNormalized { norm: f64 },

    #[error("cannot normalize a zero vector")]
    ZeroVector,

    #[error("operator is not Hermitian (max |A - A†| = {deviation:e})")]
    NotHermitian { deviation: f64 },

    #[error("matrix is not unitary (max |U U† - I| = {deviation:e})")]
    NotUnitary { deviation: f64 },

    #[error("operator is not a projector: {reason}")]
    NotProjector { reason: String },

    #[error("not a density matrix: {reason}")]
    NotDensityMatrix { reason: String },

    #[error("matrix must be square, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("ancilla outcome states are not orthogonal (|⟨Ψ₁|Ψ₂⟩| = {overlap:e})")]
    AncillaNotOrthogonal { overlap: f64 },

    #[error("interaction duration must be positive, got {0}")]
    NonPositiveDuration(f64),

    #[error("polarizer chain is empty")]
    EmptyChain,

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}
