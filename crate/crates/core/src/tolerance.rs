//! Numerical tolerances shared by constructors and tests.

/// Allowed deviation of a state's Euclidean norm from 1.
pub const NORM: f64 = 1e-9;

/// Element-wise max modulus of `A - A†` for a Hermitian operator.
pub const HERMITIAN: f64 = 1e-10;

/// Element-wise max modulus of `U U† - I` for a unitary.
pub const UNITARY: f64 = 1e-9;

/// Element-wise max modulus of `P² - P` for a projector.
pub const IDEMPOTENT: f64 = 1e-9;

/// Allowed distance of a projector's trace from an integer.
pub const RANK: f64 = 1e-6;

/// Allowed deviation of a density matrix trace from 1.
pub const TRACE: f64 = 1e-9;

/// Most negative eigenvalue tolerated in a density matrix.
pub const PSD: f64 = 1e-9;

/// `Ψ` counts as a pure phase multiple of `Φ` when the component of `Ψ`
/// orthogonal to `Φ` (that is, `sin θ`) is at most this.
pub const PARALLEL: f64 = 1e-12;

/// Inside this band (but outside [`PARALLEL`]) the orthogonal complement is
/// re-orthogonalized once against `Φ`.
pub const NEAR_PARALLEL: f64 = 1e-6;

/// Ancilla outcome states must overlap by less than this.
pub const ANCILLA_ORTHOGONAL: f64 = 1e-10;

/// Deficits at or below this are treated as numerical zero when fitting slopes.
pub const DEFICIT_FLOOR: f64 = 1e-12;
