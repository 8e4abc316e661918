//! Dense complex linear algebra on small Hilbert spaces.

mod density;
mod hermitian;
mod projector;
mod random;
mod state;
mod tensor;
mod unitary;

pub use density::DensityMatrix;
pub use hermitian::{matrix_exp_hermitian, operator_norm, HermitianOperator, Spectral};
pub use projector::Projector;
pub use random::{haar_random_state, haar_state_from, random_hermitian_normalized, random_projector, seeded_rng, SeededRng};
pub use state::{inner_product, StateVector};
pub use tensor::{partial_trace, tensor_product, Factor, Kron};
pub use unitary::UnitaryMatrix;

use nalgebra::DMatrix;

use crate::error::{Error, Result};
use crate::C64;

pub type CMatrix = DMatrix<C64>;
pub type CVector = nalgebra::DVector<C64>;

/// Largest element modulus.
pub(crate) fn max_abs(m: &CMatrix) -> f64 {
    m.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

pub(crate) fn hermitian_deviation(m: &CMatrix) -> f64 {
    max_abs(&(m - m.adjoint()))
}

pub(crate) fn ensure_square(m: &CMatrix) -> Result<usize> {
    if m.nrows() != m.ncols() || m.nrows() == 0 {
        return Err(Error::NotSquare { rows: m.nrows(), cols: m.ncols() });
    }
    Ok(m.nrows())
}

pub fn ensure_dim(expected: usize, found: usize) -> Result<()> {
    if expected != found {
        return Err(Error::DimensionMismatch { expected, found });
    }
    Ok(())
}

/// `|a⟩⟨b|`
pub fn outer_product(a: &CVector, b: &CVector) -> CMatrix {
    a * b.adjoint()
}
