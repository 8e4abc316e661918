use super::{CMatrix, DensityMatrix, HermitianOperator, Projector, StateVector, UnitaryMatrix};
use crate::error::{Error, Result};
use crate::C64;

/// Kronecker product with the left factor as the slow index: `(i, j) ↦ i·d' + j`.
pub trait Kron: Sized {
    fn kron(&self, other: &Self) -> Self;
}

impl Kron for StateVector {
    fn kron(&self, other: &Self) -> Self {
        StateVector::from_vector_unchecked(self.amplitudes().kronecker(other.amplitudes()))
    }
}

impl Kron for HermitianOperator {
    fn kron(&self, other: &Self) -> Self {
        HermitianOperator::from_matrix_unchecked(self.entries().kronecker(other.entries()))
    }
}

impl Kron for UnitaryMatrix {
    fn kron(&self, other: &Self) -> Self {
        UnitaryMatrix::from_matrix_unchecked(self.entries().kronecker(other.entries()))
    }
}

impl Kron for Projector {
    fn kron(&self, other: &Self) -> Self {
        Projector::new(self.entries().kronecker(other.entries())).expect("product of projectors is a projector")
    }
}

impl Kron for DensityMatrix {
    fn kron(&self, other: &Self) -> Self {
        DensityMatrix::from_matrix_unchecked(self.entries().kronecker(other.entries()))
    }
}

pub fn tensor_product<T: Kron>(a: &T, b: &T) -> T {
    a.kron(b)
}

/// Which tensor factor survives a partial trace.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Factor {
    /// The left (slow-index) factor of dimension `d`.
    First,
    /// The right (fast-index) factor of dimension `d'`.
    Second,
}

/// Reduced density matrix of one factor of a `d ⊗ d'` state.
pub fn partial_trace(rho: &DensityMatrix, dims: (usize, usize), keep: Factor) -> Result<DensityMatrix> {
    let (d, dp) = dims;
    if d * dp != rho.dim() {
        return Err(Error::DimensionMismatch { expected: rho.dim(), found: d * dp });
    }
    let m = rho.entries();
    let reduced = match keep {
        Factor::First => CMatrix::from_fn(d, d, |i, k| (0..dp).map(|j| m[(i * dp + j, k * dp + j)]).sum::<C64>()),
        Factor::Second => CMatrix::from_fn(dp, dp, |j, l| (0..d).map(|i| m[(i * dp + j, i * dp + l)]).sum::<C64>()),
    };
    Ok(DensityMatrix::from_matrix_unchecked(reduced))
}
