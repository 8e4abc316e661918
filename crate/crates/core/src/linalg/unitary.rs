use super::{ensure_dim, ensure_square, max_abs, CMatrix, CVector, StateVector};
use crate::error::{Error, Result};
use crate::tolerance;

/// A unitary matrix (`U U† = I` within [`tolerance::UNITARY`]).
#[derive(Debug, Clone, PartialEq)]
pub struct UnitaryMatrix {
    entries: CMatrix,
}

impl UnitaryMatrix {
    pub fn new(entries: CMatrix) -> Result<Self> {
        let dim = ensure_square(&entries)?;
        let deviation = max_abs(&(&entries * entries.adjoint() - CMatrix::identity(dim, dim)));
        if !(deviation <= tolerance::UNITARY) {
            return Err(Error::NotUnitary { deviation });
        }
        Ok(Self { entries })
    }

    pub(crate) fn from_matrix_unchecked(entries: CMatrix) -> Self {
        Self { entries }
    }

    pub fn identity(dim: usize) -> Self {
        Self { entries: CMatrix::identity(dim, dim) }
    }

    pub fn dim(&self) -> usize {
        self.entries.nrows()
    }

    pub fn entries(&self) -> &CMatrix {
        &self.entries
    }

    /// Max element modulus of `U U† - I`.
    pub fn unitarity_defect(&self) -> f64 {
        max_abs(&(&self.entries * self.entries.adjoint() - CMatrix::identity(self.dim(), self.dim())))
    }

    pub fn adjoint(&self) -> Self {
        Self { entries: self.entries.adjoint() }
    }

    pub fn compose(&self, other: &UnitaryMatrix) -> Result<Self> {
        ensure_dim(self.dim(), other.dim())?;
        Ok(Self { entries: &self.entries * &other.entries })
    }

    pub fn apply(&self, state: &StateVector) -> Result<StateVector> {
        ensure_dim(self.dim(), state.dim())?;
        Ok(StateVector::from_vector_unchecked(&self.entries * state.amplitudes()))
    }

    pub fn apply_vector(&self, v: &CVector) -> Result<CVector> {
        ensure_dim(self.dim(), v.len())?;
        Ok(&self.entries * v)
    }
}
