use super::{ensure_square, hermitian_deviation, outer_product, CMatrix, HermitianOperator, Projector, StateVector};
use crate::error::{Error, Result};
use crate::tolerance;

/// A positive semidefinite, unit-trace Hermitian matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    entries: CMatrix,
}

impl DensityMatrix {
    pub fn new(entries: CMatrix) -> Result<Self> {
        ensure_square(&entries)?;
        let herm = hermitian_deviation(&entries);
        if !(herm <= tolerance::HERMITIAN) {
            return Err(Error::NotDensityMatrix { reason: format!("not Hermitian (deviation {herm:e})") });
        }
        let trace = entries.trace();
        if (trace.re - 1.0).abs() > tolerance::TRACE || trace.im.abs() > tolerance::TRACE {
            return Err(Error::NotDensityMatrix { reason: format!("trace {trace} ≠ 1") });
        }
        let min = HermitianOperator::from_matrix_unchecked(entries.clone()).spectral().min_eigenvalue();
        if min < -tolerance::PSD {
            return Err(Error::NotDensityMatrix { reason: format!("negative eigenvalue {min:e}") });
        }
        Ok(Self { entries })
    }

    /// `|ψ⟩⟨ψ|`
    pub fn pure(state: &StateVector) -> Self {
        Self { entries: outer_product(state.amplitudes(), state.amplitudes()) }
    }

    pub(crate) fn from_matrix_unchecked(entries: CMatrix) -> Self {
        Self { entries }
    }

    pub fn dim(&self) -> usize {
        self.entries.nrows()
    }

    pub fn entries(&self) -> &CMatrix {
        &self.entries
    }

    pub fn trace(&self) -> f64 {
        self.entries.trace().re
    }

    /// `tr(ρ²)`
    pub fn purity(&self) -> f64 {
        // tr(ρ²) = Σ |ρ_ij|² for Hermitian ρ.
        self.entries.norm_squared()
    }

    pub fn min_eigenvalue(&self) -> f64 {
        HermitianOperator::from_matrix_unchecked(self.entries.clone()).spectral().min_eigenvalue()
    }

    /// `P ρ P + (1-P) ρ (1-P)`: the state after a non-selective measurement of `P`.
    pub fn dephase(&self, p: &Projector) -> Result<Self> {
        super::ensure_dim(self.dim(), p.dim())?;
        let q = p.complement();
        let kept = p.entries() * &self.entries * p.entries() + q.entries() * &self.entries * q.entries();
        Ok(Self { entries: kept })
    }

    /// Frobenius norm of the block `P ρ (1-P)`.
    pub fn coherence(&self, p: &Projector) -> Result<f64> {
        super::ensure_dim(self.dim(), p.dim())?;
        Ok((p.entries() * &self.entries * p.complement().entries()).norm())
    }
}
