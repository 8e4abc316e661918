use nalgebra::DVector;

use super::CVector;
use crate::error::{Error, Result};
use crate::tolerance;
use crate::C64;

/// A unit vector in `C^dim`.
///
/// Construction rejects input whose norm is off by more than
/// [`tolerance::NORM`]; use [`StateVector::normalized`] to rescale explicitly.
#[derive(Debug, Clone, PartialEq)]
pub struct StateVector {
    amplitudes: CVector,
}

impl StateVector {
    pub fn new(amplitudes: Vec<C64>) -> Result<Self> {
        Self::from_vector(DVector::from_vec(amplitudes))
    }

    pub fn from_vector(amplitudes: CVector) -> Result<Self> {
        if amplitudes.is_empty() {
            return Err(Error::InvalidArgument("state dimension must be at least 1".into()));
        }
        let norm = amplitudes.norm();
        if !norm.is_finite() || (norm - 1.0).abs() > tolerance::NORM {
            return Err(Error::NotNormalized { norm });
        }
        Ok(Self { amplitudes })
    }

    /// Rescales `v` to unit norm.
    pub fn normalized(v: CVector) -> Result<Self> {
        if v.is_empty() {
            return Err(Error::InvalidArgument("state dimension must be at least 1".into()));
        }
        let norm = v.norm();
        if norm == 0.0 || !norm.is_finite() {
            return Err(Error::ZeroVector);
        }
        Ok(Self { amplitudes: v.unscale(norm) })
    }

    /// Real amplitudes, rescaled to unit norm.
    pub fn from_real(values: &[f64]) -> Result<Self> {
        Self::normalized(DVector::from_iterator(values.len(), values.iter().map(|&x| C64::new(x, 0.0))))
    }

    /// Computational basis vector `e_index`.
    pub fn basis(dim: usize, index: usize) -> Result<Self> {
        if index >= dim {
            return Err(Error::InvalidArgument(format!("basis index {index} out of range for dim {dim}")));
        }
        let mut v = CVector::zeros(dim);
        v[index] = C64::new(1.0, 0.0);
        Ok(Self { amplitudes: v })
    }

    /// Skips the norm check. Callers guarantee the vector came out of a
    /// norm-preserving map applied to a valid state.
    pub(crate) fn from_vector_unchecked(amplitudes: CVector) -> Self {
        debug_assert!((amplitudes.norm() - 1.0).abs() < 1e-6);
        Self { amplitudes }
    }

    pub fn dim(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn amplitudes(&self) -> &CVector {
        &self.amplitudes
    }

    pub fn into_vector(self) -> CVector {
        self.amplitudes
    }

    pub fn norm(&self) -> f64 {
        self.amplitudes.norm()
    }

    /// `e^{iγ}` times this state.
    pub fn with_phase(&self, gamma: f64) -> Self {
        let phase = C64::from_polar(1.0, gamma);
        Self { amplitudes: self.amplitudes.map(|z| z * phase) }
    }

    /// `⟨self|other⟩`, conjugate-linear in `self`.
    pub fn inner(&self, other: &StateVector) -> Result<C64> {
        inner_product(self, other)
    }
}

/// `⟨a|b⟩` with conjugation on the first argument.
pub fn inner_product(a: &StateVector, b: &StateVector) -> Result<C64> {
    super::ensure_dim(a.dim(), b.dim())?;
    Ok(a.amplitudes.dotc(&b.amplitudes))
}
