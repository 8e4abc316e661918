use super::{ensure_dim, ensure_square, hermitian_deviation, max_abs, outer_product, CMatrix, CVector, StateVector};
use crate::error::{Error, Result};
use crate::tolerance;
use crate::C64;

/// An orthogonal projection: Hermitian and idempotent.
#[derive(Debug, Clone, PartialEq)]
pub struct Projector {
    entries: CMatrix,
    rank: usize,
}

impl Projector {
    pub fn new(entries: CMatrix) -> Result<Self> {
        ensure_square(&entries)?;
        let herm = hermitian_deviation(&entries);
        if !(herm <= tolerance::HERMITIAN) {
            return Err(Error::NotProjector { reason: format!("not Hermitian (deviation {herm:e})") });
        }
        let idem = max_abs(&(&entries * &entries - &entries));
        if !(idem <= tolerance::IDEMPOTENT) {
            return Err(Error::NotProjector { reason: format!("P² ≠ P (deviation {idem:e})") });
        }
        let trace = entries.trace().re;
        let rank = trace.round();
        if (trace - rank).abs() > tolerance::RANK {
            return Err(Error::NotProjector { reason: format!("non-integer trace {trace}") });
        }
        Ok(Self { entries, rank: rank as usize })
    }

    /// `|ψ⟩⟨ψ|`
    pub fn rank_one(state: &StateVector) -> Self {
        Self { entries: outer_product(state.amplitudes(), state.amplitudes()), rank: 1 }
    }

    /// Orthogonal projection onto the span of `states`, which must be orthonormal.
    pub fn onto_orthonormal(states: &[StateVector]) -> Result<Self> {
        let dim = states.first().map(StateVector::dim).ok_or_else(|| Error::InvalidArgument("empty state list".into()))?;
        let mut m = CMatrix::zeros(dim, dim);
        for s in states {
            ensure_dim(dim, s.dim())?;
            m += outer_product(s.amplitudes(), s.amplitudes());
        }
        Self::new(m)
    }

    pub fn identity(dim: usize) -> Self {
        Self { entries: CMatrix::identity(dim, dim), rank: dim }
    }

    pub fn zero(dim: usize) -> Self {
        Self { entries: CMatrix::zeros(dim, dim), rank: 0 }
    }

    /// `1 - P`
    pub fn complement(&self) -> Self {
        let dim = self.dim();
        Self { entries: CMatrix::identity(dim, dim) - &self.entries, rank: dim - self.rank }
    }

    pub fn dim(&self) -> usize {
        self.entries.nrows()
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn trace(&self) -> C64 {
        self.entries.trace()
    }

    pub fn entries(&self) -> &CMatrix {
        &self.entries
    }

    pub fn apply_vector(&self, v: &CVector) -> Result<CVector> {
        ensure_dim(self.dim(), v.len())?;
        Ok(&self.entries * v)
    }

    /// Squared norm of `P v`.
    pub fn weight(&self, state: &StateVector) -> Result<f64> {
        Ok(self.apply_vector(state.amplitudes())?.norm_squared())
    }
}
