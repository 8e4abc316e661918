use nalgebra::{DMatrix, DVector};

use super::{ensure_dim, ensure_square, hermitian_deviation, CMatrix, CVector, UnitaryMatrix};
use crate::error::{Error, Result};
use crate::tolerance;
use crate::C64;

/// A complex Hermitian matrix (`A = A†` within [`tolerance::HERMITIAN`]).
#[derive(Debug, Clone, PartialEq)]
pub struct HermitianOperator {
    entries: CMatrix,
}

impl HermitianOperator {
    pub fn new(entries: CMatrix) -> Result<Self> {
        ensure_square(&entries)?;
        let deviation = hermitian_deviation(&entries);
        if !(deviation <= tolerance::HERMITIAN) {
            return Err(Error::NotHermitian { deviation });
        }
        Ok(Self { entries })
    }

    /// Row-major real entries.
    pub fn from_real(dim: usize, values: &[f64]) -> Result<Self> {
        if values.len() != dim * dim {
            return Err(Error::DimensionMismatch { expected: dim * dim, found: values.len() });
        }
        Self::new(DMatrix::from_row_iterator(dim, dim, values.iter().map(|&x| C64::new(x, 0.0))))
    }

    pub(crate) fn from_matrix_unchecked(entries: CMatrix) -> Self {
        debug_assert!(hermitian_deviation(&entries) <= 1e-8);
        Self { entries }
    }

    pub fn zero(dim: usize) -> Self {
        Self { entries: CMatrix::zeros(dim, dim) }
    }

    pub fn identity(dim: usize) -> Self {
        Self { entries: CMatrix::identity(dim, dim) }
    }

    pub fn diagonal(values: &[f64]) -> Self {
        let d = DVector::from_iterator(values.len(), values.iter().map(|&x| C64::new(x, 0.0)));
        Self { entries: CMatrix::from_diagonal(&d) }
    }

    pub fn pauli_x() -> Self {
        Self::from_real(2, &[0.0, 1.0, 1.0, 0.0]).expect("σx is Hermitian")
    }

    pub fn pauli_y() -> Self {
        let i = C64::new(0.0, 1.0);
        let zero = C64::new(0.0, 0.0);
        Self { entries: DMatrix::from_row_slice(2, 2, &[zero, -i, i, zero]) }
    }

    pub fn pauli_z() -> Self {
        Self::diagonal(&[1.0, -1.0])
    }

    pub fn dim(&self) -> usize {
        self.entries.nrows()
    }

    pub fn entries(&self) -> &CMatrix {
        &self.entries
    }

    pub fn scale(&self, factor: f64) -> Self {
        Self { entries: self.entries.scale(factor) }
    }

    pub fn add(&self, other: &HermitianOperator) -> Result<Self> {
        ensure_dim(self.dim(), other.dim())?;
        Ok(Self { entries: &self.entries + &other.entries })
    }

    /// Eigendecomposition `A = V Λ V†`.
    pub fn spectral(&self) -> Spectral {
        // Symmetrize so the solver sees an exactly Hermitian input.
        let sym = (&self.entries + self.entries.adjoint()).scale(0.5);
        let eig = sym.symmetric_eigen();
        Spectral { values: eig.eigenvalues, vectors: eig.eigenvectors }
    }

    /// Largest absolute eigenvalue.
    pub fn norm(&self) -> f64 {
        self.spectral().norm()
    }

    /// `exp(-i t A)`.
    pub fn propagator(&self, t: f64) -> UnitaryMatrix {
        self.spectral().propagator(t)
    }
}

/// Eigenvalues and orthonormal eigenvectors of a Hermitian operator.
#[derive(Debug, Clone)]
pub struct Spectral {
    pub values: DVector<f64>,
    pub vectors: CMatrix,
}

impl Spectral {
    pub fn norm(&self) -> f64 {
        self.values.iter().fold(0.0, |acc, x| acc.max(x.abs()))
    }

    pub fn min_eigenvalue(&self) -> f64 {
        self.values.iter().copied().fold(f64::INFINITY, f64::min)
    }

    fn phases(&self, t: f64) -> CVector {
        self.values.map(|lambda| C64::from_polar(1.0, -t * lambda))
    }

    /// `V exp(-i t Λ) V†`.
    pub fn propagator(&self, t: f64) -> UnitaryMatrix {
        let phases = self.phases(t);
        let mut scaled = self.vectors.clone();
        for (mut col, phase) in scaled.column_iter_mut().zip(phases.iter()) {
            col *= *phase;
        }
        UnitaryMatrix::from_matrix_unchecked(scaled * self.vectors.adjoint())
    }

    /// `exp(-i t A) v` without forming the full propagator.
    pub fn evolve(&self, t: f64, v: &CVector) -> CVector {
        let coords = self.vectors.ad_mul(v);
        let rotated = coords.component_mul(&self.phases(t));
        &self.vectors * rotated
    }
}

/// `exp(-i t A)` through the eigendecomposition of `A`.
pub fn matrix_exp_hermitian(a: &HermitianOperator, t: f64) -> UnitaryMatrix {
    a.propagator(t)
}

/// Operator norm of a Hermitian operator: `max |λ|`.
pub fn operator_norm(a: &HermitianOperator) -> f64 {
    a.norm()
}
