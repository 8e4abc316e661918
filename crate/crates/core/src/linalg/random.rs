//! Seeded sampling of states, Hamiltonians and projectors.
//!
//! All draws go through [`SeededRng`] (ChaCha8, a counter-based stream cipher
//! generator) so that a `(dim, seed)` pair always yields the same object.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use super::{CMatrix, CVector, HermitianOperator, Projector, StateVector};
use crate::error::{Error, Result};
use crate::C64;

pub type SeededRng = ChaCha8Rng;

pub fn seeded_rng(seed: u64) -> SeededRng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn complex_gaussian<R: Rng + ?Sized>(rng: &mut R) -> C64 {
    C64::new(rng.sample(StandardNormal), rng.sample(StandardNormal))
}

/// Unitarily invariant random state: i.i.d. complex Gaussians, normalized.
pub fn haar_random_state(dim: usize, seed: u64) -> Result<StateVector> {
    haar_state_from(dim, &mut seeded_rng(seed))
}

pub fn haar_state_from<R: Rng + ?Sized>(dim: usize, rng: &mut R) -> Result<StateVector> {
    if dim == 0 {
        return Err(Error::InvalidArgument("dim must be at least 1".into()));
    }
    loop {
        let v = CVector::from_fn(dim, |_, _| complex_gaussian(rng));
        // A zero draw has probability zero; redraw rather than fail.
        if v.norm() > 0.0 {
            return StateVector::normalized(v);
        }
    }
}

/// GUE-style sample `(A + A†)/2`, rescaled to operator norm 1.
pub fn random_hermitian_normalized<R: Rng + ?Sized>(dim: usize, rng: &mut R) -> Result<HermitianOperator> {
    if dim == 0 {
        return Err(Error::InvalidArgument("dim must be at least 1".into()));
    }
    let a = CMatrix::from_fn(dim, dim, |_, _| complex_gaussian(rng));
    let h = HermitianOperator::from_matrix_unchecked((&a + a.adjoint()).scale(0.5));
    let norm = h.norm();
    Ok(h.scale(1.0 / norm))
}

/// Projector onto the span of `rank` random orthonormal vectors.
pub fn random_projector<R: Rng + ?Sized>(dim: usize, rank: usize, rng: &mut R) -> Result<Projector> {
    if rank > dim {
        return Err(Error::InvalidArgument(format!("rank {rank} exceeds dim {dim}")));
    }
    let mut basis: Vec<CVector> = Vec::with_capacity(rank);
    while basis.len() < rank {
        let mut v = CVector::from_fn(dim, |_, _| complex_gaussian(rng));
        for _ in 0..2 {
            for b in &basis {
                let c = b.dotc(&v);
                v -= b * c;
            }
        }
        let n = v.norm();
        if n > 1e-8 {
            basis.push(v.unscale(n));
        }
    }
    let states: Vec<StateVector> = basis.into_iter().map(StateVector::from_vector_unchecked).collect();
    if states.is_empty() {
        return Ok(Projector::zero(dim));
    }
    Projector::onto_orthonormal(&states)
}
