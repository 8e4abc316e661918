//! Bounded Hermitian generators that rotate one unit vector onto another.
//!
//! For unit vectors `Φ`, `Ψ` write `⟨Φ|Ψ⟩ = e^{-iδ}|⟨Φ|Ψ⟩|` with `δ ∈ [0, 2π)`
//! (and `δ = 0` when the overlap vanishes). If the overlap has modulus one then
//! `Ψ = e^{-iδ}Φ` and `K = δ·I`. Otherwise let
//!
//! ```text
//! Φ⊥ = (e^{iδ}Ψ - |⟨Φ|Ψ⟩| Φ) / sin θ,      cos θ = |⟨Φ|Ψ⟩|,  θ ∈ [0, π/2]
//! K  = -iθ|Φ⟩⟨Φ⊥| + iθ|Φ⊥⟩⟨Φ| + δ·I
//! ```
//!
//! The first two terms rotate the plane `span{Φ, Φ⊥}` by `θ` and vanish on its
//! complement, so `exp(-iK)Φ = e^{-iδ}(cos θ Φ + sin θ Φ⊥) = Ψ` and
//! `‖K‖ = θ + δ`.

use std::f64::consts::TAU;

use crate::error::Result;
use crate::linalg::{inner_product, outer_product, HermitianOperator, Spectral, StateVector};
use crate::tolerance;
use crate::C64;

#[derive(Debug, Clone)]
pub struct RotationDecomposition {
    pub phi: StateVector,
    pub psi: StateVector,
    /// Rotation angle in `[0, π/2]`.
    pub theta: f64,
    /// Global phase in `[0, 2π)`.
    pub delta: f64,
    /// Unit vector orthogonal to `phi`; `None` when `psi` is a phase multiple of `phi`.
    pub phi_perp: Option<StateVector>,
    pub generator: HermitianOperator,
    spectral: Spectral,
}

impl RotationDecomposition {
    /// `‖K‖`.
    pub fn generator_norm(&self) -> f64 {
        self.spectral.norm()
    }

    pub fn spectral(&self) -> &Spectral {
        &self.spectral
    }

    pub fn dim(&self) -> usize {
        self.phi.dim()
    }

    /// `true` on the `K = δ·I` branch.
    pub fn is_parallel(&self) -> bool {
        self.phi_perp.is_none()
    }

    /// Unit vector spanning the range of the projector at fraction `t` of the
    /// schedule. Equal to [`interpolating_state`] up to a global phase: on the
    /// parallel branch `phi` is returned as is, and `t = 1` returns `psi`.
    pub(crate) fn projection_direction(&self, t: f64) -> StateVector {
        if self.is_parallel() {
            self.phi.clone()
        } else if t == 1.0 {
            self.psi.clone()
        } else {
            interpolating_state(self, t)
        }
    }
}

/// Builds `K` with `exp(-iK)Φ = Ψ`.
pub fn rotation_hamiltonian(phi: &StateVector, psi: &StateVector) -> Result<RotationDecomposition> {
    let overlap = inner_product(phi, psi)?;
    let modulus = overlap.norm();
    let delta = if overlap == C64::new(0.0, 0.0) { 0.0 } else { wrap_phase(-overlap.arg()) };
    let dim = phi.dim();

    let phase = C64::from_polar(1.0, delta);
    let mut w = psi.amplitudes() * phase - phi.amplitudes() * C64::new(modulus, 0.0);
    if 1.0 - modulus <= tolerance::NEAR_PARALLEL {
        // One Gram-Schmidt pass against Φ to remove cancellation error.
        let c = phi.amplitudes().dotc(&w);
        w -= phi.amplitudes() * c;
    }

    if w.norm() <= tolerance::PARALLEL {
        let generator = HermitianOperator::identity(dim).scale(delta);
        let spectral = generator.spectral();
        return Ok(RotationDecomposition {
            phi: phi.clone(),
            psi: psi.clone(),
            theta: 0.0,
            delta,
            phi_perp: None,
            generator,
            spectral,
        });
    }

    let sin_theta = w.norm();
    let theta = sin_theta.atan2(modulus);
    let phi_perp = StateVector::normalized(w)?;

    let half = outer_product(phi.amplitudes(), phi_perp.amplitudes()) * C64::new(0.0, -theta);
    let rotation = &half + half.adjoint();
    let generator = HermitianOperator::new(rotation)?.add(&HermitianOperator::identity(dim).scale(delta))?;
    let spectral = generator.spectral();

    Ok(RotationDecomposition {
        phi: phi.clone(),
        psi: psi.clone(),
        theta,
        delta,
        phi_perp: Some(phi_perp),
        generator,
        spectral,
    })
}

/// `exp(-itK)Φ`; `t = 0` gives `Φ`, `t = 1` gives `Ψ`.
pub fn interpolating_state(rd: &RotationDecomposition, t: f64) -> StateVector {
    if rd.is_parallel() {
        let phase = C64::from_polar(1.0, -t * rd.delta);
        return StateVector::from_vector_unchecked(rd.phi.amplitudes() * phase);
    }
    let v = rd.spectral.evolve(t, rd.phi.amplitudes());
    StateVector::normalized(v).expect("unitary image of a unit vector is nonzero")
}

fn wrap_phase(x: f64) -> f64 {
    let r = x.rem_euclid(TAU);
    if r >= TAU {
        0.0
    } else {
        r
    }
}
