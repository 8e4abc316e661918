//! Projective measurement as a unitary on system ⊗ ancilla.
//!
//! Given a projector `P`, a system state `Φ` and ancilla states `Ψ₀`, `Ψ₁ ⊥ Ψ₂`,
//! the target `PΦ ⊗ Ψ₁ + (1-P)Φ ⊗ Ψ₂` is a unit vector, so the rotation
//! generator `K` taking `Φ ⊗ Ψ₀` onto it exists. With `L = K/s` the unitary
//! `exp(-isL)` performs the measurement; tracing out the ancilla leaves
//! `PρP + (1-P)ρ(1-P)`, and tracing out the system leaves
//! `‖PΦ‖²|Ψ₁⟩⟨Ψ₁| + ‖(1-P)Φ‖²|Ψ₂⟩⟨Ψ₂|`.

use crate::error::{Error, Result};
use crate::linalg::{
    ensure_dim, matrix_exp_hermitian, partial_trace, CVector, DensityMatrix, Factor, HermitianOperator, Kron, Projector,
    StateVector,
};
use crate::rotation::rotation_hamiltonian;
use crate::tolerance;
use crate::C64;

#[derive(Debug, Clone)]
pub struct DilationSetup {
    pub projector: Projector,
    pub phi: StateVector,
    pub psi0: StateVector,
    pub psi1: StateVector,
    pub psi2: StateVector,
    /// Interaction duration `s > 0`.
    pub duration: f64,
}

impl DilationSetup {
    pub fn new(
        projector: Projector,
        phi: StateVector,
        psi0: StateVector,
        psi1: StateVector,
        psi2: StateVector,
        duration: f64,
    ) -> Result<Self> {
        ensure_dim(projector.dim(), phi.dim())?;
        let ancilla_dim = psi1.dim();
        if ancilla_dim < 2 {
            return Err(Error::InvalidArgument(format!("ancilla dimension must be at least 2, got {ancilla_dim}")));
        }
        ensure_dim(ancilla_dim, psi0.dim())?;
        ensure_dim(ancilla_dim, psi2.dim())?;
        let overlap = psi1.inner(&psi2)?.norm();
        if overlap > tolerance::ANCILLA_ORTHOGONAL {
            return Err(Error::AncillaNotOrthogonal { overlap });
        }
        if !(duration > 0.0) || !duration.is_finite() {
            return Err(Error::NonPositiveDuration(duration));
        }
        Ok(Self { projector, phi, psi0, psi1, psi2, duration })
    }

    /// Ready state `Ψ₀ = Ψ₁`.
    pub fn with_default_ready(projector: Projector, phi: StateVector, psi1: StateVector, psi2: StateVector, duration: f64) -> Result<Self> {
        Self::new(projector, phi, psi1.clone(), psi1, psi2, duration)
    }

    pub fn system_dim(&self) -> usize {
        self.phi.dim()
    }

    pub fn ancilla_dim(&self) -> usize {
        self.psi1.dim()
    }

    pub fn dims(&self) -> (usize, usize) {
        (self.system_dim(), self.ancilla_dim())
    }

    /// `PΦ ⊗ Ψ₁ + (1-P)Φ ⊗ Ψ₂`
    pub fn target(&self) -> Result<StateVector> {
        let kept = self.projector.apply_vector(self.phi.amplitudes())?;
        let rejected = self.phi.amplitudes() - &kept;
        let v = kept.kronecker(self.psi1.amplitudes()) + rejected.kronecker(self.psi2.amplitudes());
        StateVector::from_vector(v)
    }
}

#[derive(Debug, Clone)]
pub struct DilationResult {
    /// `L = K/s` on the product space.
    pub hamiltonian: HermitianOperator,
    /// `exp(-isL)(Φ ⊗ Ψ₀)`
    pub joint_out: StateVector,
    pub rho_system: DensityMatrix,
    pub rho_ancilla: DensityMatrix,
    pub dims: (usize, usize),
}

pub fn build_dilation(setup: &DilationSetup) -> Result<DilationResult> {
    let input = setup.phi.kron(&setup.psi0);
    let target = setup.target()?;
    let rd = rotation_hamiltonian(&input, &target)?;
    let hamiltonian = rd.generator.scale(1.0 / setup.duration);
    let joint_out = matrix_exp_hermitian(&hamiltonian, setup.duration).apply(&input)?;
    let joint = DensityMatrix::pure(&joint_out);
    let dims = setup.dims();
    Ok(DilationResult {
        rho_system: partial_trace(&joint, dims, Factor::First)?,
        rho_ancilla: partial_trace(&joint, dims, Factor::Second)?,
        hamiltonian,
        joint_out,
        dims,
    })
}

/// Frobenius norm of `P ρ_system (1-P)`, the coherence the measurement removes.
pub fn decoherence_check(result: &DilationResult, projector: &Projector) -> Result<f64> {
    result.rho_system.coherence(projector)
}

/// `(I ⊗ ⟨a|) joint`: the unnormalized system state conditioned on ancilla outcome `a`.
pub fn post_select(joint: &CVector, dims: (usize, usize), outcome: &StateVector) -> Result<CVector> {
    let (d, dp) = dims;
    ensure_dim(d * dp, joint.len())?;
    ensure_dim(dp, outcome.dim())?;
    let a = outcome.amplitudes();
    Ok(CVector::from_fn(d, |i, _| (0..dp).map(|j| a[j].conj() * joint[i * dp + j]).sum::<C64>()))
}

/// Norm of the part of `joint` whose ancilla component lies outside `span{Ψ₁, Ψ₂}`.
pub fn ancilla_leakage(joint: &CVector, dims: (usize, usize), psi1: &StateVector, psi2: &StateVector) -> Result<f64> {
    let inside = post_select(joint, dims, psi1)?.kronecker(psi1.amplitudes())
        + post_select(joint, dims, psi2)?.kronecker(psi2.amplitudes());
    Ok((joint - inside).norm())
}

/// Ancilla used to replace each projection in a steering run.
#[derive(Debug, Clone)]
pub struct Ancilla {
    pub ready: StateVector,
    pub keep: StateVector,
    pub discard: StateVector,
    pub duration: f64,
}

#[derive(Debug, Clone)]
pub struct DilatedRun {
    pub final_state: CVector,
    pub final_fidelity: f64,
    pub survival_probability: f64,
    /// Largest [`ancilla_leakage`] seen across steps.
    pub max_leakage: f64,
}

/// Steering run in which every projection `P_n` is carried out by a dilation
/// unitary followed by post-selection on the `keep` ancilla outcome.
pub fn dilated_zeno_run(h: &HermitianOperator, phi: &StateVector, psi: &StateVector, n: usize, ancilla: &Ancilla) -> Result<DilatedRun> {
    if n == 0 {
        return Err(Error::InvalidArgument("number of steps must be at least 1".into()));
    }
    ensure_dim(h.dim(), phi.dim())?;
    let rd = rotation_hamiltonian(phi, psi)?;
    let u = h.propagator(1.0 / n as f64);
    let dims = (phi.dim(), ancilla.keep.dim());
    let mut state = phi.amplitudes().clone();
    let mut max_leakage: f64 = 0.0;
    for k in 1..=n {
        let moved = u.apply_vector(&state)?;
        let weight = moved.norm();
        if weight == 0.0 {
            state = moved;
            break;
        }
        let setup = DilationSetup::new(
            Projector::rank_one(&rd.projection_direction(k as f64 / n as f64)),
            StateVector::normalized(moved)?,
            ancilla.ready.clone(),
            ancilla.keep.clone(),
            ancilla.discard.clone(),
            ancilla.duration,
        )?;
        let result = build_dilation(&setup)?;
        let joint = result.joint_out.amplitudes();
        max_leakage = max_leakage.max(ancilla_leakage(joint, dims, &ancilla.keep, &ancilla.discard)?);
        state = post_select(joint, dims, &ancilla.keep)? * C64::new(weight, 0.0);
    }
    Ok(DilatedRun {
        final_fidelity: psi.amplitudes().dotc(&state).norm_sqr(),
        survival_probability: state.norm_squared(),
        final_state: state,
        max_leakage,
    })
}
