//! Finite-dimensional quantum dynamics for inverse Zeno steering.
//!
//! The crate is organised bottom-up:
//!
//! * [`linalg`] holds the dense complex substrate: normalized states, Hermitian
//!   generators and their exponentials, projectors, density matrices, Kronecker
//!   products and partial traces, and seeded random sampling.
//! * [`rotation`] builds a bounded Hermitian generator `K` with `exp(-iK)Φ = Ψ`.
//! * [`zeno`] drives a state from `Φ` to `Ψ` with a dense schedule of rank-one
//!   projections interleaved with an arbitrary Hamiltonian, and measures how fast
//!   the fidelity approaches one.
//! * [`dilation`] realises a two-outcome projective measurement as a unitary on
//!   system ⊗ ancilla followed by a partial trace.
//! * [`physics`] contains the polarizer chain and the two-level decay model.
//! * [`harness`] configures, runs and serializes experiments; the `zeno-lab`
//!   binary is a thin wrapper around it.
//!
//! Index convention for tensor products: basis pair `(i, j)` of a `d ⊗ d'`
//! space maps to `i * d' + j`, so the left factor is the slow index.

pub mod dilation;
pub mod error;
pub mod harness;
pub mod linalg;
pub mod physics;
pub mod rotation;
pub mod tolerance;
pub mod zeno;

pub use error::{Error, Result};
pub use linalg::{
    haar_random_state, inner_product, matrix_exp_hermitian, operator_norm, partial_trace,
    tensor_product, DensityMatrix, Factor, HermitianOperator, Kron, Projector, StateVector,
    UnitaryMatrix,
};
pub use rotation::{interpolating_state, rotation_hamiltonian, RotationDecomposition};
pub use zeno::{
    convergence_sweep, fit_loglog_slope, inverse_zeno_run, short_time_fidelity, zeno_schedule,
    ConvergenceSweep, ZenoRunResult, ZenoSchedule,
};

/// Complex scalar used throughout the crate.
pub type C64 = num_complex::Complex64;
