//! Inverse Zeno steering: interleave `U(1/N) = exp(-iH/N)` with projections onto
//! `Φ_n = exp(-inK/N)Φ`, where `K` is the rotation generator taking `Φ` to `Ψ`.
//!
//! ```text
//! Ψ_N = P_N U(1/N) P_{N-1} U(1/N) ··· P_1 U(1/N) Φ,     P_n = |Φ_n⟩⟨Φ_n|
//! ```
//!
//! Each step contributes a factor `⟨Φ_n|U(1/N)|Φ_{n-1}⟩` whose squared modulus
//! is within `2(M + ‖K‖)²/N²` of one (`M = ‖H‖`). Once `N ≥ 2(M + ‖K‖)` every
//! factor is at least 1/2, `-ln x ≤ 2(1 - x)` applies, and
//! `-ln |⟨Ψ|Ψ_N⟩|² ≤ 4(M + ‖K‖)²/N`.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::linalg::{ensure_dim, CVector, HermitianOperator, Projector, StateVector, UnitaryMatrix};
use crate::rotation::{rotation_hamiltonian, RotationDecomposition};
use crate::tolerance;
use crate::C64;

/// The `N` rank-one projectors of a steering schedule.
#[derive(Debug, Clone)]
pub struct ZenoSchedule {
    pub n: usize,
    pub projectors: Vec<Projector>,
    pub generator: HermitianOperator,
    pub phi: StateVector,
    pub psi: StateVector,
}

/// Outcome of one steering run.
#[derive(Debug, Clone)]
pub struct ZenoRunResult {
    pub n: usize,
    /// `Ψ_N`, left unnormalized (`‖Ψ_N‖ ≤ 1`).
    pub final_state: CVector,
    /// `|⟨Ψ|Ψ_N⟩|²`
    pub final_fidelity: f64,
    /// `‖Ψ_N‖²`
    pub survival_probability: f64,
    /// `4(M + ‖K‖)²/N`
    pub analytic_bound: f64,
    /// `⟨Φ_n|U(1/N)|Φ_{n-1}⟩` for `n = 1..N`.
    pub per_step_overlaps: Vec<C64>,
    /// `M = ‖H‖`
    pub hamiltonian_norm: f64,
    /// `‖K‖`
    pub generator_norm: f64,
    pub theta: f64,
    pub delta: f64,
}

impl ZenoRunResult {
    pub fn deficit(&self) -> f64 {
        1.0 - self.final_fidelity
    }

    pub fn neg_log_fidelity(&self) -> f64 {
        -self.final_fidelity.ln()
    }

    /// `N ≥ 2(M + ‖K‖)`: every per-step factor is at least 1/2 and the
    /// logarithmic bound holds.
    pub fn bound_applies(&self) -> bool {
        self.n as f64 >= bound_threshold(self.hamiltonian_norm, self.generator_norm)
    }
}

/// Smallest `N` (as a real) for which the `4(M + ‖K‖)²/N` bound is asserted.
pub fn bound_threshold(hamiltonian_norm: f64, generator_norm: f64) -> f64 {
    2.0 * (hamiltonian_norm + generator_norm)
}

/// `4(M + ‖K‖)²/N`
pub fn analytic_bound(hamiltonian_norm: f64, generator_norm: f64, n: usize) -> f64 {
    let s = hamiltonian_norm + generator_norm;
    4.0 * s * s / n as f64
}

/// `2(M + ‖K‖)²/N²`, the per-step bound on `1 - a_n(1/N)`.
pub fn short_time_bound(hamiltonian_norm: f64, generator_norm: f64, n: usize) -> f64 {
    let s = (hamiltonian_norm + generator_norm) / n as f64;
    2.0 * s * s
}

fn ensure_steps(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidArgument("number of steps must be at least 1".into()));
    }
    Ok(())
}

/// Projectors onto `exp(-inK/N)Φ`, `n = 1..N`.
pub fn zeno_schedule(rd: &RotationDecomposition, n: usize) -> Result<ZenoSchedule> {
    ensure_steps(n)?;
    let projectors = (1..=n)
        .map(|k| Projector::rank_one(&rd.projection_direction(k as f64 / n as f64)))
        .collect();
    Ok(ZenoSchedule {
        n,
        projectors,
        generator: rd.generator.clone(),
        phi: rd.phi.clone(),
        psi: rd.psi.clone(),
    })
}

/// Runs the steering product `Ψ_N` for Hamiltonian `h` from `phi` towards `psi`.
pub fn inverse_zeno_run(h: &HermitianOperator, phi: &StateVector, psi: &StateVector, n: usize) -> Result<ZenoRunResult> {
    ensure_dim(h.dim(), phi.dim())?;
    let rd = rotation_hamiltonian(phi, psi)?;
    run_with(&rd, &h.propagator(1.0 / n as f64), h.norm(), n)
}

pub(crate) fn run_with(rd: &RotationDecomposition, step: &UnitaryMatrix, hamiltonian_norm: f64, n: usize) -> Result<ZenoRunResult> {
    ensure_steps(n)?;
    ensure_dim(step.dim(), rd.dim())?;
    let u = step.entries();
    let mut state = rd.phi.amplitudes().clone();
    let mut previous = rd.phi.amplitudes().clone();
    let mut overlaps = Vec::with_capacity(n);
    for k in 1..=n {
        let direction = rd.projection_direction(k as f64 / n as f64).into_vector();
        overlaps.push(direction.dotc(&(u * &previous)));
        let amplitude = direction.dotc(&(u * &state));
        state = &direction * amplitude;
        previous = direction;
    }
    let target_overlap = rd.psi.amplitudes().dotc(&state);
    let generator_norm = rd.generator_norm();
    Ok(ZenoRunResult {
        n,
        final_fidelity: target_overlap.norm_sqr(),
        survival_probability: state.norm_squared(),
        final_state: state,
        analytic_bound: analytic_bound(hamiltonian_norm, generator_norm, n),
        per_step_overlaps: overlaps,
        hamiltonian_norm,
        generator_norm,
        theta: rd.theta,
        delta: rd.delta,
    })
}

/// Standard Zeno run: the same projector `|Φ⟩⟨Φ|` after every step.
pub fn standard_zeno_run(h: &HermitianOperator, phi: &StateVector, n: usize) -> Result<ZenoRunResult> {
    ensure_steps(n)?;
    ensure_dim(h.dim(), phi.dim())?;
    let hamiltonian_norm = h.norm();
    let u = h.propagator(1.0 / n as f64);
    let p = Projector::rank_one(phi);
    let step = p.entries() * u.entries();
    let phi_v = phi.amplitudes();
    let single = phi_v.dotc(&(u.entries() * phi_v));
    let mut state = phi_v.clone();
    for _ in 0..n {
        state = &step * state;
    }
    Ok(ZenoRunResult {
        n,
        final_fidelity: phi_v.dotc(&state).norm_sqr(),
        survival_probability: state.norm_squared(),
        final_state: state,
        analytic_bound: analytic_bound(hamiltonian_norm, 0.0, n),
        per_step_overlaps: vec![single; n],
        hamiltonian_norm,
        generator_norm: 0.0,
        theta: 0.0,
        delta: 0.0,
    })
}

/// `|⟨Φ| exp(-iH/N) exp(iK/N) |Φ⟩|²`.
pub fn short_time_fidelity(h: &HermitianOperator, k: &HermitianOperator, phi: &StateVector, n: usize) -> Result<f64> {
    ensure_steps(n)?;
    ensure_dim(h.dim(), k.dim())?;
    ensure_dim(h.dim(), phi.dim())?;
    let t = 1.0 / n as f64;
    let back = k.spectral().evolve(-t, phi.amplitudes());
    let forward = h.spectral().evolve(t, &back);
    Ok(phi.amplitudes().dotc(&forward).norm_sqr())
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ShortTimePoint {
    pub n: usize,
    pub fidelity: f64,
    pub deficit: f64,
    /// `2(M + ‖K‖)²/N²`
    pub bound: f64,
}

#[derive(Debug, Clone)]
pub struct ShortTimeSweep {
    pub points: Vec<ShortTimePoint>,
    pub hamiltonian_norm: f64,
    pub generator_norm: f64,
    /// Least-squares slope of `ln(deficit)` against `ln N` over every point.
    pub slope: Option<f64>,
}

pub fn short_time_sweep(h: &HermitianOperator, k: &HermitianOperator, phi: &StateVector, n_list: &[usize]) -> Result<ShortTimeSweep> {
    validate_n_list(n_list)?;
    ensure_dim(h.dim(), k.dim())?;
    ensure_dim(h.dim(), phi.dim())?;
    let (hs, ks) = (h.spectral(), k.spectral());
    let (hamiltonian_norm, generator_norm) = (hs.norm(), ks.norm());
    let points: Vec<ShortTimePoint> = n_list
        .iter()
        .map(|&n| {
            let t = 1.0 / n as f64;
            let v = hs.evolve(t, &ks.evolve(-t, phi.amplitudes()));
            let fidelity = phi.amplitudes().dotc(&v).norm_sqr();
            ShortTimePoint { n, fidelity, deficit: 1.0 - fidelity, bound: short_time_bound(hamiltonian_norm, generator_norm, n) }
        })
        .collect();
    let xy: Vec<(f64, f64)> = points.iter().map(|p| (p.n as f64, p.deficit)).collect();
    Ok(ShortTimeSweep { slope: fit_loglog_slope(&xy), points, hamiltonian_norm, generator_norm })
}

/// One steering run per `N`, plus the convergence slope.
#[derive(Debug, Clone)]
pub struct ConvergenceSweep {
    pub seed: u64,
    pub rows: Vec<ZenoRunResult>,
    /// Least-squares slope of `ln(1 - F)` against `ln N` over the largest
    /// decade of `N`; `None` with fewer than two usable points.
    pub slope: Option<f64>,
}

pub fn convergence_sweep(h: &HermitianOperator, phi: &StateVector, psi: &StateVector, n_list: &[usize], seed: u64) -> Result<ConvergenceSweep> {
    validate_n_list(n_list)?;
    ensure_dim(h.dim(), phi.dim())?;
    let rd = rotation_hamiltonian(phi, psi)?;
    let spectral = h.spectral();
    let hamiltonian_norm = spectral.norm();
    let rows = n_list
        .par_iter()
        .map(|&n| run_with(&rd, &spectral.propagator(1.0 / n as f64), hamiltonian_norm, n))
        .collect::<Result<Vec<_>>>()?;
    let xy: Vec<(f64, f64)> = rows.iter().map(|r| (r.n as f64, r.deficit())).collect();
    Ok(ConvergenceSweep { seed, slope: fit_loglog_slope(&largest_decade(&xy)), rows })
}

pub fn validate_n_list(n_list: &[usize]) -> Result<()> {
    if n_list.is_empty() {
        return Err(Error::InvalidArgument("N list is empty".into()));
    }
    if n_list[0] == 0 {
        return Err(Error::InvalidArgument("N values must be positive".into()));
    }
    if n_list.windows(2).any(|w| w[1] <= w[0]) {
        return Err(Error::InvalidArgument("N list must be strictly increasing".into()));
    }
    Ok(())
}

/// Points whose `x` lies within a factor of ten of the largest `x`.
pub fn largest_decade(points: &[(f64, f64)]) -> Vec<(f64, f64)> {
    let max = points.iter().map(|p| p.0).fold(f64::NEG_INFINITY, f64::max);
    points.iter().copied().filter(|p| p.0 * 10.0 >= max).collect()
}

/// Ordinary least-squares slope of `ln y` on `ln x`, using only points with
/// `y` above [`tolerance::DEFICIT_FLOOR`].
pub fn fit_loglog_slope(points: &[(f64, f64)]) -> Option<f64> {
    let logs: Vec<(f64, f64)> = points
        .iter()
        .filter(|(x, y)| *x > 0.0 && *y > tolerance::DEFICIT_FLOOR && y.is_finite())
        .map(|(x, y)| (x.ln(), y.ln()))
        .collect();
    if logs.len() < 2 {
        return None;
    }
    let n = logs.len() as f64;
    let mx = logs.iter().map(|p| p.0).sum::<f64>() / n;
    let my = logs.iter().map(|p| p.1).sum::<f64>() / n;
    let sxx: f64 = logs.iter().map(|p| (p.0 - mx).powi(2)).sum();
    if sxx == 0.0 {
        return None;
    }
    let sxy: f64 = logs.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    Some(sxy / sxx)
}
