//! Polarizer chains and a two-level decay model.
//!
//! An ideal polarizer with axis `a` projects the Jones vector onto
//! `(cos a, sin a)`. Rotating the axis from 0 to π/2 in `N` equal steps is the
//! steering schedule with `H = 0` and `Φ ⊥ Ψ`, so the transmitted intensity
//! `cos^{2N}(π/2N)` is the same number the Zeno kernel produces.
//!
//! The two-level model couples a source level to a target level with
//! `H = λσx`. Measuring "still in the source level?" every `T/N` suppresses the
//! transfer (standard Zeno); reaching the target requires the steering schedule.

use std::f64::consts::{FRAC_PI_2, PI};

use crate::error::{Error, Result};
use crate::linalg::{HermitianOperator, Projector, StateVector};
use crate::zeno::inverse_zeno_run;
use crate::{tolerance, C64};

/// Ideal polarizers applied in order to linearly polarized light.
#[derive(Debug, Clone, PartialEq)]
pub struct PolarizerChain {
    /// Transmission axes in `[0, π)`.
    pub angles: Vec<f64>,
    pub input_angle: f64,
    /// Intensity transmitted by each polarizer for light already aligned with
    /// its axis. 1 for ideal lenses.
    pub efficiency: f64,
}

impl PolarizerChain {
    pub fn new(angles: Vec<f64>, input_angle: f64) -> Result<Self> {
        if angles.iter().chain(std::iter::once(&input_angle)).any(|a| !a.is_finite()) {
            return Err(Error::InvalidArgument("polarizer angles must be finite".into()));
        }
        let angles = angles.into_iter().map(|a| a.rem_euclid(PI)).collect();
        Ok(Self { angles, input_angle, efficiency: 1.0 })
    }

    pub fn with_efficiency(mut self, efficiency: f64) -> Result<Self> {
        if !(efficiency > 0.0 && efficiency <= 1.0) {
            return Err(Error::InvalidArgument(format!("efficiency must lie in (0, 1], got {efficiency}")));
        }
        self.efficiency = efficiency;
        Ok(self)
    }

    pub fn len(&self) -> usize {
        self.angles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.angles.is_empty()
    }
}

fn jones(angle: f64) -> StateVector {
    StateVector::new(vec![C64::new(angle.cos(), 0.0), C64::new(angle.sin(), 0.0)]).expect("unit Jones vector")
}

/// Fraction of the input intensity that leaves the last polarizer.
pub fn chain_transmission(chain: &PolarizerChain) -> Result<f64> {
    if chain.is_empty() {
        return Err(Error::EmptyChain);
    }
    let mut field = jones(chain.input_angle).into_vector();
    for &angle in &chain.angles {
        field = Projector::rank_one(&jones(angle)).apply_vector(&field)?;
    }
    Ok(field.norm_squared() * chain.efficiency.powi(chain.len() as i32))
}

/// `N` polarizers at `k·(π/2)/N`, `k = 1..N`, fed with light polarized at 0.
pub fn chain_as_zeno(n: usize) -> Result<PolarizerChain> {
    if n == 0 {
        return Err(Error::InvalidArgument("chain needs at least one polarizer".into()));
    }
    PolarizerChain::new((1..=n).map(|k| k as f64 * FRAC_PI_2 / n as f64).collect(), 0.0)
}

/// Two levels coupled at angular frequency `lambda`; `alpha0`, `beta0` are the
/// initial source and target amplitudes.
#[derive(Debug, Clone, PartialEq)]
pub struct TwoLevelDecayModel {
    pub lambda: f64,
    pub alpha0: C64,
    pub beta0: C64,
    pub source_label: String,
    pub target_label: String,
}

impl TwoLevelDecayModel {
    pub fn new(lambda: f64, alpha0: C64, beta0: C64) -> Result<Self> {
        if !(lambda >= 0.0) || !lambda.is_finite() {
            return Err(Error::InvalidArgument(format!("coupling must be finite and non-negative, got {lambda}")));
        }
        let norm = (alpha0.norm_sqr() + beta0.norm_sqr()).sqrt();
        if (norm - 1.0).abs() > tolerance::NORM {
            return Err(Error::NotNormalized { norm });
        }
        Ok(Self { lambda, alpha0, beta0, source_label: "Arg".into(), target_label: "His".into() })
    }

    /// All amplitude in the source level.
    pub fn in_source(lambda: f64) -> Result<Self> {
        Self::new(lambda, C64::new(1.0, 0.0), C64::new(0.0, 0.0))
    }

    pub fn with_labels(mut self, source: &str, target: &str) -> Self {
        self.source_label = source.into();
        self.target_label = target.into();
        self
    }

    pub fn initial_state(&self) -> StateVector {
        StateVector::new(vec![self.alpha0, self.beta0]).expect("validated in constructor")
    }

    /// `λσx`
    pub fn hamiltonian(&self) -> HermitianOperator {
        HermitianOperator::pauli_x().scale(self.lambda)
    }
}

fn ensure_positive(name: &str, x: f64) -> Result<()> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(Error::InvalidArgument(format!("{name} must be positive, got {x}")));
    }
    Ok(())
}

/// Probability of still finding the initial state after `N` measurements at
/// intervals `T/N`, keeping only the no-decay outcome each time.
pub fn survival_under_repeated_measurement(model: &TwoLevelDecayModel, total_time: f64, n: usize) -> Result<f64> {
    ensure_positive("total time", total_time)?;
    if n == 0 {
        return Err(Error::InvalidArgument("number of measurements must be at least 1".into()));
    }
    let initial = model.initial_state();
    let u = model.hamiltonian().propagator(total_time / n as f64);
    let p = Projector::rank_one(&initial);
    let mut state = initial.into_vector();
    for _ in 0..n {
        state = p.apply_vector(&u.apply_vector(&state)?)?;
    }
    Ok(state.norm_squared())
}

/// `cos^{2N}(λT/N)`: survival for a model starting in the source level.
pub fn survival_closed_form(lambda_t: f64, n: usize) -> f64 {
    (lambda_t / n as f64).cos().powi(2 * n as i32)
}

/// Fidelity with the target level after steering from the source level over
/// unit time with `N` engineered projections under `H = λσx`.
pub fn steered_mutation_probability(model: &TwoLevelDecayModel, n: usize) -> Result<f64> {
    let source = StateVector::basis(2, 0)?;
    let target = StateVector::basis(2, 1)?;
    Ok(inverse_zeno_run(&model.hamiltonian(), &source, &target, n)?.final_fidelity)
}

/// Side-by-side comparison of fixed-basis measurement and engineered steering.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ZenoContrast {
    pub n: usize,
    pub fixed_basis_survival: f64,
    /// `1 - fixed_basis_survival`
    pub fixed_basis_transfer: f64,
    pub steered_fidelity: f64,
    /// `sin²(λT)` with no measurement at all.
    pub free_transfer: f64,
}

/// Both protocols over the same interval `T`. Steering runs over unit time
/// with coupling `λT`, which is the same unitary per step.
pub fn zeno_contrast(model: &TwoLevelDecayModel, total_time: f64, n: usize) -> Result<ZenoContrast> {
    let survival = survival_under_repeated_measurement(model, total_time, n)?;
    let rescaled = TwoLevelDecayModel { lambda: model.lambda * total_time, ..model.clone() };
    Ok(ZenoContrast {
        n,
        fixed_basis_survival: survival,
        fixed_basis_transfer: 1.0 - survival,
        steered_fidelity: steered_mutation_probability(&rescaled, n)?,
        free_transfer: (model.lambda * total_time).sin().powi(2),
    })
}

#[cfg(test)]
mod tests {
    use std::f64::consts::FRAC_PI_4;

    use super::*;

    #[test]
    fn crossed_and_inserted() {
        let crossed = PolarizerChain::new(vec![0.0, FRAC_PI_2], 0.0).unwrap();
        assert!(chain_transmission(&crossed).unwrap() < 1e-12);
        let three = PolarizerChain::new(vec![0.0, FRAC_PI_4, FRAC_PI_2], 0.0).unwrap();
        assert!((chain_transmission(&three).unwrap() - 0.25).abs() < 1e-12);
    }

    #[test]
    fn staircase_of_one_hundred() {
        let angles = (0..=100).map(|k| k as f64 * FRAC_PI_2 / 100.0).collect();
        let chain = PolarizerChain::new(angles, 0.0).unwrap();
        assert!((chain_transmission(&chain).unwrap() - 0.975626914143900281).abs() < 1e-10);
    }

    #[test]
    fn efficiency_scales_each_lens() {
        let chain = PolarizerChain::new(vec![0.0, FRAC_PI_4, FRAC_PI_2], 0.0).unwrap().with_efficiency(0.9).unwrap();
        assert!((chain_transmission(&chain).unwrap() - 0.25 * 0.9f64.powi(3)).abs() < 1e-12);
        assert!(PolarizerChain::new(vec![0.0], 0.0).unwrap().with_efficiency(0.0).is_err());
    }

    #[test]
    fn empty_chain() {
        assert_eq!(chain_transmission(&PolarizerChain::new(vec![], 0.0).unwrap()), Err(Error::EmptyChain));
    }

    #[test]
    fn zeno_chains() {
        assert!(chain_transmission(&chain_as_zeno(1).unwrap()).unwrap() < 1e-30);
        assert!((chain_transmission(&chain_as_zeno(2).unwrap()).unwrap() - 0.25).abs() < 1e-15);
    }

    #[test]
    fn survival_examples() {
        let full = TwoLevelDecayModel::in_source(FRAC_PI_2).unwrap();
        assert!(survival_under_repeated_measurement(&full, 1.0, 1).unwrap() < 1e-30);
        let slow = TwoLevelDecayModel::in_source(1.0).unwrap();
        let t = 1e-3;
        let s = survival_under_repeated_measurement(&slow, t, 1).unwrap();
        assert!((1.0 - s - t * t).abs() < 1e-12);
        let s = survival_under_repeated_measurement(&full, 1.0, 100).unwrap();
        assert!((s - 0.975626914143900281).abs() < 1e-10);
    }

    #[test]
    fn steering_without_hamiltonian_crossed() {
        let model = TwoLevelDecayModel::in_source(0.0).unwrap();
        assert!(steered_mutation_probability(&model, 1).unwrap() < 1e-30);
    }

    #[test]
    fn model_validation() {
        assert!(TwoLevelDecayModel::new(1.0, C64::new(1.0, 0.0), C64::new(1.0, 0.0)).is_err());
        assert!(TwoLevelDecayModel::new(-1.0, C64::new(1.0, 0.0), C64::new(0.0, 0.0)).is_err());
        let m = TwoLevelDecayModel::in_source(1.0).unwrap().with_labels("A", "B");
        assert_eq!(m.target_label, "B");
        assert!(survival_under_repeated_measurement(&m, 0.0, 3).is_err());
    }
}
