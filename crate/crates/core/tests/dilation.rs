mod common;

use common::{kron, max_abs, outer, reduce_first, CMatrix};
use zeno::dilation::{build_dilation, decoherence_check, dilated_zeno_run, Ancilla, DilationSetup};
use zeno::linalg::{haar_state_from, random_hermitian_normalized, random_projector, seeded_rng, SeededRng};
use zeno::{inverse_zeno_run, matrix_exp_hermitian, HermitianOperator, Kron, Projector, StateVector};

fn e(dim: usize, i: usize) -> StateVector {
    StateVector::basis(dim, i).unwrap()
}

fn random_setup(dim: usize, ancilla_dim: usize, rank: usize, s: f64, rng: &mut SeededRng) -> DilationSetup {
    let p = random_projector(dim, rank, rng).unwrap();
    let phi = haar_state_from(dim, rng).unwrap();
    let psi0 = haar_state_from(ancilla_dim, rng).unwrap();
    // Columns of a random unitary give an orthonormal pair.
    let u = matrix_exp_hermitian(&random_hermitian_normalized(ancilla_dim, rng).unwrap(), 2.0);
    let psi1 = StateVector::from_vector(u.entries().column(0).into_owned()).unwrap();
    let psi2 = StateVector::from_vector(u.entries().column(1).into_owned()).unwrap();
    DilationSetup::new(p, phi, psi0, psi1, psi2, s).unwrap()
}

#[test]
fn reduced_system_matches_projector_sandwich() {
    let mut rng = seeded_rng(37);
    let setup = random_setup(3, 2, 1, 0.37, &mut rng);
    let r = build_dilation(&setup).unwrap();
    let rho = outer(setup.phi.amplitudes(), setup.phi.amplitudes());
    let p = setup.projector.entries();
    let q = CMatrix::identity(3, 3) - p;
    let sandwich = p * &rho * p + &q * &rho * &q;
    assert!(max_abs(&(r.rho_system.entries() - &sandwich)) < 1e-9);
    // Off-diagonal blocks between range(P) and range(1-P) vanish.
    assert!(max_abs(&(p * r.rho_system.entries() * &q)) < 1e-9);
    // Independent reduction of the joint state.
    let joint = outer(r.joint_out.amplitudes(), r.joint_out.amplitudes());
    assert!(max_abs(&(reduce_first(&joint, 3, 2) - &sandwich)) < 1e-9);
}

#[test]
fn dilation_unitary_acts_as_claimed() {
    let mut rng = seeded_rng(4);
    for _ in 0..20 {
        let setup = random_setup(3, 3, 2, 1.3, &mut rng);
        let r = build_dilation(&setup).unwrap();
        let input = kron(
            &CMatrix::from_column_slice(3, 1, setup.phi.amplitudes().as_slice()),
            &CMatrix::from_column_slice(3, 1, setup.psi0.amplitudes().as_slice()),
        );
        let out = common::taylor_exp(r.hamiltonian.entries(), setup.duration) * input;
        let target = setup.target().unwrap();
        assert!((out.column(0) - target.amplitudes()).norm() < 1e-8);
        assert!((r.joint_out.norm() - 1.0).abs() < 1e-9);
    }
}

#[test]
fn born_rule_bookkeeping_and_purity() {
    let mut rng = seeded_rng(12);
    for i in 0..40 {
        let setup = random_setup(2 + i % 3, 2 + i % 2, 1, 1.0, &mut rng);
        let r = build_dilation(&setup).unwrap();
        let kept = setup.projector.weight(&setup.phi).unwrap();
        let trace_p = (setup.projector.entries() * r.rho_system.entries()).trace().re;
        assert!((trace_p - kept).abs() < 1e-10);
        let purity = kept * kept + (1.0 - kept) * (1.0 - kept);
        assert!((r.rho_system.purity() - purity).abs() < 1e-9);
        assert!(r.rho_system.purity() < 1.0 - 1e-6);
    }
    // Purity stays 1 exactly when PΦ = 0 or (1-P)Φ = 0.
    for p in [Projector::rank_one(&e(2, 0)), Projector::rank_one(&e(2, 1))] {
        let setup = DilationSetup::with_default_ready(p, e(2, 0), e(2, 0), e(2, 1), 1.0).unwrap();
        let r = build_dilation(&setup).unwrap();
        assert!((r.rho_system.purity() - 1.0).abs() < 1e-9);
    }
}

#[test]
fn duration_does_not_change_the_outcome() {
    let mut rng = seeded_rng(77);
    let base = random_setup(3, 2, 1, 1.0, &mut rng);
    let reference = build_dilation(&base).unwrap();
    for s in [0.1, 10.0] {
        let setup = DilationSetup { duration: s, ..base.clone() };
        let r = build_dilation(&setup).unwrap();
        assert!((r.joint_out.amplitudes() - reference.joint_out.amplitudes()).norm() < 1e-9);
        assert!(max_abs(&(r.rho_system.entries() - reference.rho_system.entries())) < 1e-9);
        let scaled = reference.hamiltonian.scale(1.0 / s);
        assert!(max_abs(&(r.hamiltonian.entries() - scaled.entries())) < 1e-12);
    }
}

#[test]
fn coherence_is_destroyed() {
    let phi = StateVector::from_real(&[1.0, 1.0]).unwrap();
    let p = Projector::rank_one(&e(2, 0));
    let before = zeno::DensityMatrix::pure(&phi).coherence(&p).unwrap();
    assert!((before - 0.5).abs() < 1e-15);
    let setup = DilationSetup::with_default_ready(p.clone(), phi, e(2, 0), e(2, 1), 0.5).unwrap();
    assert!(decoherence_check(&build_dilation(&setup).unwrap(), &p).unwrap() < 1e-9);
}

#[test]
fn post_selected_dilation_reproduces_steering() {
    let mut rng = seeded_rng(2);
    let h = random_hermitian_normalized(2, &mut rng).unwrap();
    let phi = haar_state_from(2, &mut rng).unwrap();
    let psi = haar_state_from(2, &mut rng).unwrap();
    let ancilla = Ancilla { ready: e(3, 2), keep: e(3, 0), discard: e(3, 1), duration: 0.25 };
    for n in 1..=4 {
        let direct = inverse_zeno_run(&h, &phi, &psi, n).unwrap();
        let dilated = dilated_zeno_run(&h, &phi, &psi, n, &ancilla).unwrap();
        assert!((&direct.final_state - &dilated.final_state).norm() < 1e-7);
        assert!(dilated.max_leakage < 1e-10);
    }
    let crossed = dilated_zeno_run(&HermitianOperator::zero(2), &e(2, 0), &e(2, 1), 1, &ancilla).unwrap();
    assert!(crossed.survival_probability < 1e-20);
}

#[test]
fn product_input_kron_convention() {
    let phi = e(2, 1);
    let psi0 = e(3, 2);
    let joint = phi.kron(&psi0);
    assert_eq!(joint, e(6, 5));
}
