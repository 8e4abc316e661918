//! Acceptance criteria. Runs as a plain binary so every criterion reports a
//! line even when an earlier one fails.

mod common;

use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::{kron, loglog_slope, max_abs, outer, powers_of_two, reduce_first, reduce_second, taylor_exp, CMatrix};
use zeno::dilation::{build_dilation, decoherence_check, dilated_zeno_run, Ancilla, DilationSetup};
use zeno::harness::{self, parse_json, render, ConfigLayer, Experiment, ExperimentConfig, Format, HamiltonianKind};
use zeno::linalg::{haar_state_from, random_hermitian_normalized, random_projector, seeded_rng};
use zeno::physics::{
    chain_as_zeno, chain_transmission, survival_closed_form, survival_under_repeated_measurement, zeno_contrast,
    PolarizerChain, TwoLevelDecayModel,
};
use zeno::{inverse_zeno_run, matrix_exp_hermitian, rotation_hamiltonian, short_time_fidelity, HermitianOperator, StateVector};

type Check = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn e(dim: usize, i: usize) -> StateVector {
    StateVector::basis(dim, i).unwrap()
}

fn rotation_oracle() -> Check {
    let mut worst: f64 = 0.0;
    let mut worst_taylor: f64 = 0.0;
    for (d_idx, dim) in [2usize, 3, 4, 8, 16].into_iter().enumerate() {
        let mut rng = seeded_rng(1000 + d_idx as u64);
        for pair in 0..1000 {
            let phi = haar_state_from(dim, &mut rng).unwrap();
            let psi = haar_state_from(dim, &mut rng).unwrap();
            let rd = rotation_hamiltonian(&phi, &psi).map_err(|e| e.to_string())?;
            let out = rd.spectral().propagator(1.0).entries() * phi.amplitudes();
            let r = (&out - psi.amplitudes()).norm();
            ensure(r < 1e-8, || format!("dim {dim} pair {pair}: residual {r:e}"))?;
            worst = worst.max(r);
            // Ten pairs per dimension, fifty overall, go through the series.
            if pair % 100 == 0 {
                let series = taylor_exp(rd.generator.entries(), 1.0) * phi.amplitudes();
                let a = (&series - &out).norm();
                ensure(a < 1e-9, || format!("dim {dim} pair {pair}: Taylor disagreement {a:e}"))?;
                worst_taylor = worst_taylor.max(a);
            }
        }
    }
    Ok(format!("max residual {worst:.1e}, max Taylor gap {worst_taylor:.1e}"))
}

fn steering_convergence() -> Check {
    let ns = powers_of_two(3, 11);
    let check = |h: &HermitianOperator, phi: &StateVector, psi: &StateVector, label: &str| -> Result<f64, String> {
        let mut points = Vec::new();
        for &n in &ns {
            let r = inverse_zeno_run(h, phi, psi, n).map_err(|e| e.to_string())?;
            let lhs = r.neg_log_fidelity();
            let bound = r.analytic_bound;
            ensure(!r.bound_applies() || lhs <= bound + 1e-6, || format!("{label} N={n}: -lnF {lhs:e} > {bound:e}"))?;
            points.push((n as f64, r.deficit()));
        }
        let slope = loglog_slope(&points);
        ensure((-1.2..=-0.8).contains(&slope), || format!("{label}: slope {slope:.3}"))?;
        Ok(slope)
    };

    let h = HermitianOperator::pauli_x();
    let pauli = check(&h, &e(2, 0), &e(2, 1), "pauli-x")?;
    // Explicit numeric form of the bound for this case.
    for &n in &ns {
        let r = inverse_zeno_run(&h, &e(2, 0), &e(2, 1), n).unwrap();
        ensure(r.neg_log_fidelity() <= 26.435975015448532 / n as f64 + 1e-6, || format!("pauli-x N={n}"))?;
    }
    let mut slopes = Vec::new();
    for seed in 0..5u64 {
        let mut rng = seeded_rng(200 + seed);
        let h = random_hermitian_normalized(4, &mut rng).unwrap();
        let phi = haar_state_from(4, &mut rng).unwrap();
        let psi = haar_state_from(4, &mut rng).unwrap();
        slopes.push(check(&h, &phi, &psi, &format!("dim-4 seed {seed}"))?);
    }
    Ok(format!("pauli-x slope {pauli:.3}, random slopes {:.3?}", slopes))
}

fn short_time_scaling() -> Check {
    let ns = powers_of_two(2, 12);
    let mut slopes = Vec::new();
    for dim in [2usize, 4] {
        for seed in 0..5u64 {
            let mut rng = seeded_rng(300 + 10 * dim as u64 + seed);
            let h = random_hermitian_normalized(dim, &mut rng).unwrap();
            let k = random_hermitian_normalized(dim, &mut rng).unwrap();
            let phi = haar_state_from(dim, &mut rng).unwrap();
            let m = h.norm() + k.norm();
            let mut points = Vec::new();
            for &n in &ns {
                let deficit = 1.0 - short_time_fidelity(&h, &k, &phi, n).map_err(|e| e.to_string())?;
                let bound = 2.0 * m * m / (n * n) as f64;
                ensure(deficit <= bound + 1e-9, || format!("dim {dim} seed {seed} N={n}: {deficit:e} > {bound:e}"))?;
                points.push((n as f64, deficit));
            }
            let slope = loglog_slope(&points);
            ensure((-2.2..=-1.8).contains(&slope), || format!("dim {dim} seed {seed}: slope {slope:.3}"))?;
            slopes.push(slope);
        }
    }
    let lo = slopes.iter().cloned().fold(f64::INFINITY, f64::min);
    let hi = slopes.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    Ok(format!("10 triples, slopes in [{lo:.3}, {hi:.3}]"))
}

fn dilation_suite() -> Check {
    let mut rng = seeded_rng(400);
    let mut worst: f64 = 0.0;
    for case in 0..200 {
        let d = 2 + case % 3;
        let da = 2 + (case / 3) % 2;
        let s = [0.1, 1.0, 10.0][(case / 6) % 3];
        let rank = 1 + case % (d - 1);
        let p = random_projector(d, rank, &mut rng).unwrap();
        let phi = haar_state_from(d, &mut rng).unwrap();
        let psi0 = haar_state_from(da, &mut rng).unwrap();
        let u = matrix_exp_hermitian(&random_hermitian_normalized(da, &mut rng).unwrap(), 2.0);
        let psi1 = StateVector::from_vector(u.entries().column(0).into_owned()).unwrap();
        let psi2 = StateVector::from_vector(u.entries().column(1).into_owned()).unwrap();
        let setup = DilationSetup::new(p.clone(), phi.clone(), psi0.clone(), psi1.clone(), psi2.clone(), s)
            .map_err(|e| e.to_string())?;
        let r = build_dilation(&setup).map_err(|e| e.to_string())?;

        let pm = p.entries();
        let q = CMatrix::identity(d, d) - pm;
        let p_phi = pm * phi.amplitudes();
        let q_phi = &q * phi.amplitudes();
        let target = kron(&CMatrix::from_column_slice(d, 1, p_phi.as_slice()), &CMatrix::from_column_slice(da, 1, psi1.amplitudes().as_slice()))
            + kron(&CMatrix::from_column_slice(d, 1, q_phi.as_slice()), &CMatrix::from_column_slice(da, 1, psi2.amplitudes().as_slice()));
        let input = kron(&CMatrix::from_column_slice(d, 1, phi.amplitudes().as_slice()), &CMatrix::from_column_slice(da, 1, psi0.amplitudes().as_slice()));
        let evolved = taylor_exp(r.hamiltonian.entries(), s) * &input;
        let joint_gap = (&evolved - &target).norm().max((r.joint_out.amplitudes() - target.column(0)).norm());

        let joint = outer(r.joint_out.amplitudes(), r.joint_out.amplitudes());
        let rho = outer(phi.amplitudes(), phi.amplitudes());
        let sandwich = pm * &rho * pm + &q * &rho * &q;
        let (kept, lost) = (p_phi.norm_squared(), q_phi.norm_squared());
        let ancilla = outer(psi1.amplitudes(), psi1.amplitudes()) * num_complex::Complex64::from(kept)
            + outer(psi2.amplitudes(), psi2.amplitudes()) * num_complex::Complex64::from(lost);
        let system_gap = max_abs(&(r.rho_system.entries() - &sandwich)).max(max_abs(&(reduce_first(&joint, d, da) - &sandwich)));
        let ancilla_gap = max_abs(&(r.rho_ancilla.entries() - &ancilla)).max(max_abs(&(reduce_second(&joint, d, da) - &ancilla)));
        let coherence = decoherence_check(&r, &p).map_err(|e| e.to_string())?;
        let purity_gap = (r.rho_system.purity() - (kept * kept + lost * lost)).abs();

        let gap = joint_gap.max(system_gap).max(ancilla_gap).max(coherence).max(purity_gap);
        ensure(gap < 1e-9, || {
            format!("case {case} (d={d}, d'={da}, s={s}): joint {joint_gap:e}, system {system_gap:e}, ancilla {ancilla_gap:e}, coherence {coherence:e}, purity {purity_gap:e}")
        })?;
        worst = worst.max(gap);
    }
    Ok(format!("200 setups, max deviation {worst:.1e}"))
}

fn physics_models() -> Check {
    let crossed = chain_transmission(&PolarizerChain::new(vec![FRAC_PI_2], 0.0).unwrap()).unwrap();
    ensure(crossed.abs() < 1e-12, || format!("crossed {crossed:e}"))?;
    let inserted = chain_transmission(&PolarizerChain::new(vec![FRAC_PI_4, FRAC_PI_2], 0.0).unwrap()).unwrap();
    ensure((inserted - 0.25).abs() < 1e-12, || format!("45 degree insert {inserted}"))?;
    let staircase = chain_transmission(&chain_as_zeno(100).unwrap()).unwrap();
    ensure((staircase - (PI / 200.0).cos().powi(200)).abs() < 1e-10, || format!("staircase {staircase}"))?;

    let mut worst: f64 = 0.0;
    for lambda in [0.3, FRAC_PI_2, 2.0] {
        let model = TwoLevelDecayModel::in_source(lambda).unwrap();
        for n in 1..=512 {
            let sim = survival_under_repeated_measurement(&model, 1.0, n).unwrap();
            let gap = (sim - survival_closed_form(lambda, n)).abs();
            ensure(gap < 1e-10, || format!("lambda {lambda} N={n}: gap {gap:e}"))?;
            worst = worst.max(gap);
        }
    }
    let c = zeno_contrast(&TwoLevelDecayModel::in_source(FRAC_PI_2).unwrap(), 1.0, 256).unwrap();
    ensure(c.steered_fidelity > 0.95 && c.fixed_basis_transfer < 0.05, || {
        format!("steered {:.4}, fixed-basis transfer {:.4}", c.steered_fidelity, c.fixed_basis_transfer)
    })?;
    Ok(format!(
        "staircase {staircase:.12}, survival gap {worst:.1e}, steered {:.4} vs fixed-basis transfer {:.4}",
        c.steered_fidelity, c.fixed_basis_transfer
    ))
}

fn composition() -> Check {
    let mut worst: f64 = 0.0;
    let ancilla = Ancilla { ready: e(2, 0), keep: e(2, 0), discard: e(2, 1), duration: 1.0 };
    for seed in 0..10u64 {
        let mut rng = seeded_rng(600 + seed);
        let h = random_hermitian_normalized(2, &mut rng).unwrap();
        let phi = haar_state_from(2, &mut rng).unwrap();
        let psi = haar_state_from(2, &mut rng).unwrap();
        for n in 1..=4 {
            let direct = inverse_zeno_run(&h, &phi, &psi, n).map_err(|e| e.to_string())?;
            let dilated = dilated_zeno_run(&h, &phi, &psi, n, &ancilla).map_err(|e| e.to_string())?;
            let gap = (&direct.final_state - &dilated.final_state).norm();
            ensure(gap < 1e-7, || format!("seed {seed} N={n}: gap {gap:e}"))?;
            worst = worst.max(gap);
        }
    }
    Ok(format!("40 runs, max state gap {worst:.1e}"))
}

fn harness_round_trip() -> Check {
    let configs = [
        (Experiment::A1Oracle, 3, vec![50], HamiltonianKind::PauliX),
        (Experiment::InverseZeno, 4, vec![8, 64, 512], HamiltonianKind::RandomNormalized),
        (Experiment::Eq1Scaling, 2, powers_of_two(2, 12), HamiltonianKind::RandomNormalized),
        (Experiment::Dilation, 3, vec![20], HamiltonianKind::PauliX),
        (Experiment::Polarizer, 2, vec![1, 2, 100], HamiltonianKind::PauliX),
        (Experiment::TwoLevel, 2, vec![1, 16, 256], HamiltonianKind::PauliX),
    ];
    let mut rows_checked = 0;
    for (experiment, dim, n_list, hamiltonian) in configs {
        let flags = ConfigLayer {
            experiment: Some(experiment),
            dim: Some(dim),
            n_list: Some(n_list),
            seed: Some(17),
            hamiltonian: Some(hamiltonian),
            ..Default::default()
        };
        let config = ExperimentConfig::resolve(flags, None, None).map_err(|e| e.to_string())?;
        let name = experiment.as_str();
        let first = harness::run(&config).map_err(|e| e.to_string())?;
        let second = harness::run(&config).map_err(|e| e.to_string())?;
        let csv = render(&first, Format::Csv).unwrap();
        ensure(csv == render(&second, Format::Csv).unwrap(), || format!("{name}: CSV differs between runs"))?;
        let json = render(&first, Format::Json).unwrap();
        let parsed = parse_json(&json).map_err(|e| e.to_string())?;
        ensure(parsed == first, || format!("{name}: JSON rows differ after parsing"))?;
        for (a, b) in parsed.iter().zip(&first) {
            let bits = |r: &harness::Row| [r.fidelity, r.survival, r.deficit, r.analytic_bound, r.slope.unwrap_or(0.0)].map(f64::to_bits);
            ensure(bits(a) == bits(b), || format!("{name}: JSON round trip changed bits"))?;
        }
        rows_checked += first.len();
    }
    let binary = env!("CARGO_BIN_EXE_zeno-lab");
    let args = ["inverse-zeno", "--dim", "3", "--hamiltonian", "random-normalized", "--n-list", "4,32,256", "--seed", "8"];
    let a = std::process::Command::new(binary).args(args).env_remove("ZENO_LAB_SEED").output().map_err(|e| e.to_string())?;
    let b = std::process::Command::new(binary).args(args).env_remove("ZENO_LAB_SEED").output().map_err(|e| e.to_string())?;
    ensure(a.status.success() && a.stdout == b.stdout, || "binary CSV differs between runs".into())?;
    Ok(format!("6 experiments, {rows_checked} rows, binary output stable"))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Check, Option<u64>); 7] = [
        ("rotation generator oracle", rotation_oracle, Some(30)),
        ("steering convergence", steering_convergence, Some(60)),
        ("short-time scaling", short_time_scaling, Some(30)),
        ("measurement dilation", dilation_suite, Some(20)),
        ("physics models", physics_models, Some(20)),
        ("dilation composition", composition, Some(5)),
        ("harness determinism", harness_round_trip, None),
    ];
    let mut failed = 0;
    for (i, (name, check, limit)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let mut outcome = check();
        let elapsed = start.elapsed();
        if let (Ok(detail), Some(secs)) = (&outcome, limit) {
            if elapsed > Duration::from_secs(secs) {
                outcome = Err(format!("{detail}; took {elapsed:.2?}, limit {secs} s"));
            }
        }
        let (status, detail) = match &outcome {
            Ok(d) => ("PASS", d),
            Err(d) => ("FAIL", d),
        };
        println!("criterion {} {status} {name} ({elapsed:.2?}): {detail}", i + 1);
        failed += outcome.is_err() as usize;
    }
    if failed == 0 {
        println!("acceptance: 7/7 passed");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {failed} of 7 failed");
        ExitCode::FAILURE
    }
}
