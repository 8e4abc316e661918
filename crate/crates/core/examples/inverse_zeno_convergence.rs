//! Steers e0 to e1 against a sigma_x Hamiltonian with N projective
//! measurements and prints how the fidelity deficit shrinks.
//!
//! cargo run --example inverse_zeno_convergence

use zeno::{convergence_sweep, HermitianOperator, StateVector};

fn main() -> zeno::Result<()> {
    let h = HermitianOperator::pauli_x();
    let phi = StateVector::basis(2, 0)?;
    let psi = StateVector::basis(2, 1)?;
    let n_list: Vec<usize> = (3..=11).map(|k| 1 << k).collect();

    let sweep = convergence_sweep(&h, &phi, &psi, &n_list, 0)?;
    println!("{:>6} {:>14} {:>14} {:>14}", "N", "fidelity", "-ln F", "bound");
    for r in &sweep.rows {
        println!("{:>6} {:>14.10} {:>14.6e} {:>14.6e}", r.n, r.final_fidelity, r.neg_log_fidelity(), r.analytic_bound);
    }
    if let Some(slope) = sweep.slope {
        println!("log-log slope of the deficit: {slope:.3}");
    }
    Ok(())
}
