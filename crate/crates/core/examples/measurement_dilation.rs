//! A projective measurement written as unitary evolution on system plus
//! ancilla. The reduced system state loses its coherences between the
//! measured subspace and its complement.
//!
//! cargo run --example measurement_dilation

use zeno::dilation::{build_dilation, decoherence_check, DilationSetup};
use zeno::linalg::CMatrix;
use zeno::{DensityMatrix, Projector, StateVector};

fn show(m: &CMatrix) {
    for row in m.row_iter() {
        let cells: Vec<String> = row.iter().map(|z| format!("{:8.4}", z.re)).collect();
        println!("  {}", cells.join(" "));
    }
}

fn main() -> zeno::Result<()> {
    let phi = StateVector::from_real(&[1.0, 1.0, 1.0])?;
    let p = Projector::rank_one(&StateVector::basis(3, 0)?);
    let setup = DilationSetup::with_default_ready(p.clone(), phi.clone(), StateVector::basis(2, 0)?, StateVector::basis(2, 1)?, 1.0)?;
    let r = build_dilation(&setup)?;

    println!("coherence before: {:.6}", DensityMatrix::pure(&phi).coherence(&p)?);
    println!("coherence after:  {:.2e}", decoherence_check(&r, &p)?);
    println!("P(keep) = {:.6}", p.weight(&phi)?);
    println!("system purity {:.6}", r.rho_system.purity());
    println!("reduced system state:");
    show(r.rho_system.entries());
    println!("ancilla state:");
    show(r.rho_ancilla.entries());
    Ok(())
}
