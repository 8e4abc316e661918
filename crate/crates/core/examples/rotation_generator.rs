//! Builds the Hermitian generator that rotates one state onto another and
//! checks the result.
//!
//! cargo run --example rotation_generator -- 5 42

use zeno::{haar_random_state, interpolating_state, rotation_hamiltonian};

fn main() -> zeno::Result<()> {
    let mut args = std::env::args().skip(1);
    let dim: usize = args.next().map_or(4, |s| s.parse().expect("dimension"));
    let seed: u64 = args.next().map_or(1, |s| s.parse().expect("seed"));

    let phi = haar_random_state(dim, seed)?;
    let psi = haar_random_state(dim, seed + 1)?;
    let rd = rotation_hamiltonian(&phi, &psi)?;

    println!("dim {dim}, seed {seed}");
    println!("|<phi|psi>| = {:.6}", phi.inner(&psi)?.norm());
    println!("theta = {:.6}, delta = {:.6}, ||K|| = {:.6}", rd.theta, rd.delta, rd.generator_norm());

    let reached = rd.spectral().propagator(1.0).apply(&phi)?;
    let residual = (reached.amplitudes() - psi.amplitudes()).norm();
    println!("||exp(-iK) phi - psi|| = {residual:.2e}");

    for t in [0.0, 0.25, 0.5, 0.75, 1.0] {
        let s = interpolating_state(&rd, t);
        println!("t = {t:4.2}  overlap with psi {:.6}", s.inner(&psi)?.norm_sqr());
    }
    Ok(())
}
