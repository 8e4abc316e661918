//! Over one short step of length 1/N the steering generator cancels the
//! Hamiltonian to first order, so the deficit falls like 1/N^2.
//!
//! cargo run --example short_time_scaling

use zeno::linalg::{haar_state_from, random_hermitian_normalized, seeded_rng};
use zeno::zeno::short_time_sweep;

fn main() -> zeno::Result<()> {
    let mut rng = seeded_rng(3);
    let h = random_hermitian_normalized(3, &mut rng)?;
    let k = random_hermitian_normalized(3, &mut rng)?;
    let phi = haar_state_from(3, &mut rng)?;
    let n_list: Vec<usize> = (2..=12).map(|k| 1 << k).collect();

    let sweep = short_time_sweep(&h, &k, &phi, &n_list)?;
    for p in &sweep.points {
        println!("N = {:>5}  deficit {:.4e}  bound {:.4e}", p.n, p.deficit, p.bound);
    }
    println!("slope {:.3}", sweep.slope.unwrap_or(f64::NAN));
    Ok(())
}
