//! Crossed polarizers block light; adding intermediate polarizers lets it
//! through, and with N evenly spaced ones transmission approaches 1.
//!
//! cargo run --example polarizer_chain

use std::f64::consts::{FRAC_PI_2, FRAC_PI_4};

use zeno::physics::{chain_as_zeno, chain_transmission, PolarizerChain};

fn main() -> zeno::Result<()> {
    let crossed = PolarizerChain::new(vec![FRAC_PI_2], 0.0)?;
    let inserted = PolarizerChain::new(vec![FRAC_PI_4, FRAC_PI_2], 0.0)?;
    println!("crossed:          {:.6}", chain_transmission(&crossed)?);
    println!("one at 45 deg:    {:.6}", chain_transmission(&inserted)?);

    for n in [1, 2, 3, 5, 10, 100, 1000] {
        let ideal = chain_transmission(&chain_as_zeno(n)?)?;
        let lossy = chain_transmission(&chain_as_zeno(n)?.with_efficiency(0.99)?)?;
        println!("N = {n:>4}  ideal {ideal:.6}  99% efficient {lossy:.6}");
    }
    Ok(())
}
