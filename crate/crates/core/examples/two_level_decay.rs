//! A two-level system tunnelling between a source and a target state.
//! Repeated measurement in the fixed basis freezes it in the source, while a
//! rotating measurement basis drags it to the target.
//!
//! cargo run --example two_level_decay -- 1.5707963

use zeno::physics::{survival_closed_form, zeno_contrast, TwoLevelDecayModel};

fn main() -> zeno::Result<()> {
    let lambda: f64 = std::env::args().nth(1).map_or(std::f64::consts::FRAC_PI_2, |s| s.parse().expect("lambda"));
    let model = TwoLevelDecayModel::in_source(lambda)?;
    println!("lambda T = {lambda:.6}  ({} -> {})", model.source_label, model.target_label);
    println!("{:>5} {:>12} {:>12} {:>12}", "N", "survival", "cos^2N", "steered");
    for n in [1, 2, 4, 16, 64, 256] {
        let c = zeno_contrast(&model, 1.0, n)?;
        println!("{n:>5} {:>12.8} {:>12.8} {:>12.8}", c.fixed_basis_survival, survival_closed_form(lambda, n), c.steered_fidelity);
    }
    Ok(())
}
