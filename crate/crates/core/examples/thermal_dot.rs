//! The thermal two-electron dot: spectrum, ground regime, Gibbs elements and
//! the resulting correlations at a few temperatures.
//!
//! cargo run --example thermal_dot

use qdot_eur::dot_model::{
    dot_concurrence, dot_discord, eigensystem, ground_regime, thermal_elements, thermal_state, DotParams,
};
use qdot_eur::uncertainty::uncertainty_report;

fn main() -> qdot_eur::Result<()> {
    for k0 in [10.0, 4.0, 3.0] {
        let p = DotParams::new(k0, 1.0, 1.0, 0.0)?;
        let levels = eigensystem(&p).levels.map(|l| (l.state, l.energy));
        println!("k0 = {k0}: {levels:?}");
        println!("  ground regime {:?}", ground_regime(&p));
    }

    let e = thermal_elements(&DotParams::new(10.0, 1.0, 1.0, 1.0)?)?.absolute();
    println!("\nT=1, k0=10: u={:.9} v={:.9} w={:.9} y={:.9} Z={:.9}", e.u, e.v, e.w, e.y, e.z);

    println!("\n{:>6} {:>10} {:>10} {:>10}", "T", "C", "QD", "adabi");
    for t in [0.0, 0.25, 0.5, 1.0, 2.0, 5.0] {
        let p = DotParams::new(10.0, 1.0, 1.0, t)?;
        let r = uncertainty_report(&thermal_state(&p)?)?;
        println!("{t:>6} {:>10.6} {:>10.6} {:>10.6}", dot_concurrence(&p), dot_discord(&p), r.adabi_bound);
    }
    Ok(())
}
