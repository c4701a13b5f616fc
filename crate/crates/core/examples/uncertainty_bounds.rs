//! Entropic uncertainty with quantum memory: S(X|B) + S(Z|B) and its bounds.
//!
//! cargo run --example uncertainty_bounds

use qdot_eur::uncertainty::{complementarity, uncertainty_report, QubitBasis};
use qdot_eur::XState;

fn main() -> qdot_eur::Result<()> {
    let c = complementarity(&QubitBasis::sigma_x(), &QubitBasis::sigma_z())?;
    println!("complementarity c(sigma_x, sigma_z) = {c}");

    let states = [
        ("Bell |Phi+>", XState::bell_phi_plus()),
        ("Werner p=0.5", XState::werner(0.5)?),
        ("I/4", XState::maximally_mixed()),
        ("|00>", XState::up_up()),
        ("asymmetric", XState::new(0.6, 0.05, 0.15, 0.2, 0.3, 0.05)?),
    ];
    println!("{:>14} {:>10} {:>10} {:>10} {:>10} {:>10}", "state", "lhs", "adabi", "berta", "delta", "S(A|B)");
    for (name, s) in states {
        let r = uncertainty_report(&s)?;
        println!(
            "{name:>14} {:>10.6} {:>10.6} {:>10.6} {:>10.6} {:>10.6}",
            r.lhs, r.adabi_bound, r.berta_bound, r.delta, r.conditional_entropy
        );
    }
    Ok(())
}
