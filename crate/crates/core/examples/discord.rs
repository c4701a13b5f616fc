//! Two-branch closed-form discord against direct minimization over
//! projective measurements on B.
//!
//! cargo run --release --example discord

use qdot_eur::correlations::{discord_numeric_oracle, mutual_information, quantum_discord};
use qdot_eur::XState;

fn main() -> qdot_eur::Result<()> {
    let states = [
        ("Bell |Phi+>", XState::bell_phi_plus()),
        ("Werner p=0.5", XState::werner(0.5)?),
        ("classical", XState::new(0.5, 0.0, 0.0, 0.5, 0.0, 0.0)?),
        ("mixed", XState::new(0.3, 0.2, 0.2, 0.3, 0.1, 0.15)?),
        ("asymmetric", XState::new(0.6, 0.05, 0.15, 0.2, 0.3, 0.05)?),
    ];
    println!("{:>14} {:>12} {:>12} {:>13} {:>8}", "state", "I(A:B)", "closed", "grid oracle", "branch");
    for (name, s) in states {
        let d = quantum_discord(&s);
        let numeric = discord_numeric_oracle(&s, 181)?;
        println!(
            "{name:>14} {:>12.8} {:>12.8} {:>13.8} {:>8?}",
            mutual_information(&s),
            d.value,
            numeric,
            d.branch
        );
    }
    Ok(())
}
