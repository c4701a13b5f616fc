//! Building X-states and reading off spectra and entropies.
//!
//! cargo run --example xstate_basics

use qdot_eur::XState;

fn main() -> qdot_eur::Result<()> {
    let states = [
        ("Bell |Phi+>", XState::bell_phi_plus()),
        ("singlet", XState::singlet()),
        ("Werner p=0.5", XState::werner(0.5)?),
        ("I/4", XState::maximally_mixed()),
        ("custom", XState::new(0.4, 0.1, 0.2, 0.3, 0.25, -0.1)?),
    ];
    for (name, s) in states {
        let (sa, sb) = s.marginal_entropies();
        println!(
            "{name:>14}: eigenvalues {:?}  S(AB) = {:.6}  S(A) = {sa:.6}  S(B) = {sb:.6}",
            s.eigenvalues().values(),
            s.von_neumann_entropy()
        );
    }

    // out-of-range coherences are rejected, not clamped
    match XState::new(0.5, 0.0, 0.0, 0.5, 0.6, 0.0) {
        Err(e) => println!("rejected: {e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}
