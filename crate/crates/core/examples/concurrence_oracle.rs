//! Closed-form concurrence against the dense Wootters construction.
//!
//! cargo run --example concurrence_oracle

use rand::rngs::StdRng;
use rand::SeedableRng;

use qdot_eur::correlations::{concurrence, wootters_concurrence_oracle};
use qdot_eur::XState;

fn main() -> qdot_eur::Result<()> {
    for p in [0.0, 1.0 / 3.0, 0.5, 0.8, 1.0] {
        let s = XState::werner(p)?;
        println!(
            "Werner p = {p:.3}: closed {:.12}  oracle {:.12}  (expected {:.12})",
            concurrence(&s),
            wootters_concurrence_oracle(&s.to_dense())?,
            ((3.0 * p - 1.0) / 2.0).max(0.0)
        );
    }

    let mut rng = StdRng::seed_from_u64(7);
    let mut worst: f64 = 0.0;
    for _ in 0..10_000 {
        let s = XState::random(&mut rng);
        worst = worst.max((concurrence(&s) - wootters_concurrence_oracle(&s.to_dense())?).abs());
    }
    println!("10000 random X-states: worst |closed - oracle| = {worst:.2e}");
    Ok(())
}
