//! Quantum correlations and memory-assisted entropic uncertainty for
//! two-qubit X-states, specialized to the thermal state of an isolated
//! two-electron quantum dot.
//!
//! - [`xstate`]: validated X-state type, spectrum and entropies.
//! - [`correlations`]: concurrence, two-branch discord, mutual information,
//!   plus a Wootters oracle and a measurement-minimizing discord oracle.
//! - [`uncertainty`]: `S(X|B) + S(Z|B)` and the Berta / Adabi lower bounds.
//! - [`dot_model`]: reduced dot Hamiltonian, eigensystem and Gibbs state.
//! - [`oracle`]: dense 4x4 brute-force engines used for cross-checks.
//! - [`sweep`]: point evaluation, parameter sweeps, CSV and gnuplot output.
//!
//! ```
//! use qdot_eur::dot_model::{thermal_state, DotParams};
//! use qdot_eur::{correlations, uncertainty};
//!
//! let params = DotParams::new(10.0, 1.0, 1.0, 1.0).unwrap();
//! let state = thermal_state(&params).unwrap();
//! let c = correlations::concurrence(&state);
//! assert!((c - 0.564428579418).abs() < 1e-10);
//! assert!(uncertainty::berta_bound(&state) <= uncertainty::adabi_bound(&state));
//! ```

pub mod correlations;
pub mod dot_model;
pub mod error;
pub mod oracle;
pub mod sweep;
pub mod uncertainty;
pub mod xstate;

pub use error::{Error, Result};
pub use xstate::XState;
