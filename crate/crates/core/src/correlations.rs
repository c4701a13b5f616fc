//! Concurrence, quantum discord and mutual information of X-states.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::oracle::{dense_entropy, product_eigenvalues, BlochForm, Dense4};
use crate::xstate::{h2, XState};

/// Closed-form discord values in `[-DISCORD_CLAMP, 0)` are reported as zero.
pub const DISCORD_CLAMP: f64 = 1e-9;

/// Smallest angular grid accepted by [`discord_numeric_oracle`].
pub const MIN_GRID_RESOLUTION: usize = 90;

const REFINEMENT_ITERATIONS: usize = 20;

/// Which measurement branch of the two-branch discord formula won the minimum.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DiscordBranch {
    /// `Q1`: measurement in the transverse plane, entropy term `H(alpha)`.
    Transverse,
    /// `Q2`: measurement along `sigma_z`.
    Longitudinal,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Discord {
    pub value: f64,
    pub branch: DiscordBranch,
    pub transverse: f64,
    pub longitudinal: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CorrelationReport {
    pub concurrence: f64,
    pub discord: f64,
    pub mutual_information: f64,
    pub discord_branch: DiscordBranch,
}

/// `C = 2 max{0, |rho23| - sqrt(rho11 rho44), |rho14| - sqrt(rho22 rho33)}`.
pub fn concurrence(state: &XState) -> f64 {
    let c1 = state.rho23().abs() - (state.rho11() * state.rho44()).sqrt();
    let c2 = state.rho14().abs() - (state.rho22() * state.rho33()).sqrt();
    (2.0 * c1.max(c2).max(0.0)).min(1.0)
}

/// Wootters concurrence of an arbitrary real density matrix,
/// `max{0, l1 - l2 - l3 - l4}` with `l_i^2` the eigenvalues of `rho * rho_tilde`.
pub fn wootters_concurrence_oracle(rho: &Dense4) -> Result<f64> {
    let lambda = product_eigenvalues(rho)?.map(f64::sqrt);
    Ok((lambda[0] - lambda[1] - lambda[2] - lambda[3]).max(0.0))
}

/// Two-branch closed form for the discord of an X-state, measuring subsystem B.
///
/// `Q_j = H(rho11 + rho33) - S(rho) + D_j` with
/// `D1 = H((1 + tau)/2)`, `tau = sqrt([1 - 2(rho33 + rho44)]^2 + 4(|rho14| + |rho23|)^2)`
/// and `D2 = S(diag rho) - H(rho11 + rho33)`.
pub fn quantum_discord(state: &XState) -> Discord {
    let s_b = h2(state.rho11() + state.rho33());
    let s_ab = state.von_neumann_entropy();

    let polarization = 1.0 - 2.0 * (state.rho33() + state.rho44());
    let coherence = state.rho14().abs() + state.rho23().abs();
    let tau = polarization.hypot(2.0 * coherence).min(1.0);
    let d1 = h2(0.5 * (1.0 + tau));
    let d2 = state.diagonal_entropy() - s_b;

    let transverse = s_b - s_ab + d1;
    let longitudinal = s_b - s_ab + d2;
    let (raw, branch) = if transverse <= longitudinal {
        (transverse, DiscordBranch::Transverse)
    } else {
        (longitudinal, DiscordBranch::Longitudinal)
    };
    Discord {
        value: clamp_discord(raw),
        branch,
        transverse,
        longitudinal,
    }
}

fn clamp_discord(x: f64) -> f64 {
    if (-DISCORD_CLAMP..0.0).contains(&x) {
        0.0
    } else {
        x
    }
}

/// Discord by explicit minimization over projective measurements on subsystem B.
///
/// Grid search over `theta in [0, pi]` (inclusive, `grid_resolution` points) and
/// `phi in [0, pi)` followed by coordinate descent with halving steps. Ties keep
/// the lexicographically lowest `(theta, phi)`, so the result is deterministic.
/// The minimum found is an upper bound on the true discord.
pub fn discord_numeric_oracle(state: &XState, grid_resolution: usize) -> Result<f64> {
    if grid_resolution < MIN_GRID_RESOLUTION {
        return Err(Error::InvalidParams {
            name: "grid_resolution",
            value: grid_resolution as f64,
        });
    }
    let dense = state.to_dense();
    let bloch = BlochForm::from_dense(&dense)?;
    let s_ab = dense_entropy(&dense)?;
    let s_b = bloch.second_entropy();
    let f = |theta: f64, phi: f64| bloch.conditional_entropy_after_measuring_second(theta, phi);

    let d_theta = PI / (grid_resolution - 1) as f64;
    let d_phi = PI / grid_resolution as f64;
    let (mut best_theta, mut best_phi) = (0.0, 0.0);
    let mut best = f(0.0, 0.0);
    for i in 0..grid_resolution {
        let theta = i as f64 * d_theta;
        for j in 0..grid_resolution {
            let phi = j as f64 * d_phi;
            let v = f(theta, phi);
            if v < best {
                best = v;
                best_theta = theta;
                best_phi = phi;
            }
        }
    }

    let (mut step_theta, mut step_phi) = (d_theta, d_phi);
    for _ in 0..REFINEMENT_ITERATIONS {
        for candidate in [best_theta - step_theta, best_theta + step_theta] {
            let candidate = candidate.clamp(0.0, PI);
            let v = f(candidate, best_phi);
            if v < best {
                best = v;
                best_theta = candidate;
            }
        }
        for candidate in [best_phi - step_phi, best_phi + step_phi] {
            let v = f(best_theta, candidate);
            if v < best {
                best = v;
                best_phi = candidate;
            }
        }
        step_theta *= 0.5;
        step_phi *= 0.5;
    }

    Ok(clamp_discord(s_b - s_ab + best))
}

/// `I(A;B) = S_A + S_B - S(rho)`.
pub fn mutual_information(state: &XState) -> f64 {
    let (s_a, s_b) = state.marginal_entropies();
    (s_a + s_b - state.von_neumann_entropy()).max(0.0)
}

pub fn correlation_report(state: &XState) -> CorrelationReport {
    let discord = quantum_discord(state);
    CorrelationReport {
        concurrence: concurrence(state),
        discord: discord.value,
        mutual_information: mutual_information(state),
        discord_branch: discord.branch,
    }
}
