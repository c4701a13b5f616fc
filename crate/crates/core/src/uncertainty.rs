//! Memory-assisted entropic uncertainty for `Q = sigma_x`, `R = sigma_z`
//! measured on subsystem A, with B as the quantum memory.
//!
//! The left-hand side `S(Q|B) + S(R|B)` is computed from explicitly dephased
//! dense states. The Berta bound is `log2(1/c) + S(A|B)`; the Adabi bound adds
//! `max{0, delta}` with `delta = I(A;B) - I(Q;B) - I(R;B)`. Here `c = 1/2`.

#![allow(clippy::needless_range_loop)]

use num_complex::Complex64;

use crate::correlations::mutual_information;
use crate::error::{Error, Result};
use crate::oracle::{dense_entropy, qubit_entropy, Dense4};
use crate::xstate::XState;

/// `log2(1/c)` for the `sigma_x` / `sigma_z` pair.
pub const COMPLEMENTARITY_TERM: f64 = 1.0;

const ORTHONORMALITY_TOLERANCE: f64 = 1e-12;

/// Observable measured on subsystem A.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Observable {
    SigmaX,
    SigmaZ,
}

impl Observable {
    /// Eigenvectors (real for both observables).
    fn eigenbasis(self) -> [[f64; 2]; 2] {
        let r = std::f64::consts::FRAC_1_SQRT_2;
        match self {
            Observable::SigmaX => [[r, r], [r, -r]],
            Observable::SigmaZ => [[1.0, 0.0], [0.0, 1.0]],
        }
    }
}

/// A qubit basis given by two kets.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QubitBasis(pub [[Complex64; 2]; 2]);

impl QubitBasis {
    pub fn sigma_x() -> Self {
        let r = Complex64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0);
        QubitBasis([[r, r], [r, -r]])
    }

    pub fn sigma_z() -> Self {
        let one = Complex64::new(1.0, 0.0);
        let zero = Complex64::new(0.0, 0.0);
        QubitBasis([[one, zero], [zero, one]])
    }

    /// Eigenbasis of `cos(theta) sigma_z + sin(theta) cos(phi) sigma_x + sin(theta) sin(phi) sigma_y`.
    pub fn bloch(theta: f64, phi: f64) -> Self {
        let c = Complex64::new((theta / 2.0).cos(), 0.0);
        let s = Complex64::new((theta / 2.0).sin(), 0.0);
        let e = Complex64::from_polar(1.0, phi);
        QubitBasis([[c, e * s], [-s, e * c]])
    }
}

fn inner(a: &[Complex64; 2], b: &[Complex64; 2]) -> Complex64 {
    a[0].conj() * b[0] + a[1].conj() * b[1]
}

/// `c = max_ij |<q_i|r_j>|^2`.
pub fn complementarity(q: &QubitBasis, r: &QubitBasis) -> Result<f64> {
    for basis in [q, r] {
        let [a, b] = &basis.0;
        let deviation = (inner(a, a).re - 1.0)
            .abs()
            .max((inner(b, b).re - 1.0).abs())
            .max(inner(a, b).norm());
        if deviation > ORTHONORMALITY_TOLERANCE {
            return Err(Error::BasisNotOrthonormal { deviation });
        }
    }
    let mut c: f64 = 0.0;
    for qi in &q.0 {
        for rj in &r.0 {
            c = c.max(inner(qi, rj).norm_sqr());
        }
    }
    Ok(c)
}

/// Joint state after measuring an observable on A, and its decomposition.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MeasuredState {
    /// `sum_i (P_i x I) rho (P_i x I)`.
    pub joint: Dense4,
    /// Outcome probabilities.
    pub probabilities: [f64; 2],
    /// Normalized memory states `rho_x^B`; the identity/2 placeholder is used
    /// for an outcome of zero probability.
    pub conditional: [[[f64; 2]; 2]; 2],
}

pub fn post_measurement(state: &XState, observable: Observable) -> MeasuredState {
    let rho = state.to_dense();
    let basis = observable.eigenbasis();
    let mut joint = [[0.0; 4]; 4];
    let mut probabilities = [0.0; 2];
    let mut conditional = [[[0.5, 0.0], [0.0, 0.5]]; 2];

    for (outcome, ket) in basis.iter().enumerate() {
        // (P x I) with P = |k><k|
        let mut proj = [[0.0; 4]; 4];
        for a in 0..2 {
            for ap in 0..2 {
                for b in 0..2 {
                    proj[2 * a + b][2 * ap + b] = ket[a] * ket[ap];
                }
            }
        }
        let pr = Dense4::general(proj);
        let branch = pr.mul(&rho).mul(&pr);
        let p = branch.trace();
        for i in 0..4 {
            for j in 0..4 {
                joint[i][j] += branch.get(i, j);
            }
        }
        probabilities[outcome] = p;
        if p > 0.0 {
            let reduced = branch.trace_out_first();
            conditional[outcome] = reduced.map(|row| row.map(|x| x / p));
        }
    }
    for i in 0..4 {
        for j in (i + 1)..4 {
            let avg = 0.5 * (joint[i][j] + joint[j][i]);
            joint[i][j] = avg;
            joint[j][i] = avg;
        }
    }

    MeasuredState {
        joint: Dense4::symmetric(joint).expect("symmetrized"),
        probabilities,
        conditional,
    }
}

/// `S(A|B) = S(rho_AB) - S(rho_B)`.
pub fn conditional_entropy(state: &XState) -> f64 {
    let (_, s_b) = state.marginal_entropies();
    state.von_neumann_entropy() - s_b
}

/// Closed-form `I(Z;B) = H(rho11 + rho22) + H(rho11 + rho33) - S(diag rho)`.
pub fn holevo_z(state: &XState) -> f64 {
    let (s_a, s_b) = state.marginal_entropies();
    (s_a + s_b - state.diagonal_entropy()).max(0.0)
}

/// Closed-form `I(X;B) = 1 + H(rho11 + rho33) + sum_i xi_i log2 xi_i` with
/// `xi = (1 -+ k)/4` (each twice) and
/// `k = sqrt(4 (rho14 + rho23)^2 + (1 - 2(rho22 + rho44))^2)`.
pub fn holevo_x(state: &XState) -> f64 {
    let (_, s_b) = state.marginal_entropies();
    let k = (1.0 - 2.0 * (state.rho22() + state.rho44()))
        .hypot(2.0 * (state.rho14() + state.rho23()))
        .min(1.0);
    let xi_log_xi = |x: f64| if x > 0.0 { x * x.log2() } else { 0.0 };
    let sum = 2.0 * xi_log_xi((1.0 - k) / 4.0) + 2.0 * xi_log_xi((1.0 + k) / 4.0);
    (1.0 + s_b + sum).max(0.0)
}

/// Generic Holevo quantity `S(rho_B) - sum_x p_x S(rho_x^B)` from a dephased state.
pub fn holevo_from_measurement(state: &XState, observable: Observable) -> f64 {
    let measured = post_measurement(state, observable);
    let s_b = qubit_entropy(&state.to_dense().trace_out_first());
    let avg: f64 = measured
        .probabilities
        .iter()
        .zip(&measured.conditional)
        .map(|(p, m)| p * qubit_entropy(m))
        .sum();
    s_b - avg
}

/// `1 + S(A|B)`.
pub fn berta_bound(state: &XState) -> f64 {
    COMPLEMENTARITY_TERM + conditional_entropy(state)
}

/// `I(A;B) - I(X;B) - I(Z;B)`; may be negative.
pub fn delta(state: &XState) -> f64 {
    mutual_information(state) - holevo_x(state) - holevo_z(state)
}

/// `1 + S(A|B) + max{0, delta}`.
pub fn adabi_bound(state: &XState) -> f64 {
    berta_bound(state) + delta(state).max(0.0)
}

/// `S(X|B) + S(Z|B)` from the dense post-measurement states.
pub fn uncertainty_lhs(state: &XState) -> Result<f64> {
    let s_b = qubit_entropy(&state.to_dense().trace_out_first());
    let s_xb = dense_entropy(&post_measurement(state, Observable::SigmaX).joint)?;
    let s_zb = dense_entropy(&post_measurement(state, Observable::SigmaZ).joint)?;
    Ok(s_xb - s_b + s_zb - s_b)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UncertaintyReport {
    pub lhs: f64,
    pub berta_bound: f64,
    pub adabi_bound: f64,
    pub delta: f64,
    pub holevo_x: f64,
    pub holevo_z: f64,
    pub conditional_entropy: f64,
    pub complementarity_term: f64,
}

pub fn uncertainty_report(state: &XState) -> Result<UncertaintyReport> {
    let conditional_entropy = conditional_entropy(state);
    let holevo_x = holevo_x(state);
    let holevo_z = holevo_z(state);
    let delta = mutual_information(state) - holevo_x - holevo_z;
    let berta_bound = COMPLEMENTARITY_TERM + conditional_entropy;
    Ok(UncertaintyReport {
        lhs: uncertainty_lhs(state)?,
        berta_bound,
        adabi_bound: berta_bound + delta.max(0.0),
        delta,
        holevo_x,
        holevo_z,
        conditional_entropy,
        complementarity_term: COMPLEMENTARITY_TERM,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use std::f64::consts::PI;

    #[test]
    fn complementarity_examples() {
        let c = complementarity(&QubitBasis::sigma_x(), &QubitBasis::sigma_z()).unwrap();
        assert_abs_diff_eq!(c, 0.5, epsilon = 1e-15);
        let c = complementarity(&QubitBasis::sigma_z(), &QubitBasis::sigma_z()).unwrap();
        assert_eq!(c, 1.0);
        let c = complementarity(&QubitBasis::bloch(PI / 3.0, 0.4), &QubitBasis::sigma_z()).unwrap();
        assert_abs_diff_eq!(c, 0.75, epsilon = 1e-12);
    }

    #[test]
    fn complementarity_rejects_bad_basis() {
        let one = Complex64::new(1.0, 0.0);
        let zero = Complex64::new(0.0, 0.0);
        let bad = QubitBasis([[one, zero], [one, zero]]);
        assert!(matches!(
            complementarity(&bad, &QubitBasis::sigma_z()),
            Err(Error::BasisNotOrthonormal { .. })
        ));
    }

    #[test]
    fn post_measurement_z_on_singlet() {
        let m = post_measurement(&XState::singlet(), Observable::SigmaZ);
        let mut expected = [[0.0; 4]; 4];
        expected[1][1] = 0.5;
        expected[2][2] = 0.5;
        assert_eq!(m.joint.rows(), &expected);
        assert_eq!(m.probabilities, [0.5, 0.5]);
        assert_eq!(m.conditional[0], [[0.0, 0.0], [0.0, 1.0]]);
        assert_eq!(m.conditional[1], [[1.0, 0.0], [0.0, 0.0]]);
    }

    #[test]
    fn post_measurement_x_on_mixed() {
        let m = post_measurement(&XState::maximally_mixed(), Observable::SigmaX);
        for i in 0..4 {
            for j in 0..4 {
                let e = if i == j { 0.25 } else { 0.0 };
                assert_abs_diff_eq!(m.joint.get(i, j), e, epsilon = 1e-15);
            }
        }
    }

    #[test]
    fn conditional_entropy_examples() {
        assert_abs_diff_eq!(conditional_entropy(&XState::singlet()), -1.0);
        assert_abs_diff_eq!(conditional_entropy(&XState::maximally_mixed()), 1.0, epsilon = 1e-15);
        assert_eq!(conditional_entropy(&XState::up_up()), 0.0);
    }

    #[test]
    fn holevo_examples() {
        let mm = XState::maximally_mixed();
        assert_abs_diff_eq!(holevo_x(&mm), 0.0, epsilon = 1e-15);
        assert_abs_diff_eq!(holevo_z(&mm), 0.0, epsilon = 1e-15);
        assert_abs_diff_eq!(holevo_x(&XState::singlet()), 1.0, epsilon = 1e-15);
        assert_abs_diff_eq!(holevo_z(&XState::singlet()), 1.0, epsilon = 1e-15);
        assert_eq!(holevo_x(&XState::up_up()), 0.0);
        assert_eq!(holevo_z(&XState::up_up()), 0.0);
        for s in [mm, XState::singlet(), XState::up_up()] {
            assert_abs_diff_eq!(holevo_x(&s), holevo_from_measurement(&s, Observable::SigmaX), epsilon = 1e-12);
            assert_abs_diff_eq!(holevo_z(&s), holevo_from_measurement(&s, Observable::SigmaZ), epsilon = 1e-12);
        }
    }

    #[test]
    fn bound_examples() {
        assert_abs_diff_eq!(berta_bound(&XState::singlet()), 0.0);
        assert_abs_diff_eq!(berta_bound(&XState::maximally_mixed()), 2.0, epsilon = 1e-15);
        assert_eq!(berta_bound(&XState::up_up()), 1.0);

        assert_abs_diff_eq!(delta(&XState::singlet()), 0.0, epsilon = 1e-15);
        assert_abs_diff_eq!(adabi_bound(&XState::singlet()), 0.0, epsilon = 1e-15);
        assert_abs_diff_eq!(delta(&XState::maximally_mixed()), 0.0, epsilon = 1e-15);
        assert_abs_diff_eq!(adabi_bound(&XState::maximally_mixed()), 2.0, epsilon = 1e-15);
    }

    #[test]
    fn lhs_examples() {
        assert_abs_diff_eq!(uncertainty_lhs(&XState::singlet()).unwrap(), 0.0, epsilon = 1e-12);
        assert_abs_diff_eq!(uncertainty_lhs(&XState::maximally_mixed()).unwrap(), 2.0, epsilon = 1e-12);
        assert_abs_diff_eq!(uncertainty_lhs(&XState::up_up()).unwrap(), 1.0, epsilon = 1e-12);
    }
}
