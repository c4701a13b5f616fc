//! Thermal dot state against brute-force Gibbs assembly and the generic
//! correlation / uncertainty routines.

use approx::assert_abs_diff_eq;

use qdot_eur::correlations::{concurrence, quantum_discord};
use qdot_eur::dot_model::{
    dot_concurrence, dot_discord, eigensystem, thermal_elements, thermal_state, DotParams,
};
use qdot_eur::oracle::{dense_entropy, gibbs_dense, qubit_entropy};
use qdot_eur::xstate::binary_entropy;
use qdot_eur::XState;

fn linspace(a: f64, b: f64, n: usize) -> Vec<f64> {
    (0..n).map(|i| a + (b - a) * i as f64 / (n - 1) as f64).collect()
}

fn params(k0: f64, b0: f64, t: f64) -> DotParams {
    DotParams::new(k0, 1.0, b0, t).unwrap()
}

/// T in {0} U [0.01, 100], k0 in [0, 20], gamma B0 in [0, 5].
fn model_grid() -> Vec<DotParams> {
    let mut temps = vec![0.0];
    temps.extend(linspace(0.01, 100.0, 25));
    let mut out = Vec::new();
    for &t in &temps {
        for k0 in linspace(0.0, 20.0, 21) {
            for b0 in linspace(0.0, 5.0, 21) {
                out.push(params(k0, b0, t));
            }
        }
    }
    out
}

fn assert_dense_close(s: &XState, m: &qdot_eur::oracle::Dense4, eps: f64) {
    let d = s.to_dense();
    for i in 0..4 {
        for j in 0..4 {
            assert_abs_diff_eq!(d.get(i, j), m.get(i, j), epsilon = eps);
        }
    }
}

#[test]
fn thermal_states_are_valid_over_the_model_grid() {
    for p in model_grid() {
        let s = thermal_state(&p).unwrap();
        let [a, b, c, d] = s.diagonal();
        assert!([a, b, c, d].iter().all(|x| *x >= 0.0));
        assert_abs_diff_eq!(a + b + c + d, 1.0, epsilon = 1e-12);
        assert!(s.rho23().abs() <= b + 1e-15);
        assert_eq!(s.rho14(), 0.0);
        // re-validation leaves the state untouched up to renormalization rounding
        let again = XState::new(a, b, c, d, s.rho14(), s.rho23()).unwrap();
        for (x, y) in again.diagonal().iter().zip(s.diagonal()) {
            assert_abs_diff_eq!(*x, y, epsilon = 1e-15);
        }
        assert_abs_diff_eq!(again.rho23(), s.rho23(), epsilon = 1e-15);
    }
}

#[test]
fn thermal_states_validate_on_fine_grid() {
    for t in linspace(0.01, 20.0, 50) {
        for k0 in linspace(0.0, 20.0, 50) {
            for b0 in linspace(0.0, 5.0, 50) {
                assert!(thermal_state(&params(k0, b0, t)).is_ok());
            }
        }
    }
}

#[test]
fn spins_are_exchange_symmetric() {
    for p in model_grid() {
        let s = thermal_state(&p).unwrap();
        assert_eq!(s.rho22(), s.rho33());
        assert_eq!(s.swapped(), s);
    }
}

#[test]
fn gibbs_state_matches_dense_assembly() {
    for p in model_grid().into_iter().filter(|p| p.temperature() >= 0.05) {
        let dense = gibbs_dense(&eigensystem(&p).energy_kets(), p.temperature()).unwrap();
        assert_dense_close(&thermal_state(&p).unwrap(), &dense, 1e-12);
    }
}

#[test]
fn ground_shift_does_not_change_the_state() {
    for t in linspace(0.5, 50.0, 12) {
        for k0 in linspace(0.0, 20.0, 9) {
            for b0 in linspace(0.0, 5.0, 9) {
                let e = thermal_elements(&params(k0, b0, t)).unwrap();
                let a = e.absolute();
                for (x, y) in [(e.u, a.u), (e.w, a.w), (e.y, a.y), (e.v, a.v)] {
                    assert_abs_diff_eq!(x / e.z, y / a.z, epsilon = 1e-14);
                }
            }
        }
    }
}

#[test]
fn zero_temperature_is_the_limit_of_small_temperature() {
    let mut checked = 0;
    for k0 in linspace(0.0, 20.0, 41) {
        for b0 in linspace(0.0, 5.0, 41) {
            let levels = eigensystem(&params(k0, b0, 1.0)).levels;
            let mut energies = levels.map(|l| l.energy);
            energies.sort_by(f64::total_cmp);
            if energies[1] - energies[0] < 0.01 {
                continue;
            }
            let cold = thermal_state(&params(k0, b0, 1e-6)).unwrap().to_dense();
            let zero = thermal_state(&params(k0, b0, 0.0)).unwrap();
            assert_dense_close(&zero, &cold, 1e-6);
            checked += 1;
        }
    }
    assert!(checked > 1000);
}

#[test]
fn dot_closed_forms_match_generic_routines() {
    for p in model_grid() {
        let s = thermal_state(&p).unwrap();
        assert_abs_diff_eq!(dot_concurrence(&p), concurrence(&s), epsilon = 1e-12);
        assert_abs_diff_eq!(dot_discord(&p), quantum_discord(&s).value, epsilon = 1e-12);
    }
}

#[test]
fn entropies_match_dense_engine() {
    for p in model_grid() {
        let s = thermal_state(&p).unwrap();
        let m = s.to_dense();
        assert_abs_diff_eq!(s.von_neumann_entropy(), dense_entropy(&m).unwrap(), epsilon = 1e-10);

        // both marginals equal H(rho11 + rho22)
        let h = binary_entropy(s.rho11() + s.rho22()).unwrap();
        assert_abs_diff_eq!(qubit_entropy(&m.trace_out_first()), h, epsilon = 1e-12);
        assert_abs_diff_eq!(qubit_entropy(&m.trace_out_second()), h, epsilon = 1e-12);
    }
}

#[test]
fn golden_elements() {
    let p = params(10.0, 1.0, 1.0);
    let e = thermal_elements(&p).unwrap().absolute();
    assert_abs_diff_eq!(e.u, 1.454991415, epsilon = 1e-8);
    assert_abs_diff_eq!(e.v, 0.196911675, epsilon = 1e-8);
    assert_abs_diff_eq!(e.w, 3.528040274, epsilon = 1e-8);
    assert_abs_diff_eq!(e.y, -2.992778846, epsilon = 1e-8);
    assert_abs_diff_eq!(e.z, 8.707983639, epsilon = 1e-8);
    assert_abs_diff_eq!(dot_concurrence(&p), 0.564428579, epsilon = 1e-8);
}

#[test]
fn field_reversal_swaps_u_and_v() {
    for b0 in linspace(0.0, 5.0, 11) {
        let up = thermal_elements(&params(10.0, b0, 1.0)).unwrap().absolute();
        let down = thermal_elements(&params(10.0, -b0, 1.0)).unwrap().absolute();
        assert_abs_diff_eq!(up.u, down.v, epsilon = 1e-12);
        assert_abs_diff_eq!(up.v, down.u, epsilon = 1e-12);
    }
    let e = thermal_elements(&params(7.0, 0.0, 0.3)).unwrap();
    assert_eq!(e.u, e.v);
}
