//! Reduced two-spin model of an isolated two-electron quantum dot,
//! `H = (k0/4) S1.S2 - gamma B0 S^z`, and its Gibbs state.
//!
//! Natural units: `hbar = k_B = 1`. Spin up is the qubit state `|0>`, so the
//! `|up up>` population sits in `rho11` and `|down down>` in `rho44`.

use crate::correlations::DISCORD_CLAMP;
use crate::error::{Error, Result};
use crate::xstate::{h2, shannon_entropy, XState};

/// Below this temperature the Boltzmann weights are replaced by the ground-space projector.
pub const MIN_TEMPERATURE: f64 = 1e-8;

/// Energies closer than this are treated as degenerate.
pub const DEGENERACY_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DotParams {
    k0: f64,
    gamma: f64,
    b0: f64,
    temperature: f64,
}

impl DotParams {
    pub fn new(k0: f64, gamma: f64, b0: f64, temperature: f64) -> Result<Self> {
        for (name, value) in [("k0", k0), ("gamma", gamma), ("b0", b0), ("temperature", temperature)] {
            if !value.is_finite() {
                return Err(Error::InvalidParams { name, value });
            }
        }
        if temperature < 0.0 {
            return Err(Error::InvalidParams {
                name: "temperature",
                value: temperature,
            });
        }
        Ok(DotParams {
            k0,
            gamma,
            b0,
            temperature,
        })
    }

    pub fn k0(&self) -> f64 {
        self.k0
    }
    pub fn gamma(&self) -> f64 {
        self.gamma
    }
    pub fn b0(&self) -> f64 {
        self.b0
    }
    pub fn temperature(&self) -> f64 {
        self.temperature
    }

    pub fn with_k0(self, k0: f64) -> Result<Self> {
        DotParams::new(k0, self.gamma, self.b0, self.temperature)
    }
    pub fn with_b0(self, b0: f64) -> Result<Self> {
        DotParams::new(self.k0, self.gamma, b0, self.temperature)
    }
    pub fn with_temperature(self, temperature: f64) -> Result<Self> {
        DotParams::new(self.k0, self.gamma, self.b0, temperature)
    }

    /// Zeeman energy `gamma B0`.
    pub fn zeeman(&self) -> f64 {
        self.gamma * self.b0
    }
}

/// The four Hamiltonian eigenstates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EigenState {
    /// `|psi1> = |down down>`
    DownDown,
    /// `|psi2> = |up up>`
    UpUp,
    /// `|psi3> = (|up down> + |down up>)/sqrt 2`, triplet `|1,0>`
    Triplet,
    /// `|psi4> = (|up down> - |down up>)/sqrt 2`, singlet `|0,0>`
    Singlet,
}

impl EigenState {
    pub const ALL: [EigenState; 4] = [
        EigenState::DownDown,
        EigenState::UpUp,
        EigenState::Triplet,
        EigenState::Singlet,
    ];

    /// Amplitudes in the `|00>, |01>, |10>, |11>` basis.
    pub fn ket(self) -> [f64; 4] {
        let r = std::f64::consts::FRAC_1_SQRT_2;
        match self {
            EigenState::DownDown => [0.0, 0.0, 0.0, 1.0],
            EigenState::UpUp => [1.0, 0.0, 0.0, 0.0],
            EigenState::Triplet => [0.0, r, r, 0.0],
            EigenState::Singlet => [0.0, r, -r, 0.0],
        }
    }

    pub fn is_maximally_entangled(self) -> bool {
        matches!(self, EigenState::Triplet | EigenState::Singlet)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Level {
    pub energy: f64,
    pub state: EigenState,
}

/// Energies in the order `psi1..psi4`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Eigensystem {
    pub levels: [Level; 4],
}

impl Eigensystem {
    pub fn ground_energy(&self) -> f64 {
        self.levels.iter().map(|l| l.energy).fold(f64::INFINITY, f64::min)
    }

    /// States whose energy is within [`DEGENERACY_TOLERANCE`] of the minimum.
    pub fn ground_states(&self) -> Vec<EigenState> {
        let e0 = self.ground_energy();
        self.levels
            .iter()
            .filter(|l| l.energy - e0 <= DEGENERACY_TOLERANCE)
            .map(|l| l.state)
            .collect()
    }

    /// `(energy, ket)` pairs for dense assembly.
    pub fn energy_kets(&self) -> Vec<(f64, [f64; 4])> {
        self.levels.iter().map(|l| (l.energy, l.state.ket())).collect()
    }
}

/// `E1 = k0/16 + gamma B0`, `E2 = k0/16 - gamma B0`, `E3 = k0/16`, `E4 = -3 k0/16`.
pub fn eigensystem(params: &DotParams) -> Eigensystem {
    let base = params.k0 / 16.0;
    let zeeman = params.zeeman();
    Eigensystem {
        levels: [
            Level {
                energy: base + zeeman,
                state: EigenState::DownDown,
            },
            Level {
                energy: base - zeeman,
                state: EigenState::UpUp,
            },
            Level {
                energy: base,
                state: EigenState::Triplet,
            },
            Level {
                energy: -3.0 * base,
                state: EigenState::Singlet,
            },
        ],
    }
}

/// Zero-temperature ground state of the dot.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GroundRegime {
    /// Unique ground state `|psi4>`, i.e. `gamma |B0| < k0/4`.
    Singlet,
    /// Unique ground state `|psi2> = |up up>`.
    ProductUp,
    /// Unique ground state `|psi1> = |down down>`.
    ProductDown,
    /// Degenerate ground space, e.g. at the crossing `gamma B0 = k0/4`.
    DegenerateBoundary,
}

pub fn ground_regime(params: &DotParams) -> GroundRegime {
    match eigensystem(params).ground_states().as_slice() {
        [EigenState::Singlet] => GroundRegime::Singlet,
        [EigenState::UpUp] => GroundRegime::ProductUp,
        [EigenState::DownDown] => GroundRegime::ProductDown,
        _ => GroundRegime::DegenerateBoundary,
    }
}

/// Gibbs weights `u, w, y, v` and `z = u + v + 2w`.
///
/// The stored weights are measured from the ground state, i.e. each
/// `exp(-E/T)` is multiplied by `exp(E_min/T)` so nothing overflows; the
/// normalized state is unchanged. [`ThermalElements::absolute`] undoes the shift.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ThermalElements {
    pub u: f64,
    pub w: f64,
    pub y: f64,
    pub v: f64,
    pub z: f64,
    /// `E_min / T` removed from every exponent.
    pub ground_shift: f64,
}

impl ThermalElements {
    fn from_weights(weights: [f64; 4], ground_shift: f64) -> Self {
        let [down_down, up_up, triplet, singlet] = weights;
        let u = up_up;
        let v = down_down;
        let w = 0.5 * (triplet + singlet);
        let y = 0.5 * (triplet - singlet);
        ThermalElements {
            u,
            w,
            y,
            v,
            z: u + v + 2.0 * w,
            ground_shift,
        }
    }

    /// Unshifted weights `exp(-E/T)`; may overflow for small `T`.
    pub fn absolute(&self) -> ThermalElements {
        let scale = (-self.ground_shift).exp();
        ThermalElements {
            u: self.u * scale,
            w: self.w * scale,
            y: self.y * scale,
            v: self.v * scale,
            z: self.z * scale,
            ground_shift: 0.0,
        }
    }

    fn normalized(&self) -> [f64; 4] {
        [self.u / self.z, self.w / self.z, self.y / self.z, self.v / self.z]
    }

    fn to_state(self) -> Result<XState> {
        let [u, w, y, v] = self.normalized();
        XState::new(u, w, w, v, 0.0, y)
    }
}

pub fn thermal_elements(params: &DotParams) -> Result<ThermalElements> {
    let t = params.temperature;
    if t < MIN_TEMPERATURE {
        return Err(Error::TemperatureTooSmall(t));
    }
    let system = eigensystem(params);
    let e0 = system.ground_energy();
    let weights = system.levels.map(|l| (-(l.energy - e0) / t).exp());
    Ok(ThermalElements::from_weights(weights, e0 / t))
}

/// Equal mixture over the degenerate ground space, written as elements with `z = 1`.
fn ground_elements(params: &DotParams) -> ThermalElements {
    let system = eigensystem(params);
    let ground = system.ground_states();
    let p = 1.0 / ground.len() as f64;
    let weights = system
        .levels
        .map(|l| if ground.contains(&l.state) { p } else { 0.0 });
    ThermalElements::from_weights(weights, 0.0)
}

fn elements_any_temperature(params: &DotParams) -> ThermalElements {
    thermal_elements(params).unwrap_or_else(|_| ground_elements(params))
}

/// Gibbs state of the dot; temperatures below [`MIN_TEMPERATURE`] give the ground-space projector.
pub fn thermal_state(params: &DotParams) -> Result<XState> {
    elements_any_temperature(params).to_state()
}

/// `C = (2/Z) max{0, |y| - sqrt(u v)}`.
pub fn dot_concurrence(params: &DotParams) -> f64 {
    let e = elements_any_temperature(params);
    ((2.0 / e.z) * (e.y.abs() - (e.u * e.v).sqrt()).max(0.0)).min(1.0)
}

/// Discord of the dot state from its elements (all normalized by `Z`):
/// `Q_j = H(u + w) - S(rho_T) + D_j`,
/// `D1 = H((1 + sqrt((1 - 2(w + v))^2 + 4 y^2))/2)`,
/// `D2 = -u log u - 2 w log w - v log v - H(u + w)`.
pub fn dot_discord(params: &DotParams) -> f64 {
    let [u, w, y, v] = elements_any_temperature(params).normalized();
    let s_b = h2(u + w);
    let s_rho = shannon_entropy(&[u, v, w + y.abs(), (w - y.abs()).max(0.0)]);
    let tau = (1.0 - 2.0 * (w + v)).hypot(2.0 * y.abs()).min(1.0);
    let d1 = h2(0.5 * (1.0 + tau));
    let d2 = shannon_entropy(&[u, w, w, v]) - s_b;
    let q = (s_b - s_rho + d1).min(s_b - s_rho + d2);
    if (-DISCORD_CLAMP..0.0).contains(&q) {
        0.0
    } else {
        q
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn p(k0: f64, b0: f64, t: f64) -> DotParams {
        DotParams::new(k0, 1.0, b0, t).unwrap()
    }

    #[test]
    fn params_validation() {
        assert!(DotParams::new(10.0, 1.0, 1.0, -1.0).is_err());
        assert!(DotParams::new(f64::NAN, 1.0, 1.0, 1.0).is_err());
        assert!(DotParams::new(10.0, 1.0, -1.0, 0.0).is_ok());
    }

    #[test]
    fn eigensystem_examples() {
        let e = eigensystem(&p(10.0, 1.0, 1.0));
        assert_eq!(e.levels[3].energy, -1.875);
        assert_eq!(e.ground_states(), vec![EigenState::Singlet]);
        assert_eq!(e.levels[2].energy - e.levels[3].energy, 10.0 / 4.0);
        assert_eq!(e.levels[0].energy - e.levels[1].energy, 2.0);

        let e = eigensystem(&p(3.0, 1.0, 1.0));
        assert_eq!(e.levels[1].energy, -0.8125);
        assert_eq!(e.levels[3].energy, -0.5625);
        assert_eq!(e.ground_states(), vec![EigenState::UpUp]);

        let e = eigensystem(&p(0.0, 0.0, 1.0));
        assert!(e.levels.iter().all(|l| l.energy == 0.0));

        assert!(EigenState::Singlet.is_maximally_entangled());
        assert!(EigenState::Triplet.is_maximally_entangled());
        assert!(!EigenState::UpUp.is_maximally_entangled());
        assert!(!EigenState::DownDown.is_maximally_entangled());
    }

    #[test]
    fn regime_examples() {
        assert_eq!(ground_regime(&p(10.0, 1.0, 0.0)), GroundRegime::Singlet);
        assert_eq!(ground_regime(&p(3.0, 1.0, 0.0)), GroundRegime::ProductUp);
        assert_eq!(ground_regime(&p(4.0, 1.0, 0.0)), GroundRegime::DegenerateBoundary);
        assert_eq!(ground_regime(&p(3.0, -1.0, 0.0)), GroundRegime::ProductDown);
        assert_eq!(ground_regime(&p(0.0, 0.0, 0.0)), GroundRegime::DegenerateBoundary);
    }

    #[test]
    fn thermal_element_examples() {
        assert!(matches!(
            thermal_elements(&p(10.0, 1.0, 1e-9)),
            Err(Error::TemperatureTooSmall(_))
        ));
        let e = thermal_elements(&p(10.0, 1.0, 1e9)).unwrap().absolute();
        for x in [e.u, e.v, e.w] {
            assert_abs_diff_eq!(x, 1.0, epsilon = 1e-6);
        }
        assert_abs_diff_eq!(e.y, 0.0, epsilon = 1e-6);
        assert_abs_diff_eq!(e.z, 4.0, epsilon = 1e-6);

        let e = thermal_elements(&p(7.0, 0.0, 0.8)).unwrap();
        assert_eq!(e.u, e.v);
        assert_eq!(e.z, e.u + e.v + 2.0 * e.w);
        assert!(e.y.abs() <= e.w);
    }

    #[test]
    fn small_temperature_does_not_overflow() {
        let s = thermal_state(&p(10.0, 1.0, 1e-3)).unwrap();
        assert_abs_diff_eq!(s.rho23(), -0.5, epsilon = 1e-12);
        assert!(thermal_elements(&p(10.0, 1.0, 1e-3)).unwrap().absolute().z.is_infinite());
    }

    #[test]
    fn zero_temperature_states() {
        let s = thermal_state(&p(10.0, 1.0, 0.0)).unwrap();
        assert_eq!(s, XState::singlet());
        let s = thermal_state(&p(3.0, 1.0, 0.0)).unwrap();
        assert_eq!(s, XState::up_up());
        // crossing: half singlet, half |up up>
        let s = thermal_state(&p(4.0, 1.0, 0.0)).unwrap();
        assert_abs_diff_eq!(s.rho11(), 0.5);
        assert_abs_diff_eq!(s.rho22(), 0.25);
        assert_abs_diff_eq!(s.rho23(), -0.25);
    }

    #[test]
    fn dot_closed_forms_at_endpoints() {
        assert_eq!(dot_concurrence(&p(10.0, 1.0, 0.0)), 1.0);
        assert_eq!(dot_concurrence(&p(3.0, 1.0, 0.0)), 0.0);
        assert_abs_diff_eq!(dot_discord(&p(10.0, 1.0, 0.0)), 1.0, epsilon = 1e-12);
        assert_eq!(dot_discord(&p(3.0, 1.0, 0.0)), 0.0);
        assert_abs_diff_eq!(dot_discord(&p(10.0, 1.0, 1e9)), 0.0, epsilon = 1e-6);
        assert_abs_diff_eq!(dot_concurrence(&p(10.0, 1.0, 1.0)), 0.564428579418, epsilon = 1e-10);
    }
}
