//! Two-qubit density matrices with X structure.
//!
//! Basis order is `|00>, |01>, |10>, |11>` with `|0> = |up>` and `|1> = |down>`.
//! Only the diagonal and the anti-diagonal are populated:
//!
//! ```text
//! rho11   0      0     rho14
//!  0     rho22  rho23   0
//!  0     rho23  rho33   0
//! rho14   0      0     rho44
//! ```
//!
//! Coherences are real, so `rho41 = rho14` and `rho32 = rho23`. All entropies are
//! in bits with `0 log 0 = 0`.

use rand::Rng;
use rand_distr::{Distribution, Exp1};

use crate::error::{Error, Result};
use crate::oracle::Dense4;

/// Slack used when accepting values at a physical boundary.
pub const VALIDATION_SLACK: f64 = 1e-12;

/// A validated X-structured two-qubit density matrix.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct XState {
    rho11: f64,
    rho22: f64,
    rho33: f64,
    rho44: f64,
    rho14: f64,
    rho23: f64,
}

/// Eigenvalues of a two-qubit density matrix, sorted nonincreasing.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Spectrum4([f64; 4]);

impl Spectrum4 {
    /// Sorts, clamps values within the slack of `[0, 1]`, and rejects anything further out.
    pub fn new(mut values: [f64; 4]) -> Result<Self> {
        for v in values.iter_mut() {
            if !v.is_finite() {
                return Err(Error::NonFinite {
                    name: "eigenvalue",
                    value: *v,
                });
            }
            if *v < -VALIDATION_SLACK || *v > 1.0 + VALIDATION_SLACK {
                return Err(Error::Numerical(format!("eigenvalue {v} outside [0, 1]")));
            }
            *v = v.clamp(0.0, 1.0);
        }
        values.sort_by(|a, b| b.total_cmp(a));
        Ok(Spectrum4(values))
    }

    pub fn values(&self) -> [f64; 4] {
        self.0
    }

    pub fn largest(&self) -> f64 {
        self.0[0]
    }

    /// Shannon entropy of the spectrum, i.e. the von Neumann entropy of the state.
    pub fn entropy(&self) -> f64 {
        shannon_entropy(&self.0)
    }
}

impl XState {
    /// Validates six raw elements.
    ///
    /// Values within [`VALIDATION_SLACK`] of a boundary are clamped: slightly
    /// negative diagonals become zero, the trace is renormalized to one, and
    /// coherences are pulled back onto the PSD bound.
    pub fn new(rho11: f64, rho22: f64, rho33: f64, rho44: f64, rho14: f64, rho23: f64) -> Result<Self> {
        let named = [
            ("rho11", rho11),
            ("rho22", rho22),
            ("rho33", rho33),
            ("rho44", rho44),
            ("rho14", rho14),
            ("rho23", rho23),
        ];
        for (name, value) in named {
            if !value.is_finite() {
                return Err(Error::NonFinite { name, value });
            }
        }

        let mut diag = [rho11, rho22, rho33, rho44];
        for (d, (name, value)) in diag.iter_mut().zip(named) {
            if *d < -VALIDATION_SLACK {
                return Err(Error::NegativeDiagonal { name, value });
            }
            *d = d.max(0.0);
        }

        let trace: f64 = diag.iter().sum();
        if (trace - 1.0).abs() > VALIDATION_SLACK {
            return Err(Error::Trace { trace });
        }
        for d in diag.iter_mut() {
            *d /= trace;
        }
        let [rho11, rho22, rho33, rho44] = diag;

        let rho14 = clamp_coherence("rho14", rho14 / trace, (rho11 * rho44).sqrt())?;
        let rho23 = clamp_coherence("rho23", rho23 / trace, (rho22 * rho33).sqrt())?;

        Ok(XState {
            rho11,
            rho22,
            rho33,
            rho44,
            rho14,
            rho23,
        })
    }

    /// Bell state `(|00> + |11>)/sqrt 2`.
    pub fn bell_phi_plus() -> Self {
        XState {
            rho11: 0.5,
            rho22: 0.0,
            rho33: 0.0,
            rho44: 0.5,
            rho14: 0.5,
            rho23: 0.0,
        }
    }

    /// Singlet `(|01> - |10>)/sqrt 2`.
    pub fn singlet() -> Self {
        XState {
            rho11: 0.0,
            rho22: 0.5,
            rho33: 0.5,
            rho44: 0.0,
            rho14: 0.0,
            rho23: -0.5,
        }
    }

    pub fn maximally_mixed() -> Self {
        XState {
            rho11: 0.25,
            rho22: 0.25,
            rho33: 0.25,
            rho44: 0.25,
            rho14: 0.0,
            rho23: 0.0,
        }
    }

    /// Product state `|up up> = |00>`.
    pub fn up_up() -> Self {
        XState {
            rho11: 1.0,
            rho22: 0.0,
            rho33: 0.0,
            rho44: 0.0,
            rho14: 0.0,
            rho23: 0.0,
        }
    }

    /// Werner state `p |singlet><singlet| + (1 - p) I/4`.
    pub fn werner(p: f64) -> Result<Self> {
        XState::new(
            (1.0 - p) / 4.0,
            (1.0 + p) / 4.0,
            (1.0 + p) / 4.0,
            (1.0 - p) / 4.0,
            0.0,
            -p / 2.0,
        )
    }

    /// Draws a random X-state: flat Dirichlet diagonal, then each coherence
    /// uniform inside its PSD interval.
    pub fn random<R: Rng + ?Sized>(rng: &mut R) -> Self {
        let mut w = [0.0f64; 4];
        for x in w.iter_mut() {
            *x = Exp1.sample(rng);
        }
        let total: f64 = w.iter().sum();
        let [rho11, rho22, rho33, rho44] = w.map(|x| x / total);
        let b14 = (rho11 * rho44).sqrt();
        let b23 = (rho22 * rho33).sqrt();
        XState {
            rho11,
            rho22,
            rho33,
            rho44,
            rho14: rng.random_range(-1.0..=1.0) * b14,
            rho23: rng.random_range(-1.0..=1.0) * b23,
        }
    }

    pub fn rho11(&self) -> f64 {
        self.rho11
    }
    pub fn rho22(&self) -> f64 {
        self.rho22
    }
    pub fn rho33(&self) -> f64 {
        self.rho33
    }
    pub fn rho44(&self) -> f64 {
        self.rho44
    }
    pub fn rho14(&self) -> f64 {
        self.rho14
    }
    pub fn rho23(&self) -> f64 {
        self.rho23
    }

    pub fn diagonal(&self) -> [f64; 4] {
        [self.rho11, self.rho22, self.rho33, self.rho44]
    }

    /// The same state with the two qubits exchanged.
    pub fn swapped(&self) -> Self {
        XState {
            rho22: self.rho33,
            rho33: self.rho22,
            ..*self
        }
    }

    /// Dense 4x4 embedding.
    pub fn to_dense(&self) -> Dense4 {
        let mut m = [[0.0; 4]; 4];
        m[0][0] = self.rho11;
        m[1][1] = self.rho22;
        m[2][2] = self.rho33;
        m[3][3] = self.rho44;
        m[0][3] = self.rho14;
        m[3][0] = self.rho14;
        m[1][2] = self.rho23;
        m[2][1] = self.rho23;
        Dense4::symmetric(m).expect("X-state embedding is symmetric")
    }

    /// Closed-form spectrum from the two 2x2 blocks.
    pub fn eigenvalues(&self) -> Spectrum4 {
        let (a1, a2) = block_eigenvalues(self.rho11, self.rho44, self.rho14);
        let (b1, b2) = block_eigenvalues(self.rho22, self.rho33, self.rho23);
        Spectrum4::new([a1, a2, b1, b2]).expect("validated X-state has a physical spectrum")
    }

    pub fn von_neumann_entropy(&self) -> f64 {
        self.eigenvalues().entropy()
    }

    /// `(S_A, S_B)`: binary entropies of `rho11 + rho22` and `rho11 + rho33`.
    pub fn marginal_entropies(&self) -> (f64, f64) {
        (h2(self.rho11 + self.rho22), h2(self.rho11 + self.rho33))
    }

    /// Entropy of the diagonal, i.e. of the state dephased in the computational basis.
    pub fn diagonal_entropy(&self) -> f64 {
        shannon_entropy(&self.diagonal())
    }
}

fn clamp_coherence(name: &'static str, value: f64, bound: f64) -> Result<f64> {
    if value.abs() > bound + VALIDATION_SLACK {
        return Err(Error::BlockNotPsd {
            coherence: name,
            magnitude: value.abs(),
            bound,
        });
    }
    Ok(value.clamp(-bound, bound))
}

fn block_eigenvalues(a: f64, d: f64, off: f64) -> (f64, f64) {
    let mean = 0.5 * (a + d);
    let radius = (0.5 * (a - d)).hypot(off);
    (mean + radius, mean - radius)
}

/// `H(x) = -x log2 x - (1 - x) log2 (1 - x)`.
pub fn binary_entropy(x: f64) -> Result<f64> {
    if !(-VALIDATION_SLACK..=1.0 + VALIDATION_SLACK).contains(&x) {
        return Err(Error::Domain { value: x });
    }
    Ok(h2(x.clamp(0.0, 1.0)))
}

/// Binary entropy for an argument already known to be a probability.
pub(crate) fn h2(x: f64) -> f64 {
    let x = x.clamp(0.0, 1.0);
    plogp(x) + plogp(1.0 - x)
}

/// `-p log2 p` with `0 log 0 = 0`.
pub(crate) fn plogp(p: f64) -> f64 {
    if p <= 0.0 {
        0.0
    } else {
        -p * p.log2()
    }
}

/// Shannon entropy in bits of a probability vector.
pub fn shannon_entropy(probs: &[f64]) -> f64 {
    probs.iter().map(|&p| plogp(p)).sum()
}
