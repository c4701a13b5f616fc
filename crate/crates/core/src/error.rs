use thiserror::Error;

/// Errors produced anywhere in the crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("non-finite matrix element {name} = {value}")]
    NonFinite { name: &'static str, value: f64 },

    #[error("trace {trace} deviates from 1 by more than the validation slack")]
    Trace { trace: f64 },

    #[error("diagonal element {name} = {value} is negative")]
    NegativeDiagonal { name: &'static str, value: f64 },

    #[error("2x2 block is not positive semidefinite: |{coherence}| = {magnitude} > {bound}")]
    BlockNotPsd {
        coherence: &'static str,
        magnitude: f64,
        bound: f64,
    },

    #[error("argument {value} outside the domain [0, 1]")]
    Domain { value: f64 },

    #[error("qubit basis is not orthonormal (deviation {deviation:e})")]
    BasisNotOrthonormal { deviation: f64 },

    #[error("{routine} did not converge after {iterations} iterations")]
    NoConvergence {
        routine: &'static str,
        iterations: usize,
    },

    #[error("numerical failure: {0}")]
    Numerical(String),

    #[error("invalid model parameter {name} = {value}")]
    InvalidParams { name: &'static str, value: f64 },

    #[error("temperature {0:e} is positive but too small for the Boltzmann weights; use the T = 0 path")]
    TemperatureTooSmall(f64),

    #[error("invalid sweep: {0}")]
    InvalidSweep(String),

    #[error("sweep has no rows")]
    EmptySweep,

    #[error("sweep point {param} = {value} failed: {source}")]
    SweepPoint {
        param: &'static str,
        value: f64,
        source: Box<Error>,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
