use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("qubit count must lie in {min}..={max}, got {n}")]
    QubitCount { n: u32, min: u32, max: u32 },

    #[error("marked set must hold between 1 and 2^n - 1 patterns, got {got}")]
    MarkedSetSize { got: u64 },

    #[error("marked pattern {pattern} out of range for n = {n} qubits")]
    PatternOutOfRange { pattern: u64, n: u32 },

    #[error("marked pattern {pattern} listed twice")]
    DuplicatePattern { pattern: u64 },

    #[error(
        "paper-step convention needs M <= N/4 so that 2*sqrt(M/N) <= 1; \
         got M = {m}, N = {n_states}"
    )]
    StepAngleDomain { m: u64, n_states: u64 },

    #[error("weight {weight} exceeds qubit count {n}")]
    WeightOutOfRange { weight: u32, n: u32 },

    #[error("tolerance must be positive and finite, got {0}")]
    BadTolerance(f64),

    #[error("restart count must be at least 1")]
    ZeroRestarts,

    #[error(
        "entanglement lies above the realness bound: k1^2 + k2^2 - lambda^2 = {slack:.3e}"
    )]
    AboveBound { slack: f64 },

    #[error("infeasible marked-set spec: {0}")]
    InfeasibleSpec(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
