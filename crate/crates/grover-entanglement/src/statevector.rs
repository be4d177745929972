//! Brute-force oracle #1: dense simulation of the Grover circuit.
//!
//! One iterate is a phase flip on the marked amplitudes followed by the
//! inversion about the mean. Starting from a real state the dynamics stay
//! real, so amplitudes are stored as `f64` rather than complex pairs; this
//! halves memory and keeps equality tests sharp. The mean is accumulated
//! with Neumaier compensation in a fixed order, so repeated runs are
//! bit-identical.

use crate::error::{Error, Result};

/// Smallest dense register.
pub const MIN_DENSE_QUBITS: u32 = 2;
/// Dense-simulation memory guard: 2^24 amplitudes = 128 MiB of f64.
pub const MAX_DENSE_QUBITS: u32 = 24;

/// Full `2^n`-amplitude register state.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseState {
    n: u32,
    amplitudes: Vec<f64>,
}

impl DenseState {
    /// Wraps raw amplitudes; the vector length must be `2^n` and the norm
    /// must already be 1 within 1e-12.
    pub fn from_amplitudes(n: u32, amplitudes: Vec<f64>) -> Result<Self> {
        check_qubits(n)?;
        if amplitudes.len() != 1 << n {
            return Err(Error::MarkedSetSize {
                got: amplitudes.len() as u64,
            });
        }
        let state = Self { n, amplitudes };
        let norm = state.norm();
        if (norm - 1.0).abs() > 1e-12 {
            return Err(Error::InfeasibleSpec(format!(
                "amplitude vector has norm {norm}, expected 1"
            )));
        }
        Ok(state)
    }

    /// Uniform superposition of the given basis patterns, e.g. `{0, 2^n-1}`
    /// for GHZ or the weight-one patterns for W.
    pub fn basis_superposition(n: u32, patterns: &[u64]) -> Result<Self> {
        check_qubits(n)?;
        check_patterns(n, patterns)?;
        if patterns.is_empty() {
            return Err(Error::MarkedSetSize { got: 0 });
        }
        let mut amplitudes = vec![0.0; 1 << n];
        let amp = 1.0 / (patterns.len() as f64).sqrt();
        for &p in patterns {
            amplitudes[p as usize] = amp;
        }
        Ok(Self { n, amplitudes })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn amplitudes(&self) -> &[f64] {
        &self.amplitudes
    }

    pub fn norm(&self) -> f64 {
        self.amplitudes
            .iter()
            .map(|a| a * a)
            .sum::<f64>()
            .sqrt()
    }

    /// Inner product with another real state of the same size.
    pub fn dot(&self, other: &DenseState) -> f64 {
        debug_assert_eq!(self.n, other.n);
        self.amplitudes
            .iter()
            .zip(&other.amplitudes)
            .map(|(a, b)| a * b)
            .sum()
    }
}

fn check_qubits(n: u32) -> Result<()> {
    if !(MIN_DENSE_QUBITS..=MAX_DENSE_QUBITS).contains(&n) {
        return Err(Error::QubitCount {
            n,
            min: MIN_DENSE_QUBITS,
            max: MAX_DENSE_QUBITS,
        });
    }
    Ok(())
}

fn check_patterns(n: u32, patterns: &[u64]) -> Result<()> {
    let n_states = 1u64 << n;
    for &p in patterns {
        if p >= n_states {
            return Err(Error::PatternOutOfRange { pattern: p, n });
        }
    }
    Ok(())
}

/// `H^(x)n |0..0>`: every amplitude `1/sqrt(2^n)`.
pub fn uniform_state(n: u32) -> Result<DenseState> {
    check_qubits(n)?;
    let dim = 1usize << n;
    Ok(DenseState {
        n,
        amplitudes: vec![1.0 / (dim as f64).sqrt(); dim],
    })
}

/// One Grover iterate: oracle phase flip on `marked`, then the inversion
/// about the mean `a_i -> 2*mean - a_i`.
///
/// An empty marked set degenerates to the bare inversion, which is an
/// involution.
pub fn grover_iterate(state: &DenseState, marked: &[u64]) -> Result<DenseState> {
    check_patterns(state.n, marked)?;
    let mut amps = state.amplitudes.clone();
    for &p in marked {
        amps[p as usize] = -amps[p as usize];
    }
    let mean = neumaier_sum(&amps) / amps.len() as f64;
    for a in &mut amps {
        *a = 2.0 * mean - *a;
    }
    Ok(DenseState {
        n: state.n,
        amplitudes: amps,
    })
}

/// `r` iterates applied to the uniform start state.
pub fn run(n: u32, marked: &[u64], r: u32) -> Result<DenseState> {
    let mut state = uniform_state(n)?;
    for _ in 0..r {
        state = grover_iterate(&state, marked)?;
    }
    Ok(state)
}

/// Literal inner product of `state` with the symmetric product state at
/// angle `phi`: `sum_i a_i cos^(n-w(i))(phi/2) sin^(w(i))(phi/2)` with
/// `w(i)` the Hamming weight of the basis index.
pub fn dense_overlap(state: &DenseState, phi: f64) -> f64 {
    let n = state.n;
    let c = (phi / 2.0).cos();
    let s = (phi / 2.0).sin();
    // One coefficient per weight; amplitudes are grouped by popcount.
    let coeff: Vec<f64> = (0..=n)
        .map(|w| c.powi((n - w) as i32) * s.powi(w as i32))
        .collect();
    let mut acc = 0.0;
    let mut comp = 0.0;
    for (i, &a) in state.amplitudes.iter().enumerate() {
        let term = a * coeff[(i as u64).count_ones() as usize];
        let t = acc + term;
        comp += if acc.abs() >= term.abs() {
            (acc - t) + term
        } else {
            (term - t) + acc
        };
        acc = t;
    }
    acc + comp
}

/// Neumaier-compensated sum in slice order.
fn neumaier_sum(values: &[f64]) -> f64 {
    let mut acc = 0.0;
    let mut comp = 0.0;
    for &v in values {
        let t = acc + v;
        comp += if acc.abs() >= v.abs() {
            (acc - t) + v
        } else {
            (v - t) + acc
        };
        acc = t;
    }
    acc + comp
}
