//! Exact two-dimensional invariant-subspace model of Grover's search.
//!
//! After `r` iterations the register state lives in the plane spanned by the
//! uniform superpositions of unmarked and marked basis states,
//!
//! ```text
//! |psi_r> = cos(theta_r)/sqrt(N-M) |S0> + sin(theta_r)/sqrt(M) |S1>,
//! ```
//!
//! with `theta_r = (r + 1/2) * step`. Two conventions for the step angle are
//! supported: the literature's `asin(2*sqrt(M/N))` and the exact rotation
//! `2*asin(sqrt(M/N))` realized by the oracle-plus-diffusion circuit. They
//! agree to O((M/N)^{3/2}); only the exact convention matches a dense
//! simulation bit for bit.

use crate::error::{Error, Result};

/// Smallest supported register.
pub const MIN_QUBITS: u32 = 2;
/// Largest register the subspace model accepts. The dense simulator in
/// [`crate::statevector`] has its own, tighter memory guard.
pub const MAX_QUBITS: u32 = 32;

/// Step-angle convention for the subspace rotation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AngleConvention {
    /// `asin(2*sqrt(M/N))` per iteration. Requires `M <= N/4`.
    PaperStep,
    /// `2*asin(sqrt(M/N))` per iteration; exact for the Grover unitary.
    ExactRotation,
}

/// A search problem: register size, marked patterns, and angle convention.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroverInstance {
    n: u32,
    marked: Vec<u64>,
    convention: AngleConvention,
}

impl GroverInstance {
    /// Validates a problem definition; marked patterns are stored sorted
    /// ascending.
    pub fn new(
        n: u32,
        marked: impl IntoIterator<Item = u64>,
        convention: AngleConvention,
    ) -> Result<Self> {
        if !(MIN_QUBITS..=MAX_QUBITS).contains(&n) {
            return Err(Error::QubitCount {
                n,
                min: MIN_QUBITS,
                max: MAX_QUBITS,
            });
        }
        let n_states = 1u64 << n;
        let mut marked: Vec<u64> = marked.into_iter().collect();
        marked.sort_unstable();
        for pair in marked.windows(2) {
            if pair[0] == pair[1] {
                return Err(Error::DuplicatePattern { pattern: pair[0] });
            }
        }
        if let Some(&p) = marked.iter().find(|&&p| p >= n_states) {
            return Err(Error::PatternOutOfRange { pattern: p, n });
        }
        let m = marked.len() as u64;
        if m == 0 || m >= n_states {
            return Err(Error::MarkedSetSize { got: m });
        }
        if convention == AngleConvention::PaperStep && 4 * m > n_states {
            return Err(Error::StepAngleDomain { m, n_states });
        }
        Ok(Self {
            n,
            marked,
            convention,
        })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// Database size `N = 2^n`.
    pub fn num_states(&self) -> u64 {
        1u64 << self.n
    }

    pub fn marked(&self) -> &[u64] {
        &self.marked
    }

    /// Number of marked states `M`.
    pub fn num_marked(&self) -> u64 {
        self.marked.len() as u64
    }

    pub fn convention(&self) -> AngleConvention {
        self.convention
    }

    /// Same problem under a different step-angle convention.
    ///
    /// Converting to `PaperStep` re-checks the `M <= N/4` domain condition.
    pub fn with_convention(&self, convention: AngleConvention) -> Result<Self> {
        Self::new(self.n, self.marked.iter().copied(), convention)
    }

    /// Per-iteration rotation angle in radians.
    pub fn step_angle(&self) -> f64 {
        let ratio = self.num_marked() as f64 / self.num_states() as f64;
        match self.convention {
            // The instance constructor guarantees 2*sqrt(ratio) <= 1 here.
            AngleConvention::PaperStep => (2.0 * ratio.sqrt()).min(1.0).asin(),
            AngleConvention::ExactRotation => 2.0 * ratio.sqrt().asin(),
        }
    }

    /// `theta_r = (r + 1/2) * step`.
    pub fn theta(&self, r: u32) -> f64 {
        (f64::from(r) + 0.5) * self.step_angle()
    }

    /// Iteration count bringing `theta_r` closest to `pi/2`, i.e. the closest
    /// integer to `(pi/step - 1)/2`. Ties round away from zero.
    pub fn r_opt(&self) -> u32 {
        let x = (std::f64::consts::PI / self.step_angle() - 1.0) / 2.0;
        // f64::round is round-half-away-from-zero, the documented CI choice.
        x.round().max(0.0) as u32
    }

    /// Subspace amplitudes after `r` iterations.
    pub fn subspace_state(&self, r: u32) -> SubspaceState {
        let theta_r = self.theta(r);
        let m = self.num_marked() as f64;
        let unmarked = (self.num_states() - self.num_marked()) as f64;
        SubspaceState {
            r,
            theta_r,
            amp_unmarked: theta_r.cos() / unmarked.sqrt(),
            amp_marked: theta_r.sin() / m.sqrt(),
        }
    }

    /// Probability `sin^2(theta_r)` of measuring a marked state.
    pub fn success_probability(&self, r: u32) -> f64 {
        self.theta(r).sin().powi(2)
    }

    /// Concurrence at integer iteration `r`, clamped at zero from below.
    ///
    /// `C(r) = (1/(2 A0)) d(sin^2 theta_r)/dr` with `A0 = sqrt(M/N)`, the
    /// marked-superposition amplitude of the uniform start state.
    pub fn concurrence(&self, r: u32) -> f64 {
        self.concurrence_real(f64::from(r)).max(0.0)
    }

    /// Unclamped concurrence at a real-valued iteration coordinate.
    ///
    /// Vanishes at `theta = 0` (the `r = -1/2` surrogate of the start state)
    /// and at `theta = pi/2`; negative past `pi/2`.
    pub fn concurrence_real(&self, r: f64) -> f64 {
        let step = self.step_angle();
        let theta = (r + 0.5) * step;
        let a0 = (self.num_marked() as f64 / self.num_states() as f64).sqrt();
        (2.0 * theta).sin() * step / (2.0 * a0)
    }
}

/// The `(r, theta_r)` point of the invariant-subspace curve together with the
/// two per-basis-state amplitudes.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SubspaceState {
    pub r: u32,
    pub theta_r: f64,
    /// `cos(theta_r)/sqrt(N-M)`, shared by every unmarked basis state.
    pub amp_unmarked: f64,
    /// `sin(theta_r)/sqrt(M)`, shared by every marked basis state.
    pub amp_marked: f64,
}

impl SubspaceState {
    /// `(N-M) a_u^2 + M a_m^2`; equals 1 for a normalized state.
    pub fn norm_sqr(&self, instance: &GroverInstance) -> f64 {
        let m = instance.num_marked() as f64;
        let unmarked = (instance.num_states() - instance.num_marked()) as f64;
        unmarked * self.amp_unmarked.powi(2) + m * self.amp_marked.powi(2)
    }
}

/// Multiset of Hamming weights of the marked states: the exponents `n_i`
/// entering the symmetric-ansatz overlap.
///
/// For a single marked state the profile is canonicalized to `{0}`: flipping
/// every qubit where the pattern has a 1 bit is a local unitary that maps the
/// iterate onto the all-zeros search without changing its entanglement, and
/// the shared-angle ansatz is exact only in that frame. Multi-state sets are
/// kept verbatim.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MarkedProfile {
    n: u32,
    weights: Vec<u32>,
}

impl MarkedProfile {
    /// Profile of an instance's marked set.
    pub fn from_instance(instance: &GroverInstance) -> Self {
        if instance.marked().len() == 1 {
            // Bit-flip normalization: a lone marked state is equivalent to
            // |0...0> under X gates, which preserve product states.
            return Self {
                n: instance.n(),
                weights: vec![0],
            };
        }
        let mut weights: Vec<u32> = instance
            .marked()
            .iter()
            .map(|p| p.count_ones())
            .collect();
        weights.sort_unstable();
        Self {
            n: instance.n(),
            weights,
        }
    }

    /// Profile from raw weights, e.g. `{0, n}` for a GHZ target or
    /// `C(n, k)` copies of `k` for a Dicke state.
    pub fn from_weights(n: u32, weights: impl IntoIterator<Item = u32>) -> Result<Self> {
        let mut weights: Vec<u32> = weights.into_iter().collect();
        if let Some(&w) = weights.iter().find(|&&w| w > n) {
            return Err(Error::WeightOutOfRange { weight: w, n });
        }
        if weights.is_empty() {
            return Err(Error::MarkedSetSize { got: 0 });
        }
        weights.sort_unstable();
        Ok(Self { n, weights })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    /// Number of marked states `M = |weights|`.
    pub fn num_marked(&self) -> u64 {
        self.weights.len() as u64
    }

    /// `(weight, multiplicity)` pairs, ascending in weight.
    pub fn weight_counts(&self) -> Vec<(u32, u64)> {
        let mut counts: Vec<(u32, u64)> = Vec::new();
        for &w in &self.weights {
            match counts.last_mut() {
                Some(last) if last.0 == w => last.1 += 1,
                _ => counts.push((w, 1)),
            }
        }
        counts
    }

    /// Profile with every weight replaced by `n - weight` (relabeling
    /// 0 <-> 1 on all qubits).
    pub fn complement(&self) -> Self {
        let mut weights: Vec<u32> = self.weights.iter().map(|&w| self.n - w).collect();
        weights.sort_unstable();
        Self {
            n: self.n,
            weights,
        }
    }
}
