//! Brute-force oracle #2: geometric entanglement over fully general product
//! states.
//!
//! Nothing here assumes the shared-angle ansatz: every qubit carries its own
//! Bloch pair `(phi_j, gamma_j)`, complex phases included. Holding all qubits
//! but one fixed, the optimal single-qubit state is the normalized partial
//! contraction of the target with the rest of the ansatz, so a sweep of
//! exact single-qubit updates never decreases the overlap. Multimodal
//! targets (GHZ-like states) need several random restarts; the generator is
//! seedable so runs are reproducible, and the best restart wins with ties
//! going to the lowest restart index.
//!
//! This is the empirical check on the symmetric reduction: for marked sets
//! closed under qubit permutations (and iterates with `theta_r <= pi/2`,
//! where every amplitude is nonnegative) the optimum found here coincides
//! with the one-angle maximization; for other sets it measures how much the
//! shared-angle restriction gives away.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::geometric;
use crate::grover::{AngleConvention, GroverInstance};
use crate::statevector::{self, DenseState};

/// Alternating sweeps stop after this many passes over the register.
pub const MAX_SWEEPS: u32 = 10_000;

/// One Bloch pair `(phi in [0, pi], gamma in [0, 2pi))` per qubit.
#[derive(Debug, Clone, PartialEq)]
pub struct ProductAnsatz {
    angles: Vec<(f64, f64)>,
}

impl ProductAnsatz {
    pub fn angles(&self) -> &[(f64, f64)] {
        &self.angles
    }

    /// Single-qubit factors `cos(phi/2)|0> + e^(i gamma) sin(phi/2)|1>`.
    pub fn qubit_states(&self) -> Vec<[Complex64; 2]> {
        self.angles
            .iter()
            .map(|&(phi, gamma)| {
                [
                    Complex64::new((phi / 2.0).cos(), 0.0),
                    Complex64::from_polar((phi / 2.0).sin(), gamma),
                ]
            })
            .collect()
    }

    fn from_qubit_states(states: &[[Complex64; 2]]) -> Self {
        let angles = states
            .iter()
            .map(|z| {
                // Rotate the global phase so the |0> coefficient is real
                // and nonnegative, then read the Bloch angles off.
                let phase = if z[0].norm() > 1e-15 {
                    z[0] / z[0].norm()
                } else {
                    Complex64::new(1.0, 0.0)
                };
                let z0 = (z[0] / phase).re.clamp(-1.0, 1.0);
                let z1 = z[1] / phase;
                let phi = 2.0 * z1.norm().atan2(z0);
                let gamma = if z1.norm() > 1e-15 {
                    z1.arg().rem_euclid(std::f64::consts::TAU)
                } else {
                    0.0
                };
                (phi, gamma)
            })
            .collect();
        Self { angles }
    }
}

/// `<zeta|psi>` for a real target state and a product ansatz.
pub fn product_overlap(state: &DenseState, ansatz: &ProductAnsatz) -> Complex64 {
    let qubits = ansatz.qubit_states();
    let n = state.n();
    let mut acc = Complex64::new(0.0, 0.0);
    for (x, &a) in state.amplitudes().iter().enumerate() {
        let mut f = Complex64::new(a, 0.0);
        for (j, z) in qubits.iter().enumerate().take(n as usize) {
            f *= z[(x >> j) & 1].conj();
        }
        acc += f;
    }
    acc
}

/// Result of the alternating optimization.
#[derive(Debug, Clone)]
pub struct GeneralEntanglement {
    /// `1 - |<zeta|psi>|^2` at the best product state found.
    pub entanglement: f64,
    pub ansatz: ProductAnsatz,
    /// False when the best restart hit the sweep cap before its overlap
    /// improvement dropped under the tolerance.
    pub converged: bool,
    /// Sweeps spent by the best restart.
    pub sweeps: u32,
}

/// Maximizes `|<zeta|psi>|^2` over arbitrary product states by alternating
/// exact single-qubit updates, restarted from `restarts` random angle draws.
///
/// `tol` bounds the overlap improvement per full sweep below which a restart
/// stops. A restart that still improves after [`MAX_SWEEPS`] sweeps is
/// reported with `converged = false` rather than an error, carrying the best
/// value found so far.
pub fn general_geometric_entanglement(
    state: &DenseState,
    restarts: u32,
    tol: f64,
    seed: u64,
) -> Result<GeneralEntanglement> {
    if restarts == 0 {
        return Err(Error::ZeroRestarts);
    }
    if !(tol > 0.0 && tol.is_finite()) {
        return Err(Error::BadTolerance(tol));
    }
    let n = state.n() as usize;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut best: Option<(f64, Vec<[Complex64; 2]>, bool, u32)> = None;

    for _ in 0..restarts {
        let mut qubits: Vec<[Complex64; 2]> = (0..n)
            .map(|_| {
                let phi = rng.gen::<f64>() * std::f64::consts::PI;
                let gamma = rng.gen::<f64>() * std::f64::consts::TAU;
                [
                    Complex64::new((phi / 2.0).cos(), 0.0),
                    Complex64::from_polar((phi / 2.0).sin(), gamma),
                ]
            })
            .collect();

        let mut overlap = 0.0f64;
        let mut converged = false;
        let mut sweeps = 0;
        while sweeps < MAX_SWEEPS {
            sweeps += 1;
            let mut last_norm = overlap;
            for j in 0..n {
                let v = contract_all_but(state, &qubits, j);
                let norm = (v[0].norm_sqr() + v[1].norm_sqr()).sqrt();
                if norm > 1e-300 {
                    qubits[j] = [v[0] / norm, v[1] / norm];
                }
                last_norm = norm;
            }
            let improved = last_norm - overlap;
            overlap = last_norm;
            if improved < tol {
                converged = true;
                break;
            }
        }

        let candidate = (overlap, qubits, converged, sweeps);
        match &best {
            Some(b) if candidate.0 <= b.0 => {}
            _ => best = Some(candidate),
        }
    }

    let (overlap, qubits, converged, sweeps) = best.expect("restarts >= 1");
    Ok(GeneralEntanglement {
        entanglement: (1.0 - overlap * overlap).clamp(0.0, 1.0),
        ansatz: ProductAnsatz::from_qubit_states(&qubits),
        converged,
        sweeps,
    })
}

/// Partial contraction of the target with every ansatz qubit except `j`:
/// the unnormalized optimal state of qubit `j`.
fn contract_all_but(state: &DenseState, qubits: &[[Complex64; 2]], j: usize) -> [Complex64; 2] {
    let mut v = [Complex64::new(0.0, 0.0); 2];
    for (x, &a) in state.amplitudes().iter().enumerate() {
        let mut f = Complex64::new(a, 0.0);
        for (k, z) in qubits.iter().enumerate() {
            if k != j {
                f *= z[(x >> k) & 1].conj();
            }
        }
        v[(x >> j) & 1] += f;
    }
    v
}

/// `E_general - E_symmetric` for the iterate `|psi_r>` of `instance`.
///
/// The dense side simulates the actual circuit, so the symmetric side is
/// evaluated under the exact-rotation convention regardless of the
/// instance's setting; the two describe the same state and the gap isolates
/// what the shared-angle restriction loses. Expected zero within tolerance
/// for permutation-closed marked sets at `theta_r <= pi/2`, strictly
/// negative otherwise.
pub fn symmetric_restriction_gap(
    instance: &GroverInstance,
    r: u32,
    restarts: u32,
    tol: f64,
    seed: u64,
) -> Result<f64> {
    let exact = instance.with_convention(AngleConvention::ExactRotation)?;
    let dense = statevector::run(exact.n(), exact.marked(), r)?;
    let general = general_geometric_entanglement(&dense, restarts, tol, seed)?;
    let symmetric = geometric::entanglement_at(&exact, r, tol)?;
    Ok(general.entanglement - symmetric.e)
}
