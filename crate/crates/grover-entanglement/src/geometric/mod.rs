//! Geometric measure of entanglement of Grover iterates via the
//! symmetric product-state ansatz.
//!
//! Every amplitude of an iterate with `theta_r` in `[0, pi/2]` is
//! nonnegative, so the closest product state can be taken with real
//! nonnegative coefficients (phase `gamma = 0`) and, for marked sets that are
//! closed under qubit permutations, with one shared Bloch angle `phi` per
//! qubit. The overlap with `|zeta> = (cos(phi/2)|0> + sin(phi/2)|1>)^n`
//! collapses to a one-dimensional objective
//!
//! ```text
//! f(phi) = a * (cos(phi/2) + sin(phi/2))^n
//!        + b * sum_i cos^(n-n_i)(phi/2) * sin^(n_i)(phi/2),
//! ```
//!
//! where `a`, `b` come from the subspace amplitudes and the `n_i` are the
//! Hamming weights of the marked states. The entanglement is
//! `E = 1 - max_phi f(phi)^2`.
//!
//! The maximization runs in the `phi` domain directly: the substitution
//! `t = tan(phi/2)` would turn `f` into a polynomial whose `(1+t)^n` term
//! overflows for large `n`, while products of `cos`/`sin` powers stay tame.
//! `|f|^2` can have several local maxima (GHZ-type profiles peak at both
//! `phi = 0` and `phi = pi`), so a dense scan brackets every local maximum
//! before golden-section refinement.
//!
//! All functions here are pure; values are immutable once built and safe to
//! share across threads.

mod analytic;

pub use analytic::{e_max, iterations_for_entanglement, AnalyticQuantities};

use crate::error::{Error, Result};
use crate::grover::{GroverInstance, MarkedProfile};

/// Golden-section refinement width in `phi`; see the module docs.
const PHI_TOLERANCE: f64 = 1e-12;

/// Coefficients of the one-dimensional overlap objective.
#[derive(Debug, Clone, PartialEq)]
pub struct OverlapCoefficients {
    a: f64,
    b: f64,
    profile: MarkedProfile,
    /// `(weight, multiplicity)` pairs of the profile, cached for evaluation.
    counts: Vec<(u32, f64)>,
}

impl OverlapCoefficients {
    /// Coefficients with explicit `a`, `b`, e.g. `a = 0, b = 1/sqrt(2)`
    /// with profile `{0, n}` for a GHZ target.
    pub fn new(a: f64, b: f64, profile: MarkedProfile) -> Self {
        let counts = profile
            .weight_counts()
            .into_iter()
            .map(|(w, c)| (w, c as f64))
            .collect();
        Self {
            a,
            b,
            profile,
            counts,
        }
    }

    /// Coefficients of the iterate `|psi_r>`:
    /// `a = cos(theta_r)/sqrt(N-M)`, `b = sin(theta_r)/sqrt(M) - a`.
    pub fn from_instance_at(instance: &GroverInstance, r: u32) -> Self {
        let state = instance.subspace_state(r);
        Self::new(
            state.amp_unmarked,
            state.amp_marked - state.amp_unmarked,
            MarkedProfile::from_instance(instance),
        )
    }

    /// Coefficients of the exact uniform start state: every amplitude is
    /// `1/sqrt(N)`, so `a = 1/sqrt(N)` and `b = 0`.
    pub fn uniform(instance: &GroverInstance) -> Self {
        let amp = 1.0 / (instance.num_states() as f64).sqrt();
        Self::new(amp, 0.0, MarkedProfile::from_instance(instance))
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    pub fn profile(&self) -> &MarkedProfile {
        &self.profile
    }

    /// `s1 = (cos(phi/2) + sin(phi/2))^n` and
    /// `s2 = sum_i cos^(n-n_i)(phi/2) sin^(n_i)(phi/2)` at `phi`.
    pub fn symmetric_sums(&self, phi: f64) -> (f64, f64) {
        let n = self.profile.n() as i32;
        let c = (phi / 2.0).cos();
        let s = (phi / 2.0).sin();
        let s1 = (c + s).powi(n);
        let s2 = self
            .counts
            .iter()
            .map(|&(w, cnt)| cnt * c.powi(n - w as i32) * s.powi(w as i32))
            .sum();
        (s1, s2)
    }

    /// `d/dphi` of the two symmetric sums.
    pub fn symmetric_sums_derivative(&self, phi: f64) -> (f64, f64) {
        let n = self.profile.n() as i32;
        let c = (phi / 2.0).cos();
        let s = (phi / 2.0).sin();
        let d1 = 0.5 * n as f64 * (c + s).powi(n - 1) * (c - s);
        let mut d2 = 0.0;
        for &(w, cnt) in &self.counts {
            let p = n - w as i32;
            let q = w as i32;
            let mut term = 0.0;
            if p > 0 {
                term -= 0.5 * p as f64 * c.powi(p - 1) * s.powi(q + 1);
            }
            if q > 0 {
                term += 0.5 * q as f64 * c.powi(p + 1) * s.powi(q - 1);
            }
            d2 += cnt * term;
        }
        (d1, d2)
    }
}

/// The symmetric-ansatz overlap `f(phi)`; may be negative, the maximizer works
/// with `f^2`.
pub fn overlap(phi: f64, coeffs: &OverlapCoefficients) -> f64 {
    let (s1, s2) = coeffs.symmetric_sums(phi);
    coeffs.a * s1 + coeffs.b * s2
}

/// `d/dphi` of the overlap, used to test stationarity of a candidate angle.
pub fn overlap_derivative(phi: f64, coeffs: &OverlapCoefficients) -> f64 {
    let (d1, d2) = coeffs.symmetric_sums_derivative(phi);
    coeffs.a * d1 + coeffs.b * d2
}

/// Global maximizer of `overlap(phi)^2` over `phi` in `[0, pi]`.
///
/// Scans `max(1024, 64 n)` uniform samples to bracket every local maximum of
/// the squared overlap, then refines each bracket by golden section down to
/// `1e-12` in `phi`. Returns `(phi_star, |overlap(phi_star)|)`; exact ties
/// resolve to the smallest `phi`.
pub fn max_overlap(coeffs: &OverlapCoefficients, tol: f64) -> Result<(f64, f64)> {
    if !(tol > 0.0 && tol.is_finite()) {
        return Err(Error::BadTolerance(tol));
    }
    let g = |phi: f64| overlap(phi, coeffs).powi(2);
    let samples = 1024.max(64 * coeffs.profile.n() as usize);
    let h = std::f64::consts::PI / (samples - 1) as f64;
    let values: Vec<f64> = (0..samples).map(|i| g(i as f64 * h)).collect();

    let mut best_phi = 0.0;
    let mut best_val = f64::NEG_INFINITY;
    for i in 0..samples {
        let left = if i > 0 { values[i - 1] } else { f64::NEG_INFINITY };
        let right = if i + 1 < samples {
            values[i + 1]
        } else {
            f64::NEG_INFINITY
        };
        if values[i] < left || values[i] < right {
            continue;
        }
        let lo = i.saturating_sub(1) as f64 * h;
        let hi = ((i + 1).min(samples - 1)) as f64 * h;
        let (phi, val) = golden_section_max(&g, lo, hi);
        if val > best_val {
            best_val = val;
            best_phi = phi;
        }
    }
    Ok((best_phi, best_val.max(0.0).sqrt()))
}

/// Golden-section search for the maximum of `g` on `[lo, hi]`.
fn golden_section_max(g: &impl Fn(f64) -> f64, mut lo: f64, mut hi: f64) -> (f64, f64) {
    const INV_GOLDEN: f64 = 0.618_033_988_749_894_9;
    let mut x1 = hi - INV_GOLDEN * (hi - lo);
    let mut x2 = lo + INV_GOLDEN * (hi - lo);
    let mut g1 = g(x1);
    let mut g2 = g(x2);
    while hi - lo > PHI_TOLERANCE {
        if g1 >= g2 {
            hi = x2;
            x2 = x1;
            g2 = g1;
            x1 = hi - INV_GOLDEN * (hi - lo);
            g1 = g(x1);
        } else {
            lo = x1;
            x1 = x2;
            g1 = g2;
            x2 = lo + INV_GOLDEN * (hi - lo);
            g2 = g(x2);
        }
    }
    let mid = 0.5 * (lo + hi);
    (mid, g(mid))
}

/// Entanglement, closest-angle, and bound data for one iteration.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EntanglementRecord {
    pub r: u32,
    /// `E = 1 - overlap_max^2`, clamped into `[0, 1)`.
    pub e: f64,
    /// Maximizing angle in `[0, pi]`.
    pub phi_star: f64,
    pub overlap_max: f64,
    /// Realness floor `1 - (s1-s2)^2/(N-M) - s2^2/M` at `phi_star`; `e`
    /// never falls below it by more than roundoff, with equality where the
    /// overlap is stationary in the rotation angle (the uniform start state,
    /// GHZ-type final states).
    pub bound: f64,
}

/// `1 - (s1 - s2)^2/(N - M) - s2^2/M` with the sums taken at `phi`.
///
/// Equals `1 - (k1^2 + k2^2)`; the realness of `cos(theta_r)` in the
/// iteration-count inversion forces `E >= ` this value at the optimum angle.
/// It reaches 1 only where `s1 = s2 = 0`, which is why the entanglement
/// never does.
pub fn entanglement_bound(coeffs: &OverlapCoefficients, phi: f64) -> f64 {
    let (s1, s2) = coeffs.symmetric_sums(phi);
    let n_states = (1u64 << coeffs.profile.n()) as f64;
    let m = coeffs.profile.num_marked() as f64;
    1.0 - (s1 - s2).powi(2) / (n_states - m) - s2 * s2 / m
}

/// Entanglement record of `|psi_r>`.
///
/// `r = 0` is the Hadamard product state: the subspace parameterization of it
/// is exact only under the exact-rotation convention, so the record is built
/// from the uniform-state coefficients directly and `E(0) = 0` up to
/// maximizer tolerance under either convention.
pub fn entanglement_at(instance: &GroverInstance, r: u32, tol: f64) -> Result<EntanglementRecord> {
    let coeffs = if r == 0 {
        OverlapCoefficients::uniform(instance)
    } else {
        OverlapCoefficients::from_instance_at(instance, r)
    };
    let (phi_star, overlap_max) = max_overlap(&coeffs, tol)?;
    let e = (1.0 - overlap_max * overlap_max).clamp(0.0, 1.0);
    Ok(EntanglementRecord {
        r,
        e,
        phi_star,
        overlap_max,
        bound: entanglement_bound(&coeffs, phi_star),
    })
}

/// Per-iteration records for `r = 0..=r_opt` plus the aligned concurrence
/// values.
#[derive(Debug, Clone, PartialEq)]
pub struct EntanglementCurve {
    instance: GroverInstance,
    records: Vec<EntanglementRecord>,
    concurrence: Vec<f64>,
}

impl EntanglementCurve {
    pub fn instance(&self) -> &GroverInstance {
        &self.instance
    }

    pub fn records(&self) -> &[EntanglementRecord] {
        &self.records
    }

    pub fn concurrence(&self) -> &[f64] {
        &self.concurrence
    }
}

/// Sweeps `r = 0..=r_opt(instance)`. Iterations past `r_opt` are not
/// evaluated: beyond the turn the iterate picks up negative amplitudes and
/// the nonnegative-ansatz premise lapses.
pub fn entanglement_curve(instance: &GroverInstance, tol: f64) -> Result<EntanglementCurve> {
    let r_opt = instance.r_opt();
    let mut records = Vec::with_capacity(r_opt as usize + 1);
    let mut concurrence = Vec::with_capacity(r_opt as usize + 1);
    for r in 0..=r_opt {
        records.push(entanglement_at(instance, r, tol)?);
        concurrence.push(instance.concurrence(r));
    }
    Ok(EntanglementCurve {
        instance: instance.clone(),
        records,
        concurrence,
    })
}
