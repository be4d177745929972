//! Closed-form relations between entanglement and iteration count.
//!
//! With `s1`, `s2` the symmetric sums at the maximizing angle and
//! `k1 = (s1 - s2)/sqrt(N-M)`, `k2 = s2/sqrt(M)`, the overlap of `|psi_r>`
//! with its closest symmetric product state is
//! `lambda = k1 cos(theta_r) + k2 sin(theta_r)`. Solving the resulting
//! quadratic for `cos(theta_r)` inverts an entanglement record back into a
//! (real-valued) iteration count. Realness of the root requires
//! `k1^2 + k2^2 >= lambda^2`, which caps the attainable entanglement at
//! `1 - k1^2 - k2^2` from below at the optimum angle.

use crate::error::{Error, Result};
use crate::grover::GroverInstance;

use super::{EntanglementCurve, EntanglementRecord, OverlapCoefficients};

/// Slack below which a negative radicand is treated as roundoff.
const REALNESS_SLACK: f64 = 1e-9;
/// Angles closer than this to 0 or pi count as boundary maximizers.
const BOUNDARY_EPS: f64 = 1e-9;

/// The quantities entering the iteration-count inversion, evaluated at one
/// record's maximizing angle.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AnalyticQuantities {
    /// `(cos(phi/2) + sin(phi/2))^n` at the record's angle.
    pub s1: f64,
    /// Marked-profile power sum at the record's angle.
    pub s2: f64,
    /// `(s1 - s2)/sqrt(N - M)`.
    pub k1: f64,
    /// `s2/sqrt(M)`.
    pub k2: f64,
    /// `sqrt(1 - E)`, the maximal overlap.
    pub lambda: f64,
    /// The maximizing angle the sums were taken at.
    pub phi: f64,
}

impl AnalyticQuantities {
    /// Evaluates the inversion inputs from an entanglement record.
    pub fn from_record(record: &EntanglementRecord, instance: &GroverInstance) -> Self {
        let coeffs = OverlapCoefficients::from_instance_at(instance, record.r);
        let (s1, s2) = coeffs.symmetric_sums(record.phi_star);
        let n_states = instance.num_states() as f64;
        let m = instance.num_marked() as f64;
        Self {
            s1,
            s2,
            k1: (s1 - s2) / (n_states - m).sqrt(),
            k2: s2 / m.sqrt(),
            lambda: (1.0 - record.e).max(0.0).sqrt(),
            phi: record.phi_star,
        }
    }

    /// `k1^2 + k2^2 - lambda^2`; nonnegative up to roundoff for quantities
    /// taken from an actual record.
    pub fn realness_slack(&self) -> f64 {
        self.k1 * self.k1 + self.k2 * self.k2 - self.lambda * self.lambda
    }
}

/// Inverts an entanglement record into the real-valued iteration count
/// `theta/step - 1/2` that produced it.
///
/// The quadratic for `cos(theta_r)` has two roots,
/// `(lambda k1 +/- k2 sqrt(k1^2 + k2^2 - lambda^2)) / (k1^2 + k2^2)`;
/// one sign covers iterations past the entanglement peak and the other the
/// climb before it, so both are formed and the root belonging to the curve is
/// selected: candidates mapping outside `[-1/2, r_opt + 1/2]` are discarded,
/// and the survivor is the one whose angle makes the recorded `phi` an
/// optimizer of the overlap (stationary for interior `phi`, one-sided descent
/// at the `phi = 0` / `phi = pi` boundary).
///
/// Fails with [`Error::AboveBound`] when the radicand is negative beyond
/// roundoff, i.e. the claimed entanglement exceeds the realness cap.
pub fn iterations_for_entanglement(
    q: &AnalyticQuantities,
    instance: &GroverInstance,
) -> Result<f64> {
    let r_sq = q.k1 * q.k1 + q.k2 * q.k2;
    let slack = q.realness_slack();
    if slack < -REALNESS_SLACK {
        return Err(Error::AboveBound { slack });
    }
    let radical = slack.max(0.0).sqrt();
    let step = instance.step_angle();
    let r_opt = f64::from(instance.r_opt());
    let n_states = instance.num_states() as f64;
    let m = instance.num_marked() as f64;
    let coeffs = OverlapCoefficients::from_instance_at(instance, 0);
    let (d1, d2) = coeffs.symmetric_sums_derivative(q.phi);

    let mut best: Option<(bool, f64, f64)> = None;
    for sign in [1.0, -1.0] {
        let cos_theta = ((q.lambda * q.k1 + sign * q.k2 * radical) / r_sq).clamp(-1.0, 1.0);
        let theta = cos_theta.acos();
        let r = theta / step - 0.5;
        // Overlap slope at the recorded angle if the state had this theta.
        let a = theta.cos() / (n_states - m).sqrt();
        let b = theta.sin() / m.sqrt() - a;
        let df = a * d1 + b * d2;
        let score = if q.phi < BOUNDARY_EPS {
            df.max(0.0)
        } else if q.phi > std::f64::consts::PI - BOUNDARY_EPS {
            (-df).max(0.0)
        } else {
            df.abs()
        };
        let out_of_range = !(-0.5 - 1e-6..=r_opt + 0.5 + 1e-6).contains(&r);
        let candidate = (out_of_range, score, r);
        match &best {
            Some(b) if (candidate.0, candidate.1) >= (b.0, b.1) => {}
            _ => best = Some(candidate),
        }
    }
    Ok(best.expect("two candidates always formed").2)
}

/// The record with maximal entanglement; ties resolve to the smallest `r`.
pub fn e_max(curve: &EntanglementCurve) -> (u32, f64) {
    let mut best = &curve.records()[0];
    for rec in curve.records() {
        if rec.e > best.e {
            best = rec;
        }
    }
    (best.r, best.e)
}
