//! Geometric measure of entanglement across the iterations of Grover's
//! search.
//!
//! For an `n`-qubit search with `M` marked states the iterate after `r`
//! rounds lives in a two-dimensional subspace, and its distance to the
//! nearest product state reduces to a one-dimensional maximization over a
//! shared Bloch angle. This crate implements that fast path together with
//! everything needed to trust it:
//!
//! - [`grover`] — the invariant-subspace model: angles, optimal iteration
//!   counts, success probability, and the concurrence curve.
//! - [`geometric`] — the symmetric-ansatz overlap, per-iteration
//!   entanglement via bracketed golden-section maximization, the analytic
//!   iteration-count inversion, and the realness bound.
//! - [`closed_forms`] — GHZ, Dicke, and W target values in closed form.
//! - [`statevector`] — brute-force oracle #1: dense `2^n` simulation of the
//!   oracle-plus-diffusion circuit.
//! - [`product_oracle`] — brute-force oracle #2: entanglement over fully
//!   general product states by alternating single-qubit optimization.
//! - [`cli`] — the `grover-ent` command set emitting CSV/JSON/SVG sweeps.
//!
//! Everything is pure and deterministic; randomized pieces (the product
//! oracle restarts) take an explicit seed.

pub mod cli;
pub mod closed_forms;
pub mod error;
pub mod geometric;
pub mod grover;
pub mod product_oracle;
pub mod statevector;

pub use error::{Error, Result};
pub use geometric::{
    e_max, entanglement_at, entanglement_bound, entanglement_curve, iterations_for_entanglement,
    max_overlap, overlap, AnalyticQuantities, EntanglementCurve, EntanglementRecord,
    OverlapCoefficients,
};
pub use grover::{AngleConvention, GroverInstance, MarkedProfile, SubspaceState};
pub use statevector::DenseState;
