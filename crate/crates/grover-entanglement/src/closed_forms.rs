//! Closed-form geometric entanglement of the named target states.
//!
//! GHZ, Dicke, and W states all have nonnegative permutation-symmetric
//! amplitudes, so their closest product state is symmetric and the maximal
//! overlap comes out in closed form.

use crate::error::{Error, Result};

/// An `n`-qubit Dicke state with `k` excitations: the uniform superposition
/// of every basis state of Hamming weight `k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DickeSpec {
    pub n: u32,
    pub k: u32,
}

impl DickeSpec {
    pub fn new(n: u32, k: u32) -> Result<Self> {
        if !(1..=30).contains(&n) {
            return Err(Error::QubitCount { n, min: 1, max: 30 });
        }
        if k > n {
            return Err(Error::WeightOutOfRange { weight: k, n });
        }
        Ok(Self { n, k })
    }
}

/// Binomial coefficient as f64; exact in the double mantissa for `n <= 30`.
pub fn binomial(n: u32, k: u32) -> f64 {
    if k > n {
        return 0.0;
    }
    let k = k.min(n - k);
    let mut acc = 1.0f64;
    for i in 0..k {
        acc = acc * f64::from(n - i) / f64::from(i + 1);
    }
    acc.round()
}

/// Entanglement of the `n`-qubit GHZ state `(|0..0> + |1..1>)/sqrt(2)`.
///
/// The closest product state is either basis term, overlap `1/sqrt(2)`,
/// independent of `n >= 2`.
pub fn ghz_entanglement(n: u32) -> f64 {
    debug_assert!(n >= 2);
    0.5
}

/// Entanglement of `|D_k^n>`: `1 - C(n,k) k^k (n-k)^(n-k) / n^n`,
/// with `0^0 = 1` so the boundary states come out exactly separable.
pub fn dicke_entanglement(spec: DickeSpec) -> f64 {
    let n = f64::from(spec.n);
    let k = f64::from(spec.k);
    // (k/n)^k (1 - k/n)^(n-k) keeps every factor in [0, 1]; Rust's
    // powi(0) = 1 supplies the 0^0 convention at k = 0 and k = n.
    let peak = (k / n).powi(spec.k as i32) * ((n - k) / n).powi((spec.n - spec.k) as i32);
    (1.0 - binomial(spec.n, spec.k) * peak).max(0.0)
}

/// Entanglement of the `n`-qubit W state: `1 - ((n-1)/n)^(n-1)`.
pub fn w_entanglement(n: u32) -> f64 {
    debug_assert!(n >= 2);
    1.0 - ((f64::from(n) - 1.0) / f64::from(n)).powi(n as i32 - 1)
}
