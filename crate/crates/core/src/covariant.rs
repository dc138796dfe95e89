//! Lorentz-boosted oscillator states `ψ_η^n(z, t)`.
//!
//! The rest-frame state carries `n` longitudinal quanta and no time-like
//! excitation, `ψ_0^n(z, t) = χ_n(z) χ_0(t)`. The boosted state is the same
//! function read in squeezed light-cone coordinates:
//!
//! ```text
//! ψ_η^n = [1/(π n! 2ⁿ)]^{1/2} H_n((e^{−η}u + e^{η}v)/√2) exp(−(e^{−2η}u² + e^{2η}v²)/2)
//! ```
//!
//! Its expansion in the fixed basis is
//!
//! ```text
//! ψ_η^n = (1/cosh η)^{n+1} Σ_k [(n+k)!/(n!k!)]^{1/2} (tanh η)^k χ_{n+k}(z) χ_k(t)
//! ```
//!
//! so every term has hyperbolic eigenvalue `n`.

use std::f64::consts::FRAC_1_SQRT_2;

use serde::{Deserialize, Serialize};

use crate::basis::{decompose_framed, reconstruct, CoefficientTable, Mode2D};
use crate::error::Result;
use crate::kinematics::{squeeze_light_cone, to_light_cone, SpaceTimePoint, SqueezeParameter};
use crate::quadrature::{integrate_2d_mapped, Frame2, QuadratureRule};
use crate::series::squeeze_weights;
use crate::special::{check_mode, chi_single, sqrt_binomial_ratio};

/// Boosted oscillator state with `n` longitudinal quanta. Serialized as
/// `{"n": n, "eta": η}`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CovariantState {
    pub n: usize,
    #[serde(rename = "eta")]
    pub s: SqueezeParameter,
}

impl CovariantState {
    pub fn new(n: usize, s: SqueezeParameter) -> Result<Self> {
        check_mode(n)?;
        Ok(CovariantState { n, s })
    }

    pub fn at_rest(n: usize) -> Result<Self> {
        Self::new(n, SqueezeParameter::ZERO)
    }

    /// Light-cone frame matched to the state's own Gaussian envelope, so
    /// `|ψ|²` becomes polynomial times the rule weight.
    pub fn envelope_frame(&self) -> Frame2 {
        let e = self.s.eta().exp();
        Frame2::light_cone(e, 1.0 / e)
    }

    pub fn evaluate_direct(&self, p: SpaceTimePoint) -> f64 {
        evaluate_direct(self, p)
    }
}

/// Light-cone frame matched to the product `ψ_a ψ_b`.
pub fn product_frame(a: SqueezeParameter, b: SqueezeParameter) -> Frame2 {
    let (ea, eb) = (2.0 * a.eta(), 2.0 * b.eta());
    let su = (2.0 / ((-ea).exp() + (-eb).exp())).sqrt();
    let sv = (2.0 / (ea.exp() + eb.exp())).sqrt();
    Frame2::light_cone(su, sv)
}

/// Direct evaluation of `ψ_η^n(z, t)`.
pub fn evaluate_direct(st: &CovariantState, p: SpaceTimePoint) -> f64 {
    // (e^{−η}u, e^{η}v) are the rest-frame light-cone coordinates; the Hermite
    // argument is their z-combination and the Gaussian splits as
    // e^{−z'²/2} e^{−t'²/2}, so ψ_η^n = χ_n(z') χ_0(t').
    let lc = squeeze_light_cone(to_light_cone(p), -st.s);
    let z_rest = (lc.u + lc.v) * FRAC_1_SQRT_2;
    let t_rest = (lc.u - lc.v) * FRAC_1_SQRT_2;
    chi_single(st.n, z_rest) * chi_single(0, t_rest)
}

/// Expansion coefficients `c_k` at modes `(n+k, k)`, truncated at the
/// smallest `K` whose analytic tail probability is below `tol`.
pub fn series_coefficients(st: &CovariantState, tol: f64) -> Result<CoefficientTable> {
    let weights = squeeze_weights(st.n, st.s, tol)?;
    let n = st.n;
    let th = st.s.tanh();
    let ln_sech = -st.s.cosh().ln();
    let mut entries = std::collections::BTreeMap::new();
    for k in 0..weights.weights.len() {
        let amp = if k == 0 {
            ((n + 1) as f64 * ln_sech).exp()
        } else {
            let mag = ((n + 1) as f64 * ln_sech + k as f64 * th.abs().ln()).exp()
                * sqrt_binomial_ratio(n, k)?;
            if th < 0.0 && k % 2 == 1 {
                -mag
            } else {
                mag
            }
        };
        entries.insert(Mode2D::new(n + k, k), amp);
    }
    let k_max = n + weights.weights.len() - 1;
    Ok(CoefficientTable { entries, k_max, discarded_weight: weights.tail })
}

/// `ψ_η^n(z, t)` summed from the truncated expansion.
pub fn evaluate_series(st: &CovariantState, p: SpaceTimePoint, tol: f64) -> Result<f64> {
    Ok(reconstruct(&series_coefficients(st, tol)?, p.z, p.t))
}

/// `∫ ψ_a(z, t) ψ_b(z, t) dz dt`. The states are real, so the conjugate is
/// the identity.
pub fn overlap(a: &CovariantState, b: &CovariantState, rule: &QuadratureRule) -> Result<f64> {
    let frame = product_frame(a.s, b.s);
    integrate_2d_mapped(
        |z, t| {
            let p = SpaceTimePoint::new(z, t);
            evaluate_direct(a, p) * evaluate_direct(b, p)
        },
        rule,
        &frame,
    )
}

/// `∫ |ψ_η^n|² dz dt`.
pub fn norm_squared(st: &CovariantState, rule: &QuadratureRule) -> Result<f64> {
    overlap(st, st, rule)
}

/// Overlap with the rest-frame state of the same `n`:
/// `(1 − β²)^{(n+1)/2} = (1/cosh η)^{n+1}`.
pub fn contraction_law(n: usize, s: SqueezeParameter) -> f64 {
    (-((n + 1) as f64) * s.cosh().ln()).exp()
}

/// Numerical expansion of `ψ_η^n` in the fixed basis up to `k_max`.
pub fn decompose_state(
    st: &CovariantState,
    k_max: usize,
    rule: &QuadratureRule,
) -> Result<CoefficientTable> {
    decompose_framed(
        |z, t| evaluate_direct(st, SpaceTimePoint::new(z, t)),
        k_max,
        rule,
        &product_frame(st.s, SqueezeParameter::ZERO),
        &st.envelope_frame(),
    )
}

/// Expectation of the cylindrical operator `(n_a + n_b + 1)` in the
/// probability series carried by the expansion: `Σ_k (n + 2k + 1) λ_k`.
pub fn cylindrical_expectation(n: usize, s: SqueezeParameter, tol: f64) -> Result<f64> {
    let w = squeeze_weights(n, s, tol)?;
    Ok(w.weights
        .iter()
        .enumerate()
        .map(|(k, l)| (n + 2 * k + 1) as f64 * l)
        .sum())
}
