//! Photon-number states: single-mode coherent states and two-mode squeezed
//! states generated by `(1/cosh η)^{n+1} exp{tanh η · a₁†a₂†} |n, 0⟩`.
//!
//! Two-mode amplitudes are built by repeated application of the pair
//! creation operator `a₁†a₂†` on Fock kets, an independent route to the
//! numbers produced by [`crate::covariant::series_coefficients`].

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::density::von_neumann;
use crate::error::{domain, Result};
use crate::kinematics::SqueezeParameter;
use crate::series::{poisson_weights, squeeze_weights};

/// Two-mode state `Σ_k c_k |n+k, k⟩`. Serialized as
/// `{"n": …, "eta": …, "c": […], "tail": …}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TwoModeState {
    pub n: usize,
    #[serde(rename = "eta")]
    pub s: SqueezeParameter,
    #[serde(rename = "c")]
    pub amplitudes: Vec<f64>,
    pub tail: f64,
}

/// Truncated coherent state `e^{−|α|²/2} Σ α^n/√(n!) |n⟩`.
#[derive(Debug, Clone, PartialEq)]
pub struct CoherentState {
    pub alpha: Complex64,
    pub amplitudes: Vec<Complex64>,
    pub tail: f64,
}

impl CoherentState {
    pub fn mean_photon_number(&self) -> f64 {
        self.amplitudes
            .iter()
            .enumerate()
            .map(|(n, a)| n as f64 * a.norm_sqr())
            .sum()
    }

    pub fn probabilities(&self) -> Vec<f64> {
        self.amplitudes.iter().map(|a| a.norm_sqr()).collect()
    }
}

pub fn coherent(alpha: Complex64, tol: f64) -> Result<CoherentState> {
    if !(alpha.re.is_finite() && alpha.im.is_finite()) {
        return domain(format!("coherent amplitude must be finite, got {alpha}"));
    }
    let mean = alpha.norm_sqr();
    let trunc = poisson_weights(mean, tol)?;
    // α^n/√(n!) by the ladder a† |n⟩ = √(n+1) |n+1⟩
    let mut amp = Complex64::new((-0.5 * mean).exp(), 0.0);
    let mut amplitudes = Vec::with_capacity(trunc.weights.len());
    for n in 0..trunc.weights.len() {
        if n > 0 {
            amp = amp * alpha / (n as f64).sqrt();
        }
        amplitudes.push(amp);
    }
    Ok(CoherentState { alpha, amplitudes, tail: trunc.tail })
}

/// `|n+k, k⟩` amplitudes of `(1/cosh η)^{n+1} exp{tanh η · a₁†a₂†} |n, 0⟩`.
pub fn n_photon_squeezed(n: usize, s: SqueezeParameter, tol: f64) -> Result<TwoModeState> {
    let trunc = squeeze_weights(n, s, tol)?;
    let th = s.tanh();
    // (th a₁†a₂†)^k / k! |n, 0⟩ = th^k √((n+k)!/n!) √(k!) / k! |n+k, k⟩;
    // step k−1 → k multiplies by th · √(n+k) · √k / k
    let mut c = (-((n + 1) as f64) * s.cosh().ln()).exp();
    let mut amplitudes = Vec::with_capacity(trunc.weights.len());
    for k in 0..trunc.weights.len() {
        if k > 0 {
            let kf = k as f64;
            c *= th * ((n as f64 + kf) / kf).sqrt();
        }
        amplitudes.push(c);
    }
    Ok(TwoModeState { n, s, amplitudes, tail: trunc.tail })
}

/// Two-photon coherent state `(1/cosh η) Σ (tanh η)^k |k, k⟩`.
pub fn squeezed_vacuum(s: SqueezeParameter, tol: f64) -> Result<TwoModeState> {
    n_photon_squeezed(0, s, tol)
}

impl TwoModeState {
    /// Photon-number distribution of mode 2 once mode 1 is left unobserved:
    /// `P(k) = c_k²`.
    pub fn mode2_distribution(&self) -> Vec<f64> {
        self.amplitudes.iter().map(|c| c * c).collect()
    }

    /// `−Σ P(k) ln P(k)`.
    pub fn entanglement_entropy(&self) -> f64 {
        von_neumann(&self.mode2_distribution())
    }
}

pub fn mode2_distribution(st: &TwoModeState) -> Vec<f64> {
    st.mode2_distribution()
}

pub fn entanglement_entropy(st: &TwoModeState) -> f64 {
    st.entanglement_entropy()
}
