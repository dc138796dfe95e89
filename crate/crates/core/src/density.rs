//! Density matrices of boosted states once the time-like separation is
//! traced out.
//!
//! The reduced density matrix of `ψ_η^n` is diagonal in the oscillator basis
//! with the negative-binomial spectrum
//!
//! ```text
//! λ_k = (1/cosh η)^{2(n+1)} [(n+k)!/(n!k!)] (tanh η)^{2k}
//! ```
//!
//! Purity and entropy are computed from that spectrum. For the ground state
//! the kernel, its diagonal (the parton distribution) and the Wigner function
//! have closed forms, each paired here with a quadrature route over the
//! boosted wavefunction.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::covariant::{evaluate_direct, CovariantState};
use crate::error::{domain, Result};
use crate::kinematics::{eta_from_beta, SpaceTimePoint, SqueezeParameter};
use crate::quadrature::{integrate_1d_mapped, integrate_2d_mapped, Frame2, QuadratureRule};
use crate::series::squeeze_weights;

/// Eigenvalues of the reduced density matrix, with the truncated mass.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DensitySpectrum {
    pub n: usize,
    #[serde(rename = "eta")]
    pub s: SqueezeParameter,
    #[serde(rename = "lambda")]
    pub eigenvalues: Vec<f64>,
    pub tail: f64,
}

impl DensitySpectrum {
    /// `Σ λ_k²`.
    pub fn purity(&self) -> f64 {
        self.eigenvalues.iter().map(|l| l * l).sum()
    }

    /// `−Σ λ_k ln λ_k` with `0 ln 0 = 0`.
    pub fn entropy(&self) -> f64 {
        von_neumann(&self.eigenvalues)
    }

    pub fn trace(&self) -> f64 {
        self.eigenvalues.iter().sum()
    }
}

pub(crate) fn von_neumann(probabilities: &[f64]) -> f64 {
    probabilities
        .iter()
        .filter(|&&p| p > 0.0)
        .fold(0.0, |acc, &p| acc - p * p.ln())
}

pub fn reduced_spectrum(n: usize, s: SqueezeParameter, tol: f64) -> Result<DensitySpectrum> {
    let w = squeeze_weights(n, s, tol)?;
    Ok(DensitySpectrum { n, s, eigenvalues: w.weights, tail: w.tail })
}

/// `Tr ρ²` of the reduced density matrix.
pub fn purity(n: usize, s: SqueezeParameter, tol: f64) -> Result<f64> {
    Ok(reduced_spectrum(n, s, tol)?.purity())
}

/// Von Neumann entropy of the reduced density matrix.
pub fn entropy(n: usize, s: SqueezeParameter, tol: f64) -> Result<f64> {
    Ok(reduced_spectrum(n, s, tol)?.entropy())
}

/// Entropy as a function of the hadron velocity `β = v/c`.
pub fn entropy_vs_velocity(n: usize, beta: f64, tol: f64) -> Result<f64> {
    entropy(n, eta_from_beta(beta)?, tol)
}

/// `2{cosh²η ln cosh η − sinh²η ln sinh η}`, the ground-state entropy.
pub fn ground_entropy_closed(s: SqueezeParameter) -> f64 {
    let eta = s.eta().abs();
    let (ch, sh) = (eta.cosh(), eta.sinh());
    let sinh_term = if sh > 0.0 { sh * sh * sh.ln() } else { 0.0 };
    2.0 * (ch * ch * ch.ln() - sinh_term)
}

/// Pure-state kernel `ψ(z, t) ψ(z', t')`.
pub fn pure_kernel(st: &CovariantState, p: SpaceTimePoint, q: SpaceTimePoint) -> f64 {
    evaluate_direct(st, p) * evaluate_direct(st, q)
}

/// Closed-form ground-state kernel
/// `(π cosh 2η)^{−1/2} exp{−[(z+z')²/cosh 2η + (z−z')² cosh 2η]/4}`.
pub fn ground_density_kernel(s: SqueezeParameter, z: f64, zp: f64) -> f64 {
    let c = (2.0 * s.eta()).cosh();
    let sum = z + zp;
    let diff = z - zp;
    (PI * c).sqrt().recip() * (-0.25 * (sum * sum / c + diff * diff * c)).exp()
}

/// `∫ ψ(z, t) ψ(z', t) dt` by quadrature, with nodes centred on the shifted
/// Gaussian in `t`.
pub fn reduced_kernel_numeric(
    st: &CovariantState,
    z: f64,
    zp: f64,
    rule: &QuadratureRule,
) -> Result<f64> {
    let two_eta = 2.0 * st.s.eta();
    let center = two_eta.tanh() * 0.5 * (z + zp);
    let scale = two_eta.cosh().sqrt().recip();
    integrate_1d_mapped(
        |t| evaluate_direct(st, SpaceTimePoint::new(z, t)) * evaluate_direct(st, SpaceTimePoint::new(zp, t)),
        rule,
        center,
        scale,
    )
}

/// Quark (parton) distribution `ρ(z, z) = (π cosh 2η)^{−1/2} e^{−z²/cosh 2η}`.
pub fn parton_distribution(s: SqueezeParameter, z: f64) -> f64 {
    let c = (2.0 * s.eta()).cosh();
    (PI * c).sqrt().recip() * (-z * z / c).exp()
}

/// Momentum distribution `∫ W(z, p) dz`; same Gaussian as the parton
/// distribution.
pub fn momentum_distribution(s: SqueezeParameter, p: f64) -> f64 {
    parton_distribution(s, p)
}

/// `W(z, p) = (π cosh 2η)^{−1} exp{−(z² + p²)/cosh 2η}`.
pub fn wigner(s: SqueezeParameter, z: f64, p: f64) -> f64 {
    let c = (2.0 * s.eta()).cosh();
    (-(z * z + p * p) / c).exp() / (PI * c)
}

/// `(1/π) ∫ ρ(z+y, z−y) e^{2ipy} dy` with the kernel itself obtained by
/// quadrature over the time-like variable of the boosted ground state.
pub fn wigner_numeric(
    s: SqueezeParameter,
    z: f64,
    p: f64,
    rule: &QuadratureRule,
) -> Result<Complex64> {
    let st = CovariantState::new(0, s)?;
    let scale = (2.0 * s.eta()).cosh().sqrt().recip();
    let mut re = 0.0;
    let mut im = 0.0;
    for (&xi, &w) in rule.nodes().iter().zip(rule.scaled_weights()) {
        let y = scale * xi;
        let rho = reduced_kernel_numeric(&st, z + y, z - y, rule)?;
        let (sin, cos) = (2.0 * p * y).sin_cos();
        re += w * rho * cos;
        im += w * rho * sin;
    }
    Ok(Complex64::new(re, im) * (scale / PI))
}

/// Variance of the position distribution, from the numerically reduced
/// kernel diagonal.
pub fn position_variance(s: SqueezeParameter, rule: &QuadratureRule) -> Result<f64> {
    let st = CovariantState::new(0, s)?;
    let scale = (2.0 * s.eta()).cosh().sqrt();
    let density = |z: f64| reduced_kernel_numeric(&st, z, z, rule);
    // the kernel quadrature is fallible; collect moments in one pass
    let mut m = [0.0f64; 3];
    for (&xi, &w) in rule.nodes().iter().zip(rule.scaled_weights()) {
        let z = scale * xi;
        let rho = density(z)?;
        m[0] += w * rho;
        m[1] += w * rho * z;
        m[2] += w * rho * z * z;
    }
    let mean = m[1] / m[0];
    Ok(m[2] / m[0] - mean * mean)
}

/// Variance of the momentum marginal of the Wigner function.
pub fn momentum_variance(s: SqueezeParameter, rule: &QuadratureRule) -> Result<f64> {
    let scale = (2.0 * s.eta()).cosh().sqrt();
    let frame = Frame2::scaled(scale, scale);
    let total = integrate_2d_mapped(|z, p| wigner(s, z, p), rule, &frame)?;
    let mean = integrate_2d_mapped(|z, p| p * wigner(s, z, p), rule, &frame)? / total;
    let second = integrate_2d_mapped(|z, p| p * p * wigner(s, z, p), rule, &frame)? / total;
    Ok(second - mean * mean)
}

/// Temperature at which `(tanh η)²` is the Boltzmann factor:
/// `T = −1/ln(tanh²η)`, so that `λ_k ∝ e^{−k/T}` for the ground state.
pub fn effective_temperature(s: SqueezeParameter) -> Result<f64> {
    if s.eta() == 0.0 {
        return domain("zero rapidity is the zero-temperature limit");
    }
    let x = s.tanh().powi(2);
    if x >= 1.0 {
        return domain(format!("tanh² rounds to one at eta = {}; temperature is unbounded", s.eta()));
    }
    Ok(-1.0 / x.ln())
}
