//! Elastic form factor of a boosted oscillator ground state in the Breit
//! frame, where the hadron momentum flips from `p` to `−p` and the
//! four-momentum transfer is `(2p, 0)`.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::covariant::{evaluate_direct, CovariantState};
use crate::error::{domain, Error, Result};
use crate::kinematics::{SpaceTimePoint, SqueezeParameter};
use crate::quadrature::{for_each_node, integrate_1d_mapped, Frame2, QuadratureRule};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BreitKinematics {
    pub p: f64,
    pub m: f64,
    pub beta: f64,
    pub eta: SqueezeParameter,
}

impl BreitKinematics {
    pub fn energy(&self) -> f64 {
        self.p.hypot(self.m)
    }

    /// `(p, E) − (−p, E)`.
    pub fn momentum_transfer(&self) -> (f64, f64) {
        (2.0 * self.p, 0.0)
    }

    fn cosh_2eta(&self) -> f64 {
        (2.0 * self.eta.eta()).cosh()
    }
}

/// One row of a form-factor curve.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FormFactorPoint {
    pub p: f64,
    pub m: f64,
    pub eta: f64,
    pub f: f64,
}

pub fn breit_frame(p: f64, m: f64) -> Result<BreitKinematics> {
    if !(m > 0.0 && m.is_finite()) {
        return domain(format!("hadron mass must be positive and finite, got {m}"));
    }
    if !(p >= 0.0 && p.is_finite()) {
        return domain(format!("momentum must be finite and non-negative, got {p}"));
    }
    let beta = p / p.hypot(m);
    // artanh(p/E) = asinh(p/m), which stays finite for any finite p
    let eta = SqueezeParameter::new((p / m).asinh())?;
    Ok(BreitKinematics { p, m, beta, eta })
}

/// Target accuracy behind [`resolution_limit`].
pub const RESOLUTION_TARGET: f64 = 1e-10;

/// Largest per-axis phase frequency `ω` (in quadrature coordinates) the rule
/// is trusted to resolve.
///
/// An `n`-point rule integrates `cos(ωx) e^{−x²}` with a remainder of roughly
/// `(e ω² / 4n)^n`; the limit keeps that below [`RESOLUTION_TARGET`].
pub fn resolution_limit(rule: &QuadratureRule) -> f64 {
    let n = rule.order() as f64;
    (4.0 * n / std::f64::consts::E).sqrt() * RESOLUTION_TARGET.powf(0.5 / n)
}

/// `∫ e^{2ipz} ψ_η(z, t) ψ_{−η}(z, t) dz dt` for the ground state, real and
/// imaginary parts.
pub fn form_factor_numeric_complex(
    k: &BreitKinematics,
    rule: &QuadratureRule,
) -> Result<Complex64> {
    let incoming = CovariantState::new(0, k.eta)?;
    let outgoing = CovariantState::new(0, -k.eta)?;
    // the product envelope is isotropic with width 1/√cosh 2η
    let scale = k.cosh_2eta().sqrt().recip();
    let frame = Frame2::light_cone(scale, scale);

    let frequency = 2.0 * k.p * scale * std::f64::consts::FRAC_1_SQRT_2;
    let limit = resolution_limit(rule);
    if frequency > limit {
        return Err(Error::Resolution { frequency, limit, order: rule.order() });
    }

    let mut re = 0.0;
    let mut im = 0.0;
    let mut failure = None;
    for_each_node(rule, &frame, |z, t, w| {
        let p = SpaceTimePoint::new(z, t);
        let value = evaluate_direct(&incoming, p) * evaluate_direct(&outgoing, p);
        if !value.is_finite() && failure.is_none() {
            failure = Some(Error::Evaluation { a: z, b: t, value });
        }
        let (sin, cos) = (2.0 * k.p * z).sin_cos();
        re += w * value * cos;
        im += w * value * sin;
    });
    match failure {
        Some(err) => Err(err),
        None => Ok(Complex64::new(re, im)),
    }
}

/// Real part of the Breit-frame overlap integral.
pub fn form_factor_numeric(k: &BreitKinematics, rule: &QuadratureRule) -> Result<f64> {
    Ok(form_factor_numeric_complex(k, rule)?.re)
}

/// `∫ ψ_η(z, t) ψ_{−η}(z, t) dt` at fixed `z`, the integrand left after the
/// time-like integration.
pub fn time_integrated_overlap(
    s: SqueezeParameter,
    z: f64,
    rule: &QuadratureRule,
) -> Result<f64> {
    let incoming = CovariantState::new(0, s)?;
    let outgoing = CovariantState::new(0, -s)?;
    let scale = (2.0 * s.eta()).cosh().sqrt().recip();
    integrate_1d_mapped(
        |t| {
            let p = SpaceTimePoint::new(z, t);
            evaluate_direct(&incoming, p) * evaluate_direct(&outgoing, p)
        },
        rule,
        0.0,
        scale,
    )
}

/// `F(p) = e^{−p²/cosh 2η} / cosh 2η`.
pub fn form_factor_closed(k: &BreitKinematics) -> f64 {
    let c = k.cosh_2eta();
    (-k.p * k.p / c).exp() / c
}

/// Form factor of the unsqueezed wavefunction, `e^{−p²}`.
pub fn static_form_factor(p: f64) -> f64 {
    (-p * p).exp()
}

/// `F(p)²`: the two-oscillator-mode squaring heuristic behind the dipole
/// cut-off. Illustrative only.
pub fn dipole_model(k: &BreitKinematics) -> f64 {
    form_factor_closed(k).powi(2)
}

pub fn form_factor_point(k: &BreitKinematics) -> FormFactorPoint {
    FormFactorPoint { p: k.p, m: k.m, eta: k.eta.eta(), f: form_factor_closed(k) }
}
