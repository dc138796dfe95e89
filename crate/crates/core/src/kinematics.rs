//! Rotations, Lorentz boosts as squeeze transformations, light-cone
//! coordinates and the velocity/rapidity dictionary.
//!
//! All coordinates are dimensionless oscillator units (ħ = m = ω = c = 1).
//! Positive rapidity boosts toward +z.

use std::f64::consts::FRAC_1_SQRT_2;

use serde::{Deserialize, Serialize};

use crate::error::{domain, Result};

/// Rapidity `η` of a boost; velocity `β = tanh η`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct SqueezeParameter(f64);

impl SqueezeParameter {
    pub const ZERO: SqueezeParameter = SqueezeParameter(0.0);

    pub fn new(eta: f64) -> Result<Self> {
        if !eta.is_finite() {
            return domain(format!("rapidity must be finite, got {eta}"));
        }
        Ok(SqueezeParameter(eta))
    }

    pub fn from_beta(beta: f64) -> Result<Self> {
        eta_from_beta(beta)
    }

    pub fn eta(self) -> f64 {
        self.0
    }

    pub fn beta(self) -> f64 {
        self.0.tanh()
    }

    pub fn cosh(self) -> f64 {
        self.0.cosh()
    }

    pub fn sinh(self) -> f64 {
        self.0.sinh()
    }

    pub fn tanh(self) -> f64 {
        self.0.tanh()
    }
}

impl std::ops::Neg for SqueezeParameter {
    type Output = SqueezeParameter;

    fn neg(self) -> Self {
        SqueezeParameter(-self.0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct PlanePoint {
    pub x: f64,
    pub y: f64,
}

/// Longitudinal and time-like separation.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct SpaceTimePoint {
    pub z: f64,
    pub t: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct LightConePoint {
    pub u: f64,
    pub v: f64,
}

impl PlanePoint {
    pub fn new(x: f64, y: f64) -> Self {
        PlanePoint { x, y }
    }
}

impl SpaceTimePoint {
    pub fn new(z: f64, t: f64) -> Self {
        SpaceTimePoint { z, t }
    }

    /// `z² − t²`, invariant under boosts.
    pub fn interval(self) -> f64 {
        self.z * self.z - self.t * self.t
    }
}

impl LightConePoint {
    pub fn new(u: f64, v: f64) -> Self {
        LightConePoint { u, v }
    }
}

pub fn rotate(p: PlanePoint, theta: f64) -> PlanePoint {
    let (s, c) = theta.sin_cos();
    PlanePoint { x: c * p.x - s * p.y, y: s * p.x + c * p.y }
}

pub fn boost(p: SpaceTimePoint, s: SqueezeParameter) -> SpaceTimePoint {
    let (ch, sh) = (s.cosh(), s.sinh());
    SpaceTimePoint { z: ch * p.z + sh * p.t, t: sh * p.z + ch * p.t }
}

/// `u = (z + t)/√2`, `v = (z − t)/√2`.
pub fn to_light_cone(p: SpaceTimePoint) -> LightConePoint {
    LightConePoint { u: (p.z + p.t) * FRAC_1_SQRT_2, v: (p.z - p.t) * FRAC_1_SQRT_2 }
}

pub fn from_light_cone(p: LightConePoint) -> SpaceTimePoint {
    SpaceTimePoint { z: (p.u + p.v) * FRAC_1_SQRT_2, t: (p.u - p.v) * FRAC_1_SQRT_2 }
}

/// `(u, v) ↦ (e^{η} u, e^{−η} v)`.
pub fn squeeze_light_cone(p: LightConePoint, s: SqueezeParameter) -> LightConePoint {
    let e = s.eta().exp();
    LightConePoint { u: e * p.u, v: p.v / e }
}

pub fn beta_from_eta(s: SqueezeParameter) -> f64 {
    s.beta()
}

pub fn eta_from_beta(beta: f64) -> Result<SqueezeParameter> {
    if beta.is_nan() || beta.abs() >= 1.0 {
        return domain(format!("velocity must satisfy |beta| < 1, got {beta}"));
    }
    Ok(SqueezeParameter(beta.atanh()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, SQRT_2};

    fn eta(x: f64) -> SqueezeParameter {
        SqueezeParameter::new(x).unwrap()
    }

    #[test]
    fn rotation_examples() {
        let q = rotate(PlanePoint::new(1.0, 0.0), FRAC_PI_2);
        assert!(q.x.abs() < 1e-15 && (q.y - 1.0).abs() < 1e-15);
        let p = PlanePoint::new(0.3, -2.0);
        assert_eq!(rotate(p, 0.0), p);
        let q = rotate(PlanePoint::new(1.0, 1.0), FRAC_PI_4);
        assert!(q.x.abs() < 1e-15 && (q.y - SQRT_2).abs() < 1e-15);
    }

    #[test]
    fn boost_examples() {
        let p = SpaceTimePoint::new(1.0, 0.0);
        assert_eq!(boost(p, SqueezeParameter::ZERO), p);
        let q = boost(p, eta(0.8));
        assert_eq!(q, SpaceTimePoint::new(0.8f64.cosh(), 0.8f64.sinh()));
        let back = boost(boost(SpaceTimePoint::new(0.4, -1.2), eta(1.3)), eta(-1.3));
        assert!((back.z - 0.4).abs() < 1e-14 && (back.t + 1.2).abs() < 1e-14);
    }

    #[test]
    fn light_cone_examples() {
        let lc = to_light_cone(SpaceTimePoint::new(1.0, 0.0));
        assert!((lc.u - FRAC_1_SQRT_2).abs() < 1e-16 && (lc.v - FRAC_1_SQRT_2).abs() < 1e-16);
        assert_eq!(to_light_cone(SpaceTimePoint::default()), LightConePoint::default());
        let sq = squeeze_light_cone(LightConePoint::new(1.0, 1.0), eta(2f64.ln()));
        assert!((sq.u - 2.0).abs() < 1e-15 && (sq.v - 0.5).abs() < 1e-15);
    }

    #[test]
    fn beta_eta_pair() {
        assert_eq!(beta_from_eta(SqueezeParameter::ZERO), 0.0);
        assert!((beta_from_eta(eta(1.0)) - 0.761594).abs() < 1e-6);
        assert!(eta_from_beta(1.0).is_err());
        assert!(eta_from_beta(-1.5).is_err());
        assert!(eta_from_beta(f64::NAN).is_err());
        assert!(SqueezeParameter::new(f64::INFINITY).is_err());
    }
}
