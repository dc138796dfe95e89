//! Gauss–Hermite quadrature in one and two dimensions.
//!
//! Rules are built with the Golub–Welsch construction (eigenvalues of the
//! Jacobi matrix of the Hermite recurrence), polished by Newton steps on the
//! normalized recurrence. Weights come from the Christoffel function
//! `1 / Σ_k χ_k(x_i)²`, which yields the Gaussian-rescaled weights `w_i e^{x_i²}`
//! directly and without overflow.
//!
//! Integrands are passed *with* their own Gaussian decay; the rule re-weights
//! internally. Strongly squeezed or shifted integrands should be integrated in
//! a [`Frame2`] (or with [`integrate_1d_mapped`]) whose axes follow the
//! integrand's envelope.

use std::f64::consts::FRAC_1_SQRT_2;

use nalgebra::DMatrix;

use crate::error::{domain, Error, Result};
use crate::special::chi_table;

/// Largest supported rule order.
pub const MAX_ORDER: usize = 256;

/// Oracle order used throughout the crate unless overridden.
pub const DEFAULT_ORDER: usize = 96;

#[derive(Debug, Clone, PartialEq)]
pub struct QuadratureRule {
    order: usize,
    nodes: Vec<f64>,
    weights: Vec<f64>,
    scaled_weights: Vec<f64>,
}

impl QuadratureRule {
    pub fn order(&self) -> usize {
        self.order
    }

    /// Nodes in increasing order.
    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    /// Weights for the weight function `e^{−x²}`.
    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    /// `w_i e^{x_i²}`: weights for integrands that carry their own decay.
    pub fn scaled_weights(&self) -> &[f64] {
        &self.scaled_weights
    }

    /// `Σ w_i g(x_i) ≈ ∫ g(x) e^{−x²} dx`.
    pub fn integrate_weighted(&self, g: impl Fn(f64) -> f64) -> f64 {
        self.nodes.iter().zip(&self.weights).map(|(&x, &w)| w * g(x)).sum()
    }
}

/// Build the `order`-point Gauss–Hermite rule.
pub fn build_rule(order: usize) -> Result<QuadratureRule> {
    if order == 0 || order > MAX_ORDER {
        return domain(format!("quadrature order must lie in 1..={MAX_ORDER}, got {order}"));
    }

    let mut jacobi = DMatrix::<f64>::zeros(order, order);
    for k in 1..order {
        let off = (k as f64 / 2.0).sqrt();
        jacobi[(k, k - 1)] = off;
        jacobi[(k - 1, k)] = off;
    }
    let mut nodes: Vec<f64> = jacobi.symmetric_eigenvalues().iter().copied().collect();
    nodes.sort_by(|a, b| a.total_cmp(b));

    let nf = order as f64;
    for x in nodes.iter_mut() {
        for _ in 0..3 {
            let chis = chi_table(order, *x);
            let (c_n, c_nm1) = (chis[order], chis[order - 1]);
            let deriv = (2.0 * nf).sqrt() * c_nm1 - *x * c_n;
            if deriv == 0.0 {
                break;
            }
            let step = c_n / deriv;
            *x -= step;
            if step.abs() <= 1e-16 * x.abs().max(1.0) {
                break;
            }
        }
    }

    // enforce exact symmetry about the origin
    for i in 0..order / 2 {
        let j = order - 1 - i;
        let m = 0.5 * (nodes[j] - nodes[i]);
        nodes[i] = -m;
        nodes[j] = m;
    }
    if order % 2 == 1 {
        nodes[order / 2] = 0.0;
    }

    let scaled_weights: Vec<f64> = nodes
        .iter()
        .map(|&x| {
            let sum: f64 = chi_table(order - 1, x).iter().map(|c| c * c).sum();
            1.0 / sum
        })
        .collect();
    let weights = nodes
        .iter()
        .zip(&scaled_weights)
        .map(|(&x, &s)| s * (-x * x).exp())
        .collect();

    Ok(QuadratureRule { order, nodes, weights, scaled_weights })
}

fn checked(value: f64, a: f64, b: f64) -> Result<f64> {
    if value.is_finite() {
        Ok(value)
    } else {
        Err(Error::Evaluation { a, b, value })
    }
}

/// `∫ f(x) dx` for an integrand that carries its own Gaussian decay.
pub fn integrate_1d(f: impl Fn(f64) -> f64, rule: &QuadratureRule) -> Result<f64> {
    integrate_1d_mapped(f, rule, 0.0, 1.0)
}

/// `∫ f(x) dx` evaluated at `x = center + scale·ξ` on the rule nodes `ξ`.
pub fn integrate_1d_mapped(
    f: impl Fn(f64) -> f64,
    rule: &QuadratureRule,
    center: f64,
    scale: f64,
) -> Result<f64> {
    let mut acc = 0.0;
    for (&xi, &w) in rule.nodes.iter().zip(&rule.scaled_weights) {
        let x = center + scale * xi;
        acc += w * checked(f(x), x, 0.0)?;
    }
    Ok(acc * scale.abs())
}

/// Affine map `(ξ, ζ) ↦ origin + ξ·axes[0] + ζ·axes[1]` from quadrature
/// coordinates into the integration plane.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Frame2 {
    pub origin: [f64; 2],
    pub axes: [[f64; 2]; 2],
}

impl Frame2 {
    pub const IDENTITY: Frame2 = Frame2 { origin: [0.0, 0.0], axes: [[1.0, 0.0], [0.0, 1.0]] };

    /// Axis-aligned scaling.
    pub fn scaled(sa: f64, sb: f64) -> Self {
        Frame2 { origin: [0.0, 0.0], axes: [[sa, 0.0], [0.0, sb]] }
    }

    /// Light-cone frame in the `(z, t)` plane: `ξ` runs along
    /// `u = (z+t)/√2` with scale `su`, `ζ` along `v = (z−t)/√2` with scale `sv`.
    pub fn light_cone(su: f64, sv: f64) -> Self {
        let r = FRAC_1_SQRT_2;
        Frame2 { origin: [0.0, 0.0], axes: [[su * r, su * r], [sv * r, -sv * r]] }
    }

    pub fn with_origin(mut self, a: f64, b: f64) -> Self {
        self.origin = [a, b];
        self
    }

    pub fn jacobian(&self) -> f64 {
        let [[a, b], [c, d]] = self.axes;
        (a * d - b * c).abs()
    }

    pub fn map(&self, xi: f64, zeta: f64) -> (f64, f64) {
        (
            self.origin[0] + xi * self.axes[0][0] + zeta * self.axes[1][0],
            self.origin[1] + xi * self.axes[0][1] + zeta * self.axes[1][1],
        )
    }
}

/// `∫∫ f(a, b) da db` on the tensor-product grid.
pub fn integrate_2d(f: impl Fn(f64, f64) -> f64, rule: &QuadratureRule) -> Result<f64> {
    integrate_2d_mapped(f, rule, &Frame2::IDENTITY)
}

/// `∫∫ f(a, b) da db` with the tensor grid carried into the plane by `frame`.
pub fn integrate_2d_mapped(
    f: impl Fn(f64, f64) -> f64,
    rule: &QuadratureRule,
    frame: &Frame2,
) -> Result<f64> {
    let mut acc = 0.0;
    for (&xi, &wx) in rule.nodes.iter().zip(&rule.scaled_weights) {
        let mut row = 0.0;
        for (&zeta, &wz) in rule.nodes.iter().zip(&rule.scaled_weights) {
            let (a, b) = frame.map(xi, zeta);
            row += wz * checked(f(a, b), a, b)?;
        }
        acc += wx * row;
    }
    Ok(acc * frame.jacobian())
}

/// Visit every node of the mapped tensor grid with its full weight
/// (including the Jacobian). Used by projections that share one set of
/// integrand samples across many basis functions.
pub(crate) fn for_each_node(
    rule: &QuadratureRule,
    frame: &Frame2,
    mut visit: impl FnMut(f64, f64, f64),
) {
    let jac = frame.jacobian();
    for (&xi, &wx) in rule.nodes.iter().zip(&rule.scaled_weights) {
        for (&zeta, &wz) in rule.nodes.iter().zip(&rule.scaled_weights) {
            let (a, b) = frame.map(xi, zeta);
            visit(a, b, wx * wz * jac);
        }
    }
}
