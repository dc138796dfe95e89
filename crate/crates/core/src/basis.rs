//! The two-dimensional Cartesian oscillator basis `χ_a(x) χ_b(y)`.
//!
//! Localized functions are decomposed into coefficient tables by quadrature
//! and reconstructed by summation. The cylindrical and hyperbolic oscillator
//! operators are diagonal on basis labels, with eigenvalues `n_a + n_b + 1`
//! and `n_a − n_b`, so they act on tables rather than on sampled functions.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::quadrature::{for_each_node, integrate_2d_mapped, Frame2, QuadratureRule};
use crate::special::{check_mode, chi_table};

/// Excitation numbers along the two Cartesian axes (`x, y` or `z, t`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Mode2D {
    pub n_a: usize,
    pub n_b: usize,
}

impl Mode2D {
    pub fn new(n_a: usize, n_b: usize) -> Self {
        Mode2D { n_a, n_b }
    }

    pub fn cylindrical_eigenvalue(self) -> f64 {
        (self.n_a + self.n_b + 1) as f64
    }

    pub fn hyperbolic_eigenvalue(self) -> f64 {
        self.n_a as f64 - self.n_b as f64
    }
}

/// Amplitudes over 2D modes, with truncation metadata.
///
/// Serialized as `{"kmax": K, "entries": [[na, nb, amp], ...], "discarded": w}`.
#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
#[serde(into = "TableRepr", from = "TableRepr")]
pub struct CoefficientTable {
    pub entries: BTreeMap<Mode2D, f64>,
    pub k_max: usize,
    pub discarded_weight: f64,
}

#[derive(Serialize, Deserialize)]
struct TableRepr {
    kmax: usize,
    entries: Vec<(usize, usize, f64)>,
    discarded: f64,
}

impl From<CoefficientTable> for TableRepr {
    fn from(t: CoefficientTable) -> Self {
        TableRepr {
            kmax: t.k_max,
            entries: t.entries.into_iter().map(|(m, a)| (m.n_a, m.n_b, a)).collect(),
            discarded: t.discarded_weight,
        }
    }
}

impl From<TableRepr> for CoefficientTable {
    fn from(r: TableRepr) -> Self {
        CoefficientTable {
            entries: r.entries.into_iter().map(|(a, b, amp)| (Mode2D::new(a, b), amp)).collect(),
            k_max: r.kmax,
            discarded_weight: r.discarded,
        }
    }
}

impl CoefficientTable {
    pub fn get(&self, m: Mode2D) -> f64 {
        self.entries.get(&m).copied().unwrap_or(0.0)
    }

    /// `Σ amplitude²`.
    pub fn norm_squared(&self) -> f64 {
        self.entries.values().map(|a| a * a).sum()
    }

    pub fn map_amplitudes(&self, f: impl Fn(Mode2D, f64) -> f64) -> CoefficientTable {
        CoefficientTable {
            entries: self.entries.iter().map(|(&m, &a)| (m, f(m, a))).collect(),
            k_max: self.k_max,
            discarded_weight: self.discarded_weight,
        }
    }

    /// Largest entrywise difference against another table (missing entries
    /// count as zero).
    pub fn max_abs_diff(&self, other: &CoefficientTable) -> f64 {
        self.entries
            .keys()
            .chain(other.entries.keys())
            .map(|&m| (self.get(m) - other.get(m)).abs())
            .fold(0.0, f64::max)
    }
}

/// `χ_{n_a}(a) χ_{n_b}(b)`.
pub fn chi2d(m: Mode2D, a: f64, b: f64) -> Result<f64> {
    Ok(crate::special::chi(m.n_a, a)? * crate::special::chi(m.n_b, b)?)
}

/// Project `f` onto all modes with `n_a, n_b ≤ k_max` using the plain
/// tensor grid for both the projection and the norm.
pub fn decompose(
    f: impl Fn(f64, f64) -> f64,
    k_max: usize,
    rule: &QuadratureRule,
) -> Result<CoefficientTable> {
    decompose_framed(f, k_max, rule, &Frame2::IDENTITY, &Frame2::IDENTITY)
}

/// Project `f` onto all modes with `n_a, n_b ≤ k_max`.
///
/// `projection` places the nodes for `∫ f χ_a χ_b`; `norm` places them for
/// `∫ f²`, which sets `discarded_weight = max(0, ‖f‖² − Σ A²)`.
pub fn decompose_framed(
    f: impl Fn(f64, f64) -> f64,
    k_max: usize,
    rule: &QuadratureRule,
    projection: &Frame2,
    norm: &Frame2,
) -> Result<CoefficientTable> {
    check_mode(k_max)?;
    let dim = k_max + 1;
    let mut acc = vec![0.0; dim * dim];
    let mut failure = None;
    for_each_node(rule, projection, |a, b, w| {
        if failure.is_some() {
            return;
        }
        let value = f(a, b);
        if !value.is_finite() {
            failure = Some(crate::Error::Evaluation { a, b, value });
            return;
        }
        let wf = w * value;
        if wf == 0.0 {
            return;
        }
        let ca = chi_table(k_max, a);
        let cb = chi_table(k_max, b);
        for (i, &x) in ca.iter().enumerate() {
            let wx = wf * x;
            for (j, &y) in cb.iter().enumerate() {
                acc[i * dim + j] += wx * y;
            }
        }
    });
    if let Some(err) = failure {
        return Err(err);
    }

    let entries: BTreeMap<Mode2D, f64> =
        (0..dim * dim).map(|idx| (Mode2D::new(idx / dim, idx % dim), acc[idx])).collect();
    let norm_sq = integrate_2d_mapped(|a, b| f(a, b).powi(2), rule, norm)?;
    let captured: f64 = entries.values().map(|x| x * x).sum();
    Ok(CoefficientTable { entries, k_max, discarded_weight: (norm_sq - captured).max(0.0) })
}

/// `Σ A_m χ_{n_a}(a) χ_{n_b}(b)`.
pub fn reconstruct(c: &CoefficientTable, a: f64, b: f64) -> f64 {
    let top_a = c.entries.keys().map(|m| m.n_a).max().unwrap_or(0);
    let top_b = c.entries.keys().map(|m| m.n_b).max().unwrap_or(0);
    let ca = chi_table(top_a, a);
    let cb = chi_table(top_b, b);
    c.entries.iter().map(|(m, amp)| amp * ca[m.n_a] * cb[m.n_b]).sum()
}

/// Cylindrical operator: amplitudes scaled by `n_a + n_b + 1`.
pub fn apply_cylindrical(c: &CoefficientTable) -> CoefficientTable {
    c.map_amplitudes(|m, a| a * m.cylindrical_eigenvalue())
}

/// Hyperbolic operator: amplitudes scaled by `n_a − n_b`.
pub fn apply_hyperbolic(c: &CoefficientTable) -> CoefficientTable {
    c.map_amplitudes(|m, a| a * m.hyperbolic_eigenvalue())
}

/// `⟨T⟩ = Σ eigenvalue · amplitude²` for a diagonal operator.
pub fn expectation(c: &CoefficientTable, eigenvalue: impl Fn(Mode2D) -> f64) -> f64 {
    c.entries.iter().map(|(&m, a)| eigenvalue(m) * a * a).sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kinematics::{rotate, PlanePoint};
    use crate::quadrature::build_rule;
    use std::f64::consts::PI;

    fn single(m: Mode2D, amp: f64) -> CoefficientTable {
        CoefficientTable { entries: [(m, amp)].into_iter().collect(), k_max: m.n_a.max(m.n_b), discarded_weight: 0.0 }
    }

    #[test]
    fn chi2d_examples() {
        assert!((chi2d(Mode2D::new(0, 0), 0.0, 0.0).unwrap() - 1.0 / PI.sqrt()).abs() < 1e-15);
        assert_eq!(chi2d(Mode2D::new(1, 0), 0.0, 0.37).unwrap(), 0.0);
    }

    #[test]
    fn basis_element_decomposes_to_itself() {
        let rule = build_rule(48).unwrap();
        let t = decompose(|x, y| chi2d(Mode2D::new(2, 3), x, y).unwrap(), 6, &rule).unwrap();
        for (&m, &a) in &t.entries {
            let expected = if m == Mode2D::new(2, 3) { 1.0 } else { 0.0 };
            assert!((a - expected).abs() < 1e-10, "{m:?}: {a}");
        }
        assert!(t.discarded_weight < 1e-10);
    }

    #[test]
    fn rotated_doublet() {
        let rule = build_rule(48).unwrap();
        for theta in [0.0, 0.4, 1.3, 2.9, -0.7] {
            // the function rotated by θ: f(R(−θ) p)
            let f = |x: f64, y: f64| {
                let q = rotate(PlanePoint::new(x, y), -theta);
                chi2d(Mode2D::new(1, 0), q.x, q.y).unwrap()
            };
            let t = decompose(f, 3, &rule).unwrap();
            assert!((t.get(Mode2D::new(1, 0)) - theta.cos()).abs() < 1e-9);
            assert!((t.get(Mode2D::new(0, 1)) - theta.sin()).abs() < 1e-9);
        }
    }

    #[test]
    fn reconstruct_examples() {
        let t = single(Mode2D::new(0, 0), 1.0);
        assert!((reconstruct(&t, 0.0, 0.0) - 1.0 / PI.sqrt()).abs() < 1e-15);

        let rule = build_rule(32).unwrap();
        let f = |x: f64, y: f64| chi2d(Mode2D::new(1, 1), x, y).unwrap();
        let t = decompose(f, 4, &rule).unwrap();
        for &(x, y) in &[(0.0, 0.0), (0.5, -1.2), (2.0, 1.0), (-2.5, 2.5)] {
            assert!((reconstruct(&t, x, y) - f(x, y)).abs() < 1e-9);
        }
    }

    #[test]
    fn diagonal_operators() {
        let ground = single(Mode2D::new(0, 0), 1.0);
        assert_eq!(apply_cylindrical(&ground).get(Mode2D::new(0, 0)), 1.0);
        assert_eq!(apply_hyperbolic(&ground).get(Mode2D::new(0, 0)), 0.0);
        assert_eq!(apply_cylindrical(&single(Mode2D::new(2, 3), 1.0)).get(Mode2D::new(2, 3)), 6.0);
        assert_eq!(apply_hyperbolic(&single(Mode2D::new(3, 1), 1.0)).get(Mode2D::new(3, 1)), 2.0);
    }

    #[test]
    fn operators_are_linear() {
        let a = CoefficientTable {
            entries: [(Mode2D::new(1, 4), 0.3), (Mode2D::new(5, 2), -1.7)].into_iter().collect(),
            k_max: 5,
            discarded_weight: 0.0,
        };
        let b = a.map_amplitudes(|_, x| 2.5 * x);
        for op in [apply_cylindrical, apply_hyperbolic] {
            let lhs = op(&b);
            let rhs = op(&a).map_amplitudes(|_, x| 2.5 * x);
            assert!(lhs.max_abs_diff(&rhs) < 1e-15);
        }
    }

    #[test]
    fn json_layout() {
        let t = CoefficientTable {
            entries: [(Mode2D::new(0, 0), 0.5), (Mode2D::new(2, 1), -0.25)].into_iter().collect(),
            k_max: 2,
            discarded_weight: 1e-3,
        };
        let s = serde_json::to_string(&t).unwrap();
        assert_eq!(s, r#"{"kmax":2,"entries":[[0,0,0.5],[2,1,-0.25]],"discarded":0.001}"#);
        let back: CoefficientTable = serde_json::from_str(&s).unwrap();
        assert_eq!(back, t);
    }

    #[test]
    fn non_finite_integrand_is_reported() {
        let rule = build_rule(8).unwrap();
        assert!(decompose(|_, _| f64::INFINITY, 2, &rule).is_err());
    }
}
