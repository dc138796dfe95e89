//! Truncation of the probability series shared by the boosted-state
//! expansion, the reduced density spectrum and the photon-number
//! distributions.
//!
//! Weights are generated in log space. Past the truncation index the
//! remaining mass is summed explicitly until a geometric bound (valid once
//! the term ratio has dropped below one and keeps decreasing) certifies the
//! rest is negligible, so the reported tail is a value, not just a bound.

use crate::error::{domain, Error, Result};
use crate::kinematics::SqueezeParameter;
use crate::special::{log_binomial, mode_ceiling};

/// Leading weights of a normalized series and the mass left out.
#[derive(Debug, Clone, PartialEq)]
pub struct Truncated {
    pub weights: Vec<f64>,
    pub tail: f64,
}

pub(crate) fn check_tol(tol: f64) -> Result<()> {
    if !(tol > 0.0 && tol < 1.0) {
        return domain(format!("tolerance must lie in (0, 1), got {tol}"));
    }
    Ok(())
}

// Extra terms generated past the ceiling while resolving the tail.
const OVERSHOOT: usize = 200_000;

/// Truncate `Σ_k λ_k` (total mass one) at the smallest `K ≤ max_index` whose
/// tail is below `tol`.
///
/// `ln_weight(k)` gives `ln λ_k`; `ratio(k)` gives `λ_{k+1}/λ_k`, which must be
/// non-increasing in `k`.
fn truncate(
    ln_weight: impl Fn(usize) -> f64,
    ratio: impl Fn(usize) -> f64,
    tol: f64,
    max_index: usize,
) -> Result<Truncated> {
    check_tol(tol)?;
    let target = 1e-3 * tol.min(1e-15);
    let cap = max_index.saturating_add(OVERSHOOT);

    let mut terms = Vec::new();
    let mut remainder = f64::INFINITY;
    let mut k = 0usize;
    loop {
        terms.push(ln_weight(k).exp());
        let r = ratio(k + 1);
        if r < 1.0 {
            let next = ln_weight(k + 1).exp();
            remainder = next / (1.0 - r);
            if remainder < target {
                break;
            }
        }
        if k >= cap {
            break;
        }
        k += 1;
    }
    if !remainder.is_finite() {
        let kept: f64 = terms.iter().sum();
        remainder = (1.0 - kept).max(0.0);
    }

    // tails[j] = mass beyond index j
    let mut tails = vec![0.0; terms.len()];
    let mut acc = remainder;
    for j in (0..terms.len()).rev() {
        tails[j] = acc;
        acc += terms[j];
    }

    let limit = max_index.min(terms.len() - 1);
    match (0..=limit).find(|&j| tails[j] < tol) {
        Some(cut) => {
            terms.truncate(cut + 1);
            Ok(Truncated { weights: terms, tail: tails[cut] })
        }
        None => Err(Error::Truncation { tol, tail: tails[limit], ceiling: mode_ceiling() }),
    }
}

/// `λ_k = (1/cosh η)^{2(n+1)} [(n+k)!/(n!k!)] (tanh η)^{2k}` truncated at tail
/// `< tol`, with `n + K` kept within the mode ceiling.
pub fn squeeze_weights(n: usize, s: SqueezeParameter, tol: f64) -> Result<Truncated> {
    check_tol(tol)?;
    let ceiling = mode_ceiling();
    if n > ceiling {
        return domain(format!("mode index {n} exceeds ceiling {ceiling}"));
    }
    let th = s.tanh().abs();
    if th == 0.0 {
        return Ok(Truncated { weights: vec![1.0], tail: 0.0 });
    }
    let x = th * th;
    let ln_sech = -s.eta().abs().cosh().ln();
    let ln_x = x.ln();
    let np1 = (n + 1) as f64;
    truncate(
        |k| 2.0 * np1 * ln_sech + log_binomial(n, k) + k as f64 * ln_x,
        |k| x * (n + k + 1) as f64 / (k + 1) as f64,
        tol,
        ceiling - n,
    )
}

/// Poisson weights `e^{−μ} μ^k / k!` truncated at tail `< tol`.
pub fn poisson_weights(mean: f64, tol: f64) -> Result<Truncated> {
    check_tol(tol)?;
    if !(mean >= 0.0 && mean.is_finite()) {
        return domain(format!("Poisson mean must be finite and non-negative, got {mean}"));
    }
    if mean == 0.0 {
        return Ok(Truncated { weights: vec![1.0], tail: 0.0 });
    }
    let ln_mean = mean.ln();
    truncate(
        |k| -mean + k as f64 * ln_mean - crate::special::log_factorial(k),
        |k| mean / (k + 1) as f64,
        tol,
        mode_ceiling(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn eta(x: f64) -> SqueezeParameter {
        SqueezeParameter::new(x).unwrap()
    }

    #[test]
    fn unboosted_series_is_a_single_term() {
        let t = squeeze_weights(3, SqueezeParameter::ZERO, 1e-12).unwrap();
        assert_eq!(t.weights, vec![1.0]);
        assert_eq!(t.tail, 0.0);
    }

    #[test]
    fn geometric_case_has_closed_form_tail() {
        // n = 0: λ_k = (1−x) x^k, tail after K is x^{K+1}
        let s = eta(0.9);
        let x = s.tanh().powi(2);
        let t = squeeze_weights(0, s, 1e-9).unwrap();
        let k = t.weights.len() - 1;
        assert!((t.tail - x.powi(k as i32 + 1)).abs() < 1e-15);
        assert!(t.tail < 1e-9);
        assert!(x.powi(k as i32) >= 1e-9);
        for (j, w) in t.weights.iter().enumerate() {
            assert!((w - (1.0 - x) * x.powi(j as i32)).abs() < 1e-14);
        }
    }

    #[test]
    fn mass_is_conserved() {
        for n in [0usize, 1, 4, 9] {
            for e in [0.3, 1.0, 1.5] {
                let t = squeeze_weights(n, eta(e), 1e-13).unwrap();
                let total: f64 = t.weights.iter().sum::<f64>() + t.tail;
                assert!((total - 1.0).abs() < 1e-12, "n={n} eta={e}: {total}");
            }
        }
    }

    #[test]
    fn extreme_boost_hits_the_ceiling() {
        let err = squeeze_weights(0, eta(8.0), 1e-12).unwrap_err();
        assert!(matches!(err, Error::Truncation { .. }));
    }

    #[test]
    fn bad_tolerance() {
        assert!(squeeze_weights(0, eta(1.0), 0.0).is_err());
        assert!(squeeze_weights(0, eta(1.0), 1.0).is_err());
        assert!(poisson_weights(1.0, f64::NAN).is_err());
    }

    #[test]
    fn poisson_mass() {
        let t = poisson_weights(6.25, 1e-13).unwrap();
        let total: f64 = t.weights.iter().sum::<f64>() + t.tail;
        assert!((total - 1.0).abs() < 1e-12);
    }
}
