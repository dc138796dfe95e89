//! Hermite polynomials, normalized oscillator eigenfunctions and log-space
//! combinatorics.
//!
//! The eigenfunctions
//!
//! ```text
//! χ_n(x) = [1 / (√π 2ⁿ n!)]^{1/2} H_n(x) e^{−x²/2}
//! ```
//!
//! are evaluated through the orthonormal three-term recurrence with a running
//! logarithmic scale, so the normalization never passes through `2ⁿ n!` and
//! the Gaussian is applied in the same exponent. Values stay finite for every
//! mode up to the ceiling and any finite argument.

use std::f64::consts::PI;
use std::sync::atomic::{AtomicUsize, Ordering};

use crate::error::{domain, Result};

/// Default upper bound on oscillator quantum numbers.
pub const DEFAULT_MODE_CEILING: usize = 512;

/// Hard limit accepted by [`set_mode_ceiling`].
pub const MAX_MODE_CEILING: usize = 1 << 16;

static MODE_CEILING: AtomicUsize = AtomicUsize::new(DEFAULT_MODE_CEILING);

/// Current ceiling on oscillator quantum numbers.
pub fn mode_ceiling() -> usize {
    MODE_CEILING.load(Ordering::Relaxed)
}

/// Reconfigure the mode ceiling. Returns the previous value.
pub fn set_mode_ceiling(ceiling: usize) -> Result<usize> {
    if ceiling == 0 || ceiling > MAX_MODE_CEILING {
        return domain(format!(
            "mode ceiling must lie in 1..={MAX_MODE_CEILING}, got {ceiling}"
        ));
    }
    Ok(MODE_CEILING.swap(ceiling, Ordering::Relaxed))
}

pub(crate) fn check_mode(n: usize) -> Result<()> {
    let ceiling = mode_ceiling();
    if n > ceiling {
        return domain(format!("mode index {n} exceeds ceiling {ceiling}"));
    }
    Ok(())
}

/// Physicists' Hermite polynomial `H_n(x)` from the recurrence
/// `H_{k+1} = 2x H_k − 2k H_{k−1}`.
///
/// Large `n` at large `|x|` overflows to infinity; use [`chi`] for the
/// normalized eigenfunction.
pub fn hermite(n: usize, x: f64) -> Result<f64> {
    check_mode(n)?;
    if !x.is_finite() {
        return domain(format!("hermite argument must be finite, got {x}"));
    }
    let mut prev = 1.0;
    if n == 0 {
        return Ok(prev);
    }
    let mut cur = 2.0 * x;
    for k in 1..n {
        let next = 2.0 * x * cur - 2.0 * k as f64 * prev;
        prev = cur;
        cur = next;
    }
    Ok(cur)
}

/// Oscillator eigenfunction `χ_n(x)`.
pub fn chi(n: usize, x: f64) -> Result<f64> {
    check_mode(n)?;
    if !x.is_finite() {
        return domain(format!("chi argument must be finite, got {x}"));
    }
    Ok(chi_single(n, x))
}

/// All eigenfunctions `χ_0(x), …, χ_n(x)` in one recurrence pass.
pub fn chi_all(n: usize, x: f64) -> Result<Vec<f64>> {
    check_mode(n)?;
    if !x.is_finite() {
        return domain(format!("chi argument must be finite, got {x}"));
    }
    Ok(chi_table(n, x))
}

// Orthonormal recurrence for h_k = χ_k e^{x²/2} with a shared log scale;
// `sink(k, χ_k(x))` is called for k = 0..=n.
fn chi_recurrence(n: usize, x: f64, mut sink: impl FnMut(usize, f64)) {
    const RESCALE: f64 = 1e150;
    let ln_rescale = RESCALE.ln();
    let gauss = -0.5 * x * x;
    let emit = |h: f64, shift: f64| -> f64 {
        if h == 0.0 {
            0.0
        } else {
            h.signum() * (h.abs().ln() + shift + gauss).exp()
        }
    };

    let mut prev = 0.0;
    let mut cur = PI.powf(-0.25);
    let mut shift = 0.0;
    sink(0, emit(cur, shift));
    for k in 0..n {
        let kf = k as f64;
        let next = (2.0 / (kf + 1.0)).sqrt() * x * cur - (kf / (kf + 1.0)).sqrt() * prev;
        prev = cur;
        cur = next;
        if cur.abs() > RESCALE {
            cur /= RESCALE;
            prev /= RESCALE;
            shift += ln_rescale;
        }
        sink(k + 1, emit(cur, shift));
    }
}

pub(crate) fn chi_table(n: usize, x: f64) -> Vec<f64> {
    let mut out = Vec::with_capacity(n + 1);
    chi_recurrence(n, x, |_, v| out.push(v));
    out
}

pub(crate) fn chi_single(n: usize, x: f64) -> f64 {
    let mut last = 0.0;
    chi_recurrence(n, x, |_, v| last = v);
    last
}

/// `ln(n!)`.
///
/// Exact integer factorial below 32, Stirling series above (truncation error
/// far below double precision there).
pub fn log_factorial(n: usize) -> f64 {
    if n < 2 {
        return 0.0;
    }
    if n < 32 {
        let f: u128 = (2..=n as u128).product();
        return (f as f64).ln();
    }
    let x = n as f64;
    let inv = 1.0 / x;
    let inv2 = inv * inv;
    // 1/(12x) − 1/(360x³) + 1/(1260x⁵) − 1/(1680x⁷)
    let series = inv * (1.0 / 12.0 - inv2 * (1.0 / 360.0 - inv2 * (1.0 / 1260.0 - inv2 / 1680.0)));
    x * x.ln() - x + 0.5 * (2.0 * PI * x).ln() + series
}

/// `ln[(n+k)! / (n! k!)]`.
pub fn log_binomial(n: usize, k: usize) -> f64 {
    log_factorial(n + k) - log_factorial(n) - log_factorial(k)
}

/// `[(n+k)! / (n! k!)]^{1/2}`, the amplitude weight of the boosted-state
/// expansion.
pub fn sqrt_binomial_ratio(n: usize, k: usize) -> Result<f64> {
    let total = n.checked_add(k).ok_or_else(|| {
        crate::Error::Domain(format!("n + k overflows for n={n}, k={k}"))
    })?;
    check_mode(total)?;
    Ok((0.5 * log_binomial(n, k)).exp())
}
