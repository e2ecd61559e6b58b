//! Coefficient asymptotics from singular expansions. This is the only place
//! where exact values become floating point.

use num_traits::Zero;

use super::PuiseuxExpansion;
use crate::series::rational::to_f64;
use crate::{Error, Result};

/// `[w^n] (1-w)^{-α}` to relative order `n^{-corrections}`:
/// `n^{α-1}/Γ(α) (1 + α(α-1)/(2n) + α(α-1)(α-2)(3α-1)/(24n^2))`.
///
/// Returns 0 when `α` is a non-positive integer, where the function is a
/// polynomial.
pub fn coefficient_asymptotic(alpha: f64, n: f64, corrections: usize) -> f64 {
    if alpha <= 0.0 && alpha.fract() == 0.0 {
        return 0.0;
    }
    let terms = [
        1.0,
        alpha * (alpha - 1.0) / (2.0 * n),
        alpha * (alpha - 1.0) * (alpha - 2.0) * (3.0 * alpha - 1.0) / (24.0 * n * n),
    ];
    let sum: f64 = terms.iter().take(corrections + 1).sum();
    n.powf(alpha - 1.0) / libm::tgamma(alpha) * sum
}

/// Asymptotic value of `[z^n] Σ c_i (1-12z)^{i/2}`.
///
/// Term `i` contributes `12^n c_i n^{-i/2-1}/Γ(-i/2)` times a correction
/// series in `1/n`. Every piece whose order exceeds that of the first
/// unknown half-integer coefficient is kept; the rest would be noise.
pub fn transfer_asymptotic(e: &PuiseuxExpansion, n: usize) -> Result<f64> {
    if e.max_index() < 5 {
        return Err(Error::InsufficientOrder { needed: 5, available: e.max_index() });
    }
    let first_unknown = if e.max_index().is_multiple_of(2) { e.max_index() + 1 } else { e.max_index() + 2 };
    let cutoff = first_unknown as f64 / 2.0 + 1.0;
    let nf = n as f64;
    let mut total = 0.0;
    for i in (1..=e.max_index()).step_by(2) {
        let c = e.coeff(i);
        if c.is_zero() {
            continue;
        }
        let leading = i as f64 / 2.0 + 1.0;
        // correction p has order n^{-(leading + p)}
        let corrections = (0..=2).take_while(|&p| leading + (p as f64) < cutoff).count();
        if corrections == 0 {
            continue;
        }
        total += to_f64(c) * coefficient_asymptotic(-(i as f64) / 2.0, nf, corrections - 1);
    }
    Ok(total * 12f64.powi(n as i32))
}
