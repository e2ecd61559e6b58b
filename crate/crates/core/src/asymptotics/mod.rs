//! Expansions at the dominant singularity `z = 1/12` and what they imply for
//! coefficient growth.
//!
//! Every generating function here is written as `Σ c_i Z^i` with
//! `Z = (1-12z)^{1/2}`, so `z = (1 - Z^2)/12`. In that variable a
//! Puiseux expansion is an ordinary power series, and products and
//! quotients of expansions reduce to series arithmetic.

mod constants;
mod singular;
mod transfer;

use std::ops::Mul;

use num_traits::Zero;

use crate::series::rational::{int, pow};
use crate::series::{Rational, Series};
use crate::Result;

pub use constants::{
    at_root_expansion, expectation_pattern, expectation_submap, rho3_shortcut, singular_s, singular_t,
    ExpectationConstants,
};
pub use singular::{a0_closed_form, a3_closed_form, a_coeff, kappa, m_at_one_expansion, SingularEngine};
pub use transfer::{coefficient_asymptotic, transfer_asymptotic};

/// Truncated expansion `Σ_{i ≤ max_index} c_i (1-12z)^{i/2}`.
#[derive(Clone, PartialEq, Eq)]
pub struct PuiseuxExpansion {
    series: Series,
}

impl PuiseuxExpansion {
    pub fn new(coeffs: Vec<Rational>) -> Self {
        PuiseuxExpansion { series: Series::new(coeffs) }
    }

    /// Reads a power series in `Z = (1-12z)^{1/2}` as an expansion.
    pub fn from_z_series(series: Series) -> Self {
        PuiseuxExpansion { series }
    }

    /// The expansion of `z^d` for any integer `d`.
    pub fn z_power(d: i64, max_index: usize) -> Result<Self> {
        let one_minus_z2 = Series::from_ints(&[1, 0, -1], max_index);
        let base = one_minus_z2.pow(d.unsigned_abs() as usize);
        let series = if d >= 0 { base } else { Series::one(max_index).divide_exact(&base)? };
        Ok(PuiseuxExpansion { series: series.scale(&pow(&int(12), -d)) })
    }

    pub fn coeffs(&self) -> &[Rational] {
        self.series.coeffs()
    }

    pub fn coeff(&self, i: usize) -> &Rational {
        self.series.coeff(i)
    }

    /// Largest index `i` whose coefficient is known.
    pub fn max_index(&self) -> usize {
        self.series.order()
    }

    pub fn as_z_series(&self) -> &Series {
        &self.series
    }

    pub fn truncate(&self, max_index: usize) -> Self {
        PuiseuxExpansion { series: self.series.truncate(max_index) }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        PuiseuxExpansion { series: self.series.scale(c) }
    }

    /// The expansion of `2z d/dz` applied to the function, which in `Z` reads
    /// `-(1-Z^2)/Z d/dZ`. Needs the `Z^1` coefficient to vanish; the result
    /// is known to two indices less.
    pub fn two_z_derivative(&self) -> Result<Self> {
        let over_z = self.series.euler_derivative().shift_down(2)?;
        let factor = Series::from_ints(&[-1, 0, 1], over_z.order());
        Ok(PuiseuxExpansion { series: &factor * &over_z })
    }

    /// Whether every half-integer coefficient up to the known index is zero.
    pub fn is_analytic(&self) -> bool {
        self.coeffs().iter().skip(1).step_by(2).all(Zero::is_zero)
    }
}

impl Mul for &PuiseuxExpansion {
    type Output = PuiseuxExpansion;

    fn mul(self, rhs: &PuiseuxExpansion) -> PuiseuxExpansion {
        PuiseuxExpansion { series: &self.series * &rhs.series }
    }
}

impl std::ops::Sub for &PuiseuxExpansion {
    type Output = PuiseuxExpansion;

    fn sub(self, rhs: &PuiseuxExpansion) -> PuiseuxExpansion {
        PuiseuxExpansion { series: &self.series - &rhs.series }
    }
}

impl std::fmt::Debug for PuiseuxExpansion {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let terms: Vec<String> =
            self.coeffs().iter().enumerate().map(|(i, c)| format!("{c}·(1-12z)^({i}/2)")).collect();
        write!(f, "{}", terms.join(" + "))
    }
}
