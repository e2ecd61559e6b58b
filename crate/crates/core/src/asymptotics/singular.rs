//! The coefficients `a_i(u)` of `M(z,u) = Σ a_i(u) (1-12z)^{i/2}` and the
//! pure-polygon constants `κ_{ℓ,i}` built from them.
//!
//! The `a_i` are kept as truncated series in `v = u - 1`: every constant
//! downstream is a finite combination of `u`-derivatives at `u = 1`.

use num_traits::Zero;

use super::PuiseuxExpansion;
use crate::series::rational::{big, binomial_int, int, pow, rat};
use crate::series::{Rational, Series, VSeries};
use crate::{Error, Result};

/// `M(z,1)` in powers of `Z = (1-12z)^{1/2}`.
///
/// Substituting `z = (1-Z^2)/12` into `(18z - 1 + Z^3)/(54 z^2)` gives
/// `(4/3 - 4Z^2 + 8/3 Z^3) / (1-Z^2)^2`, a rational function of `Z`.
pub fn m_at_one_expansion(max_index: usize) -> PuiseuxExpansion {
    let numerator = Series::from_coeffs(vec![rat(4, 3), int(0), int(-4), rat(8, 3)], max_index);
    let denominator = Series::from_ints(&[1, 0, -1], max_index).pow(2);
    let series = numerator.divide_exact(&denominator).expect("constant term 1");
    PuiseuxExpansion::from_z_series(series)
}

/// Solver for `a_0, …, a_{max_index}` as series in `v` to a fixed order.
#[derive(Clone, Debug)]
pub struct SingularEngine {
    a: Vec<VSeries>,
    v_order: usize,
}

impl SingularEngine {
    /// Compares powers of `Z` in
    /// `12(1-u) M = 12(1-u) + (1-Z^2)(u^2(1-u) M^2 + u M(z,1) - u^2 M)`.
    ///
    /// The constant term is a quadratic in `a_0`; every later one is linear in
    /// `a_i` with a coefficient equal to 1 at `u = 1`.
    pub fn new(max_index: usize, v_order: usize) -> Result<Self> {
        let k = v_order;
        let c = m_at_one_expansion(max_index);
        let c_at = |i: isize| if i < 0 { Rational::zero() } else { c.coeff(i as usize).clone() };

        let a0 = solve_constant_term(c.coeff(0), k)?;
        let u = Series::from_ints(&[1, 1], k);
        let u2 = u.pow(2);
        let v = Series::monomial(int(1), 1, k);
        let u2_v = &u2 * &v;
        // 12(1-u) - 2u^2(1-u)a_0 + u^2 = -12v + 2u^2 v a_0 + u^2.
        let bracket = &(&v.scale(&int(-12)) + &(&u2_v * &a0).scale(&int(2))) + &u2;

        let zero = Series::zero(k);
        let mut a: Vec<VSeries> = vec![a0];
        // squares[j] = [Z^j] M^2
        let mut squares: Vec<VSeries> = vec![&a[0] * &a[0]];
        for i in 1..=max_index {
            let mut cross = zero.clone();
            for j in 1..i {
                cross = &cross + &(&a[j] * &a[i - j]);
            }
            let q_prev = if i >= 2 { squares[i - 2].clone() } else { zero.clone() };
            let a_prev = if i >= 2 { a[i - 2].clone() } else { zero.clone() };
            let dc = c_at(i as isize) - c_at(i as isize - 2);
            // u^2(1-u)(S_i - Q_{i-2}) = -u^2 v (S_i - Q_{i-2})
            let rhs = &(&(&u2_v * &(&cross - &q_prev)).scale(&int(-1)) + &u.scale(&dc)) + &(&u2 * &a_prev);
            let ai = rhs.divide_exact(&bracket)?;
            a.push(ai);
            let mut sq = zero.clone();
            for j in 0..=i {
                sq = &sq + &(&a[j] * &a[i - j]);
            }
            squares.push(sq);
        }
        Ok(SingularEngine { a, v_order })
    }

    pub fn max_index(&self) -> usize {
        self.a.len() - 1
    }

    pub fn v_order(&self) -> usize {
        self.v_order
    }

    pub fn a(&self, i: usize) -> &VSeries {
        &self.a[i]
    }

    /// `κ_{ℓ,i}`, the coefficient of `(1-12z)^{i/2}` in `F_ℓ`.
    ///
    /// `F_ℓ = z^ℓ Σ_j Z^j [v^{ℓ-1}]((1+v)^{ℓ-1} a_j(v))`, and
    /// `z^ℓ = 12^{-ℓ} Σ_p C(ℓ,p) (-1)^p Z^{2p}`.
    pub fn kappa(&self, ell: usize, i: usize) -> Result<Rational> {
        check_ell(ell)?;
        if ell - 1 > self.v_order || i > self.max_index() {
            return Err(Error::InsufficientOrder {
                needed: (ell - 1).max(i),
                available: self.v_order.min(self.max_index()),
            });
        }
        let mut total = Rational::zero();
        for p in 0..=(i / 2).min(ell) {
            let term = big(binomial_int(ell as u64, p as u64)) * self.derivative_functional(ell, i - 2 * p);
            if p % 2 == 0 {
                total += term;
            } else {
                total -= term;
            }
        }
        Ok(total * pow(&int(12), -(ell as i64)))
    }

    /// `[v^{ℓ-1}] (1+v)^{ℓ-1} a_j(v)`, which equals
    /// `(1/(ℓ-1)!) ∂_u^{ℓ-1}(u^{ℓ-1} a_j(u))` at `u = 1`.
    fn derivative_functional(&self, ell: usize, j: usize) -> Rational {
        let a = &self.a[j];
        (0..ell)
            .map(|t| big(binomial_int(ell as u64 - 1, t as u64)) * a.coeff(ell - 1 - t))
            .fold(Rational::zero(), |acc, x| acc + x)
    }

    /// `Σ_{i ≤ max_index} κ_{ℓ,i} (1-12z)^{i/2}`.
    pub fn pure_gon(&self, ell: usize) -> Result<PuiseuxExpansion> {
        let coeffs = (0..=self.max_index()).map(|i| self.kappa(ell, i)).collect::<Result<_>>()?;
        Ok(PuiseuxExpansion::new(coeffs))
    }
}

fn check_ell(ell: usize) -> Result<()> {
    if ell < 2 {
        return Err(Error::UnsupportedValency { valency: ell, context: "pure polygons need ℓ ≥ 2" });
    }
    Ok(())
}

/// The branch of `A a^2 + B a + C = 0` that takes the value `c0` at `v = 0`.
fn solve_constant_term(c0: &Rational, k: usize) -> Result<VSeries> {
    let n = k + 1;
    let a = Series::from_ints(&[0, -1, -2, -1], n);
    let b = Series::from_ints(&[-1, 10, -1], n);
    let c = Series::from_coeffs(vec![c0.clone(), c0 - int(12)], n);
    let disc = &(&b * &b) - &(&a * &c).scale(&int(4));
    let root = disc.sqrt()?;
    let two_a = a.scale(&int(2));
    for sign in [-1, 1] {
        let numerator = &b.scale(&int(-1)) + &root.scale(&int(sign));
        if let Ok(q) = numerator.divide_exact(&two_a) {
            if q.coeff(0) == c0 {
                return Ok(q.truncate(k));
            }
        }
    }
    Err(Error::BranchSelectionFailure)
}

/// `a_i(u)` as a series in `v = u - 1` known to `v^{v_order}`.
pub fn a_coeff(i: usize, v_order: usize) -> Result<VSeries> {
    Ok(SingularEngine::new(i, v_order)?.a(i).clone())
}

/// `κ_{ℓ,i}` for a single pair.
pub fn kappa(ell: usize, i: usize) -> Result<Rational> {
    check_ell(ell)?;
    SingularEngine::new(i, ell - 1)?.kappa(ell, i)
}

/// `√(3(u+2)(6-5u)^3)` around `u = 1`, i.e. `√(3(3+v)(1-5v)^3)`.
fn sqrt_w(order: usize) -> Result<Series> {
    let cube = Series::from_ints(&[1, -5], order).pow(3);
    Ok((&Series::from_ints(&[9, 3], order) * &cube).sqrt()?)
}

/// `a_3(u) = 8u / √(3(u+2)(6-5u)^3)` as a `v`-series.
pub fn a3_closed_form(v_order: usize) -> Result<VSeries> {
    let numerator = Series::from_ints(&[8, 8], v_order);
    Ok(numerator.divide_exact(&sqrt_w(v_order)?)?)
}

/// `a_0(u) = (-3u^2 + 36u - 36 + √(3(u+2)(6-5u)^3)) / (6u^2(u-1))` as a
/// `v`-series.
pub fn a0_closed_form(v_order: usize) -> Result<VSeries> {
    let n = v_order + 1;
    // -3(1+v)^2 + 36(1+v) - 36 = -3 + 30v - 3v^2
    let numerator = &Series::from_ints(&[-3, 30, -3], n) + &sqrt_w(n)?;
    let denominator = Series::from_ints(&[0, 6, 12, 6], n);
    Ok(numerator.divide_exact(&denominator)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn m_at_one_leading_terms() {
        let c = m_at_one_expansion(5);
        let expected = [rat(4, 3), int(0), rat(-4, 3), rat(8, 3), int(-4), rat(16, 3)];
        assert_eq!(c.coeffs(), &expected);
    }

    #[test]
    fn values_at_u_equal_one() {
        let engine = SingularEngine::new(7, 4).unwrap();
        let c = m_at_one_expansion(7);
        for i in 0..=7 {
            assert_eq!(engine.a(i).coeff(0), c.coeff(i), "a_{i}(1)");
        }
        assert!(engine.a(1).is_zero());
    }

    #[test]
    fn closed_forms() {
        let engine = SingularEngine::new(3, 10).unwrap();
        assert_eq!(engine.a(0), &a0_closed_form(10).unwrap());
        assert_eq!(engine.a(3), &a3_closed_form(10).unwrap());
    }

    #[test]
    fn kappa_three_zero() {
        assert_eq!(kappa(3, 0).unwrap(), rat(2, 729));
        assert!(kappa(2, 1).unwrap().is_zero());
    }

    #[test]
    fn pure_gon_expansion_reproduces_kappa() {
        let engine = SingularEngine::new(5, 4).unwrap();
        let f = engine.pure_gon(5).unwrap();
        for i in 0..=5 {
            assert_eq!(f.coeff(i), &kappa(5, i).unwrap());
        }
    }

    #[test]
    fn unsupported_valency() {
        assert!(matches!(kappa(1, 3), Err(Error::UnsupportedValency { valency: 1, .. })));
    }
}
