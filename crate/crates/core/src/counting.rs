//! Counting sequences of rooted planar maps and their limit laws.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::asymptotics;
use crate::map::PatternDescriptor;
use crate::series::rational::{big, binomial, binomial_int, factorial, int, pow, rat};
use crate::series::{Rational, Series, UPoly, UZSeries};
use crate::{Error, Result};

/// Truncation order used when none is given.
pub const DEFAULT_ORDER: usize = 30;

/// Number of rooted planar maps with `n` edges: `2 (2n)! 3^n / ((n+2)! n!)`.
pub fn m_count(n: usize) -> BigInt {
    let n64 = n as u64;
    let num = BigInt::from(2) * factorial(2 * n64) * BigInt::from(3).pow(n as u32);
    num / (factorial(n64 + 2) * factorial(n64))
}

/// `M(z,1) = sum m_n z^n` from the closed form for the counts.
pub fn m_series(order: usize) -> Series {
    Series::new((0..=order).map(|n| big(m_count(n))).collect())
}

/// `M(z,1)` from its algebraic closed form
/// `(18z - 1 + (1-12z)^{3/2}) / (54 z^2)`, expanded with a series square root.
pub fn m_series_closed_form(order: usize) -> Result<Series> {
    let inner = order + 2;
    let root = Series::from_ints(&[1, -12], inner).sqrt()?;
    let cube = &root * &Series::from_ints(&[1, -12], inner);
    let numerator = &Series::from_ints(&[-1, 18], inner) + &cube;
    Ok(numerator.shift_down(2)?.scale(&rat(1, 54)))
}

/// `M(z,u)`, counting maps by edges (`z`) and root-face valency (`u`), as the
/// fixed point of
/// `M = 1 + z u^2 M^2 + z u (M(z,1) - u M(z,u)) / (1 - u)`.
///
/// Each step of the iteration fixes one more `z` coefficient, so the
/// coefficients are produced one at a time from the already settled ones.
pub fn m_bivariate(order: usize) -> Result<UZSeries> {
    let one_minus_u = UPoly::from_ints(&[1, -1]);
    let u = UPoly::monomial(Rational::one(), 1);
    let u2 = UPoly::monomial(Rational::one(), 2);
    let mut coeffs: Vec<UPoly> = vec![UPoly::one()];
    for n in 1..=order {
        let prev = &coeffs[n - 1];
        let mut square = UPoly::zero();
        for i in 0..n {
            square = &square + &(&coeffs[i] * &coeffs[n - 1 - i]);
        }
        let at_one = UPoly::constant(prev.eval(&Rational::one()));
        let catalytic = (&at_one - &(&u * prev)).divide_exact(&one_minus_u)?;
        coeffs.push(&(&u2 * &square) + &(&u * &catalytic));
    }
    Ok(UZSeries::new(coeffs))
}

/// `M(z,u)` together with the pure-polygon series derived from it.
#[derive(Clone, Debug)]
pub struct PurePolygons {
    m: UZSeries,
}

impl PurePolygons {
    /// Prepares `F_ℓ` for all `ℓ` up to truncation order `order`.
    pub fn new(order: usize) -> Result<Self> {
        Ok(PurePolygons { m: m_bivariate(order)? })
    }

    pub fn order(&self) -> usize {
        self.m.order()
    }

    pub fn m(&self) -> &UZSeries {
        &self.m
    }

    /// `F_ℓ(z) = z^ℓ/(ℓ-1)! ∂_u^{ℓ-1} (u^{ℓ-1} M(z,u)) |_{u=1}`: maps whose root
    /// face is bounded by exactly `ℓ` distinct edges and `ℓ` distinct vertices.
    pub fn f_ell(&self, ell: usize) -> Result<Series> {
        if ell < 2 {
            return Err(Error::UnsupportedValency { valency: ell, context: "pure polygons need ℓ ≥ 2" });
        }
        let order = self.order();
        let mut coeffs = vec![Rational::zero(); order + 1];
        for n in 0..=order.saturating_sub(ell) {
            // (1/(ℓ-1)!) ∂^{ℓ-1} u^{k+ℓ-1} at u = 1 is C(k+ℓ-1, ℓ-1).
            let total = self.m.coeff(n).coeffs().iter().enumerate().fold(BigInt::zero(), |acc, (k, c)| {
                acc + c.to_integer() * binomial_int((k + ell - 1) as u64, (ell - 1) as u64)
            });
            coeffs[n + ell] = big(total);
        }
        Ok(Series::new(coeffs))
    }
}

/// `F_ℓ(z)` to the given truncation order.
pub fn f_ell(ell: usize, order: usize) -> Result<Series> {
    PurePolygons::new(order)?.f_ell(ell)
}

/// `ξ_ℓ`, the limiting probability that the root face is a pure `ℓ`-gon, from
/// its closed double sum.
pub fn xi_double_sum(ell: usize) -> Rational {
    let half = rat(-1, 2);
    let three_halves = rat(-3, 2);
    let mut total = Rational::zero();
    for j in 0..ell {
        for i in 0..ell - j {
            let term = big(binomial_int(ell as u64, (ell - 1 - i - j) as u64))
                * binomial(&half, i)
                * binomial(&three_halves, j)
                * pow(&int(3), -(i as i64))
                * pow(&int(-5), j as i64);
            total += term;
        }
    }
    total * pow(&int(12), -(ell as i64))
}

/// `ξ_ℓ`, computed by the double sum and checked against the coefficient of
/// `(1-12z)^{3/2}` in the singular expansion of `F_ℓ`.
pub fn xi(ell: usize) -> Result<Rational> {
    if ell < 2 {
        return Err(Error::UnsupportedValency { valency: ell, context: "ξ_ℓ is defined for ℓ ≥ 2" });
    }
    let sum = xi_double_sum(ell);
    let singular = asymptotics::kappa(ell, 3)? / rat(8, 3);
    if sum != singular {
        return Err(Error::InconsistentRoutes {
            what: format!("xi({ell})"),
            left: Box::new(sum),
            right: Box::new(singular),
        });
    }
    Ok(sum)
}

/// Limiting probability `p*_k` that the root face has valency `k`: the
/// coefficient of `u^k` in `√3 u / √((u+2)(6-5u)^3)`.
pub fn p_star(k: usize) -> Rational {
    // √3 u/√((u+2)(6-5u)^3) = (u/12) (1+u/2)^{-1/2} (1-5u/6)^{-3/2}, and
    // (1+x)^{-1/2} = Σ C(2i,i)(-x/4)^i, (1-y)^{-3/2} = Σ C(2j,j)(2j+1)(y/4)^j.
    if k == 0 {
        return Rational::zero();
    }
    let mut total = Rational::zero();
    for i in 0..k {
        let j = k - 1 - i;
        let a = big(binomial_int(2 * i as u64, i as u64)) * pow(&rat(-1, 8), i as i64);
        let b = big(binomial_int(2 * j as u64, j as u64) * BigInt::from(2 * j + 1)) * pow(&rat(5, 24), j as i64);
        total += a * b;
    }
    total / int(12)
}

/// The generating function of `p*_k` up to `u^order`, through a series square
/// root of `3(u+2)(6-5u)^3`.
pub fn p_star_series(order: usize) -> Result<Series> {
    let cube = Series::from_ints(&[6, -5], order).pow(3);
    let radicand = (&Series::from_ints(&[2, 1], order) * &cube).scale(&int(3));
    let denominator = radicand.sqrt()?;
    Ok(Series::monomial(int(3), 1, order).divide_exact(&denominator)?)
}

/// Limiting probability that the pattern occurs at the root:
/// `ξ_ℓ 12^{-(k-s)}`.
pub fn local_pattern_probability(d: &PatternDescriptor) -> Result<Rational> {
    Ok(xi(d.ell)? * pow(&int(12), -d.shift()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        let expected = [1, 2, 9, 54, 378, 2916, 24057, 208494];
        for (n, &m) in expected.iter().enumerate() {
            assert_eq!(m_count(n), BigInt::from(m));
        }
    }

    #[test]
    fn closed_form_series_agrees() {
        assert_eq!(m_series_closed_form(25).unwrap(), m_series(25));
    }

    #[test]
    fn bivariate_low_rows() {
        let m = m_bivariate(6).unwrap();
        assert_eq!(m.coeff(0), &UPoly::one());
        assert_eq!(m.coeff(1), &UPoly::from_ints(&[0, 1, 1]));
        for n in 0..=6 {
            assert_eq!(m.coeff(n).eval(&Rational::one()), big(m_count(n)));
            assert!(m.coeff(n).degree().unwrap() <= 2 * n);
        }
    }

    #[test]
    fn pure_polygon_small_values() {
        let p = PurePolygons::new(8).unwrap();
        for ell in 2..=6 {
            let f = p.f_ell(ell).unwrap();
            for n in 0..ell {
                assert!(f.coeff(n).is_zero());
            }
            assert_eq!(f.coeff(ell), &int(1));
        }
        assert_eq!(p.f_ell(2).unwrap().coeff(3), &int(5));
        assert!(matches!(p.f_ell(1), Err(Error::UnsupportedValency { valency: 1, .. })));
    }

    #[test]
    fn pure_polygon_via_derivatives() {
        let p = PurePolygons::new(10).unwrap();
        for ell in 2..=5 {
            let f = p.f_ell(ell).unwrap();
            let mut g = p.m().mul_poly(&UPoly::monomial(int(1), ell - 1));
            for _ in 0..ell - 1 {
                g = g.derivative_u();
            }
            let at_one = g.eval_u(&int(1)).scale(&(Rational::one() / big(factorial(ell as u64 - 1))));
            let shifted = at_one.shift_up(ell).truncate(10);
            assert_eq!(f, shifted);
        }
    }

    #[test]
    fn xi_two() {
        assert_eq!(xi_double_sum(2), rat(7, 108));
    }

    #[test]
    fn p_star_values() {
        assert_eq!(p_star(1), rat(1, 12));
        let series = p_star_series(30).unwrap();
        for k in 1..=30 {
            assert_eq!(series.coeff(k), &p_star(k), "k = {k}");
            assert!(p_star(k) >= pow(&int(12), -(k as i64)));
        }
    }
}
