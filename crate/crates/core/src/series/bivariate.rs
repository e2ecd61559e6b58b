//! Polynomials in `u` and truncated series in `z` with polynomial coefficients.

use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_traits::{One, Zero};

use super::rational::{int, Rational};
use super::univariate::Series;
use super::SeriesError;

/// Polynomial in `u` with trailing zeros trimmed. The zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct UPoly {
    coeffs: Vec<Rational>,
}

impl UPoly {
    pub fn new(coeffs: Vec<Rational>) -> Self {
        let mut p = UPoly { coeffs };
        p.trim();
        p
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| int(c)).collect())
    }

    pub fn zero() -> Self {
        UPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// `c u^k`.
    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); k];
        coeffs.push(c);
        Self::new(coeffs)
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `u^k` (zero past the degree).
    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn eval(&self, u: &Rational) -> Rational {
        self.coeffs.iter().rev().fold(Rational::zero(), |acc, c| acc * u + c)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    /// Multiplication by `u^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![Rational::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        UPoly { coeffs }
    }

    pub fn derivative(&self) -> Self {
        Self::new(self.coeffs.iter().enumerate().skip(1).map(|(i, c)| c * int(i as i64)).collect())
    }

    /// Exact polynomial division; any nonzero remainder is an error.
    pub fn divide_exact(&self, divisor: &UPoly) -> Result<UPoly, SeriesError> {
        let dd = divisor.degree().ok_or(SeriesError::DivisionByZero)?;
        let Some(nd) = self.degree() else {
            return Ok(UPoly::zero());
        };
        if nd < dd {
            return Err(SeriesError::NonzeroRemainder { index: nd });
        }
        let lead_inv = divisor.coeffs[dd].recip();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rational::zero(); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let q = &rem[k + dd] * &lead_inv;
            if !q.is_zero() {
                for (j, d) in divisor.coeffs.iter().enumerate() {
                    rem[k + j] -= &q * d;
                }
            }
            quot[k] = q;
        }
        if let Some(i) = rem.iter().position(|c| !c.is_zero()) {
            return Err(SeriesError::NonzeroRemainder { index: i });
        }
        Ok(UPoly::new(quot))
    }

    /// Expansion around `u = 1`: the coefficients of `p(1 + v)` in powers of `v`.
    pub fn taylor_at_one(&self) -> Vec<Rational> {
        // Repeated synthetic division by (u - 1).
        let mut work = self.coeffs.clone();
        let mut out = Vec::with_capacity(work.len());
        while !work.is_empty() {
            let mut carry = Rational::zero();
            for c in work.iter_mut().rev() {
                carry += &*c;
                *c = carry.clone();
            }
            out.push(work.remove(0));
        }
        out
    }
}

impl Add for &UPoly {
    type Output = UPoly;
    fn add(self, rhs: &UPoly) -> UPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UPoly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &UPoly {
    type Output = UPoly;
    fn sub(self, rhs: &UPoly) -> UPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UPoly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &UPoly {
    type Output = UPoly;
    fn mul(self, rhs: &UPoly) -> UPoly {
        if self.is_zero() || rhs.is_zero() {
            return UPoly::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        UPoly::new(coeffs)
    }
}

impl fmt::Display for UPoly {
    /// `u + 3u^2`, `-1/2 + u`, `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c < &Rational::zero();
            let mag = if neg { -c } else { c.clone() };
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            first = false;
            let unit = mag.is_one();
            match k {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !unit {
                        write!(f, "{mag}")?;
                    }
                    if k == 1 {
                        write!(f, "u")?;
                    } else {
                        write!(f, "u^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for UPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UPoly({self})")
    }
}

/// `Σ_{n ≤ N} P_n(u) z^n + O(z^{N+1})`.
#[derive(Clone, PartialEq, Eq)]
pub struct UZSeries {
    coeffs: Vec<UPoly>,
}

impl UZSeries {
    pub fn new(coeffs: Vec<UPoly>) -> Self {
        assert!(!coeffs.is_empty(), "a series needs at least one known coefficient");
        UZSeries { coeffs }
    }

    pub fn from_coeffs(mut coeffs: Vec<UPoly>, order: usize) -> Self {
        coeffs.resize(order + 1, UPoly::zero());
        UZSeries { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Self::from_coeffs(Vec::new(), order)
    }

    pub fn one(order: usize) -> Self {
        Self::from_coeffs(vec![UPoly::one()], order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[UPoly] {
        &self.coeffs
    }

    pub fn coeff(&self, n: usize) -> &UPoly {
        assert!(n <= self.order(), "coefficient z^{n} is unknown past order {}", self.order());
        &self.coeffs[n]
    }

    pub fn truncate(&self, order: usize) -> Self {
        assert!(order <= self.order(), "cannot extend a truncated series");
        UZSeries { coeffs: self.coeffs[..=order].to_vec() }
    }

    /// Multiplication by the polynomial `p(u)`.
    pub fn mul_poly(&self, p: &UPoly) -> Self {
        UZSeries { coeffs: self.coeffs.iter().map(|c| c * p).collect() }
    }

    /// Coefficientwise exact division by `p(u)`.
    pub fn div_poly_exact(&self, p: &UPoly) -> Result<Self, SeriesError> {
        let coeffs = self.coeffs.iter().map(|c| c.divide_exact(p)).collect::<Result<_, _>>()?;
        Ok(UZSeries { coeffs })
    }

    /// Multiplication by `z^k`; the result is known `k` orders further.
    pub fn shift_z(&self, k: usize) -> Self {
        let mut coeffs = vec![UPoly::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        UZSeries { coeffs }
    }

    pub fn derivative_u(&self) -> Self {
        UZSeries { coeffs: self.coeffs.iter().map(UPoly::derivative).collect() }
    }

    /// Formal `d/dz`; known to one order less.
    pub fn derivative_z(&self) -> Self {
        assert!(self.order() >= 1, "derivative needs a series of order >= 1");
        let coeffs = self.coeffs[1..].iter().enumerate().map(|(i, c)| c.scale(&int(i as i64 + 1))).collect();
        UZSeries { coeffs }
    }

    /// Substitutes a rational value for `u`.
    pub fn eval_u(&self, u: &Rational) -> Series {
        Series::new(self.coeffs.iter().map(|c| c.eval(u)).collect())
    }

    fn zip_with(&self, other: &UZSeries, f: impl Fn(&UPoly, &UPoly) -> UPoly) -> UZSeries {
        let order = self.order().min(other.order());
        UZSeries { coeffs: (0..=order).map(|i| f(&self.coeffs[i], &other.coeffs[i])).collect() }
    }
}

impl Add for &UZSeries {
    type Output = UZSeries;
    fn add(self, rhs: &UZSeries) -> UZSeries {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl Sub for &UZSeries {
    type Output = UZSeries;
    fn sub(self, rhs: &UZSeries) -> UZSeries {
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl Mul for &UZSeries {
    type Output = UZSeries;
    fn mul(self, rhs: &UZSeries) -> UZSeries {
        let order = self.order().min(rhs.order());
        let mut coeffs = vec![UPoly::zero(); order + 1];
        for i in 0..=order {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..=order - i {
                if !rhs.coeffs[j].is_zero() {
                    coeffs[i + j] = &coeffs[i + j] + &(&self.coeffs[i] * &rhs.coeffs[j]);
                }
            }
        }
        UZSeries { coeffs }
    }
}

impl fmt::Debug for UZSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.coeffs.iter()).finish()
    }
}
