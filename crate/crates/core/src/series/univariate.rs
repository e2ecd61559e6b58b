//! Dense truncated power series with rational coefficients.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::rational::{int, sqrt_exact, Rational};
use super::SeriesError;

/// `c_0 + c_1 x + ... + c_N x^N + O(x^{N+1})`.
///
/// The coefficient list always has `order + 1` entries. Binary operations
/// truncate to the smaller order of their operands.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Series {
    coeffs: Vec<Rational>,
}

/// Series in `z`, the edge-counting variable.
pub type ZSeries = Series;
/// Series in `v = u - 1`, used for expansions of the singular coefficients around `u = 1`.
pub type VSeries = Series;

impl Series {
    /// Builds a series from its known coefficients; the order is `coeffs.len() - 1`.
    ///
    /// Panics on an empty list: a series always knows at least its constant term.
    pub fn new(coeffs: Vec<Rational>) -> Self {
        assert!(!coeffs.is_empty(), "a series needs at least one known coefficient");
        Series { coeffs }
    }

    /// Pads with zeros or truncates so that exactly `order + 1` coefficients are kept.
    pub fn from_coeffs(mut coeffs: Vec<Rational>, order: usize) -> Self {
        coeffs.resize(order + 1, Rational::zero());
        Series { coeffs }
    }

    pub fn from_ints(coeffs: &[i64], order: usize) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| int(c)).collect(), order)
    }

    pub fn zero(order: usize) -> Self {
        Self::from_coeffs(Vec::new(), order)
    }

    pub fn one(order: usize) -> Self {
        Self::constant(Rational::one(), order)
    }

    pub fn constant(c: Rational, order: usize) -> Self {
        Self::from_coeffs(vec![c], order)
    }

    /// `c x^k`, known to `order`.
    pub fn monomial(c: Rational, k: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if k <= order {
            s.coeffs[k] = c;
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.coeffs
    }

    /// Coefficient of `x^n`; panics past the truncation order.
    pub fn coeff(&self, n: usize) -> &Rational {
        assert!(n <= self.order(), "coefficient x^{n} is unknown: series is only known to order {}", self.order());
        &self.coeffs[n]
    }

    /// Index of the first nonzero coefficient, `None` for the zero series.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn is_zero(&self) -> bool {
        self.valuation().is_none()
    }

    /// Drops coefficients above `order`. Panics if `order` exceeds the known order.
    pub fn truncate(&self, order: usize) -> Self {
        assert!(order <= self.order(), "cannot extend a truncated series");
        Series { coeffs: self.coeffs[..=order].to_vec() }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Series { coeffs: self.coeffs.iter().map(|x| x * c).collect() }
    }

    /// Multiplication by `x^k`. The product is known `k` orders further.
    pub fn shift_up(&self, k: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Series { coeffs }
    }

    /// Division by `x^k`; the low coefficients must vanish.
    pub fn shift_down(&self, k: usize) -> Result<Self, SeriesError> {
        if k > self.order() {
            return Err(SeriesError::InsufficientOrder { needed: k, available: self.order() });
        }
        if let Some(i) = self.coeffs[..k].iter().position(|c| !c.is_zero()) {
            return Err(SeriesError::NonzeroRemainder { index: i });
        }
        Ok(Series { coeffs: self.coeffs[k..].to_vec() })
    }

    /// Exact quotient `self / divisor`.
    ///
    /// A divisor with valuation `v > 0` is handled by cancelling `x^v` from both
    /// operands first, which lowers the result order by `v`.
    pub fn divide_exact(&self, divisor: &Series) -> Result<Self, SeriesError> {
        let v = divisor.valuation().ok_or(SeriesError::DivisionByZero)?;
        let num = self.shift_down(v)?;
        let den = divisor.shift_down(v)?;
        let order = num.order().min(den.order());
        let inv0 = den.coeffs[0].recip();
        let mut q: Vec<Rational> = Vec::with_capacity(order + 1);
        for n in 0..=order {
            let mut acc = num.coeffs[n].clone();
            for (j, qj) in q.iter().enumerate() {
                let d = &den.coeffs[n - j];
                if !d.is_zero() && !qj.is_zero() {
                    acc -= qj * d;
                }
            }
            q.push(acc * &inv0);
        }
        Ok(Series { coeffs: q })
    }

    /// Square root with positive constant term, by Newton iteration
    /// `g <- (g + f/g) / 2`, which doubles the number of correct coefficients per step.
    pub fn sqrt(&self) -> Result<Self, SeriesError> {
        let c0 = &self.coeffs[0];
        let root = match sqrt_exact(c0) {
            Some(r) if !r.is_zero() => r,
            _ => return Err(SeriesError::NotASquareConstant(c0.clone())),
        };
        let half = Rational::new(1.into(), 2.into());
        let target = self.order();
        let mut g = Series::constant(root, 0);
        let mut known = 0;
        while known < target {
            known = (2 * known + 1).min(target);
            let f = self.truncate(known);
            let g_ext = Series::from_coeffs(g.coeffs.clone(), known);
            let q = f.divide_exact(&g_ext)?;
            g = (&g_ext + &q).scale(&half);
        }
        Ok(g)
    }

    /// Formal derivative; the result is known to one order less.
    ///
    /// Panics on a series of order 0, whose derivative carries no information.
    pub fn derivative(&self) -> Self {
        assert!(self.order() >= 1, "derivative needs a series of order >= 1");
        let coeffs = self.coeffs[1..].iter().enumerate().map(|(i, c)| c * int(i as i64 + 1)).collect();
        Series { coeffs }
    }

    /// `x * d/dx`, which keeps the truncation order.
    pub fn euler_derivative(&self) -> Self {
        let coeffs = self.coeffs.iter().enumerate().map(|(i, c)| c * int(i as i64)).collect();
        Series { coeffs }
    }

    /// Composition-free evaluation of the truncated polynomial at `x`.
    pub fn eval_polynomial(&self, x: &Rational) -> Rational {
        self.coeffs.iter().rev().fold(Rational::zero(), |acc, c| acc * x + c)
    }

    /// `self^k` for `k >= 0`.
    pub fn pow(&self, k: usize) -> Self {
        let mut acc = Series::one(self.order());
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    fn zip_with(&self, other: &Series, f: impl Fn(&Rational, &Rational) -> Rational) -> Series {
        let order = self.order().min(other.order());
        let coeffs = (0..=order).map(|i| f(&self.coeffs[i], &other.coeffs[i])).collect();
        Series { coeffs }
    }
}

impl Add for &Series {
    type Output = Series;
    fn add(self, rhs: &Series) -> Series {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl Sub for &Series {
    type Output = Series;
    fn sub(self, rhs: &Series) -> Series {
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl Neg for &Series {
    type Output = Series;
    fn neg(self) -> Series {
        Series { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Mul for &Series {
    type Output = Series;
    /// Cauchy product truncated to the smaller order.
    fn mul(self, rhs: &Series) -> Series {
        let order = self.order().min(rhs.order());
        let mut coeffs = vec![Rational::zero(); order + 1];
        for (i, a) in self.coeffs.iter().take(order + 1).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().take(order + 1 - i).enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        Series { coeffs }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Series {
            type Output = Series;
            fn $m(self, rhs: Series) -> Series {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl fmt::Debug for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "; O(x^{})]", self.order() + 1)
    }
}
