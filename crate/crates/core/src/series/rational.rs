//! Exact rational scalars.
//!
//! Every numeric value produced upstream of the transfer step is a
//! [`Rational`]. The backing type normalizes after each operation, so the
//! denominator is always positive and coprime to the numerator.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub type Rational = BigRational;

/// `p/q` as a [`Rational`]. Panics when `q == 0`.
pub fn rat(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

pub fn int(p: i64) -> Rational {
    Rational::from_integer(BigInt::from(p))
}

pub fn big(p: BigInt) -> Rational {
    Rational::from_integer(p)
}

/// Exact rational square root, if one exists.
pub fn sqrt_exact(x: &Rational) -> Option<Rational> {
    if x.is_negative() {
        return None;
    }
    let n = x.numer();
    let d = x.denom();
    let rn = n.sqrt();
    let rd = d.sqrt();
    if &(&rn * &rn) == n && &(&rd * &rd) == d {
        Some(Rational::new(rn, rd))
    } else {
        None
    }
}

/// Generalized binomial coefficient `C(x, k)` via the falling factorial.
pub fn binomial(x: &Rational, k: usize) -> Rational {
    let mut acc = Rational::one();
    for j in 0..k {
        acc *= x - int(j as i64);
        acc /= int(j as i64 + 1);
    }
    acc
}

/// Ordinary binomial coefficient as an exact integer.
pub fn binomial_int(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for j in 0..k {
        acc *= n - j;
        acc /= j + 1;
    }
    acc
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, j| acc * j)
}

pub fn pow(base: &Rational, exp: i64) -> Rational {
    let mut acc = Rational::one();
    let b = if exp < 0 { base.recip() } else { base.clone() };
    for _ in 0..exp.unsigned_abs() {
        acc *= &b;
    }
    acc
}

pub fn to_f64(x: &Rational) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

/// Parses `p`, `-p` or `p/q`.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().ok()?;
            let q: BigInt = q.trim().parse().ok()?;
            if q.is_zero() {
                return None;
            }
            Some(Rational::new(p, q))
        }
        None => s.parse::<BigInt>().ok().map(Rational::from_integer),
    }
}
