//! Exact rational arithmetic and truncated power-series algebra.
//!
//! Values are immutable once built and every operation is a pure function,
//! so series can be shared freely across threads.

pub mod bivariate;
pub mod rational;
pub mod univariate;

use thiserror::Error;

pub use bivariate::{UPoly, UZSeries};
pub use rational::Rational;
pub use univariate::{Series, VSeries, ZSeries};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    /// Exact division left a nonzero coefficient at `index` in the remainder.
    #[error("exact division left a nonzero remainder at index {index}")]
    NonzeroRemainder { index: usize },
    #[error("constant term {0} has no positive rational square root")]
    NotASquareConstant(Rational),
    #[error("division by the zero series")]
    DivisionByZero,
    #[error("operation needs order {needed} but the series is only known to order {available}")]
    InsufficientOrder { needed: usize, available: usize },
}
