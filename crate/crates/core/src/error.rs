use thiserror::Error;

use crate::map::MapError;
use crate::series::{Rational, SeriesError};

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error(transparent)]
    Map(#[from] MapError),
    #[error("unsupported face valency {valency}: {context}")]
    UnsupportedValency { valency: usize, context: &'static str },
    #[error("the empty map cannot be used as a pattern")]
    EmptyPattern,
    #[error("coefficient of z^{index} is {value}, expected a non-negative integer")]
    NonIntegerCoefficient { index: usize, value: Rational },
    #[error("no root of the constant-term quadratic takes the value 4/3 at u = 1")]
    BranchSelectionFailure,
    #[error("expansion known to index {available}, at least {needed} required")]
    InsufficientOrder { needed: usize, available: usize },
    #[error("enumeration size {requested} exceeds the limit {limit}")]
    SizeLimitExceeded { requested: usize, limit: usize },
    #[error("independent routes disagree for {what}: {left} != {right}")]
    InconsistentRoutes { what: String, left: Box<Rational>, right: Box<Rational> },
}
