//! Exact generating functions and asymptotic constants for the expected
//! number of pattern and submap occurrences of a fixed rooted planar map in
//! uniformly random rooted planar maps with `n` edges.
//!
//! The pipeline runs entirely over exact rationals:
//!
//! * [`series`]: truncated power series over `Q`, including series in `z`
//!   with polynomial coefficients in `u`.
//! * [`map`]: rooted planar maps as rotation systems and the statistics the
//!   counting formulas consume.
//! * [`counting`]: `m_n`, `M(z,u)`, pure-polygon series `F_ℓ`, limit laws.
//! * [`occurrence`]: occurrence generating functions at the root, as marked
//!   patterns, and as marked submaps.
//! * [`asymptotics`]: singular expansions at `z = 1/12` and the expectation
//!   constants; the transfer step is the only floating-point boundary.
//! * [`oracle`]: exhaustive enumeration of small maps used to validate every
//!   formula coefficient by brute force.
//! * [`cli`]: the `planocc` command-line front end.

pub mod asymptotics;
pub mod cli;
pub mod counting;
pub mod map;
pub mod occurrence;
pub mod oracle;
pub mod series;

mod error;

pub use error::{Error, Result};
pub use map::{CombinatorialMap, PatternDescriptor};
pub use series::{Rational, Series, UPoly, UZSeries};
