//! Ground truth by exhaustive enumeration of small rooted planar maps.
//!
//! Everything here is independent of the generating-function machinery, so
//! agreement between the two is evidence for both.

pub mod cache;
mod enumerate;
mod occurrences;
mod verify;

pub use enumerate::{
    enumerate_maps, enumerate_maps_with_limit, enumerate_up_to, EnumerationResult, DEFAULT_LIMIT, HARD_LIMIT,
};
pub use occurrences::{count_at_root, count_marked_patterns, count_marked_submaps};
pub use verify::{verify_pattern, Check, VerificationReport};

/// Number of maps with `n` edges whose root face is a pure `ell`-gon.
pub fn count_pure_gon(maps: &EnumerationResult, ell: usize) -> u64 {
    maps.pure_gon_count(ell)
}
