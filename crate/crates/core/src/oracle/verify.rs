//! Coefficient-by-coefficient comparison of the formulas with brute force.

use std::path::Path;

use num_bigint::BigInt;
use serde::Serialize;

use super::cache::{enumerate_cached, CacheError};
use super::occurrences::{count_at_root, count_marked_patterns, count_marked_submaps};
use crate::counting::{m_bivariate, m_count, PurePolygons};
use crate::map::CombinatorialMap;
use crate::occurrence::OccurrenceBuilder;
use crate::series::Rational;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub label: String,
    /// Value predicted by the generating functions.
    pub formula: String,
    /// Value found by enumeration.
    pub oracle: String,
}

impl Check {
    fn new(label: String, formula: &Rational, oracle: u64) -> Self {
        Check { label, formula: formula.to_string(), oracle: oracle.to_string() }
    }

    pub fn passed(&self) -> bool {
        self.formula == self.oracle
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub checks: Vec<Check>,
}

impl VerificationReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn failures(&self) -> usize {
        self.checks.iter().filter(|c| !c.passed()).count()
    }
}

/// Compares every counting formula with enumeration for `n <= nmax`: map
/// counts, root-valency distribution, pure polygons `ℓ = 2..=5`, and the
/// at-root, pattern and submap counts of `pattern`.
pub fn verify_pattern(
    pattern: &CombinatorialMap,
    nmax: usize,
    limit: usize,
    cache_dir: Option<&Path>,
) -> Result<VerificationReport, CacheError> {
    let d = pattern.descriptor().map_err(|_| crate::Error::EmptyPattern)?;
    let extra = d.inner_valencies.iter().copied().max().unwrap_or(0) + (-d.shift()).max(0) as usize;
    let polygons = PurePolygons::new(nmax + extra).map_err(CacheError::from)?;
    let builder = OccurrenceBuilder::from_polygons(polygons.clone());
    let at_root = builder.at_root(&d)?.series;
    let patterns = builder.pattern(&d)?.series;
    let submaps = builder.submap(&d)?.series;
    let bivariate = m_bivariate(nmax)?;

    let mut report = VerificationReport::default();
    for n in 0..=nmax {
        let maps = enumerate_cached(cache_dir, n, limit)?;
        let exact = Rational::from_integer(m_count(n));
        report.checks.push(Check::new(format!("m_{n}"), &exact, maps.count() as u64));
        let row = bivariate.coeff(n);
        for k in 0..=2 * n {
            let observed = maps.root_valency.get(k).copied().unwrap_or(0);
            report.checks.push(Check::new(format!("m_{n},{k}"), &row.coeff(k), observed));
        }
        for ell in 2..=5 {
            let f = polygons.f_ell(ell)?;
            report.checks.push(Check::new(format!("f_{ell},{n}"), f.coeff(n), maps.pure_gon_count(ell)));
        }
        report.checks.push(Check::new(format!("at_root_{n}"), at_root.coeff(n), count_at_root(&maps, pattern)));
        report.checks.push(Check::new(
            format!("pattern_{n}"),
            patterns.coeff(n),
            count_marked_patterns(&maps, pattern),
        ));
        report.checks.push(Check::new(format!("submap_{n}"), submaps.coeff(n), count_marked_submaps(&maps, pattern)));
    }
    debug_assert!(report.checks.iter().all(|c| c.formula.parse::<BigInt>().is_ok()));
    Ok(report)
}
