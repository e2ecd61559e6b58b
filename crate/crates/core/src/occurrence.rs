//! Generating functions counting occurrences of a fixed pattern map.
//!
//! All three series depend on the pattern only through its
//! [`PatternDescriptor`]:
//!
//! * at the root: `z^{k-s} F_ℓ(z)`;
//! * marked patterns: `|R|^{-1} (2z d/dz - |I|) z^{k-s} F_ℓ(z)`;
//! * marked submaps: the pattern series times `Π z^{-Ω} F_Ω(z)`.

use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::counting::PurePolygons;
use crate::map::PatternDescriptor;
use crate::series::rational::int;
use crate::series::{Rational, Series};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum OccurrenceKind {
    AtRoot,
    Pattern,
    Submap,
}

/// A series together with the pattern statistics it was built from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OccurrenceSeries {
    pub kind: OccurrenceKind,
    pub series: Series,
    pub descriptor: PatternDescriptor,
}

fn check_integral(series: &Series) -> Result<()> {
    for (index, c) in series.coeffs().iter().enumerate() {
        if !c.is_integer() || c.is_negative() {
            return Err(Error::NonIntegerCoefficient { index, value: c.clone() });
        }
    }
    Ok(())
}

/// Builds the three occurrence series of one pattern from a shared table of
/// pure-polygon series. The truncation order is that of the table.
#[derive(Clone, Debug)]
pub struct OccurrenceBuilder {
    polygons: PurePolygons,
}

impl OccurrenceBuilder {
    pub fn new(order: usize) -> Result<Self> {
        Ok(OccurrenceBuilder { polygons: PurePolygons::new(order)? })
    }

    pub fn from_polygons(polygons: PurePolygons) -> Self {
        OccurrenceBuilder { polygons }
    }

    pub fn order(&self) -> usize {
        self.polygons.order()
    }

    /// Maps with `n` edges in which the pattern occurs at the root. When
    /// `s > k` the result is known to `s - k` orders less than the table.
    pub fn at_root(&self, d: &PatternDescriptor) -> Result<OccurrenceSeries> {
        let f = self.polygons.f_ell(d.ell)?;
        let shift = d.shift();
        let series = if shift >= 0 {
            f.shift_up(shift as usize).truncate(self.order())
        } else {
            f.shift_down(shift.unsigned_abs() as usize)?
        };
        check_integral(&series)?;
        Ok(OccurrenceSeries { kind: OccurrenceKind::AtRoot, series, descriptor: d.clone() })
    }

    /// Marked pattern occurrences, summed over all maps with `n` edges.
    pub fn pattern(&self, d: &PatternDescriptor) -> Result<OccurrenceSeries> {
        let f = self.at_root(d)?.series;
        let two_z_d = f.euler_derivative().scale(&int(2));
        let inner = int(d.inner_valency_sum as i64);
        let raw = &two_z_d - &f.scale(&inner);
        let series = raw.scale(&int(d.rotational_count as i64).recip());
        check_integral(&series)?;
        Ok(OccurrenceSeries { kind: OccurrenceKind::Pattern, series, descriptor: d.clone() })
    }

    /// Marked submap occurrences, summed over all maps with `n` edges.
    pub fn submap(&self, d: &PatternDescriptor) -> Result<OccurrenceSeries> {
        let mut series = self.pattern(d)?.series;
        for &omega in &d.inner_valencies {
            if omega < 2 {
                return Err(Error::UnsupportedValency {
                    valency: omega,
                    context: "inner faces of valency 1 have no pure-polygon factor",
                });
            }
            let factor = self.polygons.f_ell(omega)?.shift_down(omega)?;
            series = &series * &factor;
        }
        check_integral(&series)?;
        Ok(OccurrenceSeries { kind: OccurrenceKind::Submap, series, descriptor: d.clone() })
    }
}

fn builder_for(d: &PatternDescriptor, order: usize) -> Result<OccurrenceBuilder> {
    if d.ell < 2 {
        return Err(Error::UnsupportedValency { valency: d.ell, context: "pure polygons need ℓ ≥ 2" });
    }
    // Dividing by z^{s-k} and by each z^Ω loses that many orders.
    let extra = d.inner_valencies.iter().copied().max().unwrap_or(0) + (-d.shift()).max(0) as usize;
    OccurrenceBuilder::new(order + extra)
}

/// `Σ_n f̃_n z^n`, where `f̃_n` counts maps with `n` edges having the pattern at the root.
pub fn f_pattern(d: &PatternDescriptor, order: usize) -> Result<OccurrenceSeries> {
    let mut s = builder_for(d, order)?.at_root(d)?;
    s.series = s.series.truncate(order);
    Ok(s)
}

/// `Σ_n t_n z^n`, where `t_n` counts marked pattern occurrences in maps with `n` edges.
pub fn t_pattern(d: &PatternDescriptor, order: usize) -> Result<OccurrenceSeries> {
    let mut s = builder_for(d, order)?.pattern(d)?;
    s.series = s.series.truncate(order);
    Ok(s)
}

/// `Σ_n s_n z^n`, where `s_n` counts marked submap occurrences in maps with `n` edges.
pub fn s_submap(d: &PatternDescriptor, order: usize) -> Result<OccurrenceSeries> {
    let mut s = builder_for(d, order)?.submap(d)?;
    s.series = s.series.truncate(order);
    Ok(s)
}

impl OccurrenceSeries {
    /// Index and value of the first nonzero coefficient.
    pub fn leading(&self) -> Option<(usize, &Rational)> {
        self.series.coeffs().iter().enumerate().find(|(_, c)| !c.is_zero())
    }
}
