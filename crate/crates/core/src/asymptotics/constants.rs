//! Singular expansions of the occurrence series and the constants of the
//! expected occurrence counts.

use num_traits::Zero;

use super::{PuiseuxExpansion, SingularEngine};
use crate::map::PatternDescriptor;
use crate::series::rational::{int, pow};
use crate::series::Rational;
use crate::{Error, Result};

/// Linear and constant terms of an expected count `c1 n + c2 + O(1/n)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExpectationConstants {
    pub c1: Rational,
    pub c2: Rational,
}

fn engine_for(d: &PatternDescriptor, max_index: usize) -> Result<SingularEngine> {
    let largest = d.inner_valencies.iter().copied().chain([d.ell]).max().unwrap_or(d.ell);
    if largest < 2 {
        return Err(Error::UnsupportedValency { valency: d.ell, context: "pure polygons need ℓ ≥ 2" });
    }
    SingularEngine::new(max_index, largest - 1)
}

fn mismatch(what: String, left: &Rational, right: &Rational) -> Result<()> {
    if left == right {
        Ok(())
    } else {
        Err(Error::InconsistentRoutes { what, left: Box::new(left.clone()), right: Box::new(right.clone()) })
    }
}

/// Expansion of the occurrences at the root, `z^{k-s} F_ℓ(z)`.
pub fn at_root_expansion(d: &PatternDescriptor, max_index: usize) -> Result<PuiseuxExpansion> {
    at_root_with(&engine_for(d, max_index)?, d)
}

fn at_root_with(engine: &SingularEngine, d: &PatternDescriptor) -> Result<PuiseuxExpansion> {
    let f = engine.pure_gon(d.ell)?;
    Ok(&PuiseuxExpansion::z_power(d.shift(), engine.max_index())? * &f)
}

fn tau_with(engine: &SingularEngine, d: &PatternDescriptor) -> Result<PuiseuxExpansion> {
    let kt = at_root_with(engine, d)?;
    mismatch("coefficient of (1-12z)^(1/2) at the root".into(), kt.coeff(1), &Rational::zero())?;
    let derivative = kt.two_z_derivative()?;
    let inner = int(d.inner_valency_sum as i64);
    let rotations = int(d.rotational_count as i64);
    let tau = (&derivative - &kt.truncate(derivative.max_index()).scale(&inner)).scale(&rotations.recip());

    // τ_1 = -3 κ̃_3/|R| with κ̃_3 = 12^{-(k-s)} κ_{ℓ,3}
    if tau.max_index() >= 1 {
        let direct = -int(3) * pow(&int(12), -d.shift()) * engine.kappa(d.ell, 3)? / &rotations;
        mismatch("tau_1".into(), tau.coeff(1), &direct)?;
    }
    // τ_3 = (-5 κ̃_5 + (3 - |I|) κ̃_3)/|R|
    if tau.max_index() >= 3 {
        let direct = (-int(5) * kt.coeff(5) + (int(3) - &inner) * kt.coeff(3)) / &rotations;
        mismatch("tau_3".into(), tau.coeff(3), &direct)?;
    }
    Ok(tau)
}

/// `τ_0, …, τ_{max_index}`: the expansion of the marked-pattern series.
pub fn singular_t(d: &PatternDescriptor, max_index: usize) -> Result<PuiseuxExpansion> {
    tau_with(&engine_for(d, max_index + 2)?, d)
}

/// `ρ_0, …, ρ_{max_index}`: the expansion of the marked-submap series, as the
/// product of the pattern expansion with one factor `z^{-Ω} F_Ω` per inner
/// face.
pub fn singular_s(d: &PatternDescriptor, max_index: usize) -> Result<PuiseuxExpansion> {
    if let Some(&omega) = d.inner_valencies.iter().find(|&&w| w < 2) {
        return Err(Error::UnsupportedValency {
            valency: omega,
            context: "inner faces of valency 1 have no pure-polygon factor",
        });
    }
    let engine = engine_for(d, max_index + 2)?;
    let tau = tau_with(&engine, d)?;
    let mut rho = tau.clone();
    let mut g0 = Rational::from_integer(1.into());
    for &omega in &d.inner_valencies {
        let g = &PuiseuxExpansion::z_power(-(omega as i64), engine.max_index())? * &engine.pure_gon(omega)?;
        rho = &rho * &g;
        g0 *= g.coeff(0);
    }

    if rho.max_index() >= 1 {
        // ρ_1 = τ_1 Π 12^Ω κ_{Ω,0}
        let direct: Rational = tau.coeff(1)
            * d.inner_valencies
                .iter()
                .map(|&w| engine.kappa(w, 0).map(|k| pow(&int(12), w as i64) * k))
                .product::<Result<Rational>>()?;
        mismatch("rho_1".into(), rho.coeff(1), &direct)?;
    }
    if rho.max_index() >= 3 {
        // Product rule up to Z^3; every factor has a vanishing Z^1 coefficient,
        // and z^{-Ω} contributes Ω Z^2 relative to its constant term.
        let mut second = Rational::zero();
        let mut third = Rational::zero();
        for &omega in &d.inner_valencies {
            let k0 = engine.kappa(omega, 0)?;
            second += engine.kappa(omega, 2)? / &k0 + int(omega as i64);
            third += engine.kappa(omega, 3)? / &k0;
        }
        let direct = &g0 * (tau.coeff(3) + tau.coeff(1) * second + tau.coeff(0) * third);
        mismatch("rho_3".into(), rho.coeff(3), &direct)?;
    }
    Ok(rho)
}

/// `ρ_3` by the shortcut `Π(12^Ω κ_{Ω,0}) (τ_3 + τ_1 Σ κ_{Ω,2}/κ_{Ω,0})`.
///
/// This omits the `Ω` shift contributed by `z^{-Ω}` and the `τ_0 κ_{Ω,3}`
/// cross terms, so it differs from the full product in general. It is
/// exposed so the discrepancy can be reported, not used.
pub fn rho3_shortcut(d: &PatternDescriptor) -> Result<Rational> {
    let engine = engine_for(d, 5)?;
    let tau = tau_with(&engine, d)?;
    let mut product = Rational::from_integer(1.into());
    let mut ratio_sum = Rational::zero();
    for &omega in &d.inner_valencies {
        let k0 = engine.kappa(omega, 0)?;
        product *= pow(&int(12), omega as i64) * &k0;
        ratio_sum += engine.kappa(omega, 2)? / k0;
    }
    Ok(tau.coeff(1) * &product * ratio_sum + tau.coeff(3) * product)
}

fn constants_from(e: &PuiseuxExpansion) -> ExpectationConstants {
    ExpectationConstants { c1: -e.coeff(1) / int(4), c2: (int(3) * e.coeff(3) - int(7) * e.coeff(1)) / int(8) }
}

/// `E[t(m̂, M_n)] = c1 n + c2 + O(1/n)`, from `τ_1` and `τ_3`.
pub fn expectation_pattern(d: &PatternDescriptor) -> Result<ExpectationConstants> {
    Ok(constants_from(&singular_t(d, 3)?))
}

/// `E[s(m̂, M_n)] = c1' n + c2' + O(1/n)`, from `ρ_1` and `ρ_3`.
pub fn expectation_submap(d: &PatternDescriptor) -> Result<ExpectationConstants> {
    Ok(constants_from(&singular_s(d, 3)?))
}
