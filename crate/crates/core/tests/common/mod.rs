//! Property suites shared by `properties.rs` and the acceptance runner. Each
//! suite drives its own proptest runner and reports the first counterexample.

#![allow(dead_code)]

use num_traits::{One, Signed, Zero};
use proptest::prelude::*;
use proptest::test_runner::{Config, TestCaseError, TestRunner};

use planar_occurrence::asymptotics::{kappa, singular_s, singular_t};
use planar_occurrence::map::examples;
use planar_occurrence::occurrence::OccurrenceBuilder;
use planar_occurrence::oracle::enumerate_maps;
use planar_occurrence::series::rational::{int, pow};
use planar_occurrence::{CombinatorialMap, PatternDescriptor, Rational, Series};

pub fn runner(cases: u32) -> TestRunner {
    TestRunner::new_with_rng(
        Config { cases, failure_persistence: None, ..Config::default() },
        proptest::test_runner::TestRng::deterministic_rng(proptest::test_runner::RngAlgorithm::ChaCha),
    )
}

fn run<S: Strategy>(
    runner: &mut TestRunner,
    strategy: S,
    test: impl Fn(S::Value) -> Result<(), TestCaseError>,
) -> Result<(), String> {
    runner.run(&strategy, test).map_err(|e| e.to_string())
}

/// Patterns with at least one inner face, plus the bridge.
pub fn battery() -> Vec<(&'static str, CombinatorialMap)> {
    vec![
        ("triangle", examples::cycle(3)),
        ("square", examples::cycle(4)),
        ("digon", examples::digon()),
        ("triangle with chord", examples::triangle_with_chord()),
        ("quadrilateral with diagonal", examples::quad_with_diagonal()),
        ("triangle with pendant edge", examples::triangle_with_pendant()),
        ("hexagon with chord and pendant", examples::hexagon_chord_pendant()),
        ("bridge", examples::bridge()),
    ]
}

fn rational() -> impl Strategy<Value = Rational> {
    (-20i64..=20, 1i64..=6).prop_map(|(p, q)| Rational::new(p.into(), q.into()))
}

fn series_of_order(order: usize) -> impl Strategy<Value = Series> {
    prop::collection::vec(rational(), order + 1).prop_map(Series::new)
}

fn series() -> impl Strategy<Value = Series> {
    (0usize..10).prop_flat_map(series_of_order)
}

fn series_triple() -> impl Strategy<Value = (Series, Series, Series)> {
    (0usize..10).prop_flat_map(|n| (series_of_order(n), series_of_order(n), series_of_order(n)))
}

pub fn ring_laws(runner: &mut TestRunner) -> Result<(), String> {
    run(runner, series_triple(), |(a, b, c)| {
        let n = a.order();
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &Series::one(n), a.clone());
        prop_assert_eq!(&(&a + &b) - &b, a.clone());
        prop_assert_eq!(&a + &Series::zero(n), a.clone());
        Ok(())
    })
}

pub fn divide_exact_zero_remainder(runner: &mut TestRunner) -> Result<(), String> {
    let strategy = (0usize..4, 0usize..10).prop_flat_map(|(v, n)| {
        let divisor =
            (series_of_order(n), rational().prop_filter("nonzero", |c| !c.is_zero())).prop_map(move |(s, lead)| {
                let mut c = s.into_coeffs();
                c[0] = lead;
                Series::new(c).shift_up(v)
            });
        (series_of_order(n + v), divisor)
    });
    run(runner, strategy, |(a, b)| {
        let v = b.valuation().unwrap();
        let q = (&a * &b).divide_exact(&b).map_err(|e| TestCaseError::fail(e.to_string()))?;
        prop_assert_eq!(q.order(), a.order() - v);
        prop_assert_eq!(q, a.truncate(a.order() - v));
        Ok(())
    })
}

pub fn sqrt_squares_back(runner: &mut TestRunner) -> Result<(), String> {
    let strategy = (series(), 1i64..=5, 1i64..=5);
    run(runner, strategy, |(s, p, q)| {
        let mut c = s.into_coeffs();
        c[0] = Rational::new((p * p).into(), (q * q).into());
        let f = Series::new(c);
        let g = f.sqrt().map_err(|e| TestCaseError::fail(e.to_string()))?;
        prop_assert_eq!(g.coeff(0), &Rational::new(p.into(), q.into()));
        prop_assert_eq!(&g * &g, f);
        Ok(())
    })
}

pub fn leibniz_rule(runner: &mut TestRunner) -> Result<(), String> {
    let strategy = (1usize..10).prop_flat_map(|n| (series_of_order(n), series_of_order(n)));
    run(runner, strategy, |(a, b)| {
        let lhs = (&a * &b).derivative();
        let rhs = &(&a.derivative() * &b) + &(&a * &b.derivative());
        prop_assert_eq!(lhs, rhs);
        Ok(())
    })
}

/// Twelve maps spread over all rooted maps with five edges plus the eight
/// battery patterns.
pub fn relabeling_sample() -> Vec<CombinatorialMap> {
    let all = enumerate_maps(5).expect("n = 5 is within the limit").maps;
    let step = all.len() / 12;
    let mut sample: Vec<CombinatorialMap> = all.into_iter().step_by(step).take(12).collect();
    sample.extend(battery().into_iter().map(|(_, m)| m));
    sample
}

fn permutation(len: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..len).collect::<Vec<usize>>()).prop_shuffle()
}

/// For each sampled map, `cases` random relabelings leave the canonical code,
/// the descriptor and the rotational count unchanged.
pub fn relabeling_invariance(cases: u32) -> Result<usize, String> {
    let maps = relabeling_sample();
    for m in &maps {
        let code = m.canonical_code();
        let descriptor = m.descriptor().map_err(|e| e.to_string())?;
        run(&mut runner(cases), permutation(m.half_edge_count()), |perm| {
            let r = m.relabeled(&perm);
            prop_assert_eq!(r.canonical_code(), code.clone());
            prop_assert_eq!(r.descriptor().unwrap(), descriptor.clone());
            prop_assert!(r.is_isomorphic(m));
            Ok(())
        })?;
    }
    Ok(maps.len())
}

fn is_nonnegative_integer(c: &Rational) -> bool {
    c.is_integer() && !c.is_negative()
}

/// Every coefficient of 𝕋 and 𝕊 up to `order` is a non-negative integer.
pub fn integrality(order: usize) -> Result<(), String> {
    for (name, m) in battery() {
        let d = m.descriptor().map_err(|e| e.to_string())?;
        let extra = d.inner_valencies.iter().copied().max().unwrap_or(0) + (-d.shift()).max(0) as usize;
        let builder = OccurrenceBuilder::new(order + extra).map_err(|e| e.to_string())?;
        for (kind, series) in [
            ("T", builder.pattern(&d).map_err(|e| e.to_string())?.series),
            ("S", builder.submap(&d).map_err(|e| e.to_string())?.series),
        ] {
            for n in 0..=order {
                let c = series.coeff(n);
                if !is_nonnegative_integer(c) {
                    return Err(format!("{name}: [z^{n}]{kind} = {c}"));
                }
            }
            if series.coeff(order).is_zero() && d.edge_count() <= order {
                return Err(format!("{name}: [z^{order}]{kind} vanishes"));
            }
        }
    }
    Ok(())
}

/// `ρ_1 = τ_1 Π 12^Ω κ_{Ω,0}`.
pub fn rho1_formula(d: &PatternDescriptor, tau: &[Rational]) -> Rational {
    d.inner_valencies
        .iter()
        .map(|&w| pow(&int(12), w as i64) * kappa(w, 0).unwrap())
        .fold(tau[1].clone(), |acc, g| acc * g)
}

/// `ρ_3` from the product rule on `τ · Π z^{-Ω} F_Ω`.
pub fn rho3_formula(d: &PatternDescriptor, tau: &[Rational]) -> Rational {
    let mut g0 = Rational::one();
    let mut second = Rational::zero();
    let mut third = Rational::zero();
    for &w in &d.inner_valencies {
        let k0 = kappa(w, 0).unwrap();
        g0 *= pow(&int(12), w as i64) * &k0;
        second += kappa(w, 2).unwrap() / &k0 + int(w as i64);
        third += kappa(w, 3).unwrap() / &k0;
    }
    g0 * (&tau[3] + &tau[1] * second + &tau[0] * third)
}

/// The ρ-expansion obtained by multiplying expansions agrees with the
/// closed formulas for ρ_1 and ρ_3 on every battery pattern.
pub fn rho_two_routes() -> Result<(), String> {
    for (name, m) in battery() {
        let d = m.descriptor().map_err(|e| e.to_string())?;
        let tau = singular_t(&d, 3).map_err(|e| e.to_string())?;
        let rho = singular_s(&d, 3).map_err(|e| e.to_string())?;
        let one = rho1_formula(&d, tau.coeffs());
        let three = rho3_formula(&d, tau.coeffs());
        if rho.coeff(1) != &one {
            return Err(format!("{name}: rho_1 {} vs {one}", rho.coeff(1)));
        }
        if rho.coeff(3) != &three {
            return Err(format!("{name}: rho_3 {} vs {three}", rho.coeff(3)));
        }
    }
    Ok(())
}
