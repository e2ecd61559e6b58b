//! Generating functions against exhaustive enumeration, all maps with at most
//! six edges.

use std::sync::OnceLock;

use num_bigint::BigInt;
use planar_occurrence::counting::{m_bivariate, m_count, PurePolygons};
use planar_occurrence::map::examples;
use planar_occurrence::occurrence::OccurrenceBuilder;
use planar_occurrence::oracle::{
    count_at_root, count_marked_patterns, count_marked_submaps, count_pure_gon, enumerate_up_to, EnumerationResult,
    DEFAULT_LIMIT,
};
use planar_occurrence::{CombinatorialMap, Rational};

const NMAX: usize = 6;

fn maps() -> &'static [EnumerationResult] {
    static MAPS: OnceLock<Vec<EnumerationResult>> = OnceLock::new();
    MAPS.get_or_init(|| enumerate_up_to(NMAX, DEFAULT_LIMIT).unwrap())
}

fn r(x: u64) -> Rational {
    Rational::from_integer(BigInt::from(x))
}

fn battery() -> Vec<(&'static str, CombinatorialMap)> {
    vec![
        ("triangle", examples::cycle(3)),
        ("digon", examples::digon()),
        ("triangle with chord", examples::triangle_with_chord()),
        ("quadrilateral with diagonal", examples::quad_with_diagonal()),
        ("triangle with pendant edge", examples::triangle_with_pendant()),
        ("bridge", examples::bridge()),
        ("path of two edges", examples::path2()),
        ("square", examples::cycle(4)),
    ]
}

#[test]
fn map_counts_match_enumeration() {
    for (n, result) in maps().iter().enumerate() {
        assert_eq!(BigInt::from(result.count()), m_count(n), "n = {n}");
    }
}

#[test]
fn root_valency_histogram() {
    let m = m_bivariate(NMAX).unwrap();
    for (n, result) in maps().iter().enumerate() {
        for k in 0..=2 * n {
            assert_eq!(m.coeff(n).coeff(k), r(result.root_valency[k]), "n = {n}, k = {k}");
        }
    }
}

#[test]
fn pure_polygons() {
    let p = PurePolygons::new(NMAX).unwrap();
    for ell in 2..=5 {
        let f = p.f_ell(ell).unwrap();
        for (n, result) in maps().iter().enumerate() {
            assert_eq!(f.coeff(n), &r(count_pure_gon(result, ell)), "ℓ = {ell}, n = {n}");
        }
    }
}

#[test]
fn occurrence_counts() {
    for (name, pattern) in battery() {
        let d = pattern.descriptor().unwrap();
        let extra = d.inner_valencies.iter().max().copied().unwrap_or(0) + (-d.shift()).max(0) as usize;
        let builder = OccurrenceBuilder::new(NMAX + extra).unwrap();
        let at_root = builder.at_root(&d).unwrap().series;
        let t = builder.pattern(&d).unwrap().series;
        let s = builder.submap(&d).unwrap().series;
        for (n, result) in maps().iter().enumerate() {
            assert_eq!(at_root.coeff(n), &r(count_at_root(result, &pattern)), "{name}: at root, n = {n}");
            assert_eq!(t.coeff(n), &r(count_marked_patterns(result, &pattern)), "{name}: pattern, n = {n}");
            assert_eq!(s.coeff(n), &r(count_marked_submaps(result, &pattern)), "{name}: submap, n = {n}");
        }
    }
}

#[test]
fn enumeration_is_deterministic() {
    let again = enumerate_up_to(5, DEFAULT_LIMIT).unwrap();
    for (a, b) in again.iter().zip(maps()) {
        assert_eq!(a.maps, b.maps);
    }
}
