mod common;

use common::runner;

#[test]
fn series_ring_laws() {
    common::ring_laws(&mut runner(256)).unwrap();
}

#[test]
fn divide_exact_has_zero_remainder() {
    common::divide_exact_zero_remainder(&mut runner(256)).unwrap();
}

#[test]
fn sqrt_squares_back() {
    common::sqrt_squares_back(&mut runner(128)).unwrap();
}

#[test]
fn derivative_obeys_leibniz() {
    common::leibniz_rule(&mut runner(256)).unwrap();
}

#[test]
fn canonical_code_ignores_labels() {
    assert_eq!(common::relabeling_invariance(100).unwrap(), 20);
}

#[test]
fn occurrence_coefficients_are_counts() {
    common::integrality(20).unwrap();
}

#[test]
fn rho_by_product_matches_formulas() {
    common::rho_two_routes().unwrap();
}
