//! Acceptance suite. Runs without the libtest harness so the per-criterion
//! PASS/FAIL lines always reach the output; exits nonzero if any fails.
//!
//! Tolerances: everything is exact except criterion 6, which allows
//! [0.99, 1.01] for the normalized map count at n = 2000 and 5% relative
//! error for the transferred pattern count at n = 28.

mod common;

use std::time::{Duration, Instant};

use num_bigint::BigInt;

use planar_occurrence::asymptotics::{
    a0_closed_form, a3_closed_form, expectation_pattern, expectation_submap, kappa, rho3_shortcut, singular_s,
    singular_t, transfer_asymptotic, SingularEngine,
};
use planar_occurrence::counting::{m_bivariate, m_count, m_series_closed_form, xi_double_sum, PurePolygons};
use planar_occurrence::map::format::parse_map;
use planar_occurrence::occurrence::t_pattern;
use planar_occurrence::oracle::{
    count_marked_patterns, count_pure_gon, enumerate_up_to, EnumerationResult, DEFAULT_LIMIT,
};
use planar_occurrence::series::rational::{int, pow, rat, to_f64};
use planar_occurrence::{CombinatorialMap, Rational, Series};

const ORACLE_N: usize = 6;

struct Criterion {
    failures: Vec<String>,
}

impl Criterion {
    fn new() -> Self {
        Criterion { failures: Vec::new() }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if !ok {
            self.failures.push(what());
        }
    }

    fn eq<T: PartialEq + std::fmt::Display>(&mut self, label: &str, got: &T, want: &T) {
        self.check(got == want, || format!("{label}: got {got}, expected {want}"));
    }

    fn result<T>(&mut self, label: &str, r: Result<T, impl std::fmt::Display>) -> Option<T> {
        match r {
            Ok(v) => Some(v),
            Err(e) => {
                self.failures.push(format!("{label}: {e}"));
                None
            }
        }
    }
}

fn report(number: usize, title: &str, summary: &str, c: Criterion) -> bool {
    let ok = c.failures.is_empty();
    println!("{} {number}. {title}: {summary}", if ok { "PASS" } else { "FAIL" });
    for f in &c.failures {
        println!("       {f}");
    }
    ok
}

fn r(x: u64) -> Rational {
    Rational::from_integer(BigInt::from(x))
}

fn worked_example() -> CombinatorialMap {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/quad_diagonal.map");
    let text = std::fs::read_to_string(path).expect("fixture is shipped with the crate");
    parse_map(&text).expect("fixture is a valid map")
}

fn counting_exactness(maps: &[EnumerationResult], elapsed: Duration) -> Criterion {
    let mut c = Criterion::new();
    if let Some(closed) = c.result("closed form", m_series_closed_form(30)) {
        for n in 0..=30 {
            c.eq(&format!("m_{n} closed form"), &Rational::from_integer(m_count(n)), closed.coeff(n));
        }
    }
    for (n, result) in maps.iter().enumerate() {
        c.eq(&format!("m_{n} enumerated"), &BigInt::from(result.count()), &m_count(n));
    }
    c.check(elapsed < Duration::from_secs(600), || format!("enumeration took {elapsed:?}"));
    c
}

fn bivariate_consistency(maps: &[EnumerationResult]) -> Criterion {
    let mut c = Criterion::new();
    if let Some(m) = c.result("M(z,u)", m_bivariate(ORACLE_N)) {
        for (n, result) in maps.iter().enumerate() {
            for k in 0..=2 * n + 1 {
                let observed = r(result.root_valency.get(k).copied().unwrap_or(0));
                c.eq(&format!("m_{n},{k}"), &m.coeff(n).coeff(k), &observed);
            }
        }
    }
    c
}

fn pure_polygon_law(maps: &[EnumerationResult]) -> Criterion {
    let mut c = Criterion::new();
    if let Some(p) = c.result("pure polygons", PurePolygons::new(ORACLE_N)) {
        for ell in 2..=5 {
            let Some(f) = c.result("F_ell", p.f_ell(ell)) else { continue };
            for (n, result) in maps.iter().enumerate() {
                c.eq(&format!("f_{ell},{n}"), f.coeff(n), &r(count_pure_gon(result, ell)));
            }
        }
    }
    let a3 = match c.result("engine", SingularEngine::new(3, 0)) {
        Some(engine) => engine.a(3).coeff(0).clone(),
        None => return c,
    };
    for ell in 2..=12 {
        let sum = xi_double_sum(ell);
        if let Some(k3) = c.result(&format!("kappa_{ell},3"), kappa(ell, 3)) {
            c.eq(&format!("xi_{ell}"), &sum, &(k3 / &a3));
        }
        let bound = pow(&int(12), -(ell as i64));
        c.check(sum >= bound, || format!("xi_{ell} = {sum} is below 12^-{ell}"));
    }
    c
}

/// `(s(z) + t(z)√(1-12z)) / (177147 z³)` to `order`.
fn closed_form_t(order: usize) -> Series {
    let n = order + 3;
    let s = Series::from_ints(&[5, -75, 36, 1998, -324, -6804], n);
    let t = Series::from_ints(&[-5, 45, 144, -864, -1458, 486], n);
    let root = Series::from_ints(&[1, -12], n).sqrt().expect("constant term 1");
    let numerator = &s + &(&t * &root);
    numerator.shift_down(3).expect("numerator vanishes to order 3").scale(&rat(1, 177147))
}

fn worked_example_end_to_end(maps: &[EnumerationResult]) -> Criterion {
    let mut c = Criterion::new();
    let m = worked_example();
    let Some(d) = c.result("descriptor", m.descriptor()) else { return c };
    let Some(t) = c.result("T", t_pattern(&d, 20)) else { return c };
    for (n, want) in [(5, 2), (6, 42), (7, 632), (8, 8380)] {
        c.eq(&format!("[z^{n}]T"), t.series.coeff(n), &r(want));
    }
    let closed = closed_form_t(20);
    for n in 0..=20 {
        c.eq(&format!("[z^{n}]T closed form"), t.series.coeff(n), closed.coeff(n));
    }
    if let Some(tau) = c.result("tau", singular_t(&d, 3)) {
        for (i, want) in [rat(29, 26244), rat(-419, 52488), rat(361, 13122)].iter().enumerate() {
            c.eq(&format!("tau_{i}"), tau.coeff(i), want);
        }
    }
    if let Some(k) = c.result("c1", expectation_pattern(&d)) {
        c.eq("c1", &k.c1, &rat(419, 209952));
    }
    if let Some(rho) = c.result("rho", singular_s(&d, 3)) {
        for (i, want) in [rat(118784, 4782969), rat(-858112, 4782969), rat(641024, 4782969)].iter().enumerate() {
            c.eq(&format!("rho_{i}"), rho.coeff(i), want);
        }
    }
    if let Some(k) = c.result("c1'", expectation_submap(&d)) {
        c.eq("c1'", &k.c1, &rat(214528, 4782969));
    }
    c.eq("oracle n=5", &count_marked_patterns(&maps[5], &m), &2);
    c.eq("oracle n=6", &count_marked_patterns(&maps[6], &m), &42);
    c
}

fn singular_engine() -> Criterion {
    let mut c = Criterion::new();
    let Some(engine) = c.result("engine", SingularEngine::new(5, 10)) else { return c };
    let want = [rat(4, 3), int(0), rat(-4, 3), rat(8, 3), int(-4), rat(16, 3)];
    for (i, w) in want.iter().enumerate() {
        c.eq(&format!("a_{i}(1)"), engine.a(i).coeff(0), w);
    }
    c.check(engine.a(1).is_zero(), || "a_1 is not identically zero".into());
    if let Some(a0) = c.result("a0 closed form", a0_closed_form(10)) {
        c.check(engine.a(0) == &a0, || format!("a_0 {:?} vs closed form {a0:?}", engine.a(0)));
    }
    if let Some(a3) = c.result("a3 closed form", a3_closed_form(10)) {
        c.check(engine.a(3) == &a3, || format!("a_3 {:?} vs closed form {a3:?}", engine.a(3)));
    }
    c
}

fn asymptotic_sanity() -> (Criterion, String) {
    let mut c = Criterion::new();
    let n = 2000usize;
    let scaled = Rational::from_integer(m_count(n)) * pow(&int(12), -(n as i64));
    let ratio = to_f64(&scaled) * (n as f64).powf(2.5) * std::f64::consts::PI.sqrt() / 2.0;
    c.check((0.99..=1.01).contains(&ratio), || format!("m_n ratio at n = {n} is {ratio}"));

    let d = worked_example().descriptor().expect("valid fixture");
    let mut error = f64::NAN;
    if let (Some(tau), Some(t)) = (c.result("tau", singular_t(&d, 7)), c.result("T", t_pattern(&d, 28))) {
        if let Some(approx) = c.result("transfer", transfer_asymptotic(&tau, 28)) {
            let exact = to_f64(t.series.coeff(28));
            error = (approx - exact).abs() / exact;
            c.check(error < 0.05, || format!("transfer at n = 28: {approx} vs {exact}"));
        }
    }
    (c, format!("m_2000 ratio {ratio:.5}, transfer error at n = 28 {:.3}%", 100.0 * error))
}

fn property_suites() -> Criterion {
    let mut c = Criterion::new();
    let runner = || common::runner(256);
    c.result("series ring laws", common::ring_laws(&mut runner()));
    c.result("divide_exact zero remainder", common::divide_exact_zero_remainder(&mut runner()));
    c.result("sqrt", common::sqrt_squares_back(&mut runner()));
    c.result("Leibniz rule", common::leibniz_rule(&mut runner()));
    if let Some(count) = c.result("relabeling invariance", common::relabeling_invariance(100)) {
        c.eq("maps relabeled", &count, &20);
    }
    c.result("integrality", common::integrality(20));
    c.result("rho two routes", common::rho_two_routes());
    c
}

/// The shortcut for ρ_3 that keeps only `τ_1 Σ κ_{Ω,2}/κ_{Ω,0}` and `τ_3`
/// differs from the full product; this line documents by how much.
fn rho3_shortcut_note() {
    let d = worked_example().descriptor().expect("valid fixture");
    let full = singular_s(&d, 3).expect("rho").coeff(3).clone();
    let shortcut = rho3_shortcut(&d).expect("shortcut");
    let verdict = if full != shortcut { "differs as expected" } else { "unexpectedly agrees" };
    println!("INFO rho_3 full product {full}, shortcut without shift and cross terms {shortcut}: {verdict}");
}

fn main() {
    let start = Instant::now();
    let maps = enumerate_up_to(ORACLE_N, DEFAULT_LIMIT).expect("enumeration within limit");
    let elapsed = start.elapsed();

    let mut ok = true;
    ok &= report(
        1,
        "counting exactness",
        &format!("n <= 30 closed form, n <= 6 enumeration ({elapsed:.1?})"),
        counting_exactness(&maps, elapsed),
    );
    ok &= report(2, "bivariate consistency", "m_{n,k} for n <= 6", bivariate_consistency(&maps));
    ok &= report(3, "pure-polygon law", "f_{l,n} for l = 2..5, n <= 6; xi_l for l <= 12", pure_polygon_law(&maps));
    ok &= report(
        4,
        "worked example end to end",
        "T, closed form to order 20, tau, rho, c1, c1', oracle 2 and 42",
        worked_example_end_to_end(&maps),
    );
    ok &= report(5, "singular-expansion engine", "a_i(1) for i <= 5, a_0 and a_3 to order 10", singular_engine());
    let (c, summary) = asymptotic_sanity();
    ok &= report(6, "asymptotic sanity", &summary, c);
    ok &= report(
        7,
        "property suites",
        "ring laws, division, sqrt, Leibniz, 100 x 20 relabelings, integrality, rho routes",
        property_suites(),
    );
    rho3_shortcut_note();

    if !ok {
        std::process::exit(1);
    }
}
