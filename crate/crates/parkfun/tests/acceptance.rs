//! Acceptance suite: one test per criterion, each printing a pass/fail line
//! with the number of instances checked. Every comparison is exact rational
//! equality; there are no tolerances anywhere.
//!
//! Run with `cargo test --test acceptance -- --nocapture` to see the lines.

use parkfun::verify::{run_suite, SuiteReport};

fn run(criterion: u32, name: &str) -> SuiteReport {
    let report = run_suite(name).expect("registered suite");
    let status = if report.passed() { "PASS" } else { "FAIL" };
    println!(
        "criterion {criterion:02} [{name}]: {status} ({} instances checked)",
        report.checked
    );
    for failure in &report.failures {
        println!("    {failure}");
    }
    report
}

fn assert_passes(criterion: u32, name: &str) {
    let report = run(criterion, name);
    assert!(
        report.passed(),
        "criterion {criterion} [{name}] failed:\n{}",
        report.failures.join("\n")
    );
}

#[test]
fn c01_counting_closed_form_and_cube_brute_force() {
    assert_passes(1, "counting");
}

#[test]
fn c02_degree_three_frobenius_anchor() {
    assert_passes(2, "frobenius-anchor");
}

#[test]
fn c03_six_expansions_cohere_for_all_integer_k() {
    assert_passes(3, "expansions");
}

#[test]
fn c04_power_of_base_series_equals_k_series() {
    assert_passes(4, "power-identity");
}

#[test]
fn c05_dual_set_frobenius_equals_closed_form() {
    assert_passes(5, "dual-equivalence");
}

#[test]
fn c06_cycle_lemma_per_orbit_counts() {
    assert_passes(6, "cycle-lemma");
}

#[test]
fn c07_explicit_orbit_vectors_match_brute_force() {
    assert_passes(7, "orbit-vectors");
}

#[test]
fn c08_merge_bijection_roundtrips_and_statistic_transport() {
    assert_passes(8, "bijection");
}

#[test]
fn c09_q_refined_product_identity() {
    assert_passes(9, "q-identity");
}

#[test]
fn c10_log_identity_and_compositional_inverse() {
    assert_passes(10, "log-lagrange");
}

#[test]
fn c11_mixed_scalar_products_and_published_values() {
    assert_passes(11, "scalar-products");
}

#[test]
fn c12_parking_basis_transitions_and_expansions() {
    assert_passes(12, "parking-basis");
}
