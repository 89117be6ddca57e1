//! Acceptance suite: one test per criterion, printing a pass/fail line.
//! Run with `cargo test --test acceptance -- --nocapture` to see the lines.

use niho_pp::selftest::{run_criterion, CriterionResult};

fn check(id: u32) -> CriterionResult {
    let result = run_criterion(id);
    println!("{}", result.line());
    result
}

#[test]
fn c01_family_i2_and_dual_exhaustive() {
    let r = check(1);
    assert!(r.passed, "{}", r.detail);
}

#[test]
fn c02_even_m_k1_family_exhaustive() {
    let r = check(2);
    assert!(r.passed, "{}", r.detail);
}

#[test]
fn c03_odd_m_k2_family() {
    let r = check(3);
    assert!(r.passed, "{}", r.detail);
}

#[test]
fn c04_k3_k4_opposite_parity_families() {
    let r = check(4);
    assert!(r.passed, "{}", r.detail);
}

#[test]
fn c05_both_even_families() {
    let r = check(5);
    assert!(r.passed, "{}", r.detail);
}

#[test]
fn c06_trace_zero_any_exponent() {
    let r = check(6);
    assert!(r.passed, "{}", r.detail);
}

#[test]
fn c07_duality_verdicts_and_pointwise_identity() {
    let r = check(7);
    assert!(r.passed, "{}", r.detail);
}

#[test]
fn c08_lemma_suites() {
    let r = check(8);
    assert!(r.passed, "{}", r.detail);
}

#[test]
fn c09_proof_mechanism_suites() {
    let r = check(9);
    assert!(r.passed, "{}", r.detail);
}

#[test]
fn c10_table_reproduction_and_closed_forms() {
    let r = check(10);
    assert!(r.passed, "{}", r.detail);
}

#[test]
fn c11_negative_control_fixture() {
    let r = check(11);
    assert!(r.passed, "{}", r.detail);
}
