//! The acceptance suite: every claim the crate makes about the construction,
//! checked end to end at desk scale. Each criterion sweeps its whole stated
//! domain; `detail` carries the case counts so a pass line is auditable.
//!
//! Runnable through `niho-pp selftest` or the `acceptance` integration test.

use std::time::{Duration, Instant};

use crate::catalog::{self, TableFormat};
use crate::exponents::{self, dual_index};
use crate::field::{Field, FieldElement};
use crate::permcheck::{verify_construction, DeltaPolicy, PPInstance};
use crate::prooflab::{self, Suite};

pub const NUM_CRITERIA: u32 = 11;

#[derive(Debug, Clone)]
pub struct CriterionResult {
    pub id: u32,
    pub label: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl CriterionResult {
    pub fn line(&self) -> String {
        format!(
            "criterion {:02} {} — {} ({})",
            self.id,
            if self.passed { "PASS" } else { "FAIL" },
            self.label,
            self.detail
        )
    }
}

pub fn run_all() -> Vec<CriterionResult> {
    (1..=NUM_CRITERIA).map(run_criterion).collect()
}

pub fn run_criterion(id: u32) -> CriterionResult {
    match id {
        1 => c01_family_i2_and_dual(),
        2 => c02_even_m_k1_family(),
        3 => c03_odd_m_k2_family(),
        4 => c04_k3_k4_families(),
        5 => c05_both_even_families(),
        6 => c06_trace_zero_any_exponent(),
        7 => c07_duality(),
        8 => c08_lemma_suites(),
        9 => c09_proof_mechanism_suites(),
        10 => c10_table_reproduction(),
        11 => c11_negative_control(),
        _ => panic!("unknown criterion id {id}, valid ids are 1..={NUM_CRITERIA}"),
    }
}

fn result(
    id: u32,
    label: &'static str,
    passed: bool,
    detail: String,
) -> CriterionResult {
    CriterionResult {
        id,
        label,
        passed,
        detail,
    }
}

/// Sweeps every δ for each index and reports (checks, failures).
fn sweep_all(field: &Field, indices: &[u64]) -> (u64, u64) {
    let (mut checks, mut failures) = (0u64, 0u64);
    for &i in indices {
        let sweep = verify_construction(field, i, DeltaPolicy::All).expect("sweep in bounds");
        checks += sweep.reports.len() as u64;
        failures += sweep.failed() as u64;
    }
    (checks, failures)
}

fn sweep_sampled(field: &Field, indices: &[u64], count: u64) -> (u64, u64) {
    let policy = DeltaPolicy::Sample { count, seed: 1 };
    let (mut checks, mut failures) = (0u64, 0u64);
    for &i in indices {
        let sweep = verify_construction(field, i, policy).expect("sweep in bounds");
        checks += sweep.reports.len() as u64;
        failures += sweep.failed() as u64;
    }
    (checks, failures)
}

/// i in {2, 2^m} for m in 2..=5, every δ, exhaustive.
fn c01_family_i2_and_dual() -> CriterionResult {
    let start = Instant::now();
    let (mut checks, mut failures) = (0u64, 0u64);
    for m in 2..=5u32 {
        let field = Field::new(2 * m).unwrap();
        let (c, f) = sweep_all(&field, &[2, 1 << m]);
        checks += c;
        failures += f;
    }
    let elapsed = start.elapsed();
    let in_budget = elapsed < Duration::from_secs(60);
    result(
        1,
        "i in {2, 2^m} (k = m-1), all delta, m in 2..=5",
        failures == 0 && checks == 2720 && in_budget,
        format!(
            "{checks} exhaustive checks, {failures} failures, {} ms",
            elapsed.as_millis()
        ),
    )
}

/// Even m, k = 1: i = (2^m + 2)/3 and its dual, every δ, m in {2, 4}.
fn c02_even_m_k1_family() -> CriterionResult {
    let (mut checks, mut failures) = (0u64, 0u64);
    for m in [2u32, 4] {
        let field = Field::new(2 * m).unwrap();
        let i = ((1u64 << m) + 2) / 3;
        let (c, f) = sweep_all(&field, &[i, dual_index(m, i)]);
        checks += c;
        failures += f;
    }
    result(
        2,
        "even m, k = 1 family, all delta, m in {2, 4}",
        failures == 0 && checks > 0,
        format!("{checks} exhaustive checks, {failures} failures"),
    )
}

/// Odd m, k = 2: m = 5 exhaustive with the reconciled dual pair (20, 14);
/// m = 7 sampled.
fn c03_odd_m_k2_family() -> CriterionResult {
    let start = Instant::now();
    let f10 = Field::new(10).unwrap();
    // the printed dual 14 = (2^{m+1}+6)/5 agrees with dual_index(5, 20)
    let j = dual_index(5, 20);
    let dual_reconciled = j == 14 && j == ((1u64 << 6) + 6) / 5;
    let (c5, f5) = sweep_all(&f10, &[20, j]);

    let f14 = Field::new(14).unwrap();
    let i7 = ((1u64 << 7) + 2) / 5; // 26, the m = 3 mod 4 closed form
    let (c7, f7) = sweep_sampled(&f14, &[i7, dual_index(7, i7)], 64);
    let elapsed = start.elapsed();
    let in_budget = elapsed < Duration::from_secs(120);
    result(
        3,
        "odd m, k = 2 family: m = 5 all delta (i = 20, j = 14), m = 7 sampled",
        dual_reconciled && f5 == 0 && c5 == 2048 && f7 == 0 && c7 == 128 && in_budget,
        format!(
            "m=5: {c5} checks/{f5} failures; m=7: {c7} checks/{f7} failures; {} ms",
            elapsed.as_millis()
        ),
    )
}

/// k = 3 and k = 4 with opposite parity: m = 4 (2, 16) exhaustive,
/// m = 7 (38, 92) sampled.
fn c04_k3_k4_families() -> CriterionResult {
    let f8 = Field::new(8).unwrap();
    let (c4, f4) = sweep_all(&f8, &[2, 16]);
    let f14 = Field::new(14).unwrap();
    let (c7, f7) = sweep_sampled(&f14, &[38, 92], 64);
    let pair_ok = dual_index(4, 2) == 16 && dual_index(7, 38) == 92;
    result(
        4,
        "k = 3, 4 opposite-parity families: m = 4 all delta, m = 7 sampled",
        pair_ok && f4 == 0 && c4 == 512 && f7 == 0 && c7 == 128,
        format!("m=4: {c4} checks/{f4} failures; m=7: {c7} checks/{f7} failures"),
    )
}

/// Both even with m/k even: m = 4, k = 2 (7, 11) exhaustive;
/// m = 8, k = 4 (121, 137) sampled.
fn c05_both_even_families() -> CriterionResult {
    let f8 = Field::new(8).unwrap();
    let (c4, f4) = sweep_all(&f8, &[7, 11]);
    let f16 = Field::new(16).unwrap();
    let (c8, f8s) = sweep_sampled(&f16, &[121, 137], 64);
    let pair_ok = dual_index(4, 7) == 11 && dual_index(8, 121) == 137;
    result(
        5,
        "both-even families: m = 4, k = 2 all delta; m = 8, k = 4 sampled",
        pair_ok && f4 == 0 && c4 == 512 && f8s == 0 && c8 == 128,
        format!("m=4: {c4} checks/{f4} failures; m=8: {c8} checks/{f8s} failures"),
    )
}

/// Trace-zero δ permutes for every exponent: m in {2, 3}, δ in the
/// subfield, s in 1..=2^{2m}-2.
fn c06_trace_zero_any_exponent() -> CriterionResult {
    let (mut checks, mut failures) = (0u64, 0u64);
    for m in [2u32, 3] {
        let field = Field::new(2 * m).unwrap();
        for &delta in &field.subfield_elements().unwrap() {
            for s in 1..=field.order() - 1 {
                let report = PPInstance::new(&field, delta, s)
                    .unwrap()
                    .check_exhaustive()
                    .unwrap();
                checks += 1;
                if !report.is_permutation {
                    failures += 1;
                }
            }
        }
    }
    result(
        6,
        "trace-zero delta permutes for every exponent, m in {2, 3}",
        failures == 0 && checks == 4 * 14 + 8 * 62,
        format!("{checks} exhaustive checks, {failures} failures"),
    )
}

/// Duality: verdicts for i and dual(i) agree for every δ, and
/// g(x) = conj(f(conj(x))) pointwise; m in 2..=4.
fn c07_duality() -> CriterionResult {
    let (mut verdicts, mut identity_points, mut violations) = (0u64, 0u64, 0u64);
    for m in 2..=4u32 {
        let field = Field::new(2 * m).unwrap();
        for i in 0..=1u64 << m {
            let j = dual_index(m, i);
            for delta in field.elements() {
                let fi = PPInstance::from_index(&field, delta, i).unwrap();
                let fj = PPInstance::from_index(&field, delta, j).unwrap();
                verdicts += 1;
                if fi.check_exhaustive().unwrap().is_permutation
                    != fj.check_exhaustive().unwrap().is_permutation
                {
                    violations += 1;
                }
                for x in field.elements() {
                    identity_points += 1;
                    let lhs = fj.evaluate(x);
                    let rhs = field
                        .conjugate(fi.evaluate(field.conjugate(x).unwrap()))
                        .unwrap();
                    if lhs != rhs {
                        violations += 1;
                    }
                }
            }
        }
    }
    result(
        7,
        "duality: verdicts agree and g = conj ∘ f ∘ conj pointwise, m in 2..=4",
        violations == 0,
        format!("{verdicts} verdict pairs, {identity_points} identity points, {violations} violations"),
    )
}

/// Affine trichotomy (GF(16), GF(64)), Möbius bijectivity (m <= 6),
/// power-sum identity (degrees <= 8, k <= 8).
fn c08_lemma_suites() -> CriterionResult {
    let (mut cases, mut violations) = (0u64, 0u64);
    for m in [2u32, 3] {
        let s = prooflab::run_suite(Suite::Lemma22, m, None).unwrap();
        cases += s.cases;
        violations += s.violations;
    }
    for m in 2..=6u32 {
        let s = prooflab::run_suite(Suite::Lemma23, m, None).unwrap();
        cases += s.cases;
        violations += s.violations;
    }
    // the power-sum identity over every field degree 2..=8, all pairs, k <= 8
    for n in 2..=8u32 {
        let field = Field::new(n).unwrap();
        for k in 1..=8u32 {
            for x in field.elements() {
                for y in field.elements() {
                    cases += 1;
                    if !prooflab::power_sum_identity_check(&field, x, y, k).unwrap() {
                        violations += 1;
                    }
                }
            }
        }
    }
    result(
        8,
        "lemma suites: affine trichotomy, Möbius bijectivity, power-sum identity",
        violations == 0,
        format!("{cases} cases, {violations} violations"),
    )
}

/// λ-equation root bound (m <= 5), unit-pair trace (m <= 6), partition
/// facts (m <= 8), z-form correspondence (m <= 4).
fn c09_proof_mechanism_suites() -> CriterionResult {
    let (mut cases, mut violations) = (0u64, 0u64);
    for m in 2..=5u32 {
        let s = prooflab::run_suite(Suite::Eq309, m, None).unwrap();
        cases += s.cases;
        violations += s.violations;
    }
    for m in 2..=6u32 {
        let s = prooflab::run_suite(Suite::TracePair, m, None).unwrap();
        cases += s.cases;
        violations += s.violations;
    }
    for m in 2..=8u32 {
        let s = prooflab::run_suite(Suite::Partition, m, None).unwrap();
        cases += s.cases;
        violations += s.violations;
    }
    for m in 2..=4u32 {
        let s = prooflab::run_suite(Suite::Eq315, m, None).unwrap();
        cases += s.cases;
        violations += s.violations;
    }
    result(
        9,
        "proof mechanisms: root bound, unit-pair trace, partition, z-correspondence",
        violations == 0,
        format!("{cases} cases, {violations} violations"),
    )
}

/// Table reproduction for m in 2..=8, plus the integer-side closed-form
/// consistency for all m <= 20.
fn c10_table_reproduction() -> CriterionResult {
    let rows = catalog::build_table(2, 8).unwrap();
    let all_verified = rows.iter().all(|r| r.verified);
    // byte determinism of the rendering
    let deterministic = catalog::render_table(&rows, TableFormat::Csv)
        == catalog::render_table(&rows, TableFormat::Csv);
    let int_start = Instant::now();
    let mut entries = 0usize;
    for m in 2..=exponents::MAX_M {
        // corollary_catalog aborts on any closed-form/solver mismatch
        entries += exponents::corollary_catalog(m).unwrap().len();
    }
    let int_elapsed = int_start.elapsed();
    let int_fast = int_elapsed < Duration::from_secs(1);
    result(
        10,
        "table reproduction m in 2..=8 verified; closed forms match solver m <= 20",
        all_verified && deterministic && int_fast && !rows.is_empty(),
        format!(
            "{} rows all verified, {entries} catalog entries consistent in {} us",
            rows.len(),
            int_elapsed.as_micros()
        ),
    )
}

/// Negative control. The ascending (m, i, δ) scan over i in 0..=2^m finds
/// no failure at m = 2 (all 80 instances permute: i in {2, 3, 4} are
/// covered constructions and i in {0, 1} are conjugate-affine); the first
/// failure appears at m = 3 and is pinned here together with its
/// lexicographically first collision.
fn c11_negative_control() -> CriterionResult {
    let expected_triple = (3u32, 3u64, FieldElement::from_bits(0x2));
    let expected_pair = (
        FieldElement::from_bits(0x0),
        FieldElement::from_bits(0x5),
    );

    let mut m2_failures = 0u64;
    let f4 = Field::new(4).unwrap();
    for i in 0..=4u64 {
        for delta in f4.elements() {
            let report = PPInstance::from_index(&f4, delta, i)
                .unwrap()
                .check_exhaustive()
                .unwrap();
            if !report.is_permutation {
                m2_failures += 1;
            }
        }
    }

    fn scan<'f>(field: &'f Field, m: u32) -> Option<(u64, FieldElement, PPInstance<'f>)> {
        for i in 0..=1u64 << m {
            for delta in field.elements() {
                let inst = PPInstance::from_index(field, delta, i).unwrap();
                if !inst.check_exhaustive().unwrap().is_permutation {
                    return Some((i, delta, inst));
                }
            }
        }
        None
    }
    let f6 = Field::new(6).unwrap();
    let first = scan(&f6, 3);
    let mut fixture_ok = false;
    let mut stable = false;
    let mut sound = false;
    if let Some((i, delta, inst)) = first {
        fixture_ok = (3, i, delta) == expected_triple && inst.s() == 22;
        let report = inst.check_exhaustive().unwrap();
        sound = report.counterexample == Some(expected_pair)
            && inst.evaluate(expected_pair.0) == inst.evaluate(expected_pair.1);
        // stability across runs
        let again = scan(&f6, 3);
        stable = matches!(again, Some((i2, d2, _)) if (i2, d2) == (i, delta));
    }
    result(
        11,
        "negative control: m = 2 scan all-pass, first failure pinned at m = 3",
        m2_failures == 0 && fixture_ok && sound && stable,
        format!(
            "m=2 failures: {m2_failures} (expected 0); m=3 first failure (i=3, delta=2, s=22), collision (0, 5): pinned={fixture_ok} sound={sound} stable={stable}"
        ),
    )
}
