//! Numerical exercises for the algebraic machinery behind the construction:
//! the affine-equation solution trichotomy, the Möbius bijection onto the
//! unit circle, the power-sum identity, the U1/U2 partition, the λ- and
//! z-equations that pin down colliding unit-circle elements, and the
//! unit-pair trace identity that rules out double roots.
//!
//! Each device has a direct operation plus a sweep suite that enumerates its
//! whole small-field domain and counts violations (always zero, which is the
//! point).

use serde::Serialize;
use thiserror::Error;

use crate::field::{Field, FieldElement, FieldError};
use crate::rng::SplitMix64;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ProofLabError {
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error("theta = {0} lies in the subfield; the conjugate quotient degenerates")]
    ThetaInSubfield(FieldElement),
    #[error("z = {0} is not a subfield element")]
    ZOutsideSubfield(FieldElement),
    #[error("delta = {0} has relative trace zero")]
    TraceZeroDelta(FieldElement),
    #[error("lambda = {0} lies in U1, the denominator vanishes")]
    LambdaInU1(FieldElement),
    #[error("{0} is not on the unit circle")]
    NotOnUnitCircle(FieldElement),
    #[error("lambda inputs must be distinct")]
    EqualLambdas,
    #[error("k = {0} unsupported, need 1..=32")]
    BadK(u32),
    #[error("suite {suite} supports m in {min}..={max}, got {m}")]
    SuiteOutOfRange {
        suite: &'static str,
        m: u32,
        min: u32,
        max: u32,
    },
}

/// Solution census of x̄ + a·x + b = 0 over GF(2^{2m}): a unique solution,
/// a subfield-sized solution set, or none.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AffineSolutionClass {
    Unique(FieldElement),
    SubfieldMany { count: u64 },
    NoSolution,
}

impl AffineSolutionClass {
    pub fn count(&self) -> u64 {
        match self {
            AffineSolutionClass::Unique(_) => 1,
            AffineSolutionClass::SubfieldMany { count } => *count,
            AffineSolutionClass::NoSolution => 0,
        }
    }

    pub fn solution(&self) -> Option<FieldElement> {
        match self {
            AffineSolutionClass::Unique(x) => Some(*x),
            _ => None,
        }
    }
}

/// Classifies x̄ + a·x + b = 0: when a·ā != 1 the unique solution is
/// (ā·b + b̄)/(a·ā + 1); when a·ā = 1 there are 2^m solutions if
/// ā·b + b̄ = 0 and none otherwise.
pub fn affine_solutions(
    field: &Field,
    a: FieldElement,
    b: FieldElement,
) -> Result<AffineSolutionClass, ProofLabError> {
    let m = field.tower_m()?;
    let a_bar = field.conjugate(a)?;
    let b_bar = field.conjugate(b)?;
    let norm = field.mul(a, a_bar);
    let pivot = field.mul(a_bar, b) ^ b_bar;
    if norm != FieldElement::ONE {
        let x = field.mul(pivot, field.inv(norm ^ FieldElement::ONE)?);
        debug_assert!((field.conjugate(x)? ^ field.mul(a, x) ^ b).is_zero());
        Ok(AffineSolutionClass::Unique(x))
    } else if pivot.is_zero() {
        Ok(AffineSolutionClass::SubfieldMany { count: 1 << m })
    } else {
        Ok(AffineSolutionClass::NoSolution)
    }
}

/// λ = (θ̄ + z)/(θ + z), the bijection GF(2^m) → U \ {1} for θ outside the
/// subfield.
pub fn mobius_map(
    field: &Field,
    theta: FieldElement,
    z: FieldElement,
) -> Result<FieldElement, ProofLabError> {
    let theta_bar = field.conjugate(theta)?;
    if theta_bar == theta {
        return Err(ProofLabError::ThetaInSubfield(theta));
    }
    if field.conjugate(z)? != z {
        return Err(ProofLabError::ZOutsideSubfield(z));
    }
    let lambda = field.mul(theta_bar ^ z, field.inv(theta ^ z)?);
    debug_assert!(field.on_unit_circle(lambda)? && lambda != FieldElement::ONE);
    Ok(lambda)
}

/// Whether x^(2^k+1) + y^(2^k+1) equals
/// (x+y)^(2^k+1) + Σ_{i<k} (xy)^(2^i) (x+y)^(2^k - 2^(i+1) + 1).
/// Holds identically in every binary field.
pub fn power_sum_identity_check(
    field: &Field,
    x: FieldElement,
    y: FieldElement,
    k: u32,
) -> Result<bool, ProofLabError> {
    if !(1..=32).contains(&k) {
        return Err(ProofLabError::BadK(k));
    }
    let e = (1u64 << k) + 1;
    let lhs = field.pow(x, e) ^ field.pow(y, e);
    let sum = x ^ y;
    let prod = field.mul(x, y);
    let mut rhs = field.pow(sum, e);
    for idx in 0..k {
        // exponent 2^k - 2^(i+1) + 1 >= 1 for i <= k-1
        let tail = (1u64 << k) - (1u64 << (idx + 1)) + 1;
        rhs ^= field.mul(field.pow(prod, 1u64 << idx), field.pow(sum, tail));
    }
    Ok(lhs == rhs)
}

/// Splits the unit circle into U1 = {λ : (1 + λ̄)(1 + λ) = 1} and its
/// complement U2. U1 consists exactly of the primitive cube roots of unity,
/// so it is empty for even m and has two elements for odd m.
pub fn partition_unit_circle(
    field: &Field,
) -> Result<(Vec<FieldElement>, Vec<FieldElement>), ProofLabError> {
    let circle = field.unit_circle()?;
    let mut u1 = Vec::new();
    let mut u2 = Vec::new();
    for &lambda in &circle {
        let bar = field.conjugate(lambda)?;
        let val = field.mul(FieldElement::ONE ^ bar, FieldElement::ONE ^ lambda);
        let in_u1 = val == FieldElement::ONE;
        // cross-characterization: λ² + λ + 1 = 0 and λ != 1
        let cube_root = (field.square(lambda) ^ lambda ^ FieldElement::ONE).is_zero()
            && lambda != FieldElement::ONE;
        assert_eq!(in_u1, cube_root, "U1 must be the primitive cube roots");
        if in_u1 {
            u1.push(lambda);
        } else {
            u2.push(lambda);
        }
    }
    Ok((u1, u2))
}

/// The Case I / Case II working data: θ = δ + γ + γ̄ and the exponent
/// parameter k. θ + θ̄ equals Tr(δ) independently of γ.
#[derive(Clone, Copy)]
pub struct CaseContext<'f> {
    pub field: &'f Field,
    pub m: u32,
    pub k: u32,
    pub delta: FieldElement,
    pub gamma: FieldElement,
    pub theta: FieldElement,
}

impl<'f> CaseContext<'f> {
    pub fn new(
        field: &'f Field,
        delta: FieldElement,
        gamma: FieldElement,
        k: u32,
    ) -> Result<Self, ProofLabError> {
        let m = field.tower_m()?;
        if !(1..=32).contains(&k) {
            return Err(ProofLabError::BadK(k));
        }
        let theta = delta ^ gamma ^ field.conjugate(gamma)?;
        debug_assert_eq!(
            theta ^ field.conjugate(theta)?,
            field.rel_trace(delta)?,
            "theta + theta_bar must equal Tr(delta) for every gamma"
        );
        Ok(CaseContext {
            field,
            m,
            k,
            delta,
            gamma,
            theta,
        })
    }

    pub fn trace_nonzero(&self) -> bool {
        !self.field.rel_trace(self.delta).unwrap().is_zero()
    }

    /// Case I pivot: θ² + θθ̄ + θ̄² = 0.
    pub fn is_case1(&self) -> bool {
        let f = self.field;
        let bar = f.conjugate(self.theta).unwrap();
        (f.square(self.theta) ^ f.mul(self.theta, bar) ^ f.square(bar)).is_zero()
    }
}

/// All λ on the unit circle satisfying
/// θ̄·λ^(2^k+1) + (θ+θ̄)·λ^(2^k) + (θ+θ̄)·λ + θ = 0,
/// found by scanning U. λ = 1 is never a root when Tr(δ) != 0.
pub fn lambda_equation_roots(ctx: &CaseContext) -> Result<Vec<FieldElement>, ProofLabError> {
    if !ctx.trace_nonzero() {
        return Err(ProofLabError::TraceZeroDelta(ctx.delta));
    }
    let f = ctx.field;
    let theta = ctx.theta;
    let bar = f.conjugate(theta)?;
    let tsum = theta ^ bar;
    let e = (1u64 << ctx.k) + 1;
    let mut roots = Vec::new();
    for lambda in f.unit_circle()? {
        let val = f.mul(bar, f.pow(lambda, e))
            ^ f.mul(tsum, f.pow(lambda, 1u64 << ctx.k))
            ^ f.mul(tsum, lambda)
            ^ theta;
        if val.is_zero() {
            roots.push(lambda);
        }
    }
    assert!(
        !roots.contains(&FieldElement::ONE),
        "lambda = 1 cannot solve the equation when the trace is nonzero"
    );
    Ok(roots)
}

/// Left side of the z-form of the λ-equation at one z:
/// (θ+θ̄)z^(2^k+1) + (θ^(2^k)·θ̄ + θ̄^(2^k)·θ)z + (θ^(2^k)+θ̄^(2^k))(θ²+θθ̄+θ̄²).
fn z_equation_value(ctx: &CaseContext, z: FieldElement) -> FieldElement {
    let f = ctx.field;
    let theta = ctx.theta;
    let bar = f.conjugate(theta).unwrap();
    let tsum = theta ^ bar;
    let tk = f.pow(theta, 1u64 << ctx.k);
    let bk = f.pow(bar, 1u64 << ctx.k);
    let quad = f.square(theta) ^ f.mul(theta, bar) ^ f.square(bar);
    f.mul(tsum, f.pow(z, (1u64 << ctx.k) + 1))
        ^ f.mul(f.mul(tk, bar) ^ f.mul(bk, theta), z)
        ^ f.mul(tk ^ bk, quad)
}

/// Checks that z ∈ GF(2^m) solves the z-form exactly when λ = (θ̄+z)/(θ+z)
/// solves the λ-equation, by double enumeration.
pub fn z_substitution_check(ctx: &CaseContext) -> Result<bool, ProofLabError> {
    if !ctx.trace_nonzero() {
        return Err(ProofLabError::TraceZeroDelta(ctx.delta));
    }
    let f = ctx.field;
    // Tr(δ) != 0 forces θ != θ̄, so the Möbius parametrization is available.
    debug_assert!(f.conjugate(ctx.theta)? != ctx.theta);
    let mut mapped: Vec<FieldElement> = Vec::new();
    for &z in f.subfield_elements()?.iter() {
        if z_equation_value(ctx, z).is_zero() {
            mapped.push(mobius_map(f, ctx.theta, z)?);
        }
    }
    let mut lambda_roots = lambda_equation_roots(ctx)?;
    mapped.sort_unstable();
    lambda_roots.sort_unstable();
    Ok(mapped == lambda_roots)
}

/// Tr(λ1·λ2/(λ1+λ2)²) over GF(2^m), for distinct unit-circle λ1, λ2. The
/// argument always lands in the subfield and the trace is always 1; that
/// constant 1 is what forbids two distinct roots of the λ-equation.
pub fn unit_pair_trace(
    field: &Field,
    l1: FieldElement,
    l2: FieldElement,
) -> Result<bool, ProofLabError> {
    let m = field.tower_m()?;
    if l1 == l2 {
        return Err(ProofLabError::EqualLambdas);
    }
    for l in [l1, l2] {
        if !field.on_unit_circle(l)? {
            return Err(ProofLabError::NotOnUnitCircle(l));
        }
    }
    let arg = field.mul(field.mul(l1, l2), field.inv(field.square(l1 ^ l2))?);
    assert_eq!(
        field.conjugate(arg)?,
        arg,
        "the trace argument must lie in the subfield"
    );
    // absolute trace of the subfield GF(2^m): m Frobenius terms
    let mut acc = FieldElement::ZERO;
    let mut p = arg;
    for _ in 0..m {
        acc ^= p;
        p = field.square(p);
    }
    assert!(acc.bits() <= 1);
    Ok(acc == FieldElement::ONE)
}

/// The unique solution of x̄ + (1+λ)x + δ + λγ = 0 for λ in U2:
/// x = ((1+λ̄)(δ+λγ) + δ̄ + λ̄γ̄) / ((1+λ̄)(1+λ) + 1).
pub fn case2_solution(
    lambda: FieldElement,
    ctx: &CaseContext,
) -> Result<FieldElement, ProofLabError> {
    let f = ctx.field;
    if !f.on_unit_circle(lambda)? {
        return Err(ProofLabError::NotOnUnitCircle(lambda));
    }
    let bar = f.conjugate(lambda)?;
    let one = FieldElement::ONE;
    let denom = f.mul(one ^ bar, one ^ lambda) ^ one;
    if denom.is_zero() {
        return Err(ProofLabError::LambdaInU1(lambda));
    }
    let num = f.mul(one ^ bar, ctx.delta ^ f.mul(lambda, ctx.gamma))
        ^ f.conjugate(ctx.delta)?
        ^ f.mul(bar, f.conjugate(ctx.gamma)?);
    let x = f.mul(num, f.inv(denom)?);
    // re-substitution into the affine equation
    debug_assert!(
        (f.conjugate(x)? ^ f.mul(one ^ lambda, x) ^ ctx.delta ^ f.mul(lambda, ctx.gamma)).is_zero()
    );
    // matching closed form for x + γ: (θ + θ̄ + λ̄θ)/(1 + λ + λ̄)
    debug_assert_eq!(x ^ ctx.gamma, {
        let tbar = f.conjugate(ctx.theta)?;
        f.mul(ctx.theta ^ tbar ^ f.mul(bar, ctx.theta), f.inv(denom)?)
    });
    Ok(x)
}

// ---------------------------------------------------------------------------
// Suites: full-domain sweeps with violation counting.
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Lemma22,
    Lemma23,
    Lemma24,
    Partition,
    Eq309,
    Eq315,
    TracePair,
    Case2,
}

impl Suite {
    pub const ALL: [Suite; 8] = [
        Suite::Lemma22,
        Suite::Lemma23,
        Suite::Lemma24,
        Suite::Partition,
        Suite::Eq309,
        Suite::Eq315,
        Suite::TracePair,
        Suite::Case2,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Lemma22 => "lemma22",
            Suite::Lemma23 => "lemma23",
            Suite::Lemma24 => "lemma24",
            Suite::Partition => "partition",
            Suite::Eq309 => "eq309",
            Suite::Eq315 => "eq315",
            Suite::TracePair => "trace-pair",
            Suite::Case2 => "case2",
        }
    }

    pub fn parse(s: &str) -> Option<Suite> {
        Suite::ALL.into_iter().find(|v| v.name() == s)
    }
}

/// Outcome of one suite run.
#[derive(Debug, Clone, Serialize)]
pub struct SuiteSummary {
    pub suite: &'static str,
    pub m: u32,
    pub k: Option<u32>,
    pub cases: u64,
    pub violations: u64,
    pub first_violation: Option<String>,
}

impl SuiteSummary {
    fn new(suite: Suite, m: u32, k: Option<u32>) -> SuiteSummary {
        SuiteSummary {
            suite: suite.name(),
            m,
            k,
            cases: 0,
            violations: 0,
            first_violation: None,
        }
    }

    fn record(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.violations += 1;
            if self.first_violation.is_none() {
                self.first_violation = Some(describe());
            }
        }
    }

    pub fn clean(&self) -> bool {
        self.violations == 0
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("summary serialization cannot fail")
    }
}

fn check_m_range(suite: Suite, m: u32, min: u32, max: u32) -> Result<(), ProofLabError> {
    if (min..=max).contains(&m) {
        Ok(())
    } else {
        Err(ProofLabError::SuiteOutOfRange {
            suite: suite.name(),
            m,
            min,
            max,
        })
    }
}

/// The k values whose hypotheses cover (m, k): opposite parity, or both even
/// with k | m and m/k even.
pub fn hypothesis_ks(m: u32) -> Vec<u32> {
    (1..m)
        .filter(|&k| m % 2 != k % 2 || (k % 2 == 0 && m % k == 0 && (m / k) % 2 == 0))
        .collect()
}

/// Runs one suite over GF(2^{2m}). `k` narrows the k-sweep where a suite has
/// one; suites without a k dimension ignore it.
pub fn run_suite(suite: Suite, m: u32, k: Option<u32>) -> Result<SuiteSummary, ProofLabError> {
    match suite {
        Suite::Lemma22 => suite_lemma22(m, k),
        Suite::Lemma23 => suite_lemma23(m, k),
        Suite::Lemma24 => suite_lemma24(m, k),
        Suite::Partition => suite_partition(m, k),
        Suite::Eq309 => suite_lambda_roots(Suite::Eq309, m, k),
        Suite::Eq315 => suite_z_correspondence(m, k),
        Suite::TracePair => suite_trace_pair(m, k),
        Suite::Case2 => suite_case2(m, k),
    }
}

/// Affine trichotomy vs exhaustive root counting, all (a, b).
fn suite_lemma22(m: u32, k: Option<u32>) -> Result<SuiteSummary, ProofLabError> {
    check_m_range(Suite::Lemma22, m, 2, 4)?;
    let field = Field::new(2 * m)?;
    let mut summary = SuiteSummary::new(Suite::Lemma22, m, k);
    for a in field.elements() {
        for b in field.elements() {
            let class = affine_solutions(&field, a, b)?;
            let brute = field
                .elements()
                .filter(|&x| (field.conjugate(x).unwrap() ^ field.mul(a, x) ^ b).is_zero())
                .count() as u64;
            let ok = class.count() == brute && [0, 1, 1 << m].contains(&brute);
            summary.record(ok, || format!("a={a} b={b} class={class:?} brute={brute}"));
        }
    }
    Ok(summary)
}

/// Möbius bijectivity: for every θ outside the subfield the image of
/// GF(2^m) is exactly U \ {1}, with no repeats.
fn suite_lemma23(m: u32, k: Option<u32>) -> Result<SuiteSummary, ProofLabError> {
    check_m_range(Suite::Lemma23, m, 2, 6)?;
    let field = Field::new(2 * m)?;
    let sub = field.subfield_elements()?;
    let mut expected: Vec<FieldElement> = field.unit_circle()?;
    expected.retain(|&l| l != FieldElement::ONE);
    expected.sort_unstable();
    let mut summary = SuiteSummary::new(Suite::Lemma23, m, k);
    for theta in field.elements() {
        if field.conjugate(theta)? == theta {
            continue;
        }
        let mut image: Vec<FieldElement> = sub
            .iter()
            .map(|&z| mobius_map(&field, theta, z))
            .collect::<Result<_, _>>()?;
        image.sort_unstable();
        image.dedup();
        summary.record(image == expected, || {
            format!("theta={theta} image size {}", image.len())
        });
    }
    Ok(summary)
}

/// The power-sum identity for all pairs and k up to the given bound.
fn suite_lemma24(m: u32, k: Option<u32>) -> Result<SuiteSummary, ProofLabError> {
    check_m_range(Suite::Lemma24, m, 1, 4)?;
    let field = Field::new(2 * m)?;
    let kmax = k.unwrap_or(8);
    let mut summary = SuiteSummary::new(Suite::Lemma24, m, k);
    for kk in 1..=kmax {
        for x in field.elements() {
            for y in field.elements() {
                let ok = power_sum_identity_check(&field, x, y, kk)?;
                summary.record(ok, || format!("x={x} y={y} k={kk}"));
            }
        }
    }
    Ok(summary)
}

/// U1/U2 partition facts.
fn suite_partition(m: u32, k: Option<u32>) -> Result<SuiteSummary, ProofLabError> {
    check_m_range(Suite::Partition, m, 2, 8)?;
    let field = Field::new(2 * m)?;
    let (u1, u2) = partition_unit_circle(&field)?;
    let mut summary = SuiteSummary::new(Suite::Partition, m, k);
    summary.record(u1.len() + u2.len() == (1 << m) + 1, || {
        format!("|U1|={} |U2|={}", u1.len(), u2.len())
    });
    let expected_u1 = if m % 2 == 0 { 0 } else { 2 };
    summary.record(u1.len() == expected_u1, || {
        format!("|U1|={} for m={m}", u1.len())
    });
    for lambda in u1 {
        summary.record(
            field.pow(lambda, 3) == FieldElement::ONE && lambda != FieldElement::ONE,
            || format!("lambda={lambda} not a primitive cube root"),
        );
    }
    Ok(summary)
}

/// γ values for a sweep: the whole field up to degree 12, 256 seeded draws
/// above that.
fn gamma_sweep(field: &Field) -> Vec<FieldElement> {
    if field.degree() <= 12 {
        field.elements().collect()
    } else {
        let mut rng = SplitMix64::new(0x6a5);
        let mut set = std::collections::BTreeSet::new();
        while set.len() < 256 {
            set.insert(FieldElement::from_bits(rng.next_u64() & field.order()));
        }
        set.into_iter().collect()
    }
}

/// λ-equation root bound: at most one root in U2 for every admissible
/// (δ, γ) and covered k.
fn suite_lambda_roots(suite: Suite, m: u32, k: Option<u32>) -> Result<SuiteSummary, ProofLabError> {
    check_m_range(suite, m, 2, 6)?;
    let field = Field::new(2 * m)?;
    let ks = match k {
        Some(kk) => vec![kk],
        None => hypothesis_ks(m),
    };
    let (u1, _) = partition_unit_circle(&field)?;
    let gammas = gamma_sweep(&field);
    let mut summary = SuiteSummary::new(suite, m, k);
    for delta in field.elements() {
        if field.rel_trace(delta)?.is_zero() {
            continue;
        }
        for &gamma in &gammas {
            for &kk in &ks {
                let ctx = CaseContext::new(&field, delta, gamma, kk)?;
                let roots = lambda_equation_roots(&ctx)?;
                let in_u2 = roots.iter().filter(|r| !u1.contains(r)).count();
                summary.record(in_u2 <= 1, || {
                    format!("delta={delta} gamma={gamma} k={kk} roots_in_U2={in_u2}")
                });
            }
        }
    }
    Ok(summary)
}

/// Root correspondence between the z-form and the λ-form, all k in 1..m.
fn suite_z_correspondence(m: u32, k: Option<u32>) -> Result<SuiteSummary, ProofLabError> {
    check_m_range(Suite::Eq315, m, 2, 6)?;
    let field = Field::new(2 * m)?;
    let ks: Vec<u32> = match k {
        Some(kk) => vec![kk],
        None => (1..m.max(2)).collect(),
    };
    let gammas = gamma_sweep(&field);
    let mut summary = SuiteSummary::new(Suite::Eq315, m, k);
    for delta in field.elements() {
        if field.rel_trace(delta)?.is_zero() {
            continue;
        }
        for &gamma in &gammas {
            for &kk in &ks {
                let ctx = CaseContext::new(&field, delta, gamma, kk)?;
                let ok = z_substitution_check(&ctx)?;
                summary.record(ok, || format!("delta={delta} gamma={gamma} k={kk}"));
            }
        }
    }
    Ok(summary)
}

/// Tr(λ1·λ2/(λ1+λ2)²) = 1 over all distinct unit-circle pairs.
fn suite_trace_pair(m: u32, k: Option<u32>) -> Result<SuiteSummary, ProofLabError> {
    check_m_range(Suite::TracePair, m, 2, 8)?;
    let field = Field::new(2 * m)?;
    let circle = field.unit_circle()?;
    let mut summary = SuiteSummary::new(Suite::TracePair, m, k);
    for a in 0..circle.len() {
        for b in a + 1..circle.len() {
            let ok = unit_pair_trace(&field, circle[a], circle[b])?;
            summary.record(ok, || format!("l1={} l2={}", circle[a], circle[b]));
        }
    }
    Ok(summary)
}

/// Case II closed-form solution: re-substitution residual and the x + γ
/// closed form, over all λ in U2 and all (δ, γ); U1 inputs must error.
fn suite_case2(m: u32, k: Option<u32>) -> Result<SuiteSummary, ProofLabError> {
    check_m_range(Suite::Case2, m, 2, 4)?;
    let field = Field::new(2 * m)?;
    let (u1, u2) = partition_unit_circle(&field)?;
    let mut summary = SuiteSummary::new(Suite::Case2, m, k);
    let one = FieldElement::ONE;
    for delta in field.elements() {
        for gamma in field.elements() {
            let ctx = CaseContext::new(&field, delta, gamma, k.unwrap_or(1))?;
            for &lambda in &u2 {
                let x = case2_solution(lambda, &ctx)?;
                let bar = field.conjugate(lambda)?;
                let residual = field.conjugate(x)?
                    ^ field.mul(one ^ lambda, x)
                    ^ delta
                    ^ field.mul(lambda, gamma);
                let tbar = field.conjugate(ctx.theta)?;
                let denom = field.mul(one ^ bar, one ^ lambda) ^ one;
                let closed = field.mul(
                    ctx.theta ^ tbar ^ field.mul(bar, ctx.theta),
                    field.inv(denom)?,
                );
                summary.record(residual.is_zero() && (x ^ gamma) == closed, || {
                    format!("lambda={lambda} delta={delta} gamma={gamma}")
                });
            }
            for &lambda in &u1 {
                let rejected =
                    matches!(case2_solution(lambda, &ctx), Err(ProofLabError::LambdaInU1(_)));
                summary.record(rejected, || format!("lambda={lambda} in U1 not rejected"));
            }
        }
    }
    Ok(summary)
}
