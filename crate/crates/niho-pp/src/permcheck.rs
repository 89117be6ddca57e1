//! The bijection oracle: evaluate f(x) = (x̄ + x + δ)^s + x over GF(2^{2m})
//! and decide the permutation property by exhaustive evaluation, with
//! deterministic δ-sweep policies and counterexample extraction.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use serde::Serialize;
use thiserror::Error;

use crate::exponents;
use crate::field::{Field, FieldElement, FieldError};
use crate::rng::SplitMix64;

/// Exhaustive checks are limited to fields of at most 2^16 elements.
pub const EXHAUSTIVE_DEGREE_LIMIT: u32 = 16;
/// ALL-δ sweeps are additionally limited to fields of at most 2^12 elements.
pub const ALL_SWEEP_DEGREE_LIMIT: u32 = 12;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PermCheckError {
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error("exhaustive check supports degree <= {max}, field has degree {degree}")]
    FieldTooLarge { degree: u32, max: u32 },
    #[error("ALL-delta sweep supports degree <= {max}, field has degree {degree}")]
    SweepTooLarge { degree: u32, max: u32 },
    #[error("exponent s must be >= 1")]
    ZeroExponent,
    #[error("sample count {count} invalid: need 2..={max}")]
    BadSampleCount { count: u64, max: u64 },
    #[error("index i = {i} outside 0..={max}")]
    IndexOutOfRange { i: u64, max: u64 },
}

/// One concrete polynomial (x̄ + x + δ)^s + x over a degree-2m field.
///
/// The exponent is reduced mod 2^{2m} - 1 once at construction; the zero
/// base is handled by the 0^s rule during evaluation, so the reduction is
/// observationally identical to using s directly.
#[derive(Clone, Copy)]
pub struct PPInstance<'f> {
    field: &'f Field,
    m: u32,
    delta: FieldElement,
    s: u64,
    s_red: u64,
    conj_exp: u64,
}

impl<'f> PPInstance<'f> {
    pub fn new(field: &'f Field, delta: FieldElement, s: u64) -> Result<Self, PermCheckError> {
        let m = field.tower_m()?;
        field.element(delta.bits())?;
        if s == 0 {
            return Err(PermCheckError::ZeroExponent);
        }
        Ok(PPInstance {
            field,
            m,
            delta,
            s,
            s_red: s % field.order(),
            conj_exp: 1u64 << m,
        })
    }

    /// Instance for the normalized Niho exponent s = i(2^m - 1) + 1.
    pub fn from_index(field: &'f Field, delta: FieldElement, i: u64) -> Result<Self, PermCheckError> {
        let m = field.tower_m()?;
        if i > 1 << m {
            return Err(PermCheckError::IndexOutOfRange { i, max: 1 << m });
        }
        Self::new(field, delta, exponents::niho_exponent(m, i).s)
    }

    pub fn field(&self) -> &'f Field {
        self.field
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn delta(&self) -> FieldElement {
        self.delta
    }

    pub fn s(&self) -> u64 {
        self.s
    }

    /// f(x) = (x̄ + x + δ)^s + x.
    pub fn evaluate(&self, x: FieldElement) -> FieldElement {
        let w = self.field.pow(x, self.conj_exp) ^ x ^ self.delta;
        if w.is_zero() {
            // 0^s = 0 for s >= 1
            x
        } else {
            self.field.pow(w, self.s_red) ^ x
        }
    }

    /// Evaluates f on every field element, marking hits in a presence
    /// bitmap. On a collision the lexicographically first colliding pair
    /// (x1, x2), x1 < x2, f(x1) = f(x2), is extracted deterministically.
    pub fn check_exhaustive(&self) -> Result<PermutationReport, PermCheckError> {
        let degree = self.field.degree();
        if degree > EXHAUSTIVE_DEGREE_LIMIT {
            return Err(PermCheckError::FieldTooLarge {
                degree,
                max: EXHAUSTIVE_DEGREE_LIMIT,
            });
        }
        let start = Instant::now();
        let n = self.field.size();
        let mut seen = vec![0u64; n.div_ceil(64) as usize];
        let mut evaluations = 0u64;
        let mut collided = false;
        for x in 0..n {
            let y = self.evaluate(FieldElement::from_bits(x)).bits();
            evaluations += 1;
            let (word, bit) = ((y / 64) as usize, y % 64);
            if seen[word] >> bit & 1 == 1 {
                collided = true;
                break;
            }
            seen[word] |= 1 << bit;
        }
        let counterexample = if collided {
            // second pass: full image table, then the lex-first pair
            let mut imgs = Vec::with_capacity(n as usize);
            for x in 0..n {
                imgs.push(self.evaluate(FieldElement::from_bits(x)).bits());
                evaluations += 1;
            }
            let mut count = vec![0u32; n as usize];
            for &y in &imgs {
                count[y as usize] += 1;
            }
            let a = (0..n as usize)
                .find(|&x| count[imgs[x] as usize] >= 2)
                .expect("collision seen in first pass");
            let b = (a + 1..n as usize)
                .find(|&x| imgs[x] == imgs[a])
                .expect("second preimage exists");
            Some((
                FieldElement::from_bits(a as u64),
                FieldElement::from_bits(b as u64),
            ))
        } else {
            None
        };
        Ok(PermutationReport {
            m: self.m,
            modulus: self.field.modulus(),
            delta: self.delta,
            i: None,
            s: self.s,
            is_permutation: counterexample.is_none(),
            counterexample,
            evaluations,
            elapsed: start.elapsed(),
        })
    }
}

/// Verdict of one exhaustive check. `counterexample` is present exactly when
/// the map is not a permutation, and re-evaluates to a genuine collision.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PermutationReport {
    pub m: u32,
    pub modulus: u64,
    pub delta: FieldElement,
    /// Construction index, when the check came from one.
    pub i: Option<u64>,
    pub s: u64,
    pub is_permutation: bool,
    pub counterexample: Option<(FieldElement, FieldElement)>,
    pub evaluations: u64,
    pub elapsed: Duration,
}

#[derive(Serialize)]
struct ReportJson {
    m: u32,
    modulus_hex: String,
    delta_hex: String,
    i: Option<u64>,
    s: u64,
    is_permutation: bool,
    counterexample: Option<[String; 2]>,
    evaluations: u64,
    ms: u128,
}

impl PermutationReport {
    pub fn to_json_line(&self) -> String {
        serde_json::to_string(&ReportJson {
            m: self.m,
            modulus_hex: format!("{:x}", self.modulus),
            delta_hex: self.delta.hex(),
            i: self.i,
            s: self.s,
            is_permutation: self.is_permutation,
            counterexample: self.counterexample.map(|(a, b)| [a.hex(), b.hex()]),
            evaluations: self.evaluations,
            ms: self.elapsed.as_millis(),
        })
        .expect("report serialization cannot fail")
    }

    /// Everything except the timing field, for determinism comparisons.
    pub fn content_key(&self) -> impl PartialEq + std::fmt::Debug {
        (
            self.m,
            self.modulus,
            self.delta,
            self.i,
            self.s,
            self.is_permutation,
            self.counterexample,
            self.evaluations,
        )
    }
}

/// True iff Tr(δ) = δ + δ̄ = 0, i.e. δ lies in the subfield GF(2^m). Such δ
/// make f a permutation for every exponent s.
pub fn trace_zero_shortcut(field: &Field, delta: FieldElement) -> Result<bool, FieldError> {
    Ok(field.rel_trace(delta)?.is_zero())
}

/// How δ values are chosen for a construction sweep.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DeltaPolicy {
    /// Every field element; needs degree <= [`ALL_SWEEP_DEGREE_LIMIT`].
    All,
    /// `count` distinct seeded draws, always force-including δ = 0 and the
    /// smallest trace-nonzero δ.
    Sample { count: u64, seed: u64 },
}

impl DeltaPolicy {
    pub fn label(&self) -> String {
        match self {
            DeltaPolicy::All => "all".to_string(),
            DeltaPolicy::Sample { count, seed } => format!("sample({count},{seed})"),
        }
    }
}

/// Resolves a policy to a concrete ascending δ list.
pub fn select_deltas(field: &Field, policy: DeltaPolicy) -> Result<Vec<FieldElement>, PermCheckError> {
    field.tower_m()?;
    match policy {
        DeltaPolicy::All => {
            if field.degree() > ALL_SWEEP_DEGREE_LIMIT {
                return Err(PermCheckError::SweepTooLarge {
                    degree: field.degree(),
                    max: ALL_SWEEP_DEGREE_LIMIT,
                });
            }
            Ok(field.elements().collect())
        }
        DeltaPolicy::Sample { count, seed } => {
            if count < 2 || count > field.size() {
                return Err(PermCheckError::BadSampleCount {
                    count,
                    max: field.size(),
                });
            }
            let mut chosen = BTreeSet::new();
            chosen.insert(FieldElement::ZERO);
            let nonzero_trace = field
                .elements()
                .find(|&d| !field.rel_trace(d).unwrap().is_zero())
                .expect("even-degree fields have trace-nonzero elements");
            chosen.insert(nonzero_trace);
            let mut rng = SplitMix64::new(seed);
            while (chosen.len() as u64) < count {
                chosen.insert(FieldElement::from_bits(rng.next_u64() & field.order()));
            }
            Ok(chosen.into_iter().collect())
        }
    }
}

/// A δ-sweep over one construction index: one report per δ, in ascending δ
/// order, plus pass/fail tallies.
#[derive(Debug, Clone)]
pub struct ConstructionSweep {
    pub m: u32,
    pub i: u64,
    pub s: u64,
    pub reports: Vec<PermutationReport>,
}

impl ConstructionSweep {
    pub fn passed(&self) -> usize {
        self.reports.iter().filter(|r| r.is_permutation).count()
    }

    pub fn failed(&self) -> usize {
        self.reports.len() - self.passed()
    }

    pub fn all_passed(&self) -> bool {
        self.failed() == 0
    }
}

/// Runs [`PPInstance::check_exhaustive`] for every δ selected by the policy.
pub fn verify_construction(
    field: &Field,
    i: u64,
    policy: DeltaPolicy,
) -> Result<ConstructionSweep, PermCheckError> {
    let m = field.tower_m()?;
    if i > 1 << m {
        return Err(PermCheckError::IndexOutOfRange { i, max: 1 << m });
    }
    let s = exponents::niho_exponent(m, i).s;
    let deltas = select_deltas(field, policy)?;
    let mut reports = Vec::with_capacity(deltas.len());
    for delta in deltas {
        let mut report = PPInstance::new(field, delta, s)?.check_exhaustive()?;
        report.i = Some(i);
        reports.push(report);
    }
    Ok(ConstructionSweep { m, i, s, reports })
}
