//! Integer side of the construction: solving (2^k + 1)·i ≡ c (mod 2^m + 1)
//! for c ∈ {1, 2^k}, the index duality j = 1 - i (mod 2^m + 1), the exponent
//! s = i(2^m - 1) + 1, and the catalog of closed-form index families.
//!
//! Everything here is exact 64/128-bit arithmetic; the catalog is generated
//! for 2 <= m <= 20, where 2^m + 1 stays tiny.

use serde::Serialize;
use thiserror::Error;

/// Largest m for which witnesses and the catalog are generated.
pub const MAX_M: u32 = 20;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExponentError {
    #[error("no solution: gcd({t}, {modulus}) = {gcd} does not divide into a unit")]
    NoSolution { t: u64, modulus: u64, gcd: u64 },
    #[error("modulus {0} too small, need >= 2")]
    ModulusTooSmall(u64),
    #[error("residue c = {c} outside 0..{modulus}")]
    ResidueOutOfRange { c: u64, modulus: u64 },
    #[error("m = {0} outside supported range 2..={MAX_M}")]
    MOutOfRange(u32),
    #[error("k = {k} outside canonical range 1..={max} for m = {m}; pass the override to accept non-canonical k")]
    KOutOfRange { k: u32, m: u32, max: u32 },
    #[error("i = {i} outside 0..={max}")]
    IOutOfRange { i: u64, max: u64 },
}

/// Which residue the congruence targets: c = 1 or c = 2^k mod (2^m + 1).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ResidueClass {
    #[serde(rename = "1")]
    One,
    #[serde(rename = "2k")]
    TwoPowK,
}

impl ResidueClass {
    pub fn value(self, m: u32, k: u32) -> u64 {
        let modulus = (1u64 << m) + 1;
        match self {
            ResidueClass::One => 1,
            ResidueClass::TwoPowK => (1u64 << k) % modulus,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            ResidueClass::One => "1",
            ResidueClass::TwoPowK => "2k",
        }
    }
}

/// Which statement legitimizes a witness.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Provenance {
    /// m and k of opposite parity.
    #[serde(rename = "Theorem3.1")]
    Theorem3_1,
    /// m, k both even with k | m and m/k even.
    #[serde(rename = "Theorem3.3")]
    Theorem3_3,
    /// Externally proved catalog row; no k attached.
    #[serde(rename = "CatalogExternal")]
    CatalogExternal,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConstructionParams {
    pub m: u32,
    pub k: u32,
    pub class: ResidueClass,
    /// k within the canonical range 1..=m-1.
    pub canonical: bool,
}

/// The record tying an index i to the congruence it solves and the
/// hypotheses that legitimize it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConstructionWitness {
    pub params: ConstructionParams,
    pub i: u64,
    pub provenance: Option<Provenance>,
    pub applicable: bool,
    pub reason: String,
}

/// A normalized Niho exponent s = i(2^m - 1) + 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct NihoExponent {
    pub m: u32,
    pub i: u64,
    pub s: u64,
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// The unique i in [0, M-1] with t·i ≡ c (mod M), by extended Euclid.
/// Fails whenever gcd(t, M) > 1; in particular for t = 2^k + 1,
/// M = 2^m + 1 with m, k both odd, where the gcd is 2^gcd(k,m) + 1.
pub fn solve_unit_congruence(t: u64, modulus: u64, c: u64) -> Result<u64, ExponentError> {
    if modulus < 2 {
        return Err(ExponentError::ModulusTooSmall(modulus));
    }
    if c >= modulus {
        return Err(ExponentError::ResidueOutOfRange { c, modulus });
    }
    let g = gcd(t % modulus, modulus);
    if g != 1 {
        return Err(ExponentError::NoSolution { t, modulus, gcd: g });
    }
    let inv = mod_inverse(t % modulus, modulus);
    Ok(((inv as u128 * c as u128) % modulus as u128) as u64)
}

/// Extended Euclid; requires gcd(a, m) = 1 and m >= 2.
fn mod_inverse(a: u64, m: u64) -> u64 {
    let (mut r0, mut r1) = (m as i128, (a % m) as i128);
    let (mut s0, mut s1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
    }
    debug_assert_eq!(r0, 1);
    s0.rem_euclid(m as i128) as u64
}

/// Representative j in [0, 2^m] of 1 - i (mod 2^m + 1). Involutive, and it
/// carries the c = 1 congruence solution to the c = 2^k one.
pub fn dual_index(m: u32, i: u64) -> u64 {
    let modulus = (1u64 << m) + 1;
    assert!(i < modulus, "i = {i} outside 0..=2^{m}");
    (1 + modulus - i) % modulus
}

/// s = i(2^m - 1) + 1, exact and unreduced.
pub fn niho_exponent(m: u32, i: u64) -> NihoExponent {
    assert!(i <= 1u64 << m, "i = {i} outside 0..=2^{m}");
    NihoExponent {
        m,
        i,
        s: i * ((1u64 << m) - 1) + 1,
    }
}

/// Solves (2^k + 1)·i ≡ c (mod 2^m + 1) and classifies the witness.
/// k is restricted to the canonical range 1..=m-1.
pub fn construct_i(m: u32, k: u32, class: ResidueClass) -> Result<ConstructionWitness, ExponentError> {
    construct_i_with(m, k, class, false)
}

/// Like [`construct_i`] but accepts k outside 1..=m-1, marking the witness
/// non-canonical.
pub fn construct_i_with(
    m: u32,
    k: u32,
    class: ResidueClass,
    allow_noncanonical_k: bool,
) -> Result<ConstructionWitness, ExponentError> {
    if !(2..=MAX_M).contains(&m) {
        return Err(ExponentError::MOutOfRange(m));
    }
    let canonical = (1..=m - 1).contains(&k);
    if !canonical && !allow_noncanonical_k {
        return Err(ExponentError::KOutOfRange { k, m, max: m - 1 });
    }
    let modulus = (1u64 << m) + 1;
    let t = (1u64 << k) + 1;
    let c = class.value(m, k);
    let i = solve_unit_congruence(t, modulus, c)?;

    let (provenance, applicable, reason) = if m % 2 != k % 2 {
        (
            Some(Provenance::Theorem3_1),
            true,
            "m and k have opposite parity".to_string(),
        )
    } else if m % 2 == 0 && k % 2 == 0 && m % k == 0 && (m / k) % 2 == 0 {
        (
            Some(Provenance::Theorem3_3),
            true,
            "m and k both even with k | m and m/k even".to_string(),
        )
    } else {
        // Both odd never reaches here: gcd(2^k+1, 2^m+1) > 1 already failed.
        (
            None,
            false,
            format!("m = {m}, k = {k} both even but k does not divide m with even quotient; no covering condition"),
        )
    };

    let reason = if canonical {
        reason
    } else {
        format!("{reason}; k outside canonical range 1..={}", m - 1)
    };

    Ok(ConstructionWitness {
        params: ConstructionParams {
            m,
            k,
            class,
            canonical,
        },
        i,
        provenance,
        applicable,
        reason,
    })
}

/// Origin of a catalog row.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Source {
    Corollary(&'static str),
    External(&'static str),
}

impl Source {
    pub fn label(self) -> String {
        match self {
            Source::Corollary(id) => format!("Corollary{id}"),
            Source::External(tag) => format!("external:{tag}"),
        }
    }
}

/// One resolved catalog line: a concrete (m, i) with its dual, exponent,
/// origin and (for congruence-backed rows) the k and residue class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogEntry {
    pub m: u32,
    pub m_condition: &'static str,
    pub k: Option<u32>,
    pub class: Option<ResidueClass>,
    pub i: u64,
    pub j: u64,
    pub s: u64,
    pub source: Source,
    pub provenance: Provenance,
}

/// Exact division that aborts on a violated divisibility hypothesis.
fn exact_div(num: u64, den: u64) -> u64 {
    assert_eq!(num % den, 0, "closed form {num}/{den} is not an integer");
    num / den
}

struct ClosedForm {
    m_condition: &'static str,
    k: u32,
    source: Source,
    i: u64,
    j: u64,
}

/// Closed-form index pairs applicable at this m, in table order. Only rows
/// whose k lies in the canonical range 1..=m-1 are emitted.
fn closed_forms(m: u32) -> Vec<ClosedForm> {
    let p = |e: u32| 1u64 << e; // 2^e
    let mut rows = Vec::new();
    rows.push(ClosedForm {
        m_condition: "all m",
        k: m - 1,
        source: Source::Corollary("3.1"),
        i: 2,
        j: p(m),
    });
    if m % 2 == 0 {
        rows.push(ClosedForm {
            m_condition: "m even",
            k: 1,
            source: Source::Corollary("3.2"),
            i: exact_div(p(m) + 2, 3),
            j: exact_div(2 * (p(m) + 2), 3),
        });
    }
    if m % 2 == 1 && m >= 3 {
        let (cond, i, j) = if m % 4 == 1 {
            (
                "m odd, m = 1 mod 4",
                exact_div(3 * p(m) + 4, 5),
                exact_div(p(m + 1) + 6, 5),
            )
        } else {
            (
                "m odd, m = 3 mod 4",
                exact_div(p(m) + 2, 5),
                exact_div(p(m + 2) + 8, 5),
            )
        };
        rows.push(ClosedForm {
            m_condition: cond,
            k: 2,
            source: Source::Corollary("3.3"),
            i,
            j,
        });
    }
    if m % 2 == 0 && m >= 4 {
        let (cond, i, j) = match m % 3 {
            0 => (
                "m even, m = 0 mod 3",
                exact_div(p(m + 2) + 5, 9),
                exact_div(5 * p(m) + 13, 9),
            ),
            1 => (
                "m even, m = 1 mod 3",
                exact_div(p(m) + 2, 9),
                exact_div(p(m + 3) + 16, 9),
            ),
            _ => (
                "m even, m = 2 mod 3",
                exact_div(7 * p(m) + 8, 9),
                exact_div(p(m + 1) + 10, 9),
            ),
        };
        rows.push(ClosedForm {
            m_condition: cond,
            k: 3,
            source: Source::Corollary("3.4"),
            i,
            j,
        });
    }
    if m % 2 == 1 && m >= 5 {
        let (cond, i, j) = match m % 8 {
            1 => (
                "m odd, m = 1 mod 8",
                exact_div(11 * p(m) + 12, 17),
                exact_div(3 * p(m + 1) + 22, 17),
            ),
            3 => (
                "m odd, m = 3 mod 8",
                exact_div(15 * p(m) + 16, 17),
                exact_div(p(m + 1) + 18, 17),
            ),
            5 => (
                "m odd, m = 5 mod 8",
                exact_div(p(m) + 2, 17),
                exact_div(p(m + 4) + 32, 17),
            ),
            _ => (
                "m odd, m = 7 mod 8",
                exact_div(5 * p(m) + 6, 17),
                exact_div(3 * p(m + 2) + 28, 17),
            ),
        };
        rows.push(ClosedForm {
            m_condition: cond,
            k: 4,
            source: Source::Corollary("3.5"),
            i,
            j,
        });
    }
    if m % 4 == 0 {
        rows.push(ClosedForm {
            m_condition: "4 | m",
            k: 2,
            source: Source::Corollary("3.6"),
            i: exact_div(p(m + 1) + 3, 5),
            j: exact_div(3 * p(m) + 7, 5),
        });
    }
    if m % 8 == 0 {
        rows.push(ClosedForm {
            m_condition: "8 | m",
            k: 4,
            source: Source::Corollary("3.7"),
            i: exact_div(p(m + 3) + 9, 17),
            j: exact_div(9 * p(m) + 25, 17),
        });
    }
    rows
}

/// Every catalog row applicable at this m, each congruence-backed index
/// cross-checked against [`solve_unit_congruence`] and [`dual_index`].
/// A mismatch between a closed form and the solver aborts.
pub fn corollary_catalog(m: u32) -> Result<Vec<CatalogEntry>, ExponentError> {
    if !(2..=MAX_M).contains(&m) {
        return Err(ExponentError::MOutOfRange(m));
    }
    let modulus = (1u64 << m) + 1;
    let mut out = Vec::new();
    for row in closed_forms(m) {
        let t = (1u64 << row.k) + 1;
        let from_solver_one = solve_unit_congruence(t, modulus, ResidueClass::One.value(m, row.k))?;
        let from_solver_two =
            solve_unit_congruence(t, modulus, ResidueClass::TwoPowK.value(m, row.k))?;
        assert_eq!(
            row.i % modulus,
            from_solver_one,
            "{}: closed form i disagrees with the congruence solver at m={m}",
            row.source.label()
        );
        assert_eq!(
            row.j % modulus,
            from_solver_two,
            "{}: closed form j disagrees with the congruence solver at m={m}",
            row.source.label()
        );
        assert_eq!(
            dual_index(m, row.i),
            row.j,
            "{}: duality map disagrees with the closed-form pair at m={m}",
            row.source.label()
        );
        let provenance = if m % 2 != row.k % 2 {
            Provenance::Theorem3_1
        } else {
            Provenance::Theorem3_3
        };
        for (class, i, j) in [
            (ResidueClass::One, row.i, row.j),
            (ResidueClass::TwoPowK, row.j, row.i),
        ] {
            out.push(CatalogEntry {
                m,
                m_condition: row.m_condition,
                k: Some(row.k),
                class: Some(class),
                i,
                j,
                s: niho_exponent(m, i).s,
                source: row.source,
                provenance,
            });
        }
    }
    // Externally proved rows: no k, verified by brute force only.
    let self_dual = (1u64 << (m - 1)) + 1;
    debug_assert_eq!(dual_index(m, self_dual), self_dual);
    out.push(CatalogEntry {
        m,
        m_condition: "all m",
        k: None,
        class: None,
        i: self_dual,
        j: self_dual,
        s: niho_exponent(m, self_dual).s,
        source: Source::External("Wang"),
        provenance: Provenance::CatalogExternal,
    });
    if m % 3 != 0 {
        let a = (1u64 << (m - 2)) + 1;
        let b = 3 * (1u64 << (m - 2)) + 1;
        debug_assert_eq!(dual_index(m, a), b);
        for (i, j) in [(a, b), (b, a)] {
            out.push(CatalogEntry {
                m,
                m_condition: "m != 0 mod 3",
                k: None,
                class: None,
                i,
                j,
                s: niho_exponent(m, i).s,
                source: Source::External("Wang;Zha"),
                provenance: Provenance::CatalogExternal,
            });
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn solve_fixtures() {
        assert_eq!(solve_unit_congruence(3, 17, 1).unwrap(), 6);
        assert_eq!(solve_unit_congruence(5, 33, 1).unwrap(), 20);
        assert_eq!(
            solve_unit_congruence(3, 9, 1).unwrap_err(),
            ExponentError::NoSolution {
                t: 3,
                modulus: 9,
                gcd: 3
            }
        );
        assert!(matches!(
            solve_unit_congruence(3, 1, 0),
            Err(ExponentError::ModulusTooSmall(1))
        ));
        assert!(matches!(
            solve_unit_congruence(3, 7, 9),
            Err(ExponentError::ResidueOutOfRange { .. })
        ));
    }

    #[test]
    fn solve_matches_naive_scan() {
        // independent oracle: exhaustive search of the residue ring
        for modulus in 2..60u64 {
            for t in 1..40u64 {
                for c in 0..modulus {
                    let naive: Vec<u64> =
                        (0..modulus).filter(|i| (t * i) % modulus == c).collect();
                    match solve_unit_congruence(t, modulus, c) {
                        Ok(i) => assert_eq!(naive, vec![i], "t={t} M={modulus} c={c}"),
                        Err(ExponentError::NoSolution { gcd, .. }) => {
                            assert!(gcd > 1);
                            // either genuinely unsolvable or non-unique
                            assert_ne!(naive.len(), 1, "t={t} M={modulus} c={c}");
                        }
                        Err(e) => panic!("unexpected error {e}"),
                    }
                }
            }
        }
    }

    #[test]
    fn construct_fixtures() {
        let w = construct_i(4, 1, ResidueClass::One).unwrap();
        assert_eq!(w.i, 6);
        assert_eq!(w.provenance, Some(Provenance::Theorem3_1));
        assert!(w.applicable && w.params.canonical);

        let w = construct_i(4, 2, ResidueClass::One).unwrap();
        assert_eq!(w.i, 7);
        assert_eq!(w.provenance, Some(Provenance::Theorem3_3));
        assert!(w.applicable);

        let w = construct_i(4, 3, ResidueClass::One).unwrap();
        assert_eq!(w.i, 2);
        assert_eq!(w.provenance, Some(Provenance::Theorem3_1));
    }

    #[test]
    fn construct_uncovered_and_failing_cases() {
        // both odd: the congruence itself has no solution
        assert!(matches!(
            construct_i(3, 1, ResidueClass::One),
            Err(ExponentError::NoSolution { .. })
        ));
        for m in (3..=19u32).step_by(2) {
            for k in (1..m).step_by(2) {
                assert!(
                    matches!(
                        construct_i(m, k, ResidueClass::One),
                        Err(ExponentError::NoSolution { .. })
                    ),
                    "m={m} k={k}"
                );
            }
        }
        // both even, solvable, but no covering condition (k | m fails or m/k odd)
        let w = construct_i(6, 4, ResidueClass::One).unwrap();
        assert!(!w.applicable);
        assert_eq!(w.provenance, None);
        // k out of range requires the override
        assert!(matches!(
            construct_i(4, 9, ResidueClass::One),
            Err(ExponentError::KOutOfRange { .. })
        ));
        let w = construct_i_with(3, 4, ResidueClass::One, true).unwrap();
        assert!(!w.params.canonical);
        assert_eq!(w.provenance, Some(Provenance::Theorem3_1));
        assert!(w.reason.contains("canonical"));
    }

    #[test]
    fn witness_congruence_invariant() {
        for m in 2..=MAX_M {
            let modulus = (1u64 << m) + 1;
            for k in 1..m {
                for class in [ResidueClass::One, ResidueClass::TwoPowK] {
                    match construct_i(m, k, class) {
                        Ok(w) => {
                            let t = (1u64 << k) + 1;
                            let c = class.value(m, k);
                            assert_eq!((t as u128 * w.i as u128 % modulus as u128) as u64, c);
                            assert!(c == 1 || c == (1u64 << k) % modulus);
                        }
                        Err(ExponentError::NoSolution { .. }) => {
                            assert!(m % 2 == 1 && k % 2 == 1 || m % 2 == 0 && k % 2 == 0);
                        }
                        Err(e) => panic!("{e}"),
                    }
                }
            }
        }
    }

    #[test]
    fn dual_fixtures_and_involution() {
        assert_eq!(dual_index(4, 6), 12);
        assert_eq!(dual_index(4, 2), 16);
        assert_eq!(dual_index(5, 1), 0);
        assert_eq!(dual_index(5, 20), 14);
        assert_eq!(dual_index(7, 38), 92);
        assert_eq!(dual_index(8, 121), 137);
        for m in 2..=MAX_M {
            for i in 0..=(1u64 << m) {
                let j = dual_index(m, i);
                assert!(j <= 1 << m);
                assert_eq!(dual_index(m, j), i);
            }
        }
    }

    #[test]
    fn dual_maps_class_one_to_class_two() {
        for m in 2..=MAX_M {
            let modulus = (1u64 << m) + 1;
            for k in 1..m {
                if let Ok(i) = solve_unit_congruence((1 << k) + 1, modulus, 1) {
                    let j = dual_index(m, i);
                    let t = (1u64 << k) + 1;
                    assert_eq!(
                        (t as u128 * j as u128 % modulus as u128) as u64,
                        (1u64 << k) % modulus
                    );
                }
            }
        }
    }

    #[test]
    fn niho_fixtures() {
        assert_eq!(niho_exponent(2, 2).s, 7);
        assert_eq!(niho_exponent(4, 6).s, 91);
        assert_eq!(niho_exponent(7, 38).s, 4827);
        // s stays below 2^(2m) - 1 across the full index range
        for m in 2..=MAX_M {
            for i in [0, 1, 2, (1u64 << m) - 1, 1u64 << m] {
                let s = niho_exponent(m, i).s;
                assert!(s >= 1);
                if i >= 2 {
                    assert!(s < (1u64 << (2 * m)) - 1);
                }
            }
        }
    }

    #[test]
    fn catalog_small_m_contents() {
        let cat = corollary_catalog(4).unwrap();
        let pairs: Vec<(Option<u32>, u64, u64)> =
            cat.iter().map(|e| (e.k, e.i, e.j)).collect();
        assert!(pairs.contains(&(Some(3), 2, 16)));
        assert!(pairs.contains(&(Some(3), 16, 2)));
        assert!(pairs.contains(&(Some(1), 6, 12)));
        assert!(pairs.contains(&(Some(2), 7, 11)));
        assert!(pairs.contains(&(None, 9, 9))); // 2^(m-1) + 1, self-dual
        assert!(pairs.contains(&(None, 5, 13)) && pairs.contains(&(None, 13, 5)));

        let cat = corollary_catalog(5).unwrap();
        let e = cat
            .iter()
            .find(|e| e.k == Some(2) && e.class == Some(ResidueClass::One))
            .unwrap();
        assert_eq!((e.i, e.j, e.s), (20, 14, 20 * 31 + 1));
        assert!(cat.iter().any(|e| e.k.is_none() && e.i == 17));
        assert!(cat.iter().any(|e| e.k.is_none() && e.i == 9 && e.j == 25));

        let cat = corollary_catalog(8).unwrap();
        let e = cat
            .iter()
            .find(|e| e.k == Some(4) && e.class == Some(ResidueClass::One))
            .unwrap();
        assert_eq!((e.i, e.j), (121, 137));

        // m = 0 mod 3 drops the last external row
        let cat = corollary_catalog(6).unwrap();
        assert_eq!(cat.iter().filter(|e| e.k.is_none()).count(), 1);
    }

    #[test]
    fn catalog_consistency_all_m() {
        // the function itself asserts closed form == solver == dual
        for m in 2..=MAX_M {
            let cat = corollary_catalog(m).unwrap();
            assert!(!cat.is_empty());
            for e in &cat {
                assert!(e.i <= 1 << m);
                assert_eq!(e.s, e.i * ((1u64 << m) - 1) + 1);
                assert_eq!(dual_index(m, e.i), e.j);
                match e.source {
                    Source::Corollary(_) => assert!(e.k.is_some() && e.class.is_some()),
                    Source::External(_) => {
                        assert!(e.k.is_none() && e.class.is_none());
                        assert_eq!(e.provenance, Provenance::CatalogExternal);
                    }
                }
                if let Some(k) = e.k {
                    assert!((1..m).contains(&k), "catalog k within canonical range");
                }
            }
        }
        assert!(corollary_catalog(1).is_err());
        assert!(corollary_catalog(21).is_err());
    }

    #[test]
    fn source_labels() {
        assert_eq!(Source::Corollary("3.2").label(), "Corollary3.2");
        assert_eq!(Source::External("Wang").label(), "external:Wang");
    }

    proptest! {
        #[test]
        fn prop_dual_involution(m in 2u32..=20, x in 0u64..=(1 << 20)) {
            let i = x % ((1u64 << m) + 1);
            let j = dual_index(m, i);
            prop_assert!(j <= 1 << m);
            prop_assert_eq!(dual_index(m, j), i);
        }

        #[test]
        fn prop_solver_residue_valid(t in 1u64..10_000, modulus in 2u64..10_000, c0 in 0u64..10_000) {
            let c = c0 % modulus;
            if let Ok(i) = solve_unit_congruence(t, modulus, c) {
                prop_assert!(i < modulus);
                prop_assert_eq!((t as u128 * i as u128 % modulus as u128) as u64, c);
            }
        }
    }
}
