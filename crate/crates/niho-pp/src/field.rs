//! Arithmetic over binary fields GF(2^n) for 2 <= n <= 32, with the tower
//! view GF(2^{2m}) over GF(2^m) that the rest of the crate lives in:
//! conjugation x̄ = x^{2^m}, absolute and relative traces, subfield and
//! unit-circle enumeration.
//!
//! Elements are residue polynomials over GF(2), packed as integers with bit i
//! holding the coefficient of x^i. Every field uses the lexicographically
//! smallest irreducible modulus of its degree and the smallest primitive
//! element as generator, so all values are reproducible across runs and
//! implementations. Fields of degree <= 16 carry eager log/antilog tables;
//! multiplication falls back to carry-less reduction above that.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

/// Smallest supported field degree.
pub const MIN_DEGREE: u32 = 2;
/// Largest supported field degree.
pub const MAX_DEGREE: u32 = 32;
/// Log/antilog tables are built eagerly up to this degree, never above.
pub const TABLE_DEGREE_LIMIT: u32 = 16;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FieldError {
    #[error("field degree {0} outside supported range {MIN_DEGREE}..={MAX_DEGREE}")]
    DegreeOutOfRange(u32),
    #[error("zero has no multiplicative inverse")]
    ZeroInverse,
    #[error("operation needs a field of even degree 2m, got degree {0}")]
    OddDegree(u32),
    #[error("element {bits:#x} does not fit a field of degree {degree}")]
    ElementOutOfRange { bits: u64, degree: u32 },
    #[error("invalid hex element: {0:?}")]
    BadHex(String),
}

/// One element of a binary field; bit i is the coefficient of x^i.
///
/// The owning [`Field`] is identified by context. Addition is coefficientwise
/// XOR, so it is exposed directly through `^`; everything else needs the
/// modulus and lives on [`Field`].
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct FieldElement(u64);

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement(0);
    pub const ONE: FieldElement = FieldElement(1);

    /// Wraps raw coefficient bits. The caller keeps `bits` below 2^degree of
    /// the owning field; [`Field::element`] is the checked constructor.
    pub const fn from_bits(bits: u64) -> FieldElement {
        FieldElement(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    pub const fn is_zero(self) -> bool {
        self.0 == 0
    }

    /// Lowercase hex without prefix, the interchange encoding used in all
    /// reports and fixtures.
    pub fn hex(self) -> String {
        format!("{:x}", self.0)
    }

    pub fn from_hex(s: &str) -> Result<FieldElement, FieldError> {
        u64::from_str_radix(s, 16)
            .map(FieldElement)
            .map_err(|_| FieldError::BadHex(s.to_string()))
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:x}", self.0)
    }
}

impl fmt::LowerHex for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::LowerHex::fmt(&self.0, f)
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FieldElement({:#x})", self.0)
    }
}

impl std::ops::BitXor for FieldElement {
    type Output = FieldElement;
    fn bitxor(self, rhs: FieldElement) -> FieldElement {
        FieldElement(self.0 ^ rhs.0)
    }
}

impl std::ops::BitXorAssign for FieldElement {
    fn bitxor_assign(&mut self, rhs: FieldElement) {
        self.0 ^= rhs.0;
    }
}

/// Serialized form of a field, used in all JSON reports.
#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct FieldSpecRecord {
    pub degree: u32,
    pub modulus_hex: String,
    pub generator_hex: String,
}

struct Tables {
    /// log[e] = j with generator^j = e, for e != 0; log[0] is unused.
    log: Vec<u32>,
    /// exp[j] = generator^j for j in 0..2^n-1.
    exp: Vec<u64>,
}

/// A concrete GF(2^n): modulus, generator and (for n <= 16) log tables.
///
/// Immutable after construction; all operations are pure, so a `Field` can be
/// shared freely across threads.
pub struct Field {
    degree: u32,
    modulus: u64,
    generator: FieldElement,
    order: u64,
    tables: Option<Tables>,
}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Field")
            .field("degree", &self.degree)
            .field("modulus", &format_args!("{:#x}", self.modulus))
            .field("generator", &self.generator)
            .field("tables", &self.tables.is_some())
            .finish()
    }
}

impl Field {
    /// Builds the canonical GF(2^degree): lexicographically smallest
    /// irreducible modulus (compared as integers of the bit encoding) and
    /// smallest-integer primitive element, both found by exhaustive scan.
    pub fn new(degree: u32) -> Result<Field, FieldError> {
        if !(MIN_DEGREE..=MAX_DEGREE).contains(&degree) {
            return Err(FieldError::DegreeOutOfRange(degree));
        }
        let modulus = smallest_irreducible(degree);
        let order = (1u64 << degree) - 1;
        let generator = find_generator(modulus, order);
        let tables = (degree <= TABLE_DEGREE_LIMIT).then(|| build_tables(modulus, generator, order));
        Ok(Field {
            degree,
            modulus,
            generator: FieldElement(generator),
            order,
            tables,
        })
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn generator(&self) -> FieldElement {
        self.generator
    }

    /// Multiplicative group order, 2^n - 1.
    pub fn order(&self) -> u64 {
        self.order
    }

    /// Number of elements, 2^n.
    pub fn size(&self) -> u64 {
        self.order + 1
    }

    pub fn has_tables(&self) -> bool {
        self.tables.is_some()
    }

    /// Checked element constructor.
    pub fn element(&self, bits: u64) -> Result<FieldElement, FieldError> {
        if bits <= self.order {
            Ok(FieldElement(bits))
        } else {
            Err(FieldError::ElementOutOfRange {
                bits,
                degree: self.degree,
            })
        }
    }

    pub fn contains(&self, x: FieldElement) -> bool {
        x.0 <= self.order
    }

    /// All elements in ascending bit order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> {
        (0..self.size()).map(FieldElement)
    }

    /// Product modulo the field modulus. Uses the log tables when present,
    /// carry-less reduction otherwise; the two paths agree (tested).
    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        debug_assert!(self.contains(a) && self.contains(b));
        if let Some(t) = &self.tables {
            if a.is_zero() || b.is_zero() {
                return FieldElement::ZERO;
            }
            let idx = (t.log[a.0 as usize] as u64 + t.log[b.0 as usize] as u64) % self.order;
            FieldElement(t.exp[idx as usize])
        } else {
            FieldElement(mul_raw(a.0, b.0, self.modulus))
        }
    }

    pub fn square(&self, a: FieldElement) -> FieldElement {
        self.mul(a, a)
    }

    /// a^e with 0^0 = 1 and 0^e = 0 for e > 0. For a != 0 the exponent is
    /// reduced mod 2^n - 1 first, so e may exceed the group order.
    pub fn pow(&self, a: FieldElement, e: u64) -> FieldElement {
        debug_assert!(self.contains(a));
        if a.is_zero() {
            return if e == 0 {
                FieldElement::ONE
            } else {
                FieldElement::ZERO
            };
        }
        let e = e % self.order;
        if let Some(t) = &self.tables {
            let idx = (t.log[a.0 as usize] as u64 * e) % self.order;
            FieldElement(t.exp[idx as usize])
        } else {
            FieldElement(pow_raw(a.0, e, self.modulus))
        }
    }

    /// Multiplicative inverse, a^(2^n - 2).
    pub fn inv(&self, a: FieldElement) -> Result<FieldElement, FieldError> {
        if a.is_zero() {
            return Err(FieldError::ZeroInverse);
        }
        Ok(self.pow(a, self.order - 1))
    }

    /// x^(2^j), the j-fold Frobenius. Defined for any field.
    pub fn frobenius(&self, x: FieldElement, j: u32) -> FieldElement {
        debug_assert!(j <= MAX_DEGREE);
        self.pow(x, 1u64 << j)
    }

    /// Tower parameter m for fields of even degree 2m.
    pub fn tower_m(&self) -> Result<u32, FieldError> {
        if self.degree % 2 == 0 {
            Ok(self.degree / 2)
        } else {
            Err(FieldError::OddDegree(self.degree))
        }
    }

    /// Conjugate x̄ = x^(2^m) on a field of degree 2m; an involution fixing
    /// the subfield GF(2^m).
    pub fn conjugate(&self, x: FieldElement) -> Result<FieldElement, FieldError> {
        let m = self.tower_m()?;
        Ok(self.frobenius(x, m))
    }

    /// Absolute trace bit, the sum of all n Frobenius images of x.
    pub fn abs_trace(&self, x: FieldElement) -> bool {
        debug_assert!(self.contains(x));
        let mut acc = FieldElement::ZERO;
        let mut p = x;
        for _ in 0..self.degree {
            acc ^= p;
            p = self.square(p);
        }
        debug_assert!(acc.0 <= 1, "trace landed outside GF(2)");
        acc == FieldElement::ONE
    }

    /// Relative trace x + x̄ onto the subfield GF(2^m) of a degree-2m field.
    pub fn rel_trace(&self, x: FieldElement) -> Result<FieldElement, FieldError> {
        Ok(x ^ self.conjugate(x)?)
    }

    /// The 2^m elements fixed by conjugation, in ascending bit order.
    pub fn subfield_elements(&self) -> Result<Vec<FieldElement>, FieldError> {
        let m = self.tower_m()?;
        // The nonzero subfield is the order-(2^m - 1) subgroup generated by
        // g^(2^m + 1).
        let step = self.pow(self.generator, (1u64 << m) + 1);
        let mut out = Vec::with_capacity(1 << m);
        out.push(FieldElement::ZERO);
        let mut e = FieldElement::ONE;
        for _ in 0..(1u64 << m) - 1 {
            out.push(e);
            e = self.mul(e, step);
        }
        out.sort_unstable();
        debug_assert_eq!(out.len(), 1 << m);
        Ok(out)
    }

    /// The unit circle U = { x : x^(2^m + 1) = 1 }, listed as consecutive
    /// powers of g^(2^m - 1) starting from 1.
    pub fn unit_circle(&self) -> Result<Vec<FieldElement>, FieldError> {
        let m = self.tower_m()?;
        let step = self.pow(self.generator, (1u64 << m) - 1);
        let mut out = Vec::with_capacity((1 << m) + 1);
        let mut e = FieldElement::ONE;
        for _ in 0..(1u64 << m) + 1 {
            debug_assert!(self.pow(e, (1u64 << m) + 1) == FieldElement::ONE);
            out.push(e);
            e = self.mul(e, step);
        }
        Ok(out)
    }

    /// Membership in the unit circle.
    pub fn on_unit_circle(&self, x: FieldElement) -> Result<bool, FieldError> {
        let m = self.tower_m()?;
        Ok(self.pow(x, (1u64 << m) + 1) == FieldElement::ONE)
    }

    pub fn spec_record(&self) -> FieldSpecRecord {
        FieldSpecRecord {
            degree: self.degree,
            modulus_hex: format!("{:x}", self.modulus),
            generator_hex: self.generator.hex(),
        }
    }
}

// ---------------------------------------------------------------------------
// GF(2)[x] primitives on packed bits.
// ---------------------------------------------------------------------------

/// Carry-less product of two packed polynomials.
fn clmul(a: u64, b: u64) -> u128 {
    let a = a as u128;
    let mut acc = 0u128;
    let mut b = b;
    let mut shift = 0u32;
    while b != 0 {
        if b & 1 == 1 {
            acc ^= a << shift;
        }
        b >>= 1;
        shift += 1;
    }
    acc
}

/// Remainder of a packed polynomial modulo `modulus` (degree = top set bit).
fn poly_rem(mut v: u128, modulus: u64) -> u64 {
    let md = 63 - modulus.leading_zeros();
    let m = modulus as u128;
    while v != 0 {
        let d = 127 - v.leading_zeros();
        if d < md {
            break;
        }
        v ^= m << (d - md);
    }
    v as u64
}

fn mul_raw(a: u64, b: u64, modulus: u64) -> u64 {
    poly_rem(clmul(a, b), modulus)
}

fn pow_raw(a: u64, mut e: u64, modulus: u64) -> u64 {
    let mut base = a;
    let mut r = 1u64;
    while e != 0 {
        if e & 1 == 1 {
            r = mul_raw(r, base, modulus);
        }
        base = mul_raw(base, base, modulus);
        e >>= 1;
    }
    r
}

/// Remainder within u64, for trial division during the irreducibility scan.
fn poly_rem64(mut v: u64, q: u64) -> u64 {
    let qd = 63 - q.leading_zeros();
    while v != 0 {
        let d = 63 - v.leading_zeros();
        if d < qd {
            break;
        }
        v ^= q << (d - qd);
    }
    v
}

/// Trial division by every polynomial of degree 1..=degree/2.
fn is_irreducible(p: u64, degree: u32) -> bool {
    if p & 1 == 0 {
        // divisible by x
        return false;
    }
    let half = degree / 2;
    let mut q = 2u64;
    while 63 - q.leading_zeros() <= half {
        // even q != x are multiples of x and cannot divide an odd p
        if (q & 1 == 1 || q == 2) && poly_rem64(p, q) == 0 {
            return false;
        }
        q += 1;
    }
    true
}

fn smallest_irreducible(degree: u32) -> u64 {
    // Constant term must be 1, so only odd encodings can survive.
    let mut p = (1u64 << degree) + 1;
    loop {
        if is_irreducible(p, degree) {
            return p;
        }
        p += 2;
    }
}

fn prime_factors(mut x: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= x {
        if x % d == 0 {
            out.push(d);
            while x % d == 0 {
                x /= d;
            }
        }
        d += 1;
    }
    if x > 1 {
        out.push(x);
    }
    out
}

/// Smallest element of multiplicative order exactly 2^n - 1.
fn find_generator(modulus: u64, order: u64) -> u64 {
    let factors = prime_factors(order);
    let mut a = 2u64;
    loop {
        if factors.iter().all(|&f| pow_raw(a, order / f, modulus) != 1) {
            return a;
        }
        a += 1;
    }
}

fn build_tables(modulus: u64, generator: u64, order: u64) -> Tables {
    let mut exp = vec![0u64; order as usize];
    let mut log = vec![0u32; order as usize + 1];
    let mut e = 1u64;
    for j in 0..order {
        exp[j as usize] = e;
        log[e as usize] = j as u32;
        e = mul_raw(e, generator, modulus);
    }
    debug_assert_eq!(e, 1, "generator order must be exactly 2^n - 1");
    Tables { log, exp }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::SplitMix64;

    fn fe(bits: u64) -> FieldElement {
        FieldElement::from_bits(bits)
    }

    /// Modulus/generator pairs frozen from an exhaustive independent scan.
    const CANONICAL: &[(u32, u64, u64)] = &[
        (2, 0x7, 0x2),
        (3, 0xb, 0x2),
        (4, 0x13, 0x2),
        (5, 0x25, 0x2),
        (6, 0x43, 0x2),
        (7, 0x83, 0x2),
        (8, 0x11b, 0x3),
        (9, 0x203, 0x7),
        (10, 0x409, 0x2),
        (11, 0x805, 0x2),
        (12, 0x1009, 0x3),
        (13, 0x201b, 0x2),
        (14, 0x4021, 0x7),
        (15, 0x8003, 0x2),
        (16, 0x1002b, 0x3),
        (32, 0x10000008d, 0x3),
    ];

    // -- independent oracles, deliberately avoiding the Field pipeline --

    /// x^(2^j) mod p via repeated squaring on raw bits.
    fn frob_oracle(p: u64, j: u32) -> u64 {
        let mut r = 2u64; // the polynomial x
        for _ in 0..j {
            r = poly_rem(clmul(r, r), p);
        }
        r
    }

    /// The Frobenius fixed-point criterion: x^(2^n) = x and x^(2^d) != x for
    /// every proper divisor d of n.
    fn passes_frobenius_test(p: u64, n: u32) -> bool {
        if frob_oracle(p, n) != 2 {
            return false;
        }
        (1..n).filter(|d| n % d == 0).all(|d| frob_oracle(p, d) != 2)
    }

    /// Extended Euclid over GF(2)[x]; returns (g, u) with u*a = g mod m.
    fn ext_gcd_poly(a: u64, m: u64) -> (u64, u64) {
        let (mut r0, mut r1) = (m as u128, a as u128);
        let (mut u0, mut u1) = (0u128, 1u128);
        while r1 != 0 {
            // divide r0 by r1
            let mut q = 0u128;
            let d1 = 127 - r1.leading_zeros();
            let mut rem = r0;
            while rem != 0 {
                let d = 127 - rem.leading_zeros();
                if d < d1 {
                    break;
                }
                q ^= 1 << (d - d1);
                rem ^= r1 << (d - d1);
            }
            let (nr, nu) = (rem, u0 ^ clmul128(q, u1));
            r0 = r1;
            u0 = u1;
            r1 = nr;
            u1 = nu;
        }
        (r0 as u64, u0 as u64)
    }

    fn clmul128(a: u128, b: u128) -> u128 {
        let mut acc = 0u128;
        let mut b = b;
        let mut shift = 0;
        while b != 0 {
            if b & 1 == 1 {
                acc ^= a << shift;
            }
            b >>= 1;
            shift += 1;
        }
        acc
    }

    #[test]
    fn canonical_moduli_and_generators() {
        for &(n, modulus, generator) in CANONICAL {
            let f = Field::new(n).unwrap();
            assert_eq!(f.modulus(), modulus, "modulus for n={n}");
            assert_eq!(f.generator().bits(), generator, "generator for n={n}");
            assert!(passes_frobenius_test(modulus, n), "frobenius test n={n}");
        }
    }

    #[test]
    fn no_smaller_irreducible_exists() {
        // The Frobenius criterion alone can accept squarefree products of
        // distinct small factors, so cross-check the scan by trial division
        // with an independent remainder routine.
        for n in 2..=12u32 {
            let f = Field::new(n).unwrap();
            for p in ((1u64 << n) + 1..f.modulus()).step_by(2) {
                let divisible = (2..1u64 << (n / 2 + 1))
                    .filter(|q| 63 - q.leading_zeros() <= n / 2)
                    .any(|q| {
                        let mut v = p;
                        let qd = 63 - q.leading_zeros();
                        loop {
                            let d = if v == 0 { 0 } else { 63 - v.leading_zeros() };
                            if v == 0 || d < qd {
                                break;
                            }
                            v ^= q << (d - qd);
                        }
                        v == 0
                    });
                assert!(divisible, "p={p:#x} below modulus must be reducible");
            }
        }
    }

    #[test]
    fn degree_bounds_rejected() {
        assert_eq!(Field::new(1).unwrap_err(), FieldError::DegreeOutOfRange(1));
        assert_eq!(Field::new(33).unwrap_err(), FieldError::DegreeOutOfRange(33));
        assert_eq!(Field::new(0).unwrap_err(), FieldError::DegreeOutOfRange(0));
    }

    #[test]
    fn gf16_mul_fixtures() {
        let f = Field::new(4).unwrap();
        assert_eq!(f.mul(fe(0x2), fe(0x9)), fe(0x1));
        for a in f.elements() {
            assert_eq!(f.mul(a, FieldElement::ZERO), FieldElement::ZERO);
            assert_eq!(f.mul(a, FieldElement::ONE), a);
        }
    }

    #[test]
    fn mul_paths_agree_exhaustive_small() {
        for n in [2, 4, 6, 8, 10] {
            let f = Field::new(n).unwrap();
            assert!(f.has_tables());
            for a in 0..f.size() {
                for b in a..f.size() {
                    let t = f.mul(fe(a), fe(b));
                    let r = mul_raw(a, b, f.modulus());
                    assert_eq!(t.bits(), r, "n={n} a={a:#x} b={b:#x}");
                }
            }
        }
    }

    #[test]
    fn mul_paths_agree_sampled_large() {
        for n in [12, 14, 16] {
            let f = Field::new(n).unwrap();
            let mut rng = SplitMix64::new(0xfeed ^ n as u64);
            for _ in 0..100_000 {
                let a = rng.next_u64() & f.order();
                let b = rng.next_u64() & f.order();
                assert_eq!(f.mul(fe(a), fe(b)).bits(), mul_raw(a, b, f.modulus()));
            }
        }
    }

    #[test]
    fn field_axioms_exhaustive() {
        for n in [2, 3, 4] {
            let f = Field::new(n).unwrap();
            let all: Vec<_> = f.elements().collect();
            for &a in &all {
                for &b in &all {
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    for &c in &all {
                        assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                        assert_eq!(f.mul(a, b ^ c), f.mul(a, b) ^ f.mul(a, c));
                    }
                }
            }
        }
        // commutativity + distributivity only at n up to 8; triples get slow
        for n in [6, 8] {
            let f = Field::new(n).unwrap();
            let mut rng = SplitMix64::new(n as u64);
            for _ in 0..20_000 {
                let a = fe(rng.next_u64() & f.order());
                let b = fe(rng.next_u64() & f.order());
                let c = fe(rng.next_u64() & f.order());
                assert_eq!(f.mul(a, b), f.mul(b, a));
                assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                assert_eq!(f.mul(a, b ^ c), f.mul(a, b) ^ f.mul(a, c));
            }
        }
    }

    #[test]
    fn pow_fixtures_and_fermat() {
        let f = Field::new(4).unwrap();
        assert_eq!(f.pow(fe(0x2), 15), fe(0x1));
        assert_eq!(f.pow(fe(0x0), 7), fe(0x0));
        assert_eq!(f.pow(fe(0x0), 0), fe(0x1));
        assert_eq!(f.pow(fe(0x2), 7), fe(0xb));
        for n in 2..=12u32 {
            let f = Field::new(n).unwrap();
            for x in f.elements() {
                assert_eq!(f.pow(x, f.size()), x, "fermat n={n} x={x}");
            }
        }
        for n in [14, 16, 20, 32] {
            let f = Field::new(n).unwrap();
            let mut rng = SplitMix64::new(99 + n as u64);
            for _ in 0..200 {
                let x = fe(rng.next_u64() & f.order());
                assert_eq!(f.pow(x, f.size()), x);
            }
        }
    }

    #[test]
    fn pow_exponent_reduction() {
        let f = Field::new(6).unwrap();
        for x in f.elements().skip(1) {
            for e in [0u64, 1, 62, 63, 64, 1_000_003] {
                assert_eq!(f.pow(x, e), f.pow(x, e % f.order()));
            }
        }
    }

    #[test]
    fn inv_fixtures_and_euclid_oracle() {
        let f = Field::new(4).unwrap();
        assert_eq!(f.inv(fe(0x2)).unwrap(), fe(0x9));
        assert_eq!(f.inv(fe(0x1)).unwrap(), fe(0x1));
        assert_eq!(f.inv(fe(0x0)).unwrap_err(), FieldError::ZeroInverse);
        for n in 2..=8u32 {
            let f = Field::new(n).unwrap();
            for x in f.elements().skip(1) {
                let byfield = f.inv(x).unwrap();
                assert_eq!(f.mul(x, byfield), FieldElement::ONE);
                let (g, u) = ext_gcd_poly(x.bits(), f.modulus());
                assert_eq!(g, 1);
                assert_eq!(poly_rem(u as u128, f.modulus()), byfield.bits());
            }
        }
        // sampled cross-check on a large field without tables
        let f = Field::new(20).unwrap();
        let mut rng = SplitMix64::new(7);
        for _ in 0..500 {
            let x = fe((rng.next_u64() & f.order()) | 1);
            let (g, u) = ext_gcd_poly(x.bits(), f.modulus());
            assert_eq!(g, 1);
            assert_eq!(poly_rem(u as u128, f.modulus()), f.inv(x).unwrap().bits());
        }
    }

    #[test]
    fn conjugate_fixtures() {
        let f = Field::new(4).unwrap();
        assert_eq!(f.conjugate(fe(0x2)).unwrap(), fe(0x3));
        for n in [4, 6, 8] {
            let f = Field::new(n).unwrap();
            let sub = f.subfield_elements().unwrap();
            for x in f.elements() {
                let c = f.conjugate(x).unwrap();
                assert_eq!(f.conjugate(c).unwrap(), x, "involution");
                if sub.contains(&x) {
                    assert_eq!(c, x, "subfield fixed");
                }
            }
        }
    }

    #[test]
    fn conjugate_is_automorphism() {
        for n in [4, 6] {
            let f = Field::new(n).unwrap();
            for a in f.elements() {
                for b in f.elements() {
                    let ca = f.conjugate(a).unwrap();
                    let cb = f.conjugate(b).unwrap();
                    assert_eq!(f.conjugate(f.mul(a, b)).unwrap(), f.mul(ca, cb));
                    assert_eq!(f.conjugate(a ^ b).unwrap(), ca ^ cb);
                }
            }
        }
    }

    #[test]
    fn odd_degree_has_no_tower() {
        let f = Field::new(5).unwrap();
        assert_eq!(f.tower_m().unwrap_err(), FieldError::OddDegree(5));
        assert!(f.conjugate(fe(0x2)).is_err());
        assert!(f.rel_trace(fe(0x2)).is_err());
        assert!(f.subfield_elements().is_err());
        assert!(f.unit_circle().is_err());
    }

    #[test]
    fn abs_trace_census_and_linearity() {
        for n in [2, 3, 4, 5, 6, 8] {
            let f = Field::new(n).unwrap();
            assert!(!f.abs_trace(FieldElement::ZERO));
            let ones = f.elements().filter(|&x| f.abs_trace(x)).count();
            assert_eq!(ones as u64, f.size() / 2, "trace census n={n}");
            for x in f.elements() {
                assert_eq!(f.abs_trace(x), f.abs_trace(f.square(x)), "frobenius invariance");
            }
            for x in f.elements().take(32) {
                for y in f.elements().take(32) {
                    assert_eq!(f.abs_trace(x ^ y), f.abs_trace(x) ^ f.abs_trace(y));
                }
            }
        }
    }

    #[test]
    fn rel_trace_fixtures() {
        let f = Field::new(4).unwrap();
        assert_eq!(f.rel_trace(fe(0x2)).unwrap(), fe(0x1));
        for n in [4, 6, 8] {
            let f = Field::new(n).unwrap();
            let sub = f.subfield_elements().unwrap();
            for x in f.elements() {
                let t = f.rel_trace(x).unwrap();
                assert_eq!(f.conjugate(t).unwrap(), t, "trace lands in subfield");
                assert!(sub.binary_search(&t).is_ok());
                let norm = f.mul(x, f.conjugate(x).unwrap());
                assert!(sub.binary_search(&norm).is_ok(), "norm lands in subfield");
                if sub.binary_search(&x).is_ok() {
                    assert_eq!(t, FieldElement::ZERO);
                }
            }
        }
    }

    #[test]
    fn subfield_fixtures() {
        let f = Field::new(4).unwrap();
        let sub = f.subfield_elements().unwrap();
        assert_eq!(sub, vec![fe(0x0), fe(0x1), fe(0x6), fe(0x7)]);
        for n in [4, 6, 8, 10, 12] {
            let f = Field::new(n).unwrap();
            let m = f.tower_m().unwrap();
            let sub = f.subfield_elements().unwrap();
            assert_eq!(sub.len(), 1 << m);
            assert!(sub.contains(&FieldElement::ZERO) && sub.contains(&FieldElement::ONE));
            // independent recomputation: fixed points of conjugation
            let fixed: Vec<_> = f
                .elements()
                .filter(|&x| f.conjugate(x).unwrap() == x)
                .collect();
            assert_eq!(sub, fixed);
            // closure
            for &a in &sub {
                for &b in &sub {
                    assert!(sub.binary_search(&(a ^ b)).is_ok());
                    assert!(sub.binary_search(&f.mul(a, b)).is_ok());
                }
            }
        }
    }

    #[test]
    fn unit_circle_fixtures() {
        let f = Field::new(4).unwrap();
        let u = f.unit_circle().unwrap();
        assert_eq!(u, vec![fe(0x1), fe(0x8), fe(0xc), fe(0xa), fe(0xf)]);
        for n in [4, 6, 8, 10, 12] {
            let f = Field::new(n).unwrap();
            let m = f.tower_m().unwrap();
            let u = f.unit_circle().unwrap();
            assert_eq!(u.len(), (1 << m) + 1);
            assert_eq!(u[0], FieldElement::ONE);
            // independent recomputation by membership scan
            let scan: Vec<_> = f
                .elements()
                .filter(|&x| f.pow(x, (1u64 << m) + 1) == FieldElement::ONE)
                .collect();
            let mut sorted = u.clone();
            sorted.sort_unstable();
            assert_eq!(sorted, scan);
            // intersection with the subfield is exactly {1}
            let sub = f.subfield_elements().unwrap();
            let inter: Vec<_> = u
                .iter()
                .filter(|x| sub.binary_search(x).is_ok())
                .collect();
            assert_eq!(inter, vec![&FieldElement::ONE]);
        }
    }

    #[test]
    fn tables_built_only_up_to_limit() {
        assert!(Field::new(16).unwrap().has_tables());
        assert!(!Field::new(17).unwrap().has_tables());
        assert!(!Field::new(32).unwrap().has_tables());
    }

    #[test]
    fn log_antilog_mutually_inverse() {
        for n in [4, 8, 12] {
            let f = Field::new(n).unwrap();
            let t = f.tables.as_ref().unwrap();
            for j in 0..f.order() {
                assert_eq!(t.log[t.exp[j as usize] as usize] as u64, j);
            }
            for e in 1..f.size() {
                assert_eq!(t.exp[t.log[e as usize] as usize], e);
            }
        }
    }

    #[test]
    fn element_checks_and_hex() {
        let f = Field::new(4).unwrap();
        assert_eq!(f.element(0xf).unwrap(), fe(0xf));
        assert!(matches!(
            f.element(0x10),
            Err(FieldError::ElementOutOfRange { .. })
        ));
        assert_eq!(fe(0xaB).hex(), "ab");
        assert_eq!(FieldElement::from_hex("ab").unwrap(), fe(0xab));
        assert!(FieldElement::from_hex("zz").is_err());
        assert_eq!(format!("{}", fe(0xc)), "c");
        assert_eq!(
            f.spec_record(),
            FieldSpecRecord {
                degree: 4,
                modulus_hex: "13".into(),
                generator_hex: "2".into()
            }
        );
    }

    #[test]
    fn generator_order_is_full() {
        for n in [2, 4, 6, 8, 10, 12] {
            let f = Field::new(n).unwrap();
            for p in prime_factors(f.order()) {
                assert_ne!(
                    f.pow(f.generator(), f.order() / p),
                    FieldElement::ONE,
                    "n={n} p={p}"
                );
            }
        }
    }
}
