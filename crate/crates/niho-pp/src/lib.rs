//! Niho-exponent permutation polynomials over binary fields.
//!
//! This crate constructs polynomials of the shape
//! `f(x) = (x^(2^m) + x + δ)^(i(2^m - 1) + 1) + x` over GF(2^(2m)), where the
//! index `i` comes from solving `(2^k + 1)·i ≡ 1 or 2^k (mod 2^m + 1)`, and
//! verifies the permutation property by exhaustive evaluation on small
//! fields. Alongside the constructions it ships numerical suites that
//! exercise the algebraic machinery behind them (affine equation solution
//! counts, the Möbius bijection onto the unit circle, power-sum identities,
//! unit-circle trace identities).
//!
//! Modules:
//! - [`field`] — GF(2^n) arithmetic with the tower view GF(2^(2m))/GF(2^m).
//! - [`exponents`] — integer-side congruence solving, the index duality
//!   i ↔ j = 1 - i (mod 2^m + 1), and the catalog of closed-form indices.
//! - [`permcheck`] — the exhaustive bijection oracle with δ-sweep policies.
//! - [`prooflab`] — per-lemma numerical suites.
//! - [`catalog`] — machine-checked reproduction of the known-construction
//!   table as CSV/JSON.
//! - [`selftest`] — the acceptance criteria, runnable from the CLI.

pub mod catalog;
pub mod cli;
pub mod exponents;
pub mod field;
pub mod permcheck;
pub mod prooflab;
pub mod rng;
pub mod selftest;

pub use field::{Field, FieldElement, FieldError};
pub use permcheck::{DeltaPolicy, PPInstance, PermutationReport};
