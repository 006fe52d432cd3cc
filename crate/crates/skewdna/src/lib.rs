//! Skew cyclic codes over the field tower F_2 ⊂ F_{4^s} ⊂ F_{4^(2s)} and their
//! DNA images.
//!
//! The ring in play is the skew polynomial ring F_q[x; θ], q = 4^(2s), where
//! θ(a) = a^(4^s) is the order-two automorphism fixing F_{4^s} and
//! multiplication twists scalars past x: x·a = θ(a)·x. Right divisors g of
//! x^n − 1 generate skew cyclic codes ⟨g⟩ of length n and dimension
//! n − deg g. Each field element maps to a string of 2s nucleotides, chosen so
//! that applying θ reverses the string; a code whose DNA image is closed under
//! whole-string reversal is a reversible DNA code, and that property is decided
//! both exhaustively and structurally from the generator alone.
//!
//! Everything is exact table-driven arithmetic — no floats, no randomness — and
//! every enumeration is guarded so desk-scale experiments stay desk-scale.

// Degree and length parity decide which reversibility characterization
// applies; `x % 2` states a parity test more directly than `is_multiple_of`.
#![allow(clippy::manual_is_multiple_of)]

pub mod codes;
pub mod dna;
mod error;
pub mod gf;
pub mod search;
pub mod skewpoly;

pub mod cli;

pub use error::{Error, ParseError};

/// Largest number of codewords `enumerate_codewords` / `minimum_distance` /
/// the exhaustive reversibility checks will walk unless overridden.
pub const DEFAULT_ENUM_GUARD: u64 = 1 << 24;

/// Largest candidate space `find_right_divisors` / `factor_odd_length` will
/// enumerate unless overridden.
pub const DEFAULT_SEARCH_GUARD: u64 = 1 << 24;
