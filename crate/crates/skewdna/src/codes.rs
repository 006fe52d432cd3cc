//! Skew cyclic codes: left ideals ⟨g⟩ of F_q[x; θ]/(x^n − 1).
//!
//! A code is built from a right divisor g of x^n − 1 (stored monic) together
//! with its cofactor h, where x^n − 1 = h·g. The code has dimension
//! k = n − deg g and generator matrix rows x^i·g for i = 0..k−1, so row i
//! carries θ^i(g_j) at position i + j. Codewords are all left F_q-combinations
//! of those rows.
//!
//! Exhaustive operations (codeword enumeration, minimum distance, reversal
//! closure) walk all q^k words behind a guard. Internally they run on the
//! additive bit representation, where addition is XOR and a full enumeration
//! is an odometer over the message digits with incremental row updates.

use std::sync::Arc;

use crate::gf::{FieldDescriptor, FieldElement};
use crate::skewpoly::{x_pow_n_minus_one, SkewPolynomial};
use crate::{Error, DEFAULT_ENUM_GUARD};

/// A skew cyclic code of length n: the left module generated by a monic right
/// divisor of x^n − 1. Immutable once built.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkewCyclicCode {
    field: Arc<FieldDescriptor>,
    n: usize,
    generator: SkewPolynomial,
    cofactor: SkewPolynomial,
    dimension: usize,
}

impl SkewCyclicCode {
    /// Build ⟨g⟩ of length n. Any nonzero g is accepted and stored as its
    /// monic associate (same ideal); a g that does not right-divide x^n − 1
    /// is rejected with the nonzero remainder as witness.
    pub fn build(g: &SkewPolynomial, n: usize) -> Result<SkewCyclicCode, Error> {
        if n == 0 {
            return Err(Error::LengthZero);
        }
        let generator = g.monic()?;
        let (cofactor, rem) = x_pow_n_minus_one(g.field(), n).right_divmod(&generator)?;
        if !rem.is_zero() {
            return Err(Error::NotARightDivisor { n, remainder: rem });
        }
        let m = generator.degree().unwrap();
        if m > n {
            // Degree alone rules it out; the remainder witness above already
            // caught it (remainder = x^n − 1), so this is unreachable.
            unreachable!("divisor of degree {m} cannot divide x^{n} - 1");
        }
        // For odd n the coefficients of any right divisor lie in the fixed
        // subfield; the skew factorization collapses to the commutative one.
        debug_assert!(
            n % 2 == 0 || generator.coeffs().iter().all(|&c| g.field().is_fixed(c)),
            "odd-length divisor with coefficients outside the fixed subfield"
        );
        Ok(SkewCyclicCode {
            field: Arc::clone(g.field()),
            n,
            dimension: n - m,
            generator,
            cofactor,
        })
    }

    pub fn field(&self) -> &Arc<FieldDescriptor> {
        &self.field
    }

    pub fn length(&self) -> usize {
        self.n
    }

    /// k = n − deg g.
    pub fn dimension(&self) -> usize {
        self.dimension
    }

    /// The monic generator g.
    pub fn generator(&self) -> &SkewPolynomial {
        &self.generator
    }

    /// The cofactor h with h·g = x^n − 1.
    pub fn cofactor(&self) -> &SkewPolynomial {
        &self.cofactor
    }

    /// Number of codewords q^k, saturating at u128::MAX.
    pub fn codeword_count(&self) -> u128 {
        let mut count: u128 = 1;
        for _ in 0..self.dimension {
            count = count.saturating_mul(self.field.q() as u128);
        }
        count
    }

    fn check_enum_guard(&self, guard: u64) -> Result<(), Error> {
        let count = self.codeword_count();
        if count > guard as u128 {
            Err(Error::EnumerationTooLarge {
                codewords: count,
                guard,
            })
        } else {
            Ok(())
        }
    }

    /// The k×n generator matrix: row i is x^i·g, i.e. θ^i(g_j) at column i+j.
    pub fn generator_matrix(&self) -> Vec<Vec<FieldElement>> {
        let m = self.generator.degree().unwrap();
        (0..self.dimension)
            .map(|i| {
                let mut row = vec![FieldElement::Zero; self.n];
                for j in 0..=m {
                    row[i + j] = self.field.theta_iter(self.generator.coeff(j), i);
                }
                row
            })
            .collect()
    }

    /// Stream all q^k codewords (default guard). Order is deterministic: an
    /// odometer over the k message symbols in canonical element order, first
    /// symbol fastest, starting from the zero word.
    pub fn enumerate_codewords(&self) -> Result<CodewordIter<'_>, Error> {
        self.enumerate_codewords_with_guard(DEFAULT_ENUM_GUARD)
    }

    pub fn enumerate_codewords_with_guard(&self, guard: u64) -> Result<CodewordIter<'_>, Error> {
        self.check_enum_guard(guard)?;
        Ok(CodewordIter {
            inner: BitsEnumerator::new(self),
            field: &self.field,
        })
    }

    /// Exhaustive minimum Hamming distance over the nonzero codewords.
    pub fn minimum_distance(&self) -> Result<u32, Error> {
        self.minimum_distance_with_guard(DEFAULT_ENUM_GUARD)
    }

    pub fn minimum_distance_with_guard(&self, guard: u64) -> Result<u32, Error> {
        if self.dimension == 0 {
            return Err(Error::ZeroCode);
        }
        self.check_enum_guard(guard)?;
        let mut iter = BitsEnumerator::new(self);
        let mut min = u32::MAX;
        let mut first = true;
        while let Some(word) = iter.next_word() {
            if first {
                // The all-zero message comes first; skip the zero word.
                first = false;
                continue;
            }
            let w = word.iter().filter(|&&b| b != 0).count() as u32;
            if w < min {
                min = w;
            }
        }
        Ok(min)
    }

    /// True iff the codeword set is closed under plain coordinate reversal
    /// (c_0, …, c_{n−1}) ↦ (c_{n−1}, …, c_0). Decided exhaustively.
    pub fn is_reversible_classical(&self) -> Result<bool, Error> {
        self.is_reversible_classical_with_guard(DEFAULT_ENUM_GUARD)
    }

    pub fn is_reversible_classical_with_guard(&self, guard: u64) -> Result<bool, Error> {
        let set = self.codeword_set_bits(guard)?;
        let mut iter = BitsEnumerator::new(self);
        let mut reversed = vec![0u32; self.n];
        while let Some(word) = iter.next_word() {
            for (r, &b) in reversed.iter_mut().zip(word.iter().rev()) {
                *r = b;
            }
            if !set.contains_bits(&reversed) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// The dual code under the standard inner product Σ u_i·v_i: generated by
    /// the monic associate of the skew reciprocal of the cofactor h. For odd n
    /// the cofactor has θ-fixed coefficients, so this is exactly the ordinary
    /// cyclic dual.
    pub fn dual(&self) -> Result<SkewCyclicCode, Error> {
        let dual_gen = self.cofactor.skew_reciprocal()?.monic()?;
        SkewCyclicCode::build(&dual_gen, self.n)
    }

    /// Sorted set of all codewords in packed bit form (internal engine for
    /// the reversal-closure checks).
    pub(crate) fn codeword_set_bits(&self, guard: u64) -> Result<CodewordSet, Error> {
        self.check_enum_guard(guard)?;
        let bits_per_symbol = 4 * self.field.s();
        let packable = (self.n as u32) * bits_per_symbol <= 128;
        let mut iter = BitsEnumerator::new(self);
        let set = if packable {
            let mut words = Vec::with_capacity(self.codeword_count() as usize);
            while let Some(word) = iter.next_word() {
                words.push(pack_bits(word, bits_per_symbol));
            }
            words.sort_unstable();
            words.dedup();
            PackedRepr::Narrow(words)
        } else {
            let mut words: Vec<Vec<u32>> = Vec::new();
            while let Some(word) = iter.next_word() {
                words.push(word.to_vec());
            }
            words.sort_unstable();
            words.dedup();
            PackedRepr::Wide(words)
        };
        Ok(CodewordSet {
            bits_per_symbol,
            repr: set,
        })
    }
}

fn pack_bits(word: &[u32], bits_per_symbol: u32) -> u128 {
    let mut key: u128 = 0;
    for (j, &b) in word.iter().enumerate() {
        key |= (b as u128) << (j as u32 * bits_per_symbol);
    }
    key
}

/// A sorted, deduplicated codeword set in additive bit form, with O(log N)
/// membership tests.
pub(crate) struct CodewordSet {
    bits_per_symbol: u32,
    repr: PackedRepr,
}

enum PackedRepr {
    Narrow(Vec<u128>),
    Wide(Vec<Vec<u32>>),
}

impl CodewordSet {
    pub(crate) fn contains_bits(&self, word: &[u32]) -> bool {
        match &self.repr {
            PackedRepr::Narrow(v) => v
                .binary_search(&pack_bits(word, self.bits_per_symbol))
                .is_ok(),
            PackedRepr::Wide(v) => v
                .binary_search_by(|probe| probe.as_slice().cmp(word))
                .is_ok(),
        }
    }
}

/// Incremental enumeration of the row span in additive bit form. Holds, for
/// every row i and every scalar β, the bits of β·(x^i·g) over the row's
/// support i..=i+m; an odometer over message digits then updates the running
/// word with two span XORs per step.
pub(crate) struct BitsEnumerator {
    q: u32,
    /// scaled[i][v][j] = bits of (element v)·θ^i(g_j) at position i + j.
    scaled: Vec<Vec<Vec<u32>>>,
    digits: Vec<u32>,
    current: Vec<u32>,
    started: bool,
    done: bool,
}

impl BitsEnumerator {
    pub(crate) fn new(code: &SkewCyclicCode) -> Self {
        let field = &code.field;
        let q = field.q();
        let m = code.generator.degree().unwrap();
        let scaled = (0..code.dimension)
            .map(|i| {
                let row: Vec<FieldElement> = (0..=m)
                    .map(|j| field.theta_iter(code.generator.coeff(j), i))
                    .collect();
                (0..q)
                    .map(|v| {
                        let beta = field.element_from_index(v);
                        row.iter()
                            .map(|&c| field.additive_bits(field.mul(beta, c)))
                            .collect()
                    })
                    .collect()
            })
            .collect();
        BitsEnumerator {
            q,
            scaled,
            digits: vec![0; code.dimension],
            current: vec![0; code.n],
            started: false,
            done: false,
        }
    }

    /// Next codeword as a borrowed slice of additive bit patterns, or `None`
    /// when all q^k words have been produced.
    pub(crate) fn next_word(&mut self) -> Option<&[u32]> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            return Some(&self.current);
        }
        let mut i = 0;
        loop {
            if i == self.digits.len() {
                self.done = true;
                return None;
            }
            let old = self.digits[i];
            let new = if old + 1 == self.q { 0 } else { old + 1 };
            self.digits[i] = new;
            let (old_row, new_row) = (&self.scaled[i][old as usize], &self.scaled[i][new as usize]);
            for (j, (&a, &b)) in old_row.iter().zip(new_row).enumerate() {
                self.current[i + j] ^= a ^ b;
            }
            if new != 0 {
                return Some(&self.current);
            }
            // This digit wrapped to zero; carry into the next one.
            i += 1;
        }
    }
}

/// Public codeword stream: yields length-n vectors of field elements.
pub struct CodewordIter<'a> {
    inner: BitsEnumerator,
    field: &'a Arc<FieldDescriptor>,
}

impl Iterator for CodewordIter<'_> {
    type Item = Vec<FieldElement>;

    fn next(&mut self) -> Option<Vec<FieldElement>> {
        let field = self.field;
        self.inner.next_word().map(|word| {
            word.iter()
                .map(|&b| field.from_additive_bits(b).unwrap())
                .collect()
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::FieldDescriptor;
    use std::collections::BTreeSet;
    use std::sync::OnceLock;

    fn f16() -> &'static Arc<FieldDescriptor> {
        static F: OnceLock<Arc<FieldDescriptor>> = OnceLock::new();
        F.get_or_init(|| FieldDescriptor::build(1).unwrap())
    }

    fn p(text: &str) -> SkewPolynomial {
        SkewPolynomial::parse(f16(), text).unwrap()
    }

    fn code(g: &str, n: usize) -> SkewCyclicCode {
        SkewCyclicCode::build(&p(g), n).unwrap()
    }

    #[test]
    fn degree_three_code_of_length_six() {
        let c = code("1 + a^7*x + a^13*x^2 + x^3", 6);
        assert_eq!(c.dimension(), 3);
        assert_eq!(c.cofactor(), &p("1 + a^7*x + a^7*x^2 + x^3"));
        assert_eq!(c.minimum_distance().unwrap(), 4);
        assert_eq!(c.enumerate_codewords().unwrap().count(), 4096);
    }

    #[test]
    fn generator_matrix_rows_are_shifted_twisted_generators() {
        let c = code("1 + a^7*x + a^13*x^2 + x^3", 6);
        let m = c.generator_matrix();
        assert_eq!(m.len(), 3);
        let e = |t: &str| f16().parse_element(t).unwrap();
        assert_eq!(
            m[1],
            vec![e("0"), e("1"), e("a^13"), e("a^7"), e("1"), e("0")]
        );
        // Independent route: row i must be the coefficient vector of x^i·g.
        for (i, row) in m.iter().enumerate() {
            let shifted = SkewPolynomial::monomial(f16(), FieldElement::ONE, i).mul(c.generator());
            let expect: Vec<FieldElement> = (0..6).map(|j| shifted.coeff(j)).collect();
            assert_eq!(row, &expect);
        }
    }

    #[test]
    fn enumeration_agrees_with_membership_by_division() {
        // Full-universe scan: the enumerated set must be exactly the words
        // whose polynomial form is right-divisible by g.
        let f = f16();
        for (g, n) in [("1 + x", 2), ("1 + a^10*x + x^2", 5), ("1 + x^2", 4)] {
            let c = code(g, n);
            let set: BTreeSet<Vec<FieldElement>> = c.enumerate_codewords().unwrap().collect();
            assert_eq!(
                set.len(),
                16usize.pow(c.dimension() as u32),
                "distinct words for {g}"
            );
            let mut by_division = BTreeSet::new();
            let mut word = vec![0u32; n];
            loop {
                let elems: Vec<FieldElement> = word
                    .iter()
                    .map(|&b| f.from_additive_bits(b).unwrap())
                    .collect();
                let poly = SkewPolynomial::from_coeffs(f, elems.clone());
                let (_, rem) = poly.right_divmod(c.generator()).unwrap();
                if rem.is_zero() {
                    by_division.insert(elems);
                }
                // Advance the base-16 odometer over the whole universe.
                let mut i = 0;
                loop {
                    if i == n {
                        break;
                    }
                    word[i] += 1;
                    if word[i] < 16 {
                        break;
                    }
                    word[i] = 0;
                    i += 1;
                }
                if i == n {
                    break;
                }
            }
            assert_eq!(set, by_division, "membership mismatch for {g}");
        }
    }

    #[test]
    fn dual_of_known_length_six_code() {
        let c = code("1 + a^7*x + a^13*x^2 + x^3", 6);
        let d = c.dual().unwrap();
        assert_eq!(d.generator(), &p("1 + a^13*x + a^7*x^2 + x^3"));
        assert!(d.generator().is_theta_palindromic());
        assert_eq!(c.dimension() + d.dimension(), 6);
        // Every pair of generator rows is orthogonal under Σ u_i v_i.
        let f = f16();
        for u in c.generator_matrix() {
            for v in d.generator_matrix() {
                let dot = u
                    .iter()
                    .zip(&v)
                    .fold(FieldElement::Zero, |acc, (&a, &b)| f.add(acc, f.mul(a, b)));
                assert_eq!(dot, FieldElement::Zero);
            }
        }
        // Duality is an involution.
        assert_eq!(d.dual().unwrap().generator(), c.generator());
    }

    #[test]
    fn odd_length_code_and_its_ordinary_cyclic_dual() {
        let c = code("1 + a^10*x + x^2", 5);
        assert_eq!((c.length(), c.dimension()), (5, 3));
        assert_eq!(c.minimum_distance().unwrap(), 3);
        assert_eq!(c.cofactor(), &p("1 + a^10*x + a^10*x^2 + x^3"));
        // The cofactor is its own skew reciprocal (fixed coefficients,
        // palindromic), so the dual generator is the cofactor itself.
        let d = c.dual().unwrap();
        assert_eq!(d.generator(), c.cofactor());
        assert_eq!(d.dimension(), 2);
        let f = f16();
        for u in c.generator_matrix() {
            for v in d.generator_matrix() {
                let dot = u
                    .iter()
                    .zip(&v)
                    .fold(FieldElement::Zero, |acc, (&a, &b)| f.add(acc, f.mul(a, b)));
                assert_eq!(dot, FieldElement::Zero);
            }
        }
        assert_eq!(c.is_reversible_classical(), Ok(true));
    }

    #[test]
    fn non_divisor_rejected_with_remainder_witness() {
        // x^6 − 1 ≡ a^3 + 1 = a^14 (mod x^2 + a).
        match SkewCyclicCode::build(&p("a^1 + x^2"), 6) {
            Err(Error::NotARightDivisor { n: 6, remainder }) => {
                assert_eq!(remainder, p("a^14"));
            }
            other => panic!("expected divisor rejection, got {other:?}"),
        }
    }

    #[test]
    fn non_monic_generator_is_normalized() {
        let scaled = p("1 + a^7*x + a^13*x^2 + x^3").scale(FieldElement::Pow(3));
        let c = SkewCyclicCode::build(&scaled, 6).unwrap();
        assert_eq!(c.generator(), &p("1 + a^7*x + a^13*x^2 + x^3"));
    }

    #[test]
    fn degenerate_codes() {
        // g = x^n − 1: the zero code.
        let zero = code("1 + x^6", 6);
        assert_eq!(zero.dimension(), 0);
        let words: Vec<_> = zero.enumerate_codewords().unwrap().collect();
        assert_eq!(words, vec![vec![FieldElement::Zero; 6]]);
        assert_eq!(zero.minimum_distance(), Err(Error::ZeroCode));
        assert_eq!(zero.is_reversible_classical(), Ok(true));
        // Its dual is the full space, generated by 1.
        let full = zero.dual().unwrap();
        assert_eq!(full.dimension(), 6);
        assert_eq!(full.generator(), &p("1"));
        assert_eq!(full.minimum_distance().unwrap(), 1);
        assert_eq!(full.dual().unwrap().dimension(), 0);
    }

    #[test]
    fn enumeration_guard_is_enforced() {
        let c = code("1 + a^7*x + a^13*x^2 + x^3", 6);
        match c.enumerate_codewords_with_guard(4095) {
            Err(Error::EnumerationTooLarge {
                codewords: 4096,
                guard: 4095,
            }) => {}
            Err(other) => panic!("expected guard rejection, got {other:?}"),
            Ok(_) => panic!("expected guard rejection, got an iterator"),
        }
        assert!(c.minimum_distance_with_guard(100).is_err());
        assert!(c.is_reversible_classical_with_guard(100).is_err());
    }

    #[test]
    fn classical_reversibility_spot_checks() {
        // ⟨x + 1⟩ at n = 2 holds the words (β, β): plainly reversible.
        assert_eq!(code("1 + x", 2).is_reversible_classical(), Ok(true));
        // ⟨x + a⟩ at n = 6: reversal of (…) lands outside the code.
        assert_eq!(code("a^1 + x", 6).is_reversible_classical(), Ok(false));
    }

    #[test]
    fn build_rejects_degenerate_inputs() {
        assert_eq!(
            SkewCyclicCode::build(&SkewPolynomial::zero(f16()), 6),
            Err(Error::ZeroPolynomial)
        );
        assert_eq!(
            SkewCyclicCode::build(&p("1 + x"), 0),
            Err(Error::LengthZero)
        );
    }
}
