//! The correspondence between F_{4^{2s}} and DNA 2s-mers.
//!
//! A `DnaTable` is a bijection τ from the q = 4^{2s} field elements onto the
//! words of length 2s over {A, C, G, T}, built so that τ(θ(β)) is the string
//! reverse of τ(β). Under that law the θ-fixed elements are exactly the ones
//! sent to palindromic words, and reversing the DNA image of a codeword
//! (c_0, …, c_{n−1}) corresponds to the field-level word
//! (θ(c_{n−1}), …, θ(c_0)) — its DNA reverse.
//!
//! A code is a reversible DNA code when its image under the symbol-wise
//! extension φ is closed under string reversal; by the reversal law that is
//! the same as the codeword set being closed under DNA reversal, which is how
//! [`is_reversible_dna_code`] decides it. [`is_reversible_dna_by_generator`]
//! reads the same verdict off the shape of the generator polynomial alone.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::codes::SkewCyclicCode;
use crate::gf::{FieldDescriptor, FieldElement};
use crate::skewpoly::PalindromeKind;
use crate::{Error, ParseError, DEFAULT_ENUM_GUARD};

/// One DNA base. The derived order A < C < G < T is the lexicographic order
/// used everywhere words are ranked.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Nucleotide {
    A,
    C,
    G,
    T,
}

impl Nucleotide {
    pub const ALL: [Nucleotide; 4] = [Nucleotide::A, Nucleotide::C, Nucleotide::G, Nucleotide::T];

    pub fn to_char(self) -> char {
        match self {
            Nucleotide::A => 'A',
            Nucleotide::C => 'C',
            Nucleotide::G => 'G',
            Nucleotide::T => 'T',
        }
    }

    pub fn from_char(c: char) -> Result<Nucleotide, ParseError> {
        match c {
            'A' => Ok(Nucleotide::A),
            'C' => Ok(Nucleotide::C),
            'G' => Ok(Nucleotide::G),
            'T' => Ok(Nucleotide::T),
            other => Err(ParseError(format!("invalid nucleotide {other:?}"))),
        }
    }
}

/// A string over {A, C, G, T}.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DnaWord(Vec<Nucleotide>);

impl DnaWord {
    pub fn new(bases: Vec<Nucleotide>) -> Self {
        DnaWord(bases)
    }

    pub fn parse(text: &str) -> Result<DnaWord, ParseError> {
        text.chars()
            .map(Nucleotide::from_char)
            .collect::<Result<_, _>>()
            .map(DnaWord)
    }

    pub fn bases(&self) -> &[Nucleotide] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn reversed(&self) -> DnaWord {
        DnaWord(self.0.iter().rev().copied().collect())
    }

    pub fn is_palindrome(&self) -> bool {
        self.0.iter().eq(self.0.iter().rev())
    }
}

impl fmt::Display for DnaWord {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.0 {
            write!(out, "{}", b.to_char())?;
        }
        Ok(())
    }
}

/// The 16 words of the classical F_16 table, in element order
/// 0, α^0, α^1, …, α^14.
const TABLE_S1: [&str; 16] = [
    "AA", "TT", "AT", "GC", "AG", "TA", "CC", "AC", "GT", "CG", "CA", "GG", "CT", "GA", "TG", "TC",
];

/// The bijection τ between field elements and DNA 2s-mers, with τ(θ(β)) the
/// reverse of τ(β) for every β. Immutable once built.
pub struct DnaTable {
    field: Arc<FieldDescriptor>,
    /// Indexed by element index (0, then α^0, α^1, …).
    forward: Vec<DnaWord>,
    backward: HashMap<DnaWord, FieldElement>,
}

impl DnaTable {
    /// Build the table for a field. For s = 1 this is the classical 16-entry
    /// table verbatim. For larger s the table is generated deterministically:
    /// θ-fixed elements take the palindromic words in lexicographic order,
    /// then each remaining element β (in element order) takes the least
    /// unused non-palindromic word, with the reverse going to θ(β).
    pub fn build(field: &Arc<FieldDescriptor>) -> DnaTable {
        let forward = if field.s() == 1 {
            TABLE_S1
                .iter()
                .map(|w| DnaWord::parse(w).unwrap())
                .collect()
        } else {
            generated_forward(field)
        };
        let table = DnaTable {
            field: Arc::clone(field),
            backward: forward
                .iter()
                .enumerate()
                .map(|(i, w)| (w.clone(), field.element_from_index(i as u32)))
                .collect(),
            forward,
        };
        table.check_invariants();
        table
    }

    /// Bijectivity, the reversal law, and the fixed ↔ palindromic match are
    /// structural guarantees; a broken table must never leave this module.
    fn check_invariants(&self) {
        let f = &self.field;
        assert_eq!(self.forward.len(), f.q() as usize);
        assert_eq!(
            self.backward.len(),
            f.q() as usize,
            "table is not injective"
        );
        for v in f.elements() {
            let w = self.tau(v);
            assert_eq!(w.len(), 2 * f.s() as usize);
            assert_eq!(
                self.tau(f.theta(v)),
                &w.reversed(),
                "reversal law fails at {v}"
            );
            assert_eq!(
                w.is_palindrome(),
                f.is_fixed(v),
                "fixed/palindrome mismatch at {v}"
            );
        }
    }

    pub fn field(&self) -> &Arc<FieldDescriptor> {
        &self.field
    }

    /// τ: the DNA word of one field element.
    pub fn tau(&self, v: FieldElement) -> &DnaWord {
        &self.forward[self.field.element_index(v) as usize]
    }

    /// The element whose word this is, if it is a word of the table.
    pub fn decode(&self, word: &DnaWord) -> Option<FieldElement> {
        self.backward.get(word).copied()
    }

    /// φ: symbol-wise extension of τ, concatenating the per-symbol words.
    pub fn phi(&self, word: &[FieldElement]) -> DnaWord {
        let mut bases = Vec::with_capacity(word.len() * 2 * self.field.s() as usize);
        for &v in word {
            bases.extend_from_slice(self.tau(v).bases());
        }
        DnaWord(bases)
    }

    /// All (word, element) rows in element order, as tab-separated text with
    /// the element in both multiplicative and additive form.
    pub fn dump_tsv(&self) -> String {
        let mut out = String::from("word\telement\tadditive\n");
        for v in self.field.elements() {
            out.push_str(&format!(
                "{}\t{}\t{}\n",
                self.tau(v),
                v,
                self.field.additive_text(v)
            ));
        }
        out
    }
}

/// Generated table for s ≥ 2 (see [`DnaTable::build`]).
fn generated_forward(field: &Arc<FieldDescriptor>) -> Vec<DnaWord> {
    let q = field.q() as usize;
    let width = 2 * field.s() as usize;
    // Rank r ↔ the r-th word of length 2s in lexicographic order (base-4
    // digits of r, leftmost most significant).
    let word_at = |r: usize| -> DnaWord {
        DnaWord(
            (0..width)
                .rev()
                .map(|pos| Nucleotide::ALL[r >> (2 * pos) & 3])
                .collect(),
        )
    };
    let rank_of =
        |w: &DnaWord| -> usize { w.bases().iter().fold(0, |acc, &b| acc << 2 | b as usize) };
    let mut forward: Vec<Option<DnaWord>> = vec![None; q];
    let mut used = vec![false; q];
    // Palindromic words in lexicographic order go to the fixed elements in
    // element order; the counts match (4^s each).
    let mut next_palindrome = 0;
    for v in field.elements().filter(|&v| field.is_fixed(v)) {
        let w = loop {
            let w = word_at(next_palindrome);
            next_palindrome += 1;
            if w.is_palindrome() {
                break w;
            }
        };
        used[rank_of(&w)] = true;
        forward[field.element_index(v) as usize] = Some(w);
    }
    // Each remaining element in order takes the least unused non-palindromic
    // word; the word's reverse goes to θ(v). Words are consumed in mirror
    // pairs, so the least unused word always has an unused reverse.
    let mut next_rank = 0;
    for v in field.elements() {
        if forward[field.element_index(v) as usize].is_some() {
            continue;
        }
        let w = loop {
            let w = word_at(next_rank);
            next_rank += 1;
            if !used[rank_of(&w)] && !w.is_palindrome() {
                break w;
            }
        };
        let rev = w.reversed();
        used[rank_of(&w)] = true;
        used[rank_of(&rev)] = true;
        forward[field.element_index(field.theta(v)) as usize] = Some(rev);
        forward[field.element_index(v) as usize] = Some(w);
    }
    forward.into_iter().map(Option::unwrap).collect()
}

/// The DNA reverse of a field-level word: (θ(c_{n−1}), …, θ(c_0)). Its φ-image
/// is the string reverse of the φ-image of c.
pub fn dna_reverse_vector(field: &FieldDescriptor, word: &[FieldElement]) -> Vec<FieldElement> {
    word.iter().rev().map(|&v| field.theta(v)).collect()
}

/// Whether the DNA image φ(C) is closed under string reversal, decided by
/// exhausting the codeword set (default guard).
pub fn is_reversible_dna_code(code: &SkewCyclicCode, table: &DnaTable) -> Result<bool, Error> {
    is_reversible_dna_code_with_guard(code, table, DEFAULT_ENUM_GUARD)
}

pub fn is_reversible_dna_code_with_guard(
    code: &SkewCyclicCode,
    table: &DnaTable,
    guard: u64,
) -> Result<bool, Error> {
    assert!(
        code.field() == table.field(),
        "code and table from different fields (s={} modulus {:#x} vs s={} modulus {:#x})",
        code.field().s(),
        code.field().modulus(),
        table.field().s(),
        table.field().modulus(),
    );
    let field = code.field();
    // The reversal law turns string reversal of φ(c) into the DNA reverse of
    // c, so the check runs on field words in additive bit form.
    let theta_bits: Vec<u32> = (0..field.q())
        .map(|b| field.additive_bits(field.theta(field.from_additive_bits(b).unwrap())))
        .collect();
    let set = code.codeword_set_bits(guard)?;
    let mut iter = crate::codes::BitsEnumerator::new(code);
    let mut reversed = vec![0u32; code.length()];
    while let Some(word) = iter.next_word() {
        for (r, &b) in reversed.iter_mut().zip(word.iter().rev()) {
            *r = theta_bits[b as usize];
        }
        if !set.contains_bits(&reversed) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The reversibility verdict read off the generator polynomial alone, with no
/// enumeration: for odd length or an even-degree generator the code is a
/// reversible DNA code exactly when g is palindromic; for even length and an
/// odd-degree generator, exactly when some scalar multiple of g is
/// θ-palindromic.
pub fn is_reversible_dna_by_generator(code: &SkewCyclicCode) -> bool {
    let g = code.generator();
    if code.length() % 2 == 1 || g.degree().unwrap() % 2 == 0 {
        g.is_palindromic()
    } else {
        g.normalize_kind(PalindromeKind::ThetaPalindromic).is_some()
    }
}
