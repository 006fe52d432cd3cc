//! Table-driven arithmetic for the field tower F_2 ⊂ F_{4^s} ⊂ F_{4^(2s)}.
//!
//! The field F_q with q = 2^(4s) is built as F_2[y]/(p(y)) for a primitive
//! polynomial p of degree 4s, so the residue class of y — written `a` in text
//! form, α on paper — generates the multiplicative group. Elements are kept in
//! log form (zero, or an exponent of `a`), with log/antilog tables translating
//! to the additive bit representation for addition.
//!
//! The automorphism of interest is θ(v) = v^(4^s). It has order two, and its
//! fixed subfield is the 4^s-element middle layer of the tower.

use std::fmt;
use std::sync::Arc;

use crate::error::{poly_over_f2, ParseError};
use crate::Error;

/// An element of F_q in log form: zero, or `a^k` with 0 ≤ k ≤ q−2.
///
/// The derived ordering (zero first, then increasing exponent) is the "log
/// order" used everywhere determinism matters: scalar scans, divisor listings,
/// table construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FieldElement {
    Zero,
    /// `Pow(k)` is a^k; `Pow(0)` is the multiplicative identity.
    Pow(u16),
}

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement::Zero;
    pub const ONE: FieldElement = FieldElement::Pow(0);

    pub fn is_zero(self) -> bool {
        self == FieldElement::Zero
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldElement::Zero => write!(f, "0"),
            FieldElement::Pow(0) => write!(f, "1"),
            FieldElement::Pow(k) => write!(f, "a^{k}"),
        }
    }
}

/// An immutable descriptor of one concrete F_{4^(2s)}: the modulus, the
/// log/antilog tables, and the θ data. All arithmetic goes through `&self`;
/// the descriptor is shared via `Arc` by polynomials, codes, and tables.
#[derive(Debug)]
pub struct FieldDescriptor {
    s: u32,
    q: u32,
    /// Bit i = coefficient of y^i; degree is exactly 4s.
    modulus: u32,
    /// θ(v) = v^theta_exponent with theta_exponent = 4^s.
    theta_exponent: u32,
    /// antilog[k] = additive bits of a^k, for 0 ≤ k ≤ q−2.
    antilog: Vec<u16>,
    /// log[bits] = k with a^k = bits, for 1 ≤ bits ≤ q−1. log[0] is unused.
    log: Vec<u16>,
}

impl PartialEq for FieldDescriptor {
    fn eq(&self, other: &Self) -> bool {
        self.s == other.s && self.modulus == other.modulus
    }
}
impl Eq for FieldDescriptor {}

/// Default primitive moduli, one per supported s. Each is verified
/// (irreducible and primitive) every time the field is built, so a wrong entry
/// here cannot produce a wrong field — only a rejection.
const DEFAULT_MODULI: [u32; 4] = [
    0x13,    // y^4 + y + 1
    0x11d,   // y^8 + y^4 + y^3 + y^2 + 1
    0x1053,  // y^12 + y^6 + y^4 + y + 1
    0x1100b, // y^16 + y^12 + y^3 + y + 1
];

impl FieldDescriptor {
    /// Build F_{4^(2s)} with the documented default modulus for `s`.
    pub fn build(s: u32) -> Result<Arc<FieldDescriptor>, Error> {
        if !(1..=4).contains(&s) {
            return Err(Error::FieldSizeOutOfRange(s));
        }
        Self::build_with_modulus(s, DEFAULT_MODULI[(s - 1) as usize])
    }

    /// Build F_{4^(2s)} as F_2[y]/(modulus). The modulus (bit i = coefficient
    /// of y^i) must have degree exactly 4s, be irreducible, and be primitive;
    /// violations are rejected with a witness (a proper factor, or the true
    /// multiplicative order of y).
    pub fn build_with_modulus(s: u32, modulus: u32) -> Result<Arc<FieldDescriptor>, Error> {
        if !(1..=4).contains(&s) {
            return Err(Error::FieldSizeOutOfRange(s));
        }
        let degree = 4 * s;
        let actual = 31 - modulus.leading_zeros();
        if modulus == 0 || actual != degree {
            return Err(Error::ModulusDegree {
                expected: degree,
                actual: if modulus == 0 { 0 } else { actual },
            });
        }
        if let Some(factor) = smallest_f2_factor(modulus, degree) {
            return Err(Error::ReducibleModulus { factor });
        }

        let q: u32 = 1 << degree;
        let mut antilog = vec![0u16; (q - 1) as usize];
        let mut log = vec![0u16; q as usize];
        let mut acc: u32 = 1;
        for k in 0..q - 1 {
            if k > 0 && acc == 1 {
                // y returned to 1 early: its order is k, not q−1.
                return Err(Error::NonPrimitiveModulus {
                    order: k as u64,
                    required: (q - 1) as u64,
                });
            }
            antilog[k as usize] = acc as u16;
            log[acc as usize] = k as u16;
            acc <<= 1;
            if acc & q != 0 {
                acc ^= modulus;
            }
        }
        debug_assert_eq!(acc, 1, "a^(q-1) must close the cycle in a field");

        Ok(Arc::new(FieldDescriptor {
            s,
            q,
            modulus,
            theta_exponent: 1 << (2 * s),
            antilog,
            log,
        }))
    }

    pub fn s(&self) -> u32 {
        self.s
    }

    /// Field order q = 4^(2s) = 2^(4s).
    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    /// 4^s, the power defining θ.
    pub fn theta_exponent(&self) -> u32 {
        self.theta_exponent
    }

    /// Order of the fixed subfield of θ.
    pub fn fixed_subfield_order(&self) -> u32 {
        1 << (2 * self.s)
    }

    /// The modulus rendered as a polynomial in y, e.g. "y^4 + y + 1".
    pub fn modulus_text(&self) -> String {
        poly_over_f2(self.modulus)
    }

    /// a^k with the exponent reduced mod q−1.
    pub fn alpha_pow(&self, k: u64) -> FieldElement {
        FieldElement::Pow((k % (self.q as u64 - 1)) as u16)
    }

    /// Canonical index: 0 for zero, 1+k for a^k. Total order matches
    /// [`FieldElement`]'s derived `Ord`.
    pub fn element_index(&self, v: FieldElement) -> u32 {
        match v {
            FieldElement::Zero => 0,
            FieldElement::Pow(k) => 1 + k as u32,
        }
    }

    /// Inverse of [`element_index`](Self::element_index); `index` must be < q.
    pub fn element_from_index(&self, index: u32) -> FieldElement {
        debug_assert!(index < self.q);
        if index == 0 {
            FieldElement::Zero
        } else {
            FieldElement::Pow((index - 1) as u16)
        }
    }

    /// All q elements in canonical order: 0, 1, a^1, …, a^(q−2).
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.q).map(|i| self.element_from_index(i))
    }

    /// Additive representation: bit i = coefficient of y^i.
    pub fn additive_bits(&self, v: FieldElement) -> u32 {
        match v {
            FieldElement::Zero => 0,
            FieldElement::Pow(k) => self.antilog[k as usize] as u32,
        }
    }

    /// Hex rendering of the additive representation, for diagnostics.
    pub fn additive_hex(&self, v: FieldElement) -> String {
        format!("{:#x}", self.additive_bits(v))
    }

    /// The additive representation as a polynomial in a over F_2, low term
    /// first: "0", "1", "a", "1+a+a^3", …
    pub fn additive_text(&self, v: FieldElement) -> String {
        let bits = self.additive_bits(v);
        if bits == 0 {
            return "0".to_string();
        }
        let terms: Vec<String> = (0..32)
            .filter(|i| bits >> i & 1 == 1)
            .map(|i| match i {
                0 => "1".to_string(),
                1 => "a".to_string(),
                _ => format!("a^{i}"),
            })
            .collect();
        terms.join("+")
    }

    pub fn from_additive_bits(&self, bits: u32) -> Result<FieldElement, Error> {
        if bits >= self.q {
            return Err(Error::BitsOutOfRange { bits, q: self.q });
        }
        if bits == 0 {
            Ok(FieldElement::Zero)
        } else {
            Ok(FieldElement::Pow(self.log[bits as usize]))
        }
    }

    pub fn add(&self, u: FieldElement, v: FieldElement) -> FieldElement {
        let bits = self.additive_bits(u) ^ self.additive_bits(v);
        if bits == 0 {
            FieldElement::Zero
        } else {
            FieldElement::Pow(self.log[bits as usize])
        }
    }

    /// Subtraction coincides with addition in characteristic 2.
    pub fn sub(&self, u: FieldElement, v: FieldElement) -> FieldElement {
        self.add(u, v)
    }

    pub fn mul(&self, u: FieldElement, v: FieldElement) -> FieldElement {
        match (u, v) {
            (FieldElement::Zero, _) | (_, FieldElement::Zero) => FieldElement::Zero,
            (FieldElement::Pow(i), FieldElement::Pow(j)) => {
                FieldElement::Pow(((i as u32 + j as u32) % (self.q - 1)) as u16)
            }
        }
    }

    pub fn inv(&self, v: FieldElement) -> Result<FieldElement, Error> {
        match v {
            FieldElement::Zero => Err(Error::InverseOfZero),
            FieldElement::Pow(0) => Ok(FieldElement::Pow(0)),
            FieldElement::Pow(k) => Ok(FieldElement::Pow((self.q - 1 - k as u32) as u16)),
        }
    }

    /// v^e by exponent arithmetic mod q−1. `pow(0, 0)` is 1 (empty product),
    /// `pow(0, e)` is 0 for e > 0.
    pub fn pow(&self, v: FieldElement, e: u64) -> FieldElement {
        match v {
            FieldElement::Zero => {
                if e == 0 {
                    FieldElement::ONE
                } else {
                    FieldElement::Zero
                }
            }
            FieldElement::Pow(k) => FieldElement::Pow(
                ((k as u64 * (e % (self.q as u64 - 1))) % (self.q as u64 - 1)) as u16,
            ),
        }
    }

    /// The automorphism θ(v) = v^(4^s); θ(0) = 0.
    pub fn theta(&self, v: FieldElement) -> FieldElement {
        self.pow(v, self.theta_exponent as u64)
    }

    /// θ composed with itself j times. θ has order two, so only the parity of
    /// j matters.
    pub fn theta_iter(&self, v: FieldElement, j: usize) -> FieldElement {
        if j % 2 == 0 {
            v
        } else {
            self.theta(v)
        }
    }

    /// True iff v lies in the fixed subfield F_{4^s} of θ.
    pub fn is_fixed(&self, v: FieldElement) -> bool {
        self.theta(v) == v
    }

    /// The 4^s elements fixed by θ, in canonical order.
    pub fn fixed_subfield(&self) -> Vec<FieldElement> {
        self.elements().filter(|&v| self.is_fixed(v)).collect()
    }

    /// Parse "0", "1", "a", or "a^k" (k decimal; reduced mod q−1).
    pub fn parse_element(&self, text: &str) -> Result<FieldElement, ParseError> {
        let t = text.trim();
        match t {
            "0" => Ok(FieldElement::Zero),
            "1" => Ok(FieldElement::ONE),
            "a" => Ok(FieldElement::Pow(1 % (self.q - 1) as u16)),
            _ => {
                let Some(exp) = t.strip_prefix("a^") else {
                    return Err(ParseError(format!(
                        "expected a field element (\"0\", \"1\", \"a\", or \"a^k\"), got {t:?}"
                    )));
                };
                let k: u64 = exp
                    .parse()
                    .map_err(|_| ParseError(format!("bad exponent in field element {t:?}")))?;
                Ok(self.alpha_pow(k))
            }
        }
    }
}

/// Smallest-degree proper factor of an F_2[y] polynomial (bit form), if any.
/// Trial division up to half the degree; enough for degree ≤ 16.
fn smallest_f2_factor(poly: u32, degree: u32) -> Option<u32> {
    for d in 1..=degree / 2 {
        for candidate in (1u32 << d)..(1u32 << (d + 1)) {
            if f2_poly_rem(poly, candidate) == 0 {
                return Some(candidate);
            }
        }
    }
    None
}

/// Remainder of carry-less polynomial division over F_2.
fn f2_poly_rem(mut num: u32, den: u32) -> u32 {
    let den_deg = 31 - den.leading_zeros();
    loop {
        let num_deg = if num == 0 {
            return 0;
        } else {
            31 - num.leading_zeros()
        };
        if num_deg < den_deg {
            return num;
        }
        num ^= den << (num_deg - den_deg);
    }
}
