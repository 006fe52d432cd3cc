//! Search for right divisors of x^n − 1, factorization over the fixed
//! subfield for odd lengths, and the classification sweep.
//!
//! The skew ring has no unique factorization, so divisors are found by
//! constrained exhaustive search over monic candidates of one degree. The
//! constraints cut the space down before any division happens:
//!
//! * every divisor of x^n − 1 has a nonzero constant term;
//! * a palindromic monic candidate is determined by half its coefficients,
//!   with a_0 = a_m = 1;
//! * a monic candidate with a θ-palindromic scalar multiple λg must have
//!   a_0 = λ^{4^s−1} — a (4^s+1)-th root of unity — and mirrored coefficients
//!   a_{m−i} = a_0·θ(a_i), with the middle coefficient of an even-degree
//!   candidate satisfying a = a_0·θ(a).
//!
//! Every surviving candidate is checked by an incremental remainder scan and
//! re-verified through the public division routine before it is reported.

use std::sync::Arc;

use crate::codes::SkewCyclicCode;
use crate::dna::{is_reversible_dna_by_generator, is_reversible_dna_code_with_guard, DnaTable};
use crate::gf::{FieldDescriptor, FieldElement};
use crate::skewpoly::{PalindromeKind, SkewPolynomial};
use crate::{Error, DEFAULT_ENUM_GUARD, DEFAULT_SEARCH_GUARD};

/// Which divisors a search should report.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DivisorKind {
    /// Every monic right divisor.
    Any,
    /// Monic right divisors that are palindromic (a_i = a_{m−i}; scaling
    /// cannot change this, so testing the monic representative suffices).
    Palindromic,
    /// Monic right divisors with a θ-palindromic scalar multiple. The monic
    /// polynomial itself is θ-palindromic only in the a_0 = 1 case; the
    /// witness scalar is recoverable via `SkewPolynomial::normalize_kind`.
    ThetaPalindromic,
}

/// A divisor search: all monic right divisors of x^n − 1 of one degree.
#[derive(Debug, Clone)]
pub struct DivisorQuery {
    pub n: usize,
    pub degree: usize,
    pub kind: DivisorKind,
    /// Keep only the first `limit` results (after sorting).
    pub limit: Option<usize>,
}

/// All monic right divisors of x^n − 1 of the queried degree and kind, sorted
/// by coefficient tuples in canonical element order. Fails if the candidate
/// space exceeds the guard.
pub fn find_right_divisors(
    field: &Arc<FieldDescriptor>,
    query: &DivisorQuery,
) -> Result<Vec<SkewPolynomial>, Error> {
    find_right_divisors_with_guard(field, query, DEFAULT_SEARCH_GUARD)
}

pub fn find_right_divisors_with_guard(
    field: &Arc<FieldDescriptor>,
    query: &DivisorQuery,
    guard: u64,
) -> Result<Vec<SkewPolynomial>, Error> {
    if query.n == 0 {
        return Err(Error::LengthZero);
    }
    let (m, n) = (query.degree, query.n);
    if m == 0 || m >= n {
        return Err(Error::DegreeOutOfRange { m, n });
    }
    // Value domains for the candidate coefficients, in slot order: a_0 first,
    // then the free low positions, then (for even m with mirrored kinds) the
    // middle position. High positions are mirror images, filled per candidate.
    let all: Vec<FieldElement> = field.elements().collect();
    let nonzero: Vec<FieldElement> = field.elements().skip(1).collect();
    let unit_roots: Vec<FieldElement> = {
        let step = (field.fixed_subfield_order() - 1) as u64;
        (0..=field.fixed_subfield_order() as u64)
            .map(|j| field.alpha_pow(step * j))
            .collect()
    };
    let free_low = if query.kind == DivisorKind::Any {
        m - 1
    } else {
        (m - 1) / 2
    };
    let mut domains: Vec<Vec<FieldElement>> = Vec::new();
    domains.push(match query.kind {
        DivisorKind::Any => nonzero,
        DivisorKind::Palindromic => vec![FieldElement::ONE],
        DivisorKind::ThetaPalindromic => unit_roots,
    });
    for _ in 0..free_low {
        domains.push(all.clone());
    }
    let has_middle = query.kind != DivisorKind::Any && m % 2 == 0;
    if has_middle {
        // The middle coefficient constrains itself: a = a (palindromic, no
        // constraint) or a = a_0·θ(a). The latter depends on a_0, so the
        // domain here is a function of the first slot; build it lazily below
        // and use the worst case for the guard.
        domains.push(all.clone());
    }
    let candidates: u128 = domains.iter().map(|d| d.len() as u128).product();
    if candidates > guard as u128 {
        return Err(Error::SearchSpaceTooLarge { candidates, guard });
    }

    let mut hits: Vec<SkewPolynomial> = Vec::new();
    let mut scan = DivisionScan::new(field, n, m);
    let mut coeffs = vec![FieldElement::Zero; m + 1];
    coeffs[m] = FieldElement::ONE;
    for &a0 in &domains[0] {
        coeffs[0] = a0;
        let middle_domain: Vec<FieldElement> = if has_middle {
            match query.kind {
                DivisorKind::Palindromic => all.clone(),
                _ => all
                    .iter()
                    .copied()
                    .filter(|&a| a == field.mul(a0, field.theta(a)))
                    .collect(),
            }
        } else {
            Vec::new()
        };
        if has_middle && middle_domain.is_empty() {
            continue;
        }
        // Odometer over the free low positions and (optionally) the middle.
        let slots = free_low + usize::from(has_middle);
        let mut idx = vec![0usize; slots];
        loop {
            for (slot, &i) in idx.iter().enumerate() {
                let (pos, value) = if slot < free_low {
                    (slot + 1, all[i])
                } else {
                    (m / 2, middle_domain[i])
                };
                coeffs[pos] = value;
                if pos != m - pos && query.kind != DivisorKind::Any {
                    coeffs[m - pos] = match query.kind {
                        DivisorKind::Palindromic => value,
                        _ => field.mul(a0, field.theta(value)),
                    };
                }
            }
            if scan.divides(&coeffs) {
                let g = SkewPolynomial::from_coeffs(field, coeffs.clone());
                // Contract check through the public division route; the fast
                // scan must never accept anything it would not.
                assert_eq!(
                    g.is_right_divisor(n),
                    Ok(true),
                    "scan accepted a non-divisor"
                );
                hits.push(g);
            }
            let mut s = 0;
            loop {
                if s == slots {
                    break;
                }
                let len = if s < free_low {
                    all.len()
                } else {
                    middle_domain.len()
                };
                idx[s] += 1;
                if idx[s] < len {
                    break;
                }
                idx[s] = 0;
                s += 1;
            }
            if s == slots {
                break;
            }
        }
    }
    hits.sort_unstable();
    hits.dedup();
    if let Some(limit) = query.limit {
        hits.truncate(limit);
    }
    Ok(hits)
}

/// Remainder-only right division of x^n − 1 by monic candidates, reusing one
/// scratch buffer across calls.
struct DivisionScan {
    field: Arc<FieldDescriptor>,
    n: usize,
    m: usize,
    rem: Vec<FieldElement>,
    theta_coeffs: Vec<FieldElement>,
}

impl DivisionScan {
    fn new(field: &Arc<FieldDescriptor>, n: usize, m: usize) -> DivisionScan {
        DivisionScan {
            field: Arc::clone(field),
            n,
            m,
            rem: vec![FieldElement::Zero; n + 1],
            theta_coeffs: vec![FieldElement::Zero; m + 1],
        }
    }

    /// Does the monic candidate right-divide x^n − 1?
    fn divides(&mut self, coeffs: &[FieldElement]) -> bool {
        let f = &self.field;
        debug_assert_eq!(coeffs.len(), self.m + 1);
        debug_assert_eq!(coeffs[self.m], FieldElement::ONE);
        for (t, &c) in self.theta_coeffs.iter_mut().zip(coeffs) {
            *t = f.theta(c);
        }
        self.rem.fill(FieldElement::Zero);
        self.rem[0] = FieldElement::ONE; // −1 = 1 in characteristic 2
        self.rem[self.n] = FieldElement::ONE;
        for d in (self.m..=self.n).rev() {
            let lead = self.rem[d];
            if lead == FieldElement::Zero {
                continue;
            }
            let shift = d - self.m;
            // Monic leading coefficient is θ-fixed, so the quotient term is
            // exactly `lead`; subtract lead·x^shift·g.
            let twisted = if shift % 2 == 0 {
                coeffs
            } else {
                &self.theta_coeffs[..]
            };
            for (j, &gj) in twisted.iter().enumerate() {
                let delta = f.mul(lead, gj);
                self.rem[shift + j] = f.sub(self.rem[shift + j], delta);
            }
            debug_assert_eq!(self.rem[d], FieldElement::Zero);
        }
        self.rem[..self.m].iter().all(|&c| c == FieldElement::Zero)
    }
}

/// The irreducible factorization of x^n − 1 over the fixed subfield F_{4^s},
/// for odd n ≤ 63, by trial division in increasing candidate degree and
/// canonical coefficient order. Factors are returned in discovery order
/// (ascending degree, then ascending coefficient tuples) and multiply back to
/// x^n − 1. For odd n this is also the complete skew factorization.
pub fn factor_odd_length(
    field: &Arc<FieldDescriptor>,
    n: usize,
) -> Result<Vec<SkewPolynomial>, Error> {
    factor_odd_length_with_guard(field, n, DEFAULT_SEARCH_GUARD)
}

pub fn factor_odd_length_with_guard(
    field: &Arc<FieldDescriptor>,
    n: usize,
    guard: u64,
) -> Result<Vec<SkewPolynomial>, Error> {
    if n % 2 == 0 {
        return Err(Error::LengthNotOdd(n));
    }
    if n > 63 {
        return Err(Error::LengthTooLarge(n));
    }
    let fixed = field.fixed_subfield();
    let fixed_nonzero = &fixed[1..];
    let mut factors: Vec<SkewPolynomial> = Vec::new();
    let mut remaining = crate::skewpoly::x_pow_n_minus_one(field, n);
    let mut d = 1;
    while 2 * d <= remaining.degree().unwrap() {
        // All monic degree-d candidates over the fixed subfield with nonzero
        // constant term, ascending.
        let candidates: u128 =
            (fixed_nonzero.len() as u128) * (fixed.len() as u128).pow(d as u32 - 1);
        if candidates > guard as u128 {
            return Err(Error::SearchSpaceTooLarge { candidates, guard });
        }
        let mut coeffs = vec![FieldElement::Zero; d + 1];
        coeffs[d] = FieldElement::ONE;
        let mut idx = vec![0usize; d];
        'candidates: loop {
            coeffs[0] = fixed_nonzero[idx[0]];
            for p in 1..d {
                coeffs[p] = fixed[idx[p]];
            }
            let candidate = SkewPolynomial::from_coeffs(field, coeffs.clone());
            loop {
                let (quot, rem) = remaining.right_divmod(&candidate).unwrap();
                if !rem.is_zero() {
                    break;
                }
                debug_assert!(quot.coeffs().iter().all(|&c| field.is_fixed(c)));
                factors.push(candidate.clone());
                remaining = quot;
                if 2 * d > remaining.degree().unwrap() {
                    break 'candidates;
                }
            }
            let mut p = 0;
            loop {
                if p == d {
                    break 'candidates;
                }
                let len = if p == 0 {
                    fixed_nonzero.len()
                } else {
                    fixed.len()
                };
                idx[p] += 1;
                if idx[p] < len {
                    break;
                }
                idx[p] = 0;
                p += 1;
            }
        }
        d += 1;
    }
    if remaining.degree().unwrap() > 0 {
        // What is left admits no divisor of at most half its degree, so it is
        // itself irreducible over the subfield.
        factors.push(remaining);
    } else {
        debug_assert_eq!(remaining, SkewPolynomial::one(field));
    }
    let product = factors
        .iter()
        .fold(SkewPolynomial::one(field), |acc, f| acc.mul(f));
    debug_assert_eq!(product, crate::skewpoly::x_pow_n_minus_one(field, n));
    Ok(factors)
}

/// One divisor's row in a classification sweep. `None` entries were skipped
/// because the exhaustive step would overrun the enumeration guard.
#[derive(Debug, Clone)]
pub struct SweepRow {
    pub degree: usize,
    pub generator: SkewPolynomial,
    pub palindromic: bool,
    /// A scalar λ with λ·g θ-palindromic, when one exists.
    pub theta_palindromic_scalar: Option<FieldElement>,
    pub n: usize,
    pub k: usize,
    pub min_distance: Option<u32>,
    pub reversible_classical: Option<bool>,
    pub reversible_dna_structural: bool,
    pub reversible_dna_exhaustive: Option<bool>,
    pub dual_generator: SkewPolynomial,
    pub dual_reversible_dna: Option<bool>,
}

#[derive(Debug, Clone)]
pub struct SweepReport {
    pub s: u32,
    pub n: usize,
    pub rows: Vec<SweepRow>,
}

/// Find every monic right divisor of x^n − 1 of every degree 1..n−1 and
/// classify the code each one generates: palindromic shape, parameters,
/// classical and DNA reversibility (structural and, guard permitting,
/// exhaustive), and the same verdict for the dual. Rows are sorted by degree
/// and generator.
pub fn sweep_and_classify(
    field: &Arc<FieldDescriptor>,
    n: usize,
    enum_guard: u64,
    search_guard: u64,
) -> Result<SweepReport, Error> {
    if n == 0 {
        return Err(Error::LengthZero);
    }
    let table = DnaTable::build(field);
    let mut rows = Vec::new();
    for degree in 1..n {
        let query = DivisorQuery {
            n,
            degree,
            kind: DivisorKind::Any,
            limit: None,
        };
        for g in find_right_divisors_with_guard(field, &query, search_guard)? {
            let code = SkewCyclicCode::build(&g, n)?;
            let dual = code.dual()?;
            let within = |c: &SkewCyclicCode| c.codeword_count() <= enum_guard as u128;
            let (min_distance, reversible_classical, reversible_dna_exhaustive) = if within(&code) {
                (
                    Some(code.minimum_distance_with_guard(enum_guard)?),
                    Some(code.is_reversible_classical_with_guard(enum_guard)?),
                    Some(is_reversible_dna_code_with_guard(
                        &code, &table, enum_guard,
                    )?),
                )
            } else {
                (None, None, None)
            };
            let dual_reversible_dna = if within(&dual) {
                Some(is_reversible_dna_code_with_guard(
                    &dual, &table, enum_guard,
                )?)
            } else {
                None
            };
            rows.push(SweepRow {
                degree,
                palindromic: g.is_palindromic(),
                theta_palindromic_scalar: g
                    .normalize_kind(PalindromeKind::ThetaPalindromic)
                    .map(|(scalar, _)| scalar),
                n,
                k: code.dimension(),
                min_distance,
                reversible_classical,
                reversible_dna_structural: is_reversible_dna_by_generator(&code),
                reversible_dna_exhaustive,
                dual_generator: dual.generator().clone(),
                dual_reversible_dna,
                generator: g,
            });
        }
    }
    rows.sort_by(|a, b| (a.degree, &a.generator).cmp(&(b.degree, &b.generator)));
    Ok(SweepReport {
        s: field.s(),
        n,
        rows,
    })
}

/// Convenience wrapper with default guards.
pub fn sweep_and_classify_default(
    field: &Arc<FieldDescriptor>,
    n: usize,
) -> Result<SweepReport, Error> {
    sweep_and_classify(field, n, DEFAULT_ENUM_GUARD, DEFAULT_SEARCH_GUARD)
}
