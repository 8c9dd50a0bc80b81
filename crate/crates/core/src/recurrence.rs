//! Fixed-order linear recurrences with polynomial coefficients.
//!
//! A family `P_n(x) = Σ_i α_i(N; x) λ_i(x)^N` satisfies the order-`K`
//! recurrence
//!
//! ```text
//! P_{n+K}(x) = -Σ_{i=1..K} f_i(x) · P_{n+K-i}(x),
//! ```
//!
//! where `y^K + f_1 y^{K-1} + … + f_K` is the characteristic polynomial
//! `Π_i (y − λ_i(x))^{m_i}` and the multiplicity `m_i` is one more than the
//! index-degree of `α_i` (a repeated characteristic root contributes
//! index-polynomial coefficients of the matching degree). The conversion
//! keeps the `f_i` as exact polynomial convolutions of the `λ` factors, so
//! repeated roots are exact by construction rather than recovered
//! numerically.

use crate::poly::{ComplexPoly, ExpSumFamily, PolyError};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum RecurrenceError {
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("generate_sequence needs n_max >= order (n_max = {n_max}, order = {order})")]
    RangeTooShort { n_max: usize, order: usize },
}

/// `P_{n+k} = -(f[0]·P_{n+k-1} + f[1]·P_{n+k-2} + … + f[k-1]·P_n)`, seeded
/// with `initials = [P_1, …, P_k]`.
#[derive(Debug, Clone, PartialEq)]
pub struct Recurrence {
    pub f: Vec<ComplexPoly>,
    pub initials: Vec<ComplexPoly>,
}

impl Recurrence {
    pub fn order(&self) -> usize {
        self.f.len()
    }
}

/// Coefficients (ascending in `y`) of the monic characteristic polynomial
/// `Π_i (y − λ_i(x))^{m_i}`, `m_i = deg_n(α_i) + 1`. The returned list has
/// length `K + 1` with `K = Σ m_i`, and its last entry is the constant 1.
pub fn characteristic_poly(family: &ExpSumFamily) -> Vec<ComplexPoly> {
    let mut acc = vec![ComplexPoly::one()];
    for term in &family.terms {
        let mult = term.alpha.deg_n().map_or(1, |d| d + 1);
        for _ in 0..mult {
            // Multiply the y-polynomial by (y − λ).
            let mut next = vec![ComplexPoly::zero(); acc.len() + 1];
            for (j, coeff) in acc.iter().enumerate() {
                next[j + 1] = next[j + 1].add(coeff);
                next[j] = next[j].sub(&coeff.mul(&term.lambda));
            }
            acc = next;
        }
    }
    acc
}

/// Converts a family to its recurrence: order `K = Σ_i (deg_n(α_i) + 1)`,
/// `f_i` = coefficient of `y^{K−i}` in the characteristic polynomial, and
/// initial values `P_1, …, P_K` from direct expansion.
pub fn to_recurrence(family: &ExpSumFamily) -> Result<Recurrence, RecurrenceError> {
    let chi = characteristic_poly(family);
    let order = chi.len() - 1;
    let f = (1..=order).map(|i| chi[order - i].clone()).collect();
    let initials = (1..=order as i64)
        .map(|n| family.expand_at_index(n))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Recurrence { f, initials })
}

/// Iterates the recurrence, returning `[P_1, …, P_{n_max}]`.
pub fn generate_sequence(
    rec: &Recurrence,
    n_max: usize,
) -> Result<Vec<ComplexPoly>, RecurrenceError> {
    let k = rec.order();
    if n_max < k {
        return Err(RecurrenceError::RangeTooShort { n_max, order: k });
    }
    let mut seq = rec.initials.clone();
    while seq.len() < n_max {
        let mut next = ComplexPoly::zero();
        for (i, fi) in rec.f.iter().enumerate() {
            // f_i multiplies P_{n+k-i} for i = 1..k; with 0-based storage
            // that is the (i+1)-th most recent entry.
            let prev = &seq[seq.len() - 1 - i];
            next = next.sub(&fi.mul(prev));
        }
        seq.push(next);
    }
    Ok(seq)
}

/// Report from [`minimality_check`]: a family satisfies no lower-order
/// recurrence iff its `λ`'s are pairwise distinct polynomials and every
/// leading index-coefficient is a nonzero polynomial.
#[derive(Debug, Clone, PartialEq)]
pub struct MinimalityReport {
    /// Pairs of term indices with identical `λ` polynomials.
    pub duplicate_lambda_pairs: Vec<(usize, usize)>,
    /// Term indices whose leading index-coefficient is the zero polynomial.
    pub zero_leading_terms: Vec<usize>,
    pub pass: bool,
}

pub fn minimality_check(family: &ExpSumFamily) -> MinimalityReport {
    let mut duplicate_lambda_pairs = Vec::new();
    for i in 0..family.terms.len() {
        for j in (i + 1)..family.terms.len() {
            if family.terms[i].lambda == family.terms[j].lambda {
                duplicate_lambda_pairs.push((i, j));
            }
        }
    }
    let zero_leading_terms = family
        .terms
        .iter()
        .enumerate()
        .filter(|(_, t)| t.alpha.leading().is_zero())
        .map(|(i, _)| i)
        .collect::<Vec<_>>();
    let pass = duplicate_lambda_pairs.is_empty() && zero_leading_terms.is_empty();
    MinimalityReport {
        duplicate_lambda_pairs,
        zero_leading_terms,
        pass,
    }
}
