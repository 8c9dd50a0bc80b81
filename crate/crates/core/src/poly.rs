//! Dense complex polynomials, index-dependent coefficients, and
//! exponential-sum families.
//!
//! Coefficient layout is ascending: `coeffs[j]` multiplies `x^j`, and the
//! zero polynomial is the empty list. Arithmetic trims *exact* zero leading
//! coefficients only; tolerance-based cleanup is a separate, explicit
//! [`ComplexPoly::normalize`] step. That distinction matters: expanding a
//! family at a large index produces coefficients spanning twenty orders of
//! magnitude (binomial bulges), and a relative threshold applied blindly
//! after every product would delete genuinely nonzero low/high-order
//! coefficients and corrupt degrees.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Default relative tolerance for [`ComplexPoly::normalize`]: coefficients
/// with modulus at most `1e-12 ·` (max coefficient modulus) count as zero.
pub const NORMALIZE_TOL: f64 = 1e-12;

#[derive(Debug, Error)]
pub enum PolyError {
    #[error("a family needs at least one term")]
    EmptyFamily,
    #[error("term {index} has a zero lambda polynomial")]
    ZeroLambda { index: usize },
    #[error("effective index N = {n} + ({offset}) is negative")]
    NegativeIndex { n: i64, offset: i64 },
    #[error("invalid family JSON: {0}")]
    BadJson(String),
}

/// Univariate polynomial with `f64`-precision complex coefficients,
/// ascending degree; the empty coefficient list is the zero polynomial.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct ComplexPoly {
    pub coeffs: Vec<Complex64>,
}

impl ComplexPoly {
    /// Builds a polynomial, trimming exact zero leading coefficients.
    pub fn new(coeffs: Vec<Complex64>) -> Self {
        let mut p = ComplexPoly { coeffs };
        p.trim_exact_zeros();
        p
    }

    /// Polynomial with the given real coefficients, ascending degree.
    pub fn from_real(coeffs: &[f64]) -> Self {
        Self::new(coeffs.iter().map(|&c| Complex64::new(c, 0.0)).collect())
    }

    pub fn zero() -> Self {
        ComplexPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Complex64::new(1.0, 0.0))
    }

    pub fn constant(c: Complex64) -> Self {
        Self::new(vec![c])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Leading coefficient, or `None` for the zero polynomial.
    pub fn leading(&self) -> Option<Complex64> {
        self.coeffs.last().copied()
    }

    /// Largest coefficient modulus (0 for the zero polynomial).
    pub fn max_coeff_abs(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }

    fn trim_exact_zeros(&mut self) {
        while self
            .coeffs
            .last()
            .is_some_and(|c| c.re == 0.0 && c.im == 0.0)
        {
            self.coeffs.pop();
        }
    }

    /// Drops leading coefficients whose modulus is at most `tol` times the
    /// largest coefficient modulus. Idempotent; `tol = 0` trims exact zeros
    /// only. The result is canonical: either empty or ending in a coefficient
    /// above the threshold.
    pub fn normalize(&mut self, tol: f64) {
        let scale = self.max_coeff_abs();
        let cut = tol * scale;
        while self.coeffs.last().is_some_and(|c| c.norm() <= cut) {
            self.coeffs.pop();
        }
        self.trim_exact_zeros();
    }

    /// Coefficientwise sum.
    pub fn add(&self, other: &ComplexPoly) -> ComplexPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![Complex64::new(0.0, 0.0); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            out[i] += c;
        }
        ComplexPoly::new(out)
    }

    pub fn sub(&self, other: &ComplexPoly) -> ComplexPoly {
        self.add(&other.scale(Complex64::new(-1.0, 0.0)))
    }

    pub fn scale(&self, k: Complex64) -> ComplexPoly {
        ComplexPoly::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    /// Coefficient convolution; the degree of a product of nonzero
    /// polynomials is the sum of the degrees.
    pub fn mul(&self, other: &ComplexPoly) -> ComplexPoly {
        if self.is_zero() || other.is_zero() {
            return ComplexPoly::zero();
        }
        let mut out = vec![Complex64::new(0.0, 0.0); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        ComplexPoly::new(out)
    }

    /// Integer power by repeated squaring.
    pub fn pow(&self, mut e: u64) -> ComplexPoly {
        let mut base = self.clone();
        let mut acc = ComplexPoly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Horner evaluation.
    pub fn eval(&self, z: Complex64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for c in self.coeffs.iter().rev() {
            acc = acc * z + c;
        }
        acc
    }

    /// `Σ |coeffs[j]| · r^j` — a majorant of `|p(z)|` on `|z| = r`, and the
    /// scale of the floating-point noise floor of Horner evaluation there.
    pub fn eval_abs(&self, r: f64) -> f64 {
        let mut acc = 0.0;
        for c in self.coeffs.iter().rev() {
            acc = acc * r + c.norm();
        }
        acc
    }

    /// Formal derivative.
    pub fn derivative(&self) -> ComplexPoly {
        if self.coeffs.len() <= 1 {
            return ComplexPoly::zero();
        }
        ComplexPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(j, c)| c * j as f64)
                .collect(),
        )
    }
}

impl std::fmt::Display for ComplexPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.re == 0.0 && c.im == 0.0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if c.im == 0.0 {
                write!(f, "{}", c.re)?;
            } else {
                write!(f, "({}{:+}i)", c.re, c.im)?;
            }
            match j {
                0 => {}
                1 => write!(f, "·x")?,
                _ => write!(f, "·x^{j}")?,
            }
        }
        Ok(())
    }
}

/// Polynomial in the index `n` whose coefficients are polynomials in `x`:
/// `a(n; x) = Σ_j n^j · n_coeffs[j](x)`. Canonical form keeps the leading
/// entry nonzero (trailing zero polynomials are trimmed on construction).
#[derive(Debug, Clone, PartialEq, Default)]
pub struct NCoeffPoly {
    pub n_coeffs: Vec<ComplexPoly>,
}

impl NCoeffPoly {
    pub fn new(mut n_coeffs: Vec<ComplexPoly>) -> Self {
        while n_coeffs.last().is_some_and(|p| p.is_zero()) {
            n_coeffs.pop();
        }
        NCoeffPoly { n_coeffs }
    }

    /// Coefficient independent of the index.
    pub fn constant(p: ComplexPoly) -> Self {
        Self::new(vec![p])
    }

    pub fn is_zero(&self) -> bool {
        self.n_coeffs.is_empty()
    }

    /// Degree in the index variable, or `None` if identically zero.
    pub fn deg_n(&self) -> Option<usize> {
        self.n_coeffs.len().checked_sub(1)
    }

    /// Leading index-coefficient polynomial (zero polynomial if `self` is zero).
    pub fn leading(&self) -> ComplexPoly {
        self.n_coeffs
            .last()
            .cloned()
            .unwrap_or_else(ComplexPoly::zero)
    }

    /// `Σ_j n^j · n_coeffs[j](z)`.
    pub fn eval(&self, n: i64, z: Complex64) -> Complex64 {
        let nf = Complex64::new(n as f64, 0.0);
        let mut acc = Complex64::new(0.0, 0.0);
        for p in self.n_coeffs.iter().rev() {
            acc = acc * nf + p.eval(z);
        }
        acc
    }

    /// Collapses the index: the polynomial in `x` equal to `self` at `n`.
    pub fn at_index(&self, n: i64) -> ComplexPoly {
        let mut acc = ComplexPoly::zero();
        let nf = Complex64::new(n as f64, 0.0);
        for p in self.n_coeffs.iter().rev() {
            acc = acc.scale(nf).add(p);
        }
        acc
    }

    pub fn add(&self, other: &NCoeffPoly) -> NCoeffPoly {
        let len = self.n_coeffs.len().max(other.n_coeffs.len());
        let mut out = vec![ComplexPoly::zero(); len];
        for (j, p) in self.n_coeffs.iter().enumerate() {
            out[j] = out[j].add(p);
        }
        for (j, p) in other.n_coeffs.iter().enumerate() {
            out[j] = out[j].add(p);
        }
        NCoeffPoly::new(out)
    }
}

/// One summand `α(N; x) · λ(x)^N` of a family.
#[derive(Debug, Clone, PartialEq)]
pub struct ExpTerm {
    pub alpha: NCoeffPoly,
    pub lambda: ComplexPoly,
}

/// An exponential-sum family `P_n(x) = Σ_i α_i(N; x) λ_i(x)^N` with
/// `N = n + index_offset`. The offset encodes substitutions such as
/// `N = n − 1` so constructors can match a source's printed term forms.
#[derive(Debug, Clone, PartialEq)]
pub struct ExpSumFamily {
    pub name: String,
    pub terms: Vec<ExpTerm>,
    pub index_offset: i64,
}

impl ExpSumFamily {
    /// Builds a family, merging terms whose `λ` polynomials are identical
    /// (their `α`'s add) and rejecting zero `λ`'s and empty term lists.
    pub fn new(
        name: impl Into<String>,
        terms: Vec<ExpTerm>,
        index_offset: i64,
    ) -> Result<Self, PolyError> {
        let mut fam = Self::raw(name, terms, index_offset)?;
        let mut merged: Vec<ExpTerm> = Vec::new();
        for term in fam.terms.drain(..) {
            match merged.iter_mut().find(|t| t.lambda == term.lambda) {
                Some(t) => t.alpha = t.alpha.add(&term.alpha),
                None => merged.push(term),
            }
        }
        fam.terms = merged;
        Ok(fam)
    }

    /// Builds a family without merging duplicate-`λ` terms. Only useful for
    /// diagnostics (e.g. exercising the minimality check on malformed input);
    /// everything downstream assumes the merged form from [`Self::new`].
    pub fn raw(
        name: impl Into<String>,
        terms: Vec<ExpTerm>,
        index_offset: i64,
    ) -> Result<Self, PolyError> {
        if terms.is_empty() {
            return Err(PolyError::EmptyFamily);
        }
        if let Some(i) = terms.iter().position(|t| t.lambda.is_zero()) {
            return Err(PolyError::ZeroLambda { index: i });
        }
        Ok(ExpSumFamily {
            name: name.into(),
            terms,
            index_offset,
        })
    }

    pub fn effective_index(&self, n: i64) -> Result<i64, PolyError> {
        let big_n = n + self.index_offset;
        if big_n < 0 {
            return Err(PolyError::NegativeIndex {
                n,
                offset: self.index_offset,
            });
        }
        Ok(big_n)
    }

    /// The dense polynomial `P_n(x) = Σ_i α_i(N; x) λ_i(x)^N`, fully
    /// expanded, with `λ^N` computed by repeated squaring. Only exact zero
    /// leading coefficients are trimmed, so degrees stay exact even when the
    /// interior coefficients dwarf the leading one (binomial bulge at large
    /// `N`).
    pub fn expand_at_index(&self, n: i64) -> Result<ComplexPoly, PolyError> {
        let big_n = self.effective_index(n)?;
        let mut acc = ComplexPoly::zero();
        for term in &self.terms {
            let a = term.alpha.at_index(big_n);
            let p = term.lambda.pow(big_n as u64);
            acc = acc.add(&a.mul(&p));
        }
        Ok(acc)
    }

    /// Pointwise value `Σ_i α_i(N; z) λ_i(z)^N` without expanding — the
    /// numerically stable route when the expanded coefficients are huge.
    pub fn eval_terms(&self, n: i64, z: Complex64) -> Result<Complex64, PolyError> {
        let big_n = self.effective_index(n)?;
        let mut acc = Complex64::new(0.0, 0.0);
        for term in &self.terms {
            acc += term.alpha.eval(big_n, z) * term.lambda.eval(z).powu(big_n as u32);
        }
        Ok(acc)
    }

    pub fn k(&self) -> usize {
        self.terms.len()
    }
}

// --- JSON schema ------------------------------------------------------
//
// Families serialize as
// `{"name": str, "index_offset": int, "terms": [{"alpha": [[[re,im],...],...],
//   "lambda": [[re,im],...]}]}`
// with x-degree ascending inside each coefficient list and n-degree
// ascending across alpha's outer list.

#[derive(Debug, Serialize, Deserialize)]
pub struct FamilyJson {
    pub name: String,
    pub index_offset: i64,
    pub terms: Vec<TermJson>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct TermJson {
    pub alpha: Vec<Vec<[f64; 2]>>,
    pub lambda: Vec<[f64; 2]>,
}

fn poly_to_pairs(p: &ComplexPoly) -> Vec<[f64; 2]> {
    p.coeffs.iter().map(|c| [c.re, c.im]).collect()
}

fn poly_from_pairs(pairs: &[[f64; 2]]) -> ComplexPoly {
    ComplexPoly::new(
        pairs
            .iter()
            .map(|&[re, im]| Complex64::new(re, im))
            .collect(),
    )
}

impl ExpSumFamily {
    pub fn to_json(&self) -> FamilyJson {
        FamilyJson {
            name: self.name.clone(),
            index_offset: self.index_offset,
            terms: self
                .terms
                .iter()
                .map(|t| TermJson {
                    alpha: t.alpha.n_coeffs.iter().map(poly_to_pairs).collect(),
                    lambda: poly_to_pairs(&t.lambda),
                })
                .collect(),
        }
    }

    pub fn from_json(json: &FamilyJson) -> Result<Self, PolyError> {
        let terms = json
            .terms
            .iter()
            .map(|t| ExpTerm {
                alpha: NCoeffPoly::new(t.alpha.iter().map(|p| poly_from_pairs(p)).collect()),
                lambda: poly_from_pairs(&t.lambda),
            })
            .collect();
        Self::new(json.name.clone(), terms, json.index_offset)
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(&self.to_json()).expect("family JSON serialization")
    }

    pub fn from_json_str(s: &str) -> Result<Self, PolyError> {
        let json: FamilyJson =
            serde_json::from_str(s).map_err(|e| PolyError::BadJson(e.to_string()))?;
        Self::from_json(&json)
    }
}
