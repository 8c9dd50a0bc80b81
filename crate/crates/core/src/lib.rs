//! Zeros of exponential-sum polynomial families and their limit sets.
//!
//! A family here is a sequence of polynomials
//!
//! ```text
//! P_n(x) = Σ_i  α_i(N; x) · λ_i(x)^N,      N = n + index_offset,
//! ```
//!
//! where each `λ_i` is a polynomial in `x` and each `α_i` is a polynomial in
//! the index `N` whose coefficients are polynomials in `x`. Such families are
//! exactly the solutions of fixed-order linear recurrences with polynomial
//! coefficients; the Beraha–Kahane–Weiss theorem (in its extended form
//! allowing repeated characteristic roots) describes where their zeros
//! accumulate as `n → ∞`: isolated points where a strictly dominant term's
//! leading index-coefficient vanishes, and equimodular curves where two or
//! more dominant `λ`'s share the largest modulus.
//!
//! The crate provides:
//!
//! - [`poly`]: dense complex polynomials, index-dependent coefficients, and
//!   family expansion at a fixed index;
//! - [`recurrence`]: the characteristic polynomial with repeated roots,
//!   conversion to the underlying recurrence, and sequence generation;
//! - [`rootfind`]: simultaneous-iteration root finding and argument-principle
//!   zero counting;
//! - [`limitset`]: the predicted limit set (isolated points, persistent
//!   zeros, equimodular dominance curves);
//! - [`verify`]: empirical convergence of computed zeros to the computed
//!   limit set, and the two-term modulus-balance residual;
//! - [`families`]: built-in example families with closed-form oracles;
//! - [`graphpoly`]: exact Tutte polynomials of small multigraphs, the Steele
//!   polynomial, and expected minimum-spanning-tree length.

pub mod families;
pub mod graphpoly;
pub mod limitset;
pub mod poly;
pub mod recurrence;
pub mod rootfind;
pub mod verify;

pub use poly::{ComplexPoly, ExpSumFamily, ExpTerm, NCoeffPoly, PolyError};
