//! Integration tests for polynomial arithmetic and the exponential-sum
//! family representation: exact identities checkable by hand, agreement
//! between the expanded and term-form evaluation routes, and the JSON
//! round trip.

use bkw_core::poly::{ComplexPoly, ExpSumFamily, ExpTerm, NCoeffPoly, PolyError};
use num_complex::Complex64;
use proptest::prelude::*;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn real_poly(coeffs: &[f64]) -> ComplexPoly {
    ComplexPoly::from_real(coeffs)
}

#[test]
fn constructor_trims_exact_trailing_zeros() {
    let p = ComplexPoly::new(vec![c(1.0, 0.0), c(2.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)]);
    assert_eq!(p.degree(), Some(1));
    assert_eq!(p.coeffs.len(), 2);

    let zero = ComplexPoly::new(vec![c(0.0, 0.0); 3]);
    assert!(zero.is_zero());
    assert_eq!(zero.degree(), None);
    assert_eq!(zero.leading(), None);
}

#[test]
fn product_of_conjugate_linear_factors() {
    // (x + 1)(x - 1) = x^2 - 1
    let p = real_poly(&[1.0, 1.0]).mul(&real_poly(&[-1.0, 1.0]));
    assert_eq!(p, real_poly(&[-1.0, 0.0, 1.0]));
}

#[test]
fn add_sub_round_trip() {
    let a = real_poly(&[3.0, 0.0, -2.0, 5.0]);
    let b = real_poly(&[1.0, 7.0]);
    assert_eq!(a.add(&b).sub(&b), a);
    assert!(a.sub(&a).is_zero());
}

#[test]
fn pow_matches_repeated_multiplication() {
    // (x + 2)^3 = x^3 + 6x^2 + 12x + 8
    let base = real_poly(&[2.0, 1.0]);
    assert_eq!(base.pow(3), real_poly(&[8.0, 12.0, 6.0, 1.0]));
    assert_eq!(base.pow(0), ComplexPoly::one());
    assert_eq!(ComplexPoly::zero().pow(0), ComplexPoly::one());
    assert!(ComplexPoly::zero().pow(5).is_zero());
}

#[test]
fn horner_evaluation_at_complex_point() {
    // p(z) = z^2 + 1 vanishes at z = i and equals 2 at z = 1.
    let p = real_poly(&[1.0, 0.0, 1.0]);
    assert!(p.eval(c(0.0, 1.0)).norm() < 1e-15);
    assert_eq!(p.eval(c(1.0, 0.0)), c(2.0, 0.0));
}

#[test]
fn derivative_drops_degree_and_scales() {
    // d/dx (x^3 - 2x + 7) = 3x^2 - 2
    let p = real_poly(&[7.0, -2.0, 0.0, 1.0]);
    assert_eq!(p.derivative(), real_poly(&[-2.0, 0.0, 3.0]));
    assert!(ComplexPoly::constant(c(4.0, 0.0)).derivative().is_zero());
}

#[test]
fn family_constructor_merges_identical_lambdas() {
    // 3·2^N + 5·2^N should collapse into a single 8·2^N term.
    let term = |a: f64| ExpTerm {
        alpha: NCoeffPoly::constant(real_poly(&[a])),
        lambda: real_poly(&[2.0]),
    };
    let fam = ExpSumFamily::new("merged", vec![term(3.0), term(5.0)], 0).unwrap();
    assert_eq!(fam.k(), 1);
    let v = fam.eval_terms(4, c(0.0, 0.0)).unwrap();
    assert!((v - c(128.0, 0.0)).norm() < 1e-12, "8·2^4 = 128, got {v}");
}

#[test]
fn family_constructor_rejects_degenerate_input() {
    assert!(matches!(
        ExpSumFamily::new("empty", vec![], 0),
        Err(PolyError::EmptyFamily)
    ));
    let bad = ExpTerm {
        alpha: NCoeffPoly::constant(ComplexPoly::one()),
        lambda: ComplexPoly::zero(),
    };
    assert!(matches!(
        ExpSumFamily::new("zero-lambda", vec![bad], 0),
        Err(PolyError::ZeroLambda { index: 0 })
    ));
}

#[test]
fn negative_effective_index_is_rejected() {
    let term = ExpTerm {
        alpha: NCoeffPoly::constant(ComplexPoly::one()),
        lambda: real_poly(&[0.0, 1.0]),
    };
    let fam = ExpSumFamily::new("shifted", vec![term], -1).unwrap();
    assert!(matches!(
        fam.expand_at_index(0),
        Err(PolyError::NegativeIndex { n: 0, offset: -1 })
    ));
    assert!(fam.expand_at_index(1).is_ok());
}

#[test]
fn steele_cycle_expansion_has_the_closed_form() {
    // The cycle family expands to t^n − n·t + (n − 1); at n = 5 that is
    // t^5 − 5t + 4.
    let fam = bkw_core::families::make_steele_cycle().family;
    let p = fam.expand_at_index(5).unwrap();
    let expected = real_poly(&[4.0, -5.0, 0.0, 0.0, 0.0, 1.0]);
    assert_eq!(p.degree(), Some(5));
    for (got, want) in p.coeffs.iter().zip(&expected.coeffs) {
        assert!((got - want).norm() < 1e-9, "{got} vs {want}");
    }
}

#[test]
fn json_round_trip_preserves_the_family() {
    for name in bkw_core::families::BUILTIN_NAMES {
        let fam = bkw_core::families::builtin_family(name).unwrap().family;
        let back = ExpSumFamily::from_json_str(&fam.to_json_string()).unwrap();
        assert_eq!(back, fam, "round trip changed '{name}'");
    }
}

#[test]
fn malformed_json_reports_bad_json() {
    assert!(matches!(
        ExpSumFamily::from_json_str("{\"name\": 3}"),
        Err(PolyError::BadJson(_))
    ));
}

/// Strategy for a modest random polynomial with coefficients in the unit box.
fn arb_poly(max_len: usize) -> impl Strategy<Value = ComplexPoly> {
    prop::collection::vec((-1.0..1.0f64, -1.0..1.0f64), 0..max_len)
        .prop_map(|pairs| ComplexPoly::new(pairs.into_iter().map(|(re, im)| c(re, im)).collect()))
}

proptest! {
    /// Trimming exact zeros once leaves nothing more to trim.
    #[test]
    fn normalize_is_idempotent(p in arb_poly(9), tol in 1e-14..1e-6f64) {
        let mut once = p.clone();
        once.normalize(tol);
        let mut twice = once.clone();
        twice.normalize(tol);
        prop_assert_eq!(once, twice);
    }

    /// Multiplication commutes and distributes over addition — up to the
    /// reordering of floating-point accumulation, which moves coefficients
    /// by at most a few ulps.
    #[test]
    fn ring_identities(a in arb_poly(6), b in arb_poly(6), d in arb_poly(6)) {
        let ab = a.mul(&b);
        let ba = b.mul(&a);
        prop_assert_eq!(ab.degree(), ba.degree());
        prop_assert!(ab.sub(&ba).max_coeff_abs() < 1e-12);
        let lhs = a.mul(&b.add(&d));
        let rhs = a.mul(&b).add(&a.mul(&d));
        prop_assert!(lhs.sub(&rhs).max_coeff_abs() < 1e-12);
    }

    /// The expanded polynomial and the term-form sum are the same function.
    #[test]
    fn expansion_agrees_with_term_form(
        name in prop::sample::select(bkw_core::families::BUILTIN_NAMES.to_vec()),
        n in 2i64..12,
        re in -1.5..1.5f64,
        im in -1.5..1.5f64,
    ) {
        let fam = bkw_core::families::builtin_family(name).unwrap().family;
        let z = c(re, im);
        let expanded = fam.expand_at_index(n).unwrap().eval(z);
        let termwise = fam.eval_terms(n, z).unwrap();
        let scale = expanded.norm().max(termwise.norm()).max(1e-9);
        prop_assert!(
            (expanded - termwise).norm() / scale < 1e-9,
            "n = {}, z = {}: {} vs {}", n, z, expanded, termwise
        );
    }
}
