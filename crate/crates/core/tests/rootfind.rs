//! Integration tests for simultaneous root finding and the winding-number
//! zero counter: hand-checkable root sets, degenerate inputs, the
//! term-form family route at indices where expanded coefficients are huge,
//! and the argument-principle count against known interior zeros.

use bkw_core::families::{builtin_family, make_steele_cycle};
use bkw_core::poly::ComplexPoly;
use bkw_core::rootfind::{
    all_roots, family_roots, family_roots_at, winding_count, RootFindError, DEFAULT_FAMILY_TOL,
    DEFAULT_ROOT_TOL,
};
use num_complex::Complex64;
use proptest::prelude::*;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn real_poly(coeffs: &[f64]) -> ComplexPoly {
    ComplexPoly::from_real(coeffs)
}

/// Greedy match of computed roots against expected ones; returns the worst
/// pairing distance.
fn match_roots(mut got: Vec<Complex64>, expected: &[Complex64]) -> f64 {
    assert_eq!(got.len(), expected.len(), "root count mismatch");
    let mut worst = 0.0f64;
    for &want in expected {
        let (i, dist) = got
            .iter()
            .enumerate()
            .map(|(i, &g)| (i, (g - want).norm()))
            .min_by(|a, b| a.1.total_cmp(&b.1))
            .expect("nonempty");
        worst = worst.max(dist);
        got.swap_remove(i);
    }
    worst
}

#[test]
fn quadratic_with_known_complex_pair() {
    // z^2 + 1 = (z − i)(z + i)
    let rs = all_roots(&real_poly(&[1.0, 0.0, 1.0]), DEFAULT_ROOT_TOL).unwrap();
    let worst = match_roots(rs.roots, &[c(0.0, 1.0), c(0.0, -1.0)]);
    assert!(worst < 1e-12, "worst pairing distance {worst:e}");
}

#[test]
fn distinct_real_roots_of_a_cubic() {
    // (z − 1)(z − 2)(z + 3) = z^3 − 7z + 6
    let rs = all_roots(&real_poly(&[6.0, -7.0, 0.0, 1.0]), DEFAULT_ROOT_TOL).unwrap();
    let worst = match_roots(rs.roots, &[c(1.0, 0.0), c(2.0, 0.0), c(-3.0, 0.0)]);
    assert!(worst < 1e-10, "worst pairing distance {worst:e}");
    for r in rs.residuals {
        assert!(r < DEFAULT_ROOT_TOL);
    }
}

#[test]
fn double_root_is_found_to_square_root_precision() {
    // (z − 1)² has a condition exponent of ½: placement error ~√ε, so ask
    // only for 1e-5 on position while residuals stay tiny.
    let rs = all_roots(&real_poly(&[1.0, -2.0, 1.0]), DEFAULT_ROOT_TOL).unwrap();
    let worst = match_roots(rs.roots, &[c(1.0, 0.0), c(1.0, 0.0)]);
    assert!(worst < 1e-5, "double root off by {worst:e}");
}

#[test]
fn origin_roots_are_deflated_exactly() {
    // z^3(z − 2) = z^4 − 2z^3: three exact zeros at the origin.
    let rs = all_roots(&real_poly(&[0.0, 0.0, 0.0, -2.0, 1.0]), DEFAULT_ROOT_TOL).unwrap();
    let at_origin = rs.roots.iter().filter(|z| z.norm() == 0.0).count();
    assert_eq!(at_origin, 3);
    let worst = match_roots(
        rs.roots,
        &[c(0.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(2.0, 0.0)],
    );
    assert!(worst < 1e-12);
}

#[test]
fn degenerate_polynomials_are_rejected() {
    assert!(matches!(
        all_roots(&ComplexPoly::zero(), DEFAULT_ROOT_TOL),
        Err(RootFindError::ZeroPolynomial)
    ));
    assert!(matches!(
        all_roots(&ComplexPoly::constant(c(3.0, 0.0)), DEFAULT_ROOT_TOL),
        Err(RootFindError::ConstantPolynomial)
    ));
}

#[test]
fn empty_family_range_is_rejected() {
    let fam = make_steele_cycle().family;
    assert!(matches!(
        family_roots(&fam, 5, 4, DEFAULT_FAMILY_TOL),
        Err(RootFindError::EmptyRange { n_from: 5, n_to: 4 })
    ));
}

#[test]
fn steele_cycle_roots_at_small_index() {
    // t³ − 3t + 2 = (t − 1)²(t + 2)
    let fam = make_steele_cycle().family;
    let rs = family_roots_at(&fam, 3, DEFAULT_FAMILY_TOL).unwrap();
    let worst = match_roots(rs.roots, &[c(1.0, 0.0), c(1.0, 0.0), c(-2.0, 0.0)]);
    assert!(worst < 1e-5, "worst pairing distance {worst:e}");
}

#[test]
fn family_sweep_root_counts_track_the_expanded_degree() {
    for name in ["f", "g", "independence", "screl"] {
        let fam = builtin_family(name).unwrap().family;
        let sweep = family_roots(&fam, 2, 12, DEFAULT_FAMILY_TOL).unwrap();
        for rs in sweep {
            let degree = fam.expand_at_index(rs.n).unwrap().degree().unwrap();
            assert_eq!(
                rs.roots.len(),
                degree,
                "family '{name}', n = {}: {} roots for degree {degree}",
                rs.n,
                rs.roots.len()
            );
        }
    }
}

#[test]
fn large_index_roots_survive_huge_expanded_coefficients() {
    // At n = 40 the expanded coefficients of these families span ~20
    // orders of magnitude; the term-form evaluation route must still place
    // every root with a residual at the sweep tolerance.
    for name in ["f", "domination"] {
        let fam = builtin_family(name).unwrap().family;
        let rs = family_roots_at(&fam, 40, DEFAULT_FAMILY_TOL).unwrap();
        let degree = fam.expand_at_index(40).unwrap().degree().unwrap();
        assert_eq!(rs.roots.len(), degree, "family '{name}'");
        let worst = rs.residuals.iter().copied().fold(0.0f64, f64::max);
        assert!(worst < DEFAULT_FAMILY_TOL, "family '{name}': {worst:e}");
    }
}

#[test]
fn winding_counts_all_roots_of_a_power() {
    // z^5 has a five-fold zero at the origin.
    let p = real_poly(&[0.0, 0.0, 0.0, 0.0, 0.0, 1.0]);
    assert_eq!(winding_count(&p, c(0.0, 0.0), 1.0).unwrap(), 5);
}

#[test]
fn winding_sees_exactly_the_enclosed_root() {
    // t³ − 3t + 2 has roots {1, 1, −2}; a radius-½ circle at −2 encloses
    // only the simple root.
    let p = real_poly(&[2.0, -3.0, 0.0, 1.0]);
    assert_eq!(winding_count(&p, c(-2.0, 0.0), 0.5).unwrap(), 1);
    // Around the double root at 1 the count is 2.
    assert_eq!(winding_count(&p, c(1.0, 0.0), 0.5).unwrap(), 2);
    // A circle through neither root.
    assert_eq!(winding_count(&p, c(0.0, 2.0), 0.5).unwrap(), 0);
}

#[test]
fn winding_rejects_a_root_on_the_contour() {
    // z² − 1 with the contour passing through z = 1.
    let p = real_poly(&[-1.0, 0.0, 1.0]);
    assert!(matches!(
        winding_count(&p, c(0.0, 0.0), 1.0),
        Err(RootFindError::RootOnContour)
    ));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// Over a circle enclosing every root (radius from the Cauchy bound),
    /// the winding number equals the degree.
    #[test]
    fn winding_equals_degree_on_an_enclosing_circle(
        pairs in prop::collection::vec((-1.0..1.0f64, -1.0..1.0f64), 1..8),
    ) {
        let mut coeffs: Vec<Complex64> =
            pairs.into_iter().map(|(re, im)| c(re, im)).collect();
        coeffs.push(c(1.0, 0.0)); // monic, so the degree is the list length − 1
        let p = ComplexPoly::new(coeffs);
        let degree = p.degree().unwrap();
        let bound = 1.0 + p
            .coeffs
            .iter()
            .take(degree)
            .map(|q| q.norm())
            .fold(0.0f64, f64::max);
        let count = winding_count(&p, c(0.0, 0.0), bound + 0.25).unwrap();
        prop_assert_eq!(count as usize, degree);
    }

    /// Residuals reported by the solver really are the relative values of
    /// the polynomial at the returned points.
    #[test]
    fn residuals_are_honest(
        pairs in prop::collection::vec((-1.0..1.0f64, -1.0..1.0f64), 2..7),
    ) {
        let mut coeffs: Vec<Complex64> =
            pairs.into_iter().map(|(re, im)| c(re, im)).collect();
        coeffs.push(c(1.0, 0.0));
        let p = ComplexPoly::new(coeffs);
        let rs = all_roots(&p, DEFAULT_ROOT_TOL).unwrap();
        let scale = p.max_coeff_abs();
        for (z, &r) in rs.roots.iter().zip(&rs.residuals) {
            let actual = p.eval(*z).norm() / scale;
            // The solver evaluates through the same Horner route, so the
            // two numbers agree up to fresh rounding.
            prop_assert!((actual - r).abs() <= 1e-12 + 0.5 * (actual + r));
        }
    }
}
