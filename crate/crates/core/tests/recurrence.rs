//! Integration tests for the recurrence view of exponential-sum families:
//! the characteristic polynomial, generating the sequence `P_1, P_2, …`
//! from the recurrence alone, and the minimality criterion.

use bkw_core::families::{builtin_family, make_steele_cycle, BUILTIN_NAMES};
use bkw_core::poly::{ComplexPoly, ExpSumFamily, ExpTerm, NCoeffPoly};
use bkw_core::recurrence::{
    characteristic_poly, generate_sequence, minimality_check, to_recurrence, RecurrenceError,
};
use num_complex::Complex64;

fn real_poly(coeffs: &[f64]) -> ComplexPoly {
    ComplexPoly::from_real(coeffs)
}

#[test]
fn steele_cycle_characteristic_polynomial() {
    // λ's are t and 1 with α-degrees 0 and 1, so the characteristic
    // polynomial is (y − t)(y − 1)² = y³ − (t + 2)y² + (2t + 1)y − t.
    let fam = make_steele_cycle().family;
    let chi = characteristic_poly(&fam);
    let expected = [
        real_poly(&[0.0, -1.0]),  // −t
        real_poly(&[1.0, 2.0]),   // 2t + 1
        real_poly(&[-2.0, -1.0]), // −(t + 2)
        real_poly(&[1.0]),        // y³
    ];
    assert_eq!(chi.len(), expected.len());
    for (got, want) in chi.iter().zip(&expected) {
        let diff = got.sub(want);
        assert!(diff.max_coeff_abs() < 1e-12, "{got} vs {want}");
    }
}

#[test]
fn steele_cycle_recurrence_has_order_three() {
    let rec = to_recurrence(&make_steele_cycle().family).unwrap();
    assert_eq!(rec.order(), 3);
    // P_{n+3} = (t + 2)·P_{n+2} − (2t + 1)·P_{n+1} + t·P_n, stored as the
    // negated characteristic coefficients multiplying the most recent terms.
    assert_eq!(rec.f[0], real_poly(&[-2.0, -1.0]));
    assert_eq!(rec.f[1], real_poly(&[1.0, 2.0]));
    assert_eq!(rec.f[2], real_poly(&[0.0, -1.0]));
}

#[test]
fn generated_sequence_matches_direct_expansion_for_all_builtins() {
    for name in BUILTIN_NAMES {
        let fam = builtin_family(name).unwrap().family;
        let rec = to_recurrence(&fam).unwrap();
        let seq = generate_sequence(&rec, 25).unwrap();
        for (i, p) in seq.iter().enumerate() {
            let n = i as i64 + 1;
            let direct = fam.expand_at_index(n).unwrap();
            let scale = direct.max_coeff_abs().max(1e-12);
            let dev = p.sub(&direct).max_coeff_abs() / scale;
            assert!(
                dev < 1e-9,
                "family '{name}', n = {n}: relative deviation {dev:e}"
            );
        }
    }
}

#[test]
fn sequence_shorter_than_the_order_is_rejected() {
    let rec = to_recurrence(&make_steele_cycle().family).unwrap();
    assert!(matches!(
        generate_sequence(&rec, 2),
        Err(RecurrenceError::RangeTooShort { n_max: 2, order: 3 })
    ));
    assert_eq!(generate_sequence(&rec, 3).unwrap().len(), 3);
}

#[test]
fn builtins_satisfy_no_lower_order_recurrence() {
    for name in BUILTIN_NAMES {
        let fam = builtin_family(name).unwrap().family;
        let report = minimality_check(&fam);
        assert!(report.pass, "family '{name}': {report:?}");
    }
}

#[test]
fn duplicate_lambdas_fail_minimality() {
    let term = |a: f64| ExpTerm {
        alpha: NCoeffPoly::constant(real_poly(&[a])),
        lambda: real_poly(&[0.0, 1.0]),
    };
    // `raw` keeps the duplicate-λ pair that `new` would merge away.
    let fam = ExpSumFamily::raw("dup", vec![term(1.0), term(2.0)], 0).unwrap();
    let report = minimality_check(&fam);
    assert!(!report.pass);
    assert_eq!(report.duplicate_lambda_pairs, vec![(0, 1)]);
}

#[test]
fn zero_leading_alpha_fails_minimality() {
    // α(N; x) = 0·N + 1 with the zero leading coefficient kept explicitly
    // (the constructor would trim it, so build the struct directly).
    let alpha = NCoeffPoly {
        n_coeffs: vec![ComplexPoly::one(), ComplexPoly::zero()],
    };
    let fam = ExpSumFamily::raw(
        "padded",
        vec![ExpTerm {
            alpha,
            lambda: real_poly(&[0.0, 1.0]),
        }],
        0,
    )
    .unwrap();
    let report = minimality_check(&fam);
    assert!(!report.pass);
    assert_eq!(report.zero_leading_terms, vec![0]);
}

#[test]
fn recurrence_reproduces_values_not_just_coefficients() {
    // Spot-check the generated sequence pointwise at a complex argument.
    let fam = builtin_family("f").unwrap().family;
    let rec = to_recurrence(&fam).unwrap();
    let seq = generate_sequence(&rec, 12).unwrap();
    let z = Complex64::new(0.3, -0.8);
    for (i, p) in seq.iter().enumerate() {
        let n = i as i64 + 1;
        let direct = fam.eval_terms(n, z).unwrap();
        assert!(
            (p.eval(z) - direct).norm() < 1e-9 * direct.norm().max(1.0),
            "n = {n}"
        );
    }
}
