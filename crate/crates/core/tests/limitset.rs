//! Integration tests for limit-set extraction: dominance classification,
//! isolated limit points, persistent zeros, equimodular curves, the
//! degeneracy guard, and the JSON round trip.

use bkw_core::families::{builtin_family, make_g, make_screl, make_steele_cycle};
use bkw_core::limitset::{
    dominant_index, equimodular_curves, limit_set, nondegeneracy_check, persistent_zeros,
    Dominance, LimitSet, LimitSetError, Window, DEFAULT_PROBES, ISOLATED_TIE_TOL, TIE_TOL,
};
use bkw_core::poly::{ComplexPoly, ExpSumFamily, ExpTerm, NCoeffPoly};
use num_complex::Complex64;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn window(grid: usize) -> Window {
    Window {
        grid,
        ..Window::default()
    }
}

#[test]
fn window_validation_rejects_degenerate_rectangles() {
    let mut w = Window::default();
    w.re_min = w.re_max;
    assert!(matches!(w.validate(), Err(LimitSetError::InvalidWindow)));

    let mut w = Window::default();
    w.grid = 8;
    assert!(matches!(w.validate(), Err(LimitSetError::InvalidWindow)));

    assert!(Window::default().validate().is_ok());
}

#[test]
fn dominance_classification_at_hand_checked_points() {
    // screl: |λ| moduli at p = 0.5 are {0.5, 0.25} — the linear term wins.
    let screl = make_screl().family;
    assert_eq!(
        dominant_index(&screl, c(0.5, 0.0), TIE_TOL),
        Dominance::Single(0)
    );

    // cycle family: |t| = |1| on the unit circle — a tie at z = i.
    let steele = make_steele_cycle().family;
    assert_eq!(
        dominant_index(&steele, c(0.0, 1.0), TIE_TOL),
        Dominance::Tie(vec![0, 1])
    );

    // A single-term family dominates trivially everywhere.
    let single = ExpSumFamily::new(
        "single",
        vec![ExpTerm {
            alpha: NCoeffPoly::constant(ComplexPoly::one()),
            lambda: ComplexPoly::from_real(&[0.0, 1.0]),
        }],
        0,
    )
    .unwrap();
    assert_eq!(
        dominant_index(&single, c(0.7, -0.2), TIE_TOL),
        Dominance::Single(0)
    );
}

#[test]
fn isolated_points_of_the_builtin_families() {
    // (family, expected (point, term) pairs) — exact rational locations.
    let expect: [(&str, Vec<(Complex64, usize)>); 5] = [
        ("f", vec![(c(2.0, 0.0), 0)]),
        ("g", vec![(c(0.0, 0.0), 1), (c(2.0, 0.0), 0)]),
        ("steele_cycle", vec![]),
        ("independence", vec![]),
        ("screl", vec![(c(0.0, 0.0), 0)]),
    ];
    for (name, want) in expect {
        let fam = builtin_family(name).unwrap().family;
        let set = limit_set(&fam, &window(128)).unwrap();
        assert_eq!(
            set.isolated.len(),
            want.len(),
            "family '{name}': {:?}",
            set.isolated
        );
        for ((got_z, got_i), (want_z, want_i)) in set.isolated.iter().zip(&want) {
            assert!(
                (got_z - want_z).norm() < 1e-6,
                "family '{name}': {got_z} vs {want_z}"
            );
            assert_eq!(got_i, want_i, "family '{name}'");
        }
    }
}

#[test]
fn persistent_zeros_found_only_for_screl() {
    let screl = make_screl().family;
    let zs = persistent_zeros(&screl, &DEFAULT_PROBES).unwrap();
    assert_eq!(zs.len(), 1, "{zs:?}");
    assert!(zs[0].norm() < 1e-7, "expected the origin, got {}", zs[0]);

    for name in ["f", "g", "steele_cycle", "independence"] {
        let fam = builtin_family(name).unwrap().family;
        let zs = persistent_zeros(&fam, &DEFAULT_PROBES).unwrap();
        assert!(zs.is_empty(), "family '{name}': {zs:?}");
    }
}

#[test]
fn probe_sets_need_a_coprime_pair() {
    let fam = make_screl().family;
    assert!(matches!(
        persistent_zeros(&fam, &[17]),
        Err(LimitSetError::InvalidProbes)
    ));
    assert!(matches!(
        persistent_zeros(&fam, &[4, 8, 12]),
        Err(LimitSetError::InvalidProbes)
    ));
    assert!(persistent_zeros(&fam, &[4, 9]).is_ok());
}

#[test]
fn cycle_family_curve_is_the_unit_circle() {
    // |t| = |1| exactly on the unit circle; every extracted point should
    // sit within the edge-bisection tolerance of it.
    let fam = make_steele_cycle().family;
    for grid in [64, 128] {
        let curves = equimodular_curves(&fam, &window(grid)).unwrap();
        assert!(!curves.is_empty());
        let mut worst = 0.0f64;
        for curve in &curves {
            assert_eq!(curve.pair, (0, 1));
            for z in &curve.points {
                worst = worst.max((z.norm() - 1.0).abs());
            }
        }
        assert!(
            worst < 1e-3,
            "grid {grid}: worst unit-circle residual {worst:e}"
        );
    }
}

#[test]
fn finer_grids_refine_the_same_curve() {
    // Every coarse-grid curve point must lie near the fine-grid curve —
    // refinement may add detail but must not move the set.
    let fam = make_steele_cycle().family;
    let coarse = equimodular_curves(&fam, &window(64)).unwrap();
    let fine = equimodular_curves(&fam, &window(128)).unwrap();
    let fine_points: Vec<Complex64> = fine.iter().flat_map(|cv| cv.points.clone()).collect();
    let fine_diag = window(128).cell_diagonal();
    for curve in &coarse {
        for z in &curve.points {
            let d = fine_points
                .iter()
                .map(|w| (z - w).norm())
                .fold(f64::INFINITY, f64::min);
            assert!(
                d < 2.0 * fine_diag,
                "coarse point {z} is {d:e} from the fine curve"
            );
        }
    }
}

#[test]
fn curve_extraction_is_deterministic() {
    let fam = make_g().family;
    let a = equimodular_curves(&fam, &window(128)).unwrap();
    let b = equimodular_curves(&fam, &window(128)).unwrap();
    assert_eq!(a, b);
}

#[test]
fn proportional_lambdas_are_flagged_degenerate() {
    // λ₂ = 2·λ₁ keeps |λ₁/λ₂| constant everywhere: the equimodular
    // machinery would predict an empty or everything set, so the guard
    // must flag the pair.
    let fam = ExpSumFamily::new(
        "proportional",
        vec![
            ExpTerm {
                alpha: NCoeffPoly::constant(ComplexPoly::one()),
                lambda: ComplexPoly::from_real(&[0.0, 1.0]),
            },
            ExpTerm {
                alpha: NCoeffPoly::constant(ComplexPoly::one()),
                lambda: ComplexPoly::from_real(&[0.0, 2.0]),
            },
        ],
        0,
    )
    .unwrap();
    let report = nondegeneracy_check(&fam, 32).unwrap();
    assert!(!report.pass);
    assert_eq!(report.degenerate_pairs, vec![(0, 1)]);

    assert!(matches!(
        nondegeneracy_check(&fam, 4),
        Err(LimitSetError::TooFewSamples)
    ));

    // All built-ins pass the same guard.
    for name in bkw_core::families::BUILTIN_NAMES {
        let builtin = builtin_family(name).unwrap().family;
        assert!(
            nondegeneracy_check(&builtin, 32).unwrap().pass,
            "family '{name}'"
        );
    }
}

#[test]
fn tie_margin_constants_are_ordered() {
    // The isolated-point test runs at computed root locations, which carry
    // square-root-of-epsilon placement error for multiple roots; its margin
    // must therefore be wider than the curve-retention margin used at exact
    // grid points.
    assert!(ISOLATED_TIE_TOL > TIE_TOL);
}

#[test]
fn json_round_trip_preserves_the_set() {
    let fam = make_g().family;
    let set = limit_set(&fam, &window(128)).unwrap();
    let text = serde_json::to_string(&set.to_json()).unwrap();
    let parsed: bkw_core::limitset::LimitSetJson = serde_json::from_str(&text).unwrap();
    let back = LimitSet::from_json(&parsed);
    assert_eq!(back, set);
}
