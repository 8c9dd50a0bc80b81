//! Integration tests for the built-in families: every term table must
//! reproduce its closed form across indices and sample points, the
//! deliberately miscopied variants must be caught, and the expanded
//! degrees must follow their closed-form formulas.

use bkw_core::families::{
    builtin_family, consistency_check, domination_inconsistent_variant, screl_inconsistent_variant,
    BUILTIN_NAMES,
};

#[test]
fn every_builtin_matches_its_closed_form() {
    for name in BUILTIN_NAMES {
        let spec = builtin_family(name).unwrap();
        let report = consistency_check(&spec, 1..=25, 20);
        assert!(
            report.pass,
            "family '{name}': worst relative deviation {:e} at n = {}, z = {}",
            report.max_rel_dev, report.worst_n, report.worst_point
        );
    }
}

#[test]
fn miscopied_term_tables_are_rejected() {
    let screl_bad = screl_inconsistent_variant();
    let report = consistency_check(&screl_bad, 1..=25, 20);
    assert!(
        !report.pass,
        "the miscopied strong-connectivity table slipped through: {report:?}"
    );

    let domination_bad = domination_inconsistent_variant();
    let report = consistency_check(&domination_bad, 1..=25, 20);
    assert!(
        !report.pass,
        "the miscopied domination table slipped through: {report:?}"
    );
}

#[test]
fn unknown_names_return_none() {
    assert!(builtin_family("no_such_family").is_none());
    assert!(builtin_family("F").is_none(), "lookup is case-sensitive");
    for name in BUILTIN_NAMES {
        assert!(builtin_family(name).is_some());
    }
}

#[test]
fn expanded_degrees_follow_their_formulas() {
    // (name, degree as a function of n)
    let formulas: [(&str, fn(i64) -> usize); 6] = [
        ("f", |n| n as usize + 1),
        ("g", |n| n as usize + 1),
        ("steele_cycle", |n| n as usize),
        ("independence", |n| n as usize),
        ("screl", |n| 2 * n as usize),
        ("domination", |n| 2 * n as usize),
    ];
    for (name, degree_of) in formulas {
        let fam = builtin_family(name).unwrap().family;
        for n in 2..=20 {
            let got = fam.expand_at_index(n).unwrap().degree().unwrap();
            assert_eq!(got, degree_of(n), "family '{name}', n = {n}");
        }
    }
}

#[test]
fn citations_name_the_combinatorial_origin() {
    // Each built-in states what it counts; the strings double as the only
    // place a human-readable provenance lives.
    for name in BUILTIN_NAMES {
        let spec = builtin_family(name).unwrap();
        assert!(!spec.citation.is_empty(), "family '{name}'");
    }
}
