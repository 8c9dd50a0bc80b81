//! Built-in exponential-sum families and the dual-route consistency check.
//!
//! Each built-in comes as a [`FamilySpec`]: the term-form family (used by
//! the root finder and limit-set machinery) together with an independent
//! closed-form evaluator (`direct_eval`). The two routes are compared by
//! [`consistency_check`]; a term table that disagrees with its closed form
//! beyond floating-point noise is wrong, full stop. Deliberately miscopied
//! term tables are provided as fixtures so tests can confirm the check is
//! discriminating, not vacuous.

use crate::poly::{ComplexPoly, ExpSumFamily, ExpTerm, NCoeffPoly};
use num_complex::Complex64;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::ops::RangeInclusive;

/// A family plus an independent way to evaluate it and a human-readable
/// description of what it counts or measures.
pub struct FamilySpec {
    pub family: ExpSumFamily,
    /// Closed-form evaluation of `P_n(z)`, sharing nothing with the
    /// term-form route in [`ExpSumFamily::eval_terms`].
    pub direct_eval: Box<dyn Fn(i64, Complex64) -> Complex64 + Send + Sync>,
    pub citation: String,
}

impl std::fmt::Debug for FamilySpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("FamilySpec")
            .field("family", &self.family)
            .field("citation", &self.citation)
            .finish_non_exhaustive()
    }
}

fn real(coeffs: &[f64]) -> ComplexPoly {
    ComplexPoly::from_real(coeffs)
}

fn zpow(z: Complex64, k: i64) -> Complex64 {
    debug_assert!(k >= 0);
    z.powu(k as u32)
}

/// `P_n(x) = x^{n+1} − 2x^n + x^2 + n^2`: terms `(x−2)·x^n` and
/// `(n^2 + x^2)·1^n`. Has the isolated limit point `x = 2`.
pub fn make_f() -> FamilySpec {
    let family = ExpSumFamily::new(
        "f",
        vec![
            ExpTerm {
                alpha: NCoeffPoly::constant(real(&[-2.0, 1.0])),
                lambda: real(&[0.0, 1.0]),
            },
            ExpTerm {
                alpha: NCoeffPoly::new(vec![
                    real(&[0.0, 0.0, 1.0]),
                    ComplexPoly::zero(),
                    ComplexPoly::one(),
                ]),
                lambda: ComplexPoly::one(),
            },
        ],
        0,
    )
    .expect("built-in family is valid");
    FamilySpec {
        family,
        direct_eval: Box::new(|n, x| {
            zpow(x, n + 1) - 2.0 * zpow(x, n) + x * x + Complex64::new((n * n) as f64, 0.0)
        }),
        citation: "two-term model family x^{n+1} - 2x^n + x^2 + n^2 with an isolated limit \
                   point at x = 2"
            .into(),
    }
}

/// `P_n(x) = x^{n+1} − 2x^n + n^2x^2 + 5nx + 1`: same `λ`s as `f` but with a
/// full quadratic index-coefficient on the constant term. Isolated limit
/// points `x = 0` and `x = 2`.
pub fn make_g() -> FamilySpec {
    let family = ExpSumFamily::new(
        "g",
        vec![
            ExpTerm {
                alpha: NCoeffPoly::constant(real(&[-2.0, 1.0])),
                lambda: real(&[0.0, 1.0]),
            },
            ExpTerm {
                alpha: NCoeffPoly::new(vec![
                    ComplexPoly::one(),
                    real(&[0.0, 5.0]),
                    real(&[0.0, 0.0, 1.0]),
                ]),
                lambda: ComplexPoly::one(),
            },
        ],
        0,
    )
    .expect("built-in family is valid");
    FamilySpec {
        family,
        direct_eval: Box::new(|n, x| {
            let nf = n as f64;
            zpow(x, n + 1) - 2.0 * zpow(x, n)
                + Complex64::new(nf * nf, 0.0) * x * x
                + Complex64::new(5.0 * nf, 0.0) * x
                + Complex64::new(1.0, 0.0)
        }),
        citation: "two-term model family x^{n+1} - 2x^n + n^2 x^2 + 5nx + 1 with isolated \
                   limit points at x = 0 and x = 2"
            .into(),
    }
}

/// Steele polynomial of the `n`-cycle: `S_{C_n}(t) = t^n − nt + (n − 1)`.
/// Its zeros converge to the unit circle plus the point set at `t = 1`
/// carried by the curve itself.
pub fn make_steele_cycle() -> FamilySpec {
    let family = ExpSumFamily::new(
        "steele_cycle",
        vec![
            ExpTerm {
                alpha: NCoeffPoly::constant(ComplexPoly::one()),
                lambda: real(&[0.0, 1.0]),
            },
            ExpTerm {
                alpha: NCoeffPoly::new(vec![
                    ComplexPoly::constant(Complex64::new(-1.0, 0.0)),
                    real(&[1.0, -1.0]),
                ]),
                lambda: ComplexPoly::one(),
            },
        ],
        0,
    )
    .expect("built-in family is valid");
    FamilySpec {
        family,
        direct_eval: Box::new(|n, t| {
            zpow(t, n) - Complex64::new(n as f64, 0.0) * t + Complex64::new((n - 1) as f64, 0.0)
        }),
        citation: "Steele polynomial of the n-cycle, t^n - nt + (n - 1); expected minimum \
                   spanning tree length of C_n under i.i.d. uniform edge weights is its \
                   integral over [0, 1]"
            .into(),
    }
}

/// `I_n(x) = n(1+x)^n − (n − 1)`: a family whose zeros converge onto the
/// circle `|1 + x| = 1` alone — no isolated points, because both leading
/// index-coefficients are nonvanishing constants.
pub fn make_independence() -> FamilySpec {
    let family = ExpSumFamily::new(
        "independence",
        vec![
            ExpTerm {
                alpha: NCoeffPoly::new(vec![ComplexPoly::zero(), ComplexPoly::one()]),
                lambda: real(&[1.0, 1.0]),
            },
            ExpTerm {
                alpha: NCoeffPoly::new(vec![
                    ComplexPoly::one(),
                    ComplexPoly::constant(Complex64::new(-1.0, 0.0)),
                ]),
                lambda: ComplexPoly::one(),
            },
        ],
        0,
    )
    .expect("built-in family is valid");
    FamilySpec {
        family,
        direct_eval: Box::new(|n, x| {
            let one = Complex64::new(1.0, 0.0);
            Complex64::new(n as f64, 0.0) * zpow(one + x, n) - Complex64::new((n - 1) as f64, 0.0)
        }),
        citation: "independence-style family n(1+x)^n - (n-1); zeros converge onto the \
                   circle |1 + x| = 1"
            .into(),
    }
}

/// Strong-connectivity reliability family
/// `P_n(p) = 2p^n − p^{2n} + n(1−p)^2 p^{2n−2}` (edge survival probability
/// `p`), written over the effective index `N = n − 1`:
/// `2p·p^N + (N(1−p)^2 + (1−p)^2 − p^2)·(p^2)^N`.
/// Sanity anchor: `P_1(p) = 1` identically (a single vertex is always
/// strongly connected).
pub fn make_screl() -> FamilySpec {
    let family = ExpSumFamily::new(
        "screl",
        vec![
            ExpTerm {
                alpha: NCoeffPoly::constant(real(&[0.0, 2.0])),
                lambda: real(&[0.0, 1.0]),
            },
            ExpTerm {
                alpha: NCoeffPoly::new(vec![
                    // (1-p)^2 - p^2 = 1 - 2p
                    real(&[1.0, -2.0]),
                    // (1-p)^2
                    real(&[1.0, -2.0, 1.0]),
                ]),
                lambda: real(&[0.0, 0.0, 1.0]),
            },
        ],
        -1,
    )
    .expect("built-in family is valid");
    FamilySpec {
        family,
        direct_eval: Box::new(|n, p| {
            let one = Complex64::new(1.0, 0.0);
            let q = one - p;
            2.0 * zpow(p, n) - zpow(p, 2 * n)
                + Complex64::new(n as f64, 0.0) * q * q * zpow(p, 2 * n - 2)
        }),
        citation: "strong-connectivity reliability family 2p^n - p^{2n} + n(1-p)^2 p^{2n-2} \
                   in the edge survival probability p"
            .into(),
    }
}

/// Domination polynomial of the bipartite cocktail-party graph
/// (`K_{n,n}` minus a perfect matching):
/// `D_n(x) = ((1+x)^n − 1 − nx)^2 + 2x^n + 2nx^2((1+x)^{n-1} − 1) + nx^2`,
/// written over `N = n − 1` as four terms with
/// `λ ∈ {(1+x)^2, 1+x, x, 1}`.
pub fn make_domination() -> FamilySpec {
    let family = ExpSumFamily::new(
        "domination",
        vec![
            ExpTerm {
                alpha: NCoeffPoly::constant(real(&[1.0, 2.0, 1.0])),
                lambda: real(&[1.0, 2.0, 1.0]),
            },
            ExpTerm {
                alpha: NCoeffPoly::new(vec![real(&[-2.0, -4.0]), real(&[0.0, -2.0])]),
                lambda: real(&[1.0, 1.0]),
            },
            ExpTerm {
                alpha: NCoeffPoly::constant(real(&[0.0, 2.0])),
                lambda: real(&[0.0, 1.0]),
            },
            ExpTerm {
                alpha: NCoeffPoly::new(vec![
                    real(&[1.0, 2.0]),
                    real(&[0.0, 2.0, 1.0]),
                    real(&[0.0, 0.0, 1.0]),
                ]),
                lambda: ComplexPoly::one(),
            },
        ],
        -1,
    )
    .expect("built-in family is valid");
    FamilySpec {
        family,
        direct_eval: Box::new(|n, x| {
            let one = Complex64::new(1.0, 0.0);
            let nf = Complex64::new(n as f64, 0.0);
            let a = zpow(one + x, n) - one - nf * x;
            a * a + 2.0 * zpow(x, n) + 2.0 * nf * x * x * (zpow(one + x, n - 1) - one) + nf * x * x
        }),
        citation: "domination polynomial of the bipartite cocktail-party graph K_{n,n} \
                   minus a perfect matching"
            .into(),
    }
}

/// Deliberately miscopied screl term table (first coefficient carries an
/// extra power of `p`; the constant-term coefficient drops its `−p^2`
/// piece). Test fixture only: [`consistency_check`] must reject it.
pub fn screl_inconsistent_variant() -> FamilySpec {
    let family = ExpSumFamily::new(
        "screl_inconsistent",
        vec![
            ExpTerm {
                alpha: NCoeffPoly::constant(real(&[0.0, 0.0, 2.0])),
                lambda: real(&[0.0, 1.0]),
            },
            ExpTerm {
                alpha: NCoeffPoly::new(vec![real(&[1.0, -2.0, 1.0]), real(&[1.0, -2.0, 1.0])]),
                lambda: real(&[0.0, 0.0, 1.0]),
            },
        ],
        -1,
    )
    .expect("fixture family is structurally valid");
    let reference = make_screl();
    FamilySpec {
        family,
        direct_eval: reference.direct_eval,
        citation: "miscopied screl term table; fixture proving the consistency check rejects \
                   a wrong table"
            .into(),
    }
}

/// Deliberately miscopied domination term table (wrong `N`-coefficients on
/// the `(1+x)^N` and `1^N` terms, taken verbatim from a faulty rewrite).
/// Test fixture only: [`consistency_check`] must reject it.
pub fn domination_inconsistent_variant() -> FamilySpec {
    let family = ExpSumFamily::new(
        "domination_inconsistent",
        vec![
            ExpTerm {
                alpha: NCoeffPoly::constant(real(&[1.0, 2.0, 1.0])),
                lambda: real(&[1.0, 2.0, 1.0]),
            },
            ExpTerm {
                alpha: NCoeffPoly::new(vec![
                    // 2x^2 - 4x - 4
                    real(&[-4.0, -4.0, 2.0]),
                    // 2x^2 - 2x - 2
                    real(&[-2.0, -2.0, 2.0]),
                ]),
                lambda: real(&[1.0, 1.0]),
            },
            ExpTerm {
                alpha: NCoeffPoly::constant(real(&[0.0, 2.0])),
                lambda: real(&[0.0, 1.0]),
            },
            ExpTerm {
                alpha: NCoeffPoly::new(vec![real(&[0.0, 0.0, 3.0]), real(&[0.0, 0.0, 4.0])]),
                lambda: ComplexPoly::one(),
            },
        ],
        -1,
    )
    .expect("fixture family is structurally valid");
    let reference = make_domination();
    FamilySpec {
        family,
        direct_eval: reference.direct_eval,
        citation: "miscopied domination term table; fixture proving the consistency check \
                   rejects a wrong table"
            .into(),
    }
}

/// Names accepted by [`builtin_family`], in display order.
pub const BUILTIN_NAMES: [&str; 6] = [
    "f",
    "g",
    "steele_cycle",
    "independence",
    "screl",
    "domination",
];

/// Look up a built-in family by name.
pub fn builtin_family(name: &str) -> Option<FamilySpec> {
    match name {
        "f" => Some(make_f()),
        "g" => Some(make_g()),
        "steele_cycle" => Some(make_steele_cycle()),
        "independence" => Some(make_independence()),
        "screl" => Some(make_screl()),
        "domination" => Some(make_domination()),
        _ => None,
    }
}

/// Result of [`consistency_check`].
#[derive(Debug, Clone, PartialEq)]
pub struct ConsistencyReport {
    pub max_rel_dev: f64,
    pub worst_n: i64,
    pub worst_point: Complex64,
    pub pass: bool,
}

/// Compares term-form evaluation against the closed form at `sample_count`
/// seeded-random points per index and reports the worst relative deviation
/// (relative to `max(|direct|, 1e-12)`); passes below `1e-9`.
///
/// Samples are drawn uniformly from the disk `|z − 1| ≤ 0.4`. Away from
/// that disk both routes still agree exactly in exact arithmetic — they are
/// the same polynomial — but the closed forms suffer catastrophic
/// cancellation near `z = −1` at large `n` (terms of size `~3^n` cancelling
/// to `O(1)`), which would measure floating-point noise instead of the
/// identity. Twenty-ish points per index still pin down the polynomial
/// identity: two distinct polynomials of bounded degree cannot agree on
/// that many random points.
pub fn consistency_check(
    spec: &FamilySpec,
    n_range: RangeInclusive<i64>,
    sample_count: usize,
) -> ConsistencyReport {
    let mut rng = ChaCha8Rng::seed_from_u64(0x636f_6e73);
    let mut report = ConsistencyReport {
        max_rel_dev: 0.0,
        worst_n: *n_range.start(),
        worst_point: Complex64::new(1.0, 0.0),
        pass: true,
    };
    for n in n_range {
        for _ in 0..sample_count {
            let radius = 0.4 * rng.gen::<f64>().sqrt();
            let angle = rng.gen::<f64>() * std::f64::consts::TAU;
            let z = Complex64::new(1.0, 0.0) + Complex64::from_polar(radius, angle);
            let term_route = spec.family.eval_terms(n, z).expect("index in range");
            let direct = (spec.direct_eval)(n, z);
            let rel = (term_route - direct).norm() / direct.norm().max(1e-12);
            if rel > report.max_rel_dev {
                report.max_rel_dev = rel;
                report.worst_n = n;
                report.worst_point = z;
            }
        }
    }
    report.pass = report.max_rel_dev < 1e-9;
    report
}
