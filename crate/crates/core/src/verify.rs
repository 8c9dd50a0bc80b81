//! Empirical checks that computed zeros actually crowd onto the predicted
//! limit set as the index grows, plus the two-term balance residual.

use crate::limitset::{limit_set, LimitSet, LimitSetError};
use crate::poly::{ExpSumFamily, PolyError};
use crate::rootfind::{family_roots, RootFindError, RootSet, DEFAULT_FAMILY_TOL};
use num_complex::Complex64;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum VerifyError {
    #[error("balance residual needs exactly two terms, family has {0}")]
    NotTwoTerms(usize),
    #[error("effective index must be >= 1, got {0}")]
    IndexTooSmall(i64),
    #[error(transparent)]
    Root(#[from] RootFindError),
    #[error(transparent)]
    Limit(#[from] LimitSetError),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// Distance summary for the zeros of one index.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NDistance {
    pub n: i64,
    pub max_dist: f64,
    pub mean_dist: f64,
}

/// How the zeros of `P_n` approach the limit set over a range of indices.
#[derive(Debug, Clone)]
pub struct ConvergenceReport {
    pub per_n: Vec<NDistance>,
    /// Every curve point of the limit set paired with the distance to the
    /// nearest zero of `P_{n_to}` — detects curve portions the zeros never
    /// visit (which would indicate an over-predicted set).
    pub coverage: Vec<(Complex64, f64)>,
    /// `max_dist` at `n_to` divided by `max_dist` at `n_from`; below 1
    /// means the worst straggler is moving toward the set.
    pub trend: f64,
    /// The limit set the distances were measured against (recomputed on an
    /// enlarged window when zeros fell outside the supplied one).
    pub limit_set: LimitSet,
}

fn point_segment_distance(p: Complex64, a: Complex64, b: Complex64) -> f64 {
    let ab = b - a;
    let len2 = ab.norm_sqr();
    if len2 == 0.0 {
        return (p - a).norm();
    }
    let t = ((p - a).re * ab.re + (p - a).im * ab.im) / len2;
    let t = t.clamp(0.0, 1.0);
    (p - (a + ab * t)).norm()
}

/// Distance from `z` to the nearest feature of the limit set: isolated
/// points, persistent zeros, and curve polylines (measured to segments, not
/// just vertices; one-point polylines are measured as points).
pub fn distance_to_limit_set(z: Complex64, set: &LimitSet) -> f64 {
    let mut best = f64::INFINITY;
    for &(p, _) in &set.isolated {
        best = best.min((z - p).norm());
    }
    for &p in &set.persistent {
        best = best.min((z - p).norm());
    }
    for curve in &set.curves {
        match curve.points.as_slice() {
            [] => {}
            [single] => best = best.min((z - single).norm()),
            points => {
                for pair in points.windows(2) {
                    best = best.min(point_segment_distance(z, pair[0], pair[1]));
                }
            }
        }
    }
    best
}

/// Computes the zeros of `P_n` for every `n` in `[n_from, n_to]` and
/// measures their distances to `limit`. If any zero falls outside the
/// window `limit` was computed on, the limit set is recomputed once on the
/// bounding box of window ∪ zeros with a 5% margin (same grid), so distant
/// zeros are measured against the set they are actually near rather than
/// against a truncation artifact.
pub fn convergence_report(
    family: &ExpSumFamily,
    n_from: i64,
    n_to: i64,
    limit: &LimitSet,
) -> Result<ConvergenceReport, VerifyError> {
    let roots_by_n: Vec<RootSet> = family_roots(family, n_from, n_to, DEFAULT_FAMILY_TOL)?;

    let mut set = limit.clone();
    let outside = roots_by_n
        .iter()
        .flat_map(|rs| rs.roots.iter())
        .any(|&z| !set.window.contains(z));
    if outside {
        let mut w = set.window;
        for rs in &roots_by_n {
            for &z in &rs.roots {
                w.re_min = w.re_min.min(z.re);
                w.re_max = w.re_max.max(z.re);
                w.im_min = w.im_min.min(z.im);
                w.im_max = w.im_max.max(z.im);
            }
        }
        let (margin_re, margin_im) = (0.05 * (w.re_max - w.re_min), 0.05 * (w.im_max - w.im_min));
        w.re_min -= margin_re;
        w.re_max += margin_re;
        w.im_min -= margin_im;
        w.im_max += margin_im;
        set = limit_set(family, &w)?;
    }

    let per_n: Vec<NDistance> = roots_by_n
        .iter()
        .map(|rs| {
            let dists: Vec<f64> = rs
                .roots
                .iter()
                .map(|&z| distance_to_limit_set(z, &set))
                .collect();
            let max_dist = dists.iter().copied().fold(0.0, f64::max);
            let mean_dist = if dists.is_empty() {
                0.0
            } else {
                dists.iter().sum::<f64>() / dists.len() as f64
            };
            NDistance {
                n: rs.n,
                max_dist,
                mean_dist,
            }
        })
        .collect();

    let trend = per_n
        .last()
        .map_or(f64::NAN, |last| last.max_dist / per_n[0].max_dist);

    let final_roots = &roots_by_n.last().expect("nonempty range").roots;
    let coverage: Vec<(Complex64, f64)> = set
        .curves
        .iter()
        .flat_map(|c| c.points.iter())
        .map(|&p| {
            let d = final_roots
                .iter()
                .map(|&z| (z - p).norm())
                .fold(f64::INFINITY, f64::min);
            (p, d)
        })
        .collect();

    Ok(ConvergenceReport {
        per_n,
        coverage,
        trend,
        limit_set: set,
    })
}

/// The two-term balance residual
/// `| |α₁(N;z)|^{1/N}·|λ₁(z)| − |α₂(N;z)|^{1/N}·|λ₂(z)| |` at effective
/// index `N = n + index_offset`. At an exact zero of `P_n` the two sides
/// balance exactly (the terms sum to zero, so their moduli agree and the
/// `N`-th roots do too); small residuals at computed zeros are independent
/// evidence that they really are zeros of the term-form family.
pub fn converse_residual(family: &ExpSumFamily, z: Complex64, n: i64) -> Result<f64, VerifyError> {
    if family.terms.len() != 2 {
        return Err(VerifyError::NotTwoTerms(family.terms.len()));
    }
    let big_n = family.effective_index(n)?;
    if big_n < 1 {
        return Err(VerifyError::IndexTooSmall(big_n));
    }
    let side = |idx: usize| -> f64 {
        let a = family.terms[idx].alpha.eval(big_n, z).norm();
        let l = family.terms[idx].lambda.eval(z).norm();
        a.powf(1.0 / big_n as f64) * l
    };
    Ok((side(0) - side(1)).abs())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{make_domination, make_steele_cycle};

    #[test]
    fn segment_distance_projects_and_clamps() {
        let a = Complex64::new(0.0, 0.0);
        let b = Complex64::new(2.0, 0.0);
        assert!((point_segment_distance(Complex64::new(1.0, 1.0), a, b) - 1.0).abs() < 1e-15);
        assert!((point_segment_distance(Complex64::new(3.0, 0.0), a, b) - 1.0).abs() < 1e-15);
        assert!((point_segment_distance(Complex64::new(-2.0, 0.0), a, b) - 2.0).abs() < 1e-15);
    }

    #[test]
    fn balance_residual_rejects_four_terms() {
        let spec = make_domination();
        let err = converse_residual(&spec.family, Complex64::new(0.5, 0.5), 10);
        assert!(matches!(err, Err(VerifyError::NotTwoTerms(4))));
    }

    #[test]
    fn balance_residual_vanishes_at_a_known_zero() {
        // S_{C_3}(t) = t^3 - 3t + 2 has the simple zero t = -2.
        let spec = make_steele_cycle();
        let r = converse_residual(&spec.family, Complex64::new(-2.0, 0.0), 3).unwrap();
        assert!(r < 1e-12, "residual {r}");
    }
}
