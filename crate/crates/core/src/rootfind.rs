//! Simultaneous complex root finding and argument-principle zero counting.
//!
//! [`all_roots`] implements the classic pipeline for a dense coefficient
//! list: strip exact-zero low-order coefficients (deflating roots at the
//! origin), start all remaining roots on a circle whose radius is a
//! coefficient root bound, run Ehrlich–Aberth simultaneous corrections to
//! joint convergence, and finish with a local Newton polish.
//!
//! [`family_roots`] runs the *same* iteration but evaluates the polynomial
//! and its derivative through the family's term form `Σ α_i(N;z) λ_i(z)^N`
//! instead of the expanded coefficients. This is not an optimization but a
//! conditioning requirement: at indices around `n = 40` the expanded
//! coefficients of some built-in families reach `1e23` while the roots of
//! interest sit where the polynomial's value is smaller than the
//! floating-point noise of coefficient-form evaluation, so *no* method
//! driven by the expanded coefficients can place those roots to `1e-8`.
//! Each term-form factor is a low-degree Horner evaluation and a stable
//! binary power, so the term form's noise floor near the roots is smaller by
//! many orders of magnitude. The expanded polynomial still supplies the
//! degree, the origin-root deflation count, and the initial-guess radius.
//!
//! Convergence of an individual root is declared when the Aberth step is
//! below `1e-14·(1+|z|)` or when the evaluated `|P(z)|` falls under a
//! running-error noise floor proportional to `eps · Σ |terms|`; residuals
//! are reported relative to the largest expanded coefficient.

use crate::poly::{ComplexPoly, ExpSumFamily, NCoeffPoly, PolyError};
use num_complex::Complex64;
use rayon::prelude::*;
use thiserror::Error;

/// Default relative residual tolerance for root acceptance.
pub const DEFAULT_ROOT_TOL: f64 = 1e-10;

/// Default residual tolerance for whole-family index sweeps.
///
/// Residuals are measured as `|P_n(root)| / max|coeff|`, and that
/// normalization is not scale-invariant: at a straggler root with `|z| > 1`
/// (the `x = 2` zero that several built-in families keep for every index), a
/// *perfectly placed* double-precision root still evaluates to about
/// `|P'(z)| · ulp(|z|)`, which at index 40 measures around `1e-7` of the
/// largest expanded coefficient. No double-precision iterate can report less,
/// so sweeps accept at `1e-6`. The bound still pins such roots to within a
/// fraction of one ulp of displacement, because the same `|P'|` that raises
/// the evaluation floor also makes the residual extremely sensitive to
/// position.
pub const DEFAULT_FAMILY_TOL: f64 = 1e-6;

/// Maximum simultaneous-correction sweeps before giving up.
pub const MAX_ABERTH_ITERATIONS: usize = 200;

const EPS: f64 = f64::EPSILON;

#[derive(Debug, Error)]
pub enum RootFindError {
    #[error("cannot find roots of the zero polynomial")]
    ZeroPolynomial,
    #[error("polynomial has degree 0 (no roots)")]
    ConstantPolynomial,
    #[error("root iteration did not reach tolerance; worst relative residual {worst_residual:e}")]
    NonConvergence { worst_residual: f64 },
    #[error("root finding failed at family index n = {n}: {source}")]
    AtIndex {
        n: i64,
        #[source]
        source: Box<RootFindError>,
    },
    #[error("empty index range: n_from = {n_from} > n_to = {n_to}")]
    EmptyRange { n_from: i64, n_to: i64 },
    #[error("a root lies on (or within noise of) the winding contour")]
    RootOnContour,
    #[error("winding contour sampling exceeded the refinement cap")]
    ContourSamplingExceeded,
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// All zeros of one polynomial: `roots.len()` equals the degree (multiple
/// roots repeated), and `residuals[i] = |P(roots[i])| / max|coeff|`.
#[derive(Debug, Clone, PartialEq)]
pub struct RootSet {
    pub n: i64,
    pub roots: Vec<Complex64>,
    pub residuals: Vec<f64>,
}

/// What the Aberth driver needs at a point: the (undeflated) polynomial
/// value, the logarithmic derivative `q'/q` of the origin-deflated
/// polynomial `q(z) = P(z)/z^m`, and an absolute noise floor for the value.
trait AberthEval: Sync {
    fn eval(&self, z: Complex64) -> (Complex64, Complex64, f64);
}

/// Coefficient-form evaluator over the deflated coefficients `q`.
struct CoeffEval<'a> {
    q: &'a [Complex64],
    dq: Vec<Complex64>,
    noise_factor: f64,
}

impl<'a> CoeffEval<'a> {
    fn new(q: &'a [Complex64]) -> Self {
        let dq = q
            .iter()
            .enumerate()
            .skip(1)
            .map(|(j, c)| c * j as f64)
            .collect();
        CoeffEval {
            q,
            dq,
            noise_factor: 8.0 * (q.len() as f64 + 4.0) * EPS,
        }
    }
}

fn horner(coeffs: &[Complex64], z: Complex64) -> Complex64 {
    let mut acc = Complex64::new(0.0, 0.0);
    for c in coeffs.iter().rev() {
        acc = acc * z + c;
    }
    acc
}

fn horner_abs(coeffs: &[Complex64], r: f64) -> f64 {
    let mut acc = 0.0;
    for c in coeffs.iter().rev() {
        acc = acc * r + c.norm();
    }
    acc
}

/// `num / den` without the overflow in naive complex division: the textbook
/// formula squares `|den|`, which already exceeds the floating-point range
/// when `|den| > ~1e154` — magnitudes the family terms reach routinely while
/// iterates are still far from the roots. Scaling both operands by `|den|`
/// (computed overflow-free via `hypot`) keeps every intermediate bounded.
fn safe_div(num: Complex64, den: Complex64) -> Complex64 {
    let s = den.norm();
    if s.is_finite() && s > 0.0 {
        (num / s) / (den / s)
    } else {
        num / den
    }
}

impl AberthEval for CoeffEval<'_> {
    fn eval(&self, z: Complex64) -> (Complex64, Complex64, f64) {
        let v = horner(self.q, z);
        let dv = horner(&self.dq, z);
        let noise = self.noise_factor * horner_abs(self.q, z.norm());
        (v, safe_div(dv, v), noise)
    }
}

/// Term-form evaluator for a family member: values, derivatives, and the
/// noise majorant all flow through `Σ α_i(N;z) λ_i(z)^N`.
struct FamilyEval {
    terms: Vec<FamilyEvalTerm>,
    big_n: i64,
    origin_multiplicity: usize,
    noise_factor: f64,
}

struct FamilyEvalTerm {
    alpha: NCoeffPoly,
    alpha_dx: NCoeffPoly,
    lambda: ComplexPoly,
    lambda_dx: ComplexPoly,
}

impl FamilyEval {
    fn new(family: &ExpSumFamily, n: i64, origin_multiplicity: usize, degree: usize) -> Self {
        let big_n = n + family.index_offset;
        let terms = family
            .terms
            .iter()
            .map(|t| FamilyEvalTerm {
                alpha: t.alpha.clone(),
                alpha_dx: NCoeffPoly::new(
                    t.alpha.n_coeffs.iter().map(|p| p.derivative()).collect(),
                ),
                lambda: t.lambda.clone(),
                lambda_dx: t.lambda.derivative(),
            })
            .collect();
        FamilyEval {
            terms,
            big_n,
            origin_multiplicity,
            noise_factor: 8.0 * (degree as f64 + 4.0) * EPS,
        }
    }

    /// `(P(z), P'(z), Σ |α_i|·|λ_i|^N majorant)`.
    fn raw_eval(&self, z: Complex64) -> (Complex64, Complex64, f64) {
        let nf = self.big_n as f64;
        let mut value = Complex64::new(0.0, 0.0);
        let mut deriv = Complex64::new(0.0, 0.0);
        let mut majorant = 0.0;
        for t in &self.terms {
            let lz = t.lambda.eval(z);
            let a = t.alpha.eval(self.big_n, z);
            let da = t.alpha_dx.eval(self.big_n, z);
            let (pow_n, pow_n1) = if self.big_n == 0 {
                (Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0))
            } else {
                let p1 = lz.powu(self.big_n as u32 - 1);
                (p1 * lz, p1)
            };
            value += a * pow_n;
            deriv += da * pow_n + a * nf * t.lambda_dx.eval(z) * pow_n1;
            // Rounding noise scales with the terms actually summed, not
            // with coefficient-magnitude bounds: near a root the terms
            // cancel, and an absolute-coefficient majorant would declare
            // the iterate converged while it is still many ulps away.
            majorant += a.norm() * pow_n.norm();
        }
        (value, deriv, majorant)
    }
}

impl AberthEval for FamilyEval {
    fn eval(&self, z: Complex64) -> (Complex64, Complex64, f64) {
        let (value, deriv, majorant) = self.raw_eval(z);
        let mut log_deriv = safe_div(deriv, value);
        if self.origin_multiplicity > 0 {
            log_deriv -= Complex64::new(self.origin_multiplicity as f64, 0.0) / z;
        }
        (value, log_deriv, self.noise_factor * majorant)
    }
}

/// Fujiwara-style bound: all roots of `q` have modulus at most
/// `2 · max_k (|q_{d-k}| / |q_d|)^{1/k}` (constant term halved).
fn root_bound(q: &[Complex64]) -> f64 {
    let d = q.len() - 1;
    let lead = q[d].norm();
    let mut bound: f64 = 0.0;
    for k in 1..=d {
        let mut ratio = q[d - k].norm() / lead;
        if k == d {
            ratio /= 2.0;
        }
        bound = bound.max(ratio.powf(1.0 / k as f64));
    }
    (2.0 * bound).max(1e-12)
}

/// Ehrlich–Aberth sweeps over `degree` simultaneous iterates started on a
/// circle of radius `radius`, followed by a Newton polish.
fn aberth_iterate(eval: &dyn AberthEval, degree: usize, radius: f64) -> Vec<Complex64> {
    let mut z: Vec<Complex64> = (0..degree)
        .map(|j| {
            let theta = 2.0 * std::f64::consts::PI * j as f64 / degree as f64 + 0.4;
            Complex64::from_polar(radius, theta)
        })
        .collect();
    let mut converged = vec![false; degree];

    for _ in 0..MAX_ABERTH_ITERATIONS {
        let mut all_done = true;
        for i in 0..degree {
            if converged[i] {
                continue;
            }
            let (value, log_deriv, noise) = eval.eval(z[i]);
            if !value.re.is_finite() || !value.im.is_finite() {
                // The iterate has wandered into overflow territory (large |z|
                // raised to the family index). Pull it halfway back toward
                // the origin; nothing can be learned from an infinite value.
                z[i] *= 0.5;
                all_done = false;
                continue;
            }
            if noise.is_finite() && value.norm() <= noise {
                converged[i] = true;
                continue;
            }
            let newton = 1.0 / log_deriv;
            let mut repulsion = Complex64::new(0.0, 0.0);
            for j in 0..degree {
                if j != i {
                    let d = z[i] - z[j];
                    if d.norm_sqr() > 0.0 {
                        repulsion += 1.0 / d;
                    }
                }
            }
            let mut step = newton / (1.0 - newton * repulsion);
            if !step.re.is_finite() || !step.im.is_finite() {
                // Degenerate configuration (critical point or coincident
                // iterates): nudge deterministically instead of stepping.
                step = Complex64::from_polar(0.05 * (1.0 + z[i].norm()), 1.0 + i as f64);
            }
            // A near-zero simultaneous-correction denominator (two iterates
            // transiently coinciding) makes the raw step enormous; capping it
            // at one unit of local scale keeps the iterate in the basin.
            let cap = 1.0 + z[i].norm();
            if step.norm() > cap {
                step *= cap / step.norm();
            }
            z[i] -= step;
            if step.norm() <= 1e-14 * (1.0 + z[i].norm()) {
                converged[i] = true;
            } else {
                all_done = false;
            }
        }
        if all_done {
            break;
        }
    }

    // Newton polish on the deflated logarithmic derivative.
    for zi in z.iter_mut() {
        for _ in 0..2 {
            let (value, log_deriv, noise) = eval.eval(*zi);
            if !value.re.is_finite() || !value.im.is_finite() {
                break;
            }
            if noise.is_finite() && value.norm() <= noise {
                break;
            }
            let step = 1.0 / log_deriv;
            if !step.re.is_finite() || !step.im.is_finite() || step.norm() > 0.5 * (1.0 + zi.norm())
            {
                break;
            }
            *zi -= step;
        }
    }
    z
}

fn sort_roots(roots: &mut [Complex64], residuals: &mut [f64]) {
    let mut order: Vec<usize> = (0..roots.len()).collect();
    order.sort_by(|&a, &b| {
        (roots[a].re, roots[a].im)
            .partial_cmp(&(roots[b].re, roots[b].im))
            .expect("roots are finite")
    });
    let sorted_roots: Vec<_> = order.iter().map(|&i| roots[i]).collect();
    let sorted_res: Vec<_> = order.iter().map(|&i| residuals[i]).collect();
    roots.copy_from_slice(&sorted_roots);
    residuals.copy_from_slice(&sorted_res);
}

/// Counts exact-zero low-order coefficients (the multiplicity of the root
/// at the origin that can be deflated without rounding).
fn origin_multiplicity(coeffs: &[Complex64]) -> usize {
    coeffs
        .iter()
        .take_while(|c| c.re == 0.0 && c.im == 0.0)
        .count()
}

/// All `degree(p)` roots of `p`, multiple roots repeated, sorted by real
/// part then imaginary part. Accepts the result only if every residual
/// `|p(root)|/max|coeff|` is below `tol`.
pub fn all_roots(p: &ComplexPoly, tol: f64) -> Result<RootSet, RootFindError> {
    if p.is_zero() {
        return Err(RootFindError::ZeroPolynomial);
    }
    let degree = p.degree().unwrap();
    if degree == 0 {
        return Err(RootFindError::ConstantPolynomial);
    }
    let m0 = origin_multiplicity(&p.coeffs);
    let q = &p.coeffs[m0..];
    let mut roots = vec![Complex64::new(0.0, 0.0); m0];
    if q.len() > 1 {
        let eval = CoeffEval::new(q);
        roots.extend(aberth_iterate(&eval, q.len() - 1, root_bound(q)));
    }
    finish_root_set(0, p.max_coeff_abs(), |z| p.eval(z), roots, tol)
}

fn finish_root_set(
    n: i64,
    coeff_scale: f64,
    value_at: impl Fn(Complex64) -> Complex64,
    mut roots: Vec<Complex64>,
    tol: f64,
) -> Result<RootSet, RootFindError> {
    let mut residuals: Vec<f64> = roots
        .iter()
        .map(|&z| value_at(z).norm() / coeff_scale)
        .collect();
    sort_roots(&mut roots, &mut residuals);
    let worst = residuals.iter().copied().fold(0.0, f64::max);
    if worst >= tol {
        return Err(RootFindError::NonConvergence {
            worst_residual: worst,
        });
    }
    Ok(RootSet {
        n,
        roots,
        residuals,
    })
}

/// Roots of `P_n` for every `n` in `n_from..=n_to` (term-form evaluation;
/// see the module docs). Indices where the expanded polynomial is a nonzero
/// constant yield an empty root set. Per-index work runs in parallel;
/// output order and content are deterministic.
pub fn family_roots(
    family: &ExpSumFamily,
    n_from: i64,
    n_to: i64,
    tol: f64,
) -> Result<Vec<RootSet>, RootFindError> {
    if n_from > n_to {
        return Err(RootFindError::EmptyRange { n_from, n_to });
    }
    (n_from..=n_to)
        .into_par_iter()
        .map(|n| {
            family_roots_at(family, n, tol).map_err(|e| RootFindError::AtIndex {
                n,
                source: Box::new(e),
            })
        })
        .collect()
}

pub fn family_roots_at(family: &ExpSumFamily, n: i64, tol: f64) -> Result<RootSet, RootFindError> {
    let expanded = family.expand_at_index(n)?;
    if expanded.is_zero() {
        return Err(RootFindError::ZeroPolynomial);
    }
    let degree = expanded.degree().unwrap();
    if degree == 0 {
        return Ok(RootSet {
            n,
            roots: Vec::new(),
            residuals: Vec::new(),
        });
    }
    let m0 = origin_multiplicity(&expanded.coeffs);
    let mut roots = vec![Complex64::new(0.0, 0.0); m0];
    if degree > m0 {
        let eval = FamilyEval::new(family, n, m0, degree);
        let radius = root_bound(&expanded.coeffs[m0..]);
        roots.extend(aberth_iterate(&eval, degree - m0, radius));
    }
    let eval = FamilyEval::new(family, n, m0, degree);
    finish_root_set(
        n,
        expanded.max_coeff_abs(),
        |z| eval.raw_eval(z).0,
        roots,
        tol,
    )
}

/// Number of zeros of `p` strictly inside the circle, counted by
/// accumulating argument increments of `p` along the contour. Sampling is
/// refined (doubled) until every consecutive increment has magnitude below
/// `π/2`; a sample with `|p| < 1e-10 · max|coeff|` is treated as a root on
/// the contour and rejected.
pub fn winding_count(
    p: &ComplexPoly,
    center: Complex64,
    radius: f64,
) -> Result<i64, RootFindError> {
    if p.is_zero() {
        return Err(RootFindError::ZeroPolynomial);
    }
    let threshold = 1e-10 * p.max_coeff_abs();
    let degree = p.degree().unwrap_or(0);
    let mut samples = (8 * degree.max(8)).next_power_of_two();
    while samples <= (1 << 22) {
        let values: Vec<Complex64> = (0..samples)
            .map(|k| {
                let theta = 2.0 * std::f64::consts::PI * k as f64 / samples as f64;
                p.eval(center + Complex64::from_polar(radius, theta))
            })
            .collect();
        if values.iter().any(|v| v.norm() < threshold) {
            return Err(RootFindError::RootOnContour);
        }
        let mut total = 0.0;
        let mut ok = true;
        for k in 0..samples {
            let delta = (values[(k + 1) % samples] / values[k]).arg();
            if delta.abs() >= std::f64::consts::FRAC_PI_2 {
                ok = false;
                break;
            }
            total += delta;
        }
        if ok {
            return Ok((total / (2.0 * std::f64::consts::PI)).round() as i64);
        }
        samples *= 2;
    }
    Err(RootFindError::ContourSamplingExceeded)
}
