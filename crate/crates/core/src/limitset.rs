//! The predicted limit set of a family's zeros.
//!
//! For `P_n(x) = Σ_i α_i(N; x) λ_i(x)^N` the zeros accumulate, as `n → ∞`,
//! on the union of
//!
//! - **isolated points**: `z` where one term strictly dominates
//!   (`|λ_i(z)| > |λ_k(z)|` for all `k ≠ i`) and the dominant term's leading
//!   index-coefficient vanishes (`p_{i,deg}(z) = 0`);
//! - **equimodular dominance curves**: `z` where two or more terms share the
//!   strictly largest `|λ|`, that modulus is positive, and at least one of
//!   the tied terms has a nonvanishing leading index-coefficient;
//! - **persistent zeros**: points that are zeros of every `P_n` outright
//!   (all `λ_i` vanish there, so the two conditions above cannot see them).
//!
//! Families with more than two terms are handled pairwise with a dominance
//! filter: the curve for the pair `(i, j)` keeps only the portions where no
//! third term's modulus exceeds the pair's (further ties are allowed).
//!
//! Curves are extracted by cell-corner sign analysis of
//! `|λ_i(z)| − |λ_j(z)|` on a rectangular grid (the sign of the modulus
//! difference equals the sign of the log-modulus difference wherever the
//! latter is defined, and avoids its infinities), with crossing positions
//! refined by bisection to a fraction of a cell diagonal and chained into
//! polylines through the marching-squares cell cases.

use crate::poly::{ComplexPoly, ExpSumFamily, PolyError};
use crate::recurrence::{minimality_check, MinimalityReport};
use crate::rootfind::{
    all_roots, family_roots_at, RootFindError, DEFAULT_FAMILY_TOL, DEFAULT_ROOT_TOL,
};
use num_complex::Complex64;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};
use thiserror::Error;

/// Relative margin used both for dominance ties and for treating a leading
/// coefficient value as zero.
pub const TIE_TOL: f64 = 1e-9;

/// Wider tie margin for the isolated-point dominance test. A candidate
/// point is a *computed* root of a leading coefficient, and a double root
/// carries ~√eps ≈ 1e-8 of placement error; a genuine modulus tie at the
/// true root (which must disqualify the candidate) can therefore show up as
/// a ~1e-8 relative gap at the computed root, far outside [`TIE_TOL`].
pub const ISOLATED_TIE_TOL: f64 = 1e-6;

/// Radius of the punctured dominance probe around a candidate isolated
/// point where every `|λ|` vanishes.
pub const PUNCTURE_RADIUS: f64 = 1e-3;

/// Default probe indices for [`persistent_zeros`].
pub const DEFAULT_PROBES: [i64; 3] = [17, 18, 19];

/// Matching tolerance for common roots across probe indices.
pub const PROBE_MATCH_TOL: f64 = 1e-7;

#[derive(Debug, Error)]
pub enum LimitSetError {
    #[error("invalid window: need re_min < re_max, im_min < im_max, grid >= 16")]
    InvalidWindow,
    #[error("need at least 2 probe indices with a coprime pair")]
    InvalidProbes,
    #[error("need sample_count >= 8 for the degeneracy check")]
    TooFewSamples,
    #[error("family fails nondegeneracy: degenerate pairs {pairs:?}, minimality pass = {minimal}")]
    DegenerateFamily {
        pairs: Vec<(usize, usize)>,
        minimal: bool,
    },
    #[error(transparent)]
    Root(#[from] RootFindError),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// Axis-aligned rectangle in the complex plane with a square cell grid.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Window {
    pub re_min: f64,
    pub re_max: f64,
    pub im_min: f64,
    pub im_max: f64,
    /// Cells per axis (corners per axis = grid + 1).
    pub grid: usize,
}

impl Default for Window {
    /// `[-3, 3]²` at grid 512 — encloses every feature of the built-in
    /// families, including the outermost arc of the domination loop.
    fn default() -> Self {
        Window {
            re_min: -3.0,
            re_max: 3.0,
            im_min: -3.0,
            im_max: 3.0,
            grid: 512,
        }
    }
}

impl Window {
    pub fn validate(&self) -> Result<(), LimitSetError> {
        if self.re_min < self.re_max && self.im_min < self.im_max && self.grid >= 16 {
            Ok(())
        } else {
            Err(LimitSetError::InvalidWindow)
        }
    }

    pub fn dx(&self) -> f64 {
        (self.re_max - self.re_min) / self.grid as f64
    }

    pub fn dy(&self) -> f64 {
        (self.im_max - self.im_min) / self.grid as f64
    }

    pub fn cell_diagonal(&self) -> f64 {
        self.dx().hypot(self.dy())
    }

    pub fn corner(&self, row: usize, col: usize) -> Complex64 {
        Complex64::new(
            self.re_min + self.dx() * col as f64,
            self.im_min + self.dy() * row as f64,
        )
    }

    pub fn contains(&self, z: Complex64) -> bool {
        z.re >= self.re_min && z.re <= self.re_max && z.im >= self.im_min && z.im <= self.im_max
    }
}

/// One chained equimodular polyline, tagged with the term pair it balances.
#[derive(Debug, Clone, PartialEq)]
pub struct EquimodularCurve {
    pub pair: (usize, usize),
    pub points: Vec<Complex64>,
}

/// The computed limit set, with the window it was computed on.
#[derive(Debug, Clone, PartialEq)]
pub struct LimitSet {
    /// `(point, index of the dominant term whose leading coefficient vanishes)`.
    pub isolated: Vec<(Complex64, usize)>,
    pub persistent: Vec<Complex64>,
    pub curves: Vec<EquimodularCurve>,
    pub window: Window,
}

impl LimitSet {
    pub fn is_empty(&self) -> bool {
        self.isolated.is_empty() && self.persistent.is_empty() && self.curves.is_empty()
    }

    /// Total number of refined curve points across all polylines.
    pub fn curve_point_count(&self) -> usize {
        self.curves.iter().map(|c| c.points.len()).sum()
    }
}

/// Outcome of comparing `|λ_i(z)|` across terms.
#[derive(Debug, Clone, PartialEq)]
pub enum Dominance {
    /// One term's modulus strictly exceeds all others beyond the tie margin.
    Single(usize),
    /// All indices within the relative tie margin of the maximum.
    Tie(Vec<usize>),
}

fn lambda_moduli(family: &ExpSumFamily, z: Complex64) -> Vec<f64> {
    family
        .terms
        .iter()
        .map(|t| t.lambda.eval(z).norm())
        .collect()
}

/// Index of the strictly largest `|λ_i(z)|`, or the tie set when two or more
/// moduli agree to within the relative margin `tie_tol`.
pub fn dominant_index(family: &ExpSumFamily, z: Complex64, tie_tol: f64) -> Dominance {
    let moduli = lambda_moduli(family, z);
    let max = moduli.iter().copied().fold(0.0, f64::max);
    let tied: Vec<usize> = moduli
        .iter()
        .enumerate()
        .filter(|(_, &m)| m >= max * (1.0 - tie_tol))
        .map(|(i, _)| i)
        .collect();
    if tied.len() == 1 {
        Dominance::Single(tied[0])
    } else {
        Dominance::Tie(tied)
    }
}

/// Roots of each term's leading index-coefficient that fall in the window
/// and at which that term strictly dominates. When every `|λ(z)|` is below
/// `1e-9` the dominance test is instead required to hold unanimously at 8
/// points on a circle of radius [`PUNCTURE_RADIUS`] around `z` (the limit
/// behavior near an all-`λ`-vanishing point is decided arbitrarily close to
/// it, not at it).
pub fn isolated_limit_points(
    family: &ExpSumFamily,
    window: &Window,
) -> Result<Vec<(Complex64, usize)>, LimitSetError> {
    window.validate()?;
    let mut found: Vec<(Complex64, usize)> = Vec::new();
    for (idx, term) in family.terms.iter().enumerate() {
        let lead = term.alpha.leading();
        if lead.degree().map_or(true, |d| d == 0) {
            continue; // constant (or zero) leading coefficient: no roots
        }
        let roots = all_roots(&lead, DEFAULT_ROOT_TOL)?;
        for &z in &roots.roots {
            if !window.contains(z) {
                continue;
            }
            let dominant = if lambda_moduli(family, z).iter().all(|&m| m < 1e-9) {
                (0..8).all(|k| {
                    let angle = std::f64::consts::PI * (2.0 * k as f64 + 1.0) / 8.0;
                    let probe = z + Complex64::from_polar(PUNCTURE_RADIUS, angle);
                    dominant_index(family, probe, ISOLATED_TIE_TOL) == Dominance::Single(idx)
                })
            } else {
                dominant_index(family, z, ISOLATED_TIE_TOL) == Dominance::Single(idx)
            };
            if dominant
                && !found
                    .iter()
                    .any(|&(p, i)| i == idx && (p - z).norm() < 1e-7)
            {
                found.push((z, idx));
            }
        }
    }
    found.sort_by(|a, b| {
        (a.0.re, a.0.im, a.1)
            .partial_cmp(&(b.0.re, b.0.im, b.1))
            .expect("finite points")
    });
    Ok(found)
}

/// Points that are zeros of `P_n` for every probe index simultaneously
/// (matched across probes to within [`PROBE_MATCH_TOL`]) *and* at which all
/// `|λ_i|` vanish. Such points are zeros of every large `P_n` — every term
/// of the sum dies there — yet are invisible to the dominance conditions,
/// which need a positive dominant modulus. Common roots where some `λ`
/// survives are excluded: those are ordinary zeros that the isolated-point
/// and curve machinery already accounts for.
pub fn persistent_zeros(
    family: &ExpSumFamily,
    probe_indices: &[i64],
) -> Result<Vec<Complex64>, LimitSetError> {
    let coprime_pair = probe_indices
        .iter()
        .enumerate()
        .any(|(a, &pa)| probe_indices[a + 1..].iter().any(|&pb| gcd(pa, pb) == 1));
    if probe_indices.len() < 2 || !coprime_pair {
        return Err(LimitSetError::InvalidProbes);
    }
    let mut probe_roots: Vec<Vec<Complex64>> = Vec::new();
    for &n in probe_indices {
        let p = family.expand_at_index(n)?;
        if p.degree().map_or(true, |d| d == 0) {
            return Ok(Vec::new()); // a nonzero constant has no roots at all
        }
        // Root the probe polynomial through the family's term form: it is the
        // same polynomial, but coefficient-form evaluation of some expansions
        // already drowns the root positions in rounding noise at these
        // indices, while the term form stays accurate to a few ulps.
        probe_roots.push(family_roots_at(family, n, DEFAULT_FAMILY_TOL)?.roots);
    }
    let mut common: Vec<Complex64> = Vec::new();
    for &z in &probe_roots[0] {
        let in_all = probe_roots[1..]
            .iter()
            .all(|roots| roots.iter().any(|&w| (w - z).norm() < PROBE_MATCH_TOL));
        if !in_all {
            continue;
        }
        if !lambda_moduli(family, z).iter().all(|&m| m < 1e-9) {
            continue;
        }
        if !common.iter().any(|&w| (w - z).norm() < PROBE_MATCH_TOL) {
            common.push(z);
        }
    }
    common.sort_by(|a, b| (a.re, a.im).partial_cmp(&(b.re, b.im)).expect("finite"));
    Ok(common)
}

fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

// --- Equimodular curve extraction --------------------------------------

/// Global edge identifier: `orient` 0 = horizontal (corner (row,col) to
/// (row,col+1)), 1 = vertical (corner (row,col) to (row+1,col)).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
struct EdgeKey {
    orient: u8,
    row: usize,
    col: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum CellSide {
    Bottom,
    Right,
    Top,
    Left,
}

fn cell_edge(row: usize, col: usize, side: CellSide) -> EdgeKey {
    match side {
        CellSide::Bottom => EdgeKey {
            orient: 0,
            row,
            col,
        },
        CellSide::Top => EdgeKey {
            orient: 0,
            row: row + 1,
            col,
        },
        CellSide::Left => EdgeKey {
            orient: 1,
            row,
            col,
        },
        CellSide::Right => EdgeKey {
            orient: 1,
            row,
            col: col + 1,
        },
    }
}

/// Marching-squares connections for a cell, given the four corner classes
/// (`h >= 0`) in order bottom-left, bottom-right, top-right, top-left. The
/// ambiguous saddle cases are disambiguated by the class at the cell center.
fn cell_segments(
    classes: [bool; 4],
    center_class: impl FnOnce() -> bool,
) -> Vec<(CellSide, CellSide)> {
    use CellSide::*;
    let case = classes[0] as u8
        | (classes[1] as u8) << 1
        | (classes[2] as u8) << 2
        | (classes[3] as u8) << 3;
    match case {
        0b0000 | 0b1111 => vec![],
        0b0001 | 0b1110 => vec![(Bottom, Left)],
        0b0010 | 0b1101 => vec![(Bottom, Right)],
        0b0011 | 0b1100 => vec![(Left, Right)],
        0b0100 | 0b1011 => vec![(Right, Top)],
        0b0110 | 0b1001 => vec![(Bottom, Top)],
        0b0111 | 0b1000 => vec![(Left, Top)],
        0b0101 => {
            // true at bottom-left and top-right
            if center_class() {
                vec![(Bottom, Right), (Top, Left)]
            } else {
                vec![(Bottom, Left), (Top, Right)]
            }
        }
        0b1010 => {
            // true at bottom-right and top-left
            if center_class() {
                vec![(Bottom, Left), (Top, Right)]
            } else {
                vec![(Bottom, Right), (Top, Left)]
            }
        }
        _ => unreachable!(),
    }
}

/// For every unordered term pair, the zero set of `|λ_i| − |λ_j|` on the
/// window, bisection-refined along crossing edges to `cell diagonal / 1024`,
/// filtered to points where (a) no other term's modulus exceeds the pair's
/// beyond the relative margin [`TIE_TOL`] (further ties allowed), (b) the
/// shared modulus is positive, and (c) at least one of the pair's leading
/// index-coefficients is nonzero there; surviving crossings are chained into
/// polylines through the cell cases (single stranded crossings are kept as
/// one-point polylines rather than dropped).
pub fn equimodular_curves(
    family: &ExpSumFamily,
    window: &Window,
) -> Result<Vec<EquimodularCurve>, LimitSetError> {
    window.validate()?;
    let g = window.grid;
    let k = family.terms.len();
    let corners_per_row = g + 1;

    // Corner moduli of every λ, shared across pairs.
    let moduli: Vec<f64> = (0..=g)
        .into_par_iter()
        .map(|row| {
            let mut row_vals = Vec::with_capacity(corners_per_row * k);
            for col in 0..=g {
                let z = window.corner(row, col);
                for term in &family.terms {
                    row_vals.push(term.lambda.eval(z).norm());
                }
            }
            row_vals
        })
        .collect::<Vec<_>>()
        .concat();
    let modulus_at = |row: usize, col: usize, term: usize| -> f64 {
        moduli[(row * corners_per_row + col) * k + term]
    };

    let leading: Vec<ComplexPoly> = family.terms.iter().map(|t| t.alpha.leading()).collect();
    let leading_scale: Vec<f64> = leading.iter().map(|p| p.max_coeff_abs().max(1.0)).collect();
    let refine_tol = window.cell_diagonal() / 1024.0;

    let mut curves = Vec::new();
    for i in 0..k {
        for j in (i + 1)..k {
            let h = |z: Complex64| {
                family.terms[i].lambda.eval(z).norm() - family.terms[j].lambda.eval(z).norm()
            };
            let class_at =
                |row: usize, col: usize| modulus_at(row, col, i) >= modulus_at(row, col, j);

            // 1. Crossing edges, refined in parallel.
            let mut crossing_edges: Vec<EdgeKey> = Vec::new();
            for row in 0..=g {
                for col in 0..=g {
                    if col < g && class_at(row, col) != class_at(row, col + 1) {
                        crossing_edges.push(EdgeKey {
                            orient: 0,
                            row,
                            col,
                        });
                    }
                    if row < g && class_at(row, col) != class_at(row + 1, col) {
                        crossing_edges.push(EdgeKey {
                            orient: 1,
                            row,
                            col,
                        });
                    }
                }
            }
            let refined: Vec<(EdgeKey, Complex64)> = crossing_edges
                .par_iter()
                .map(|&edge| {
                    let (mut a, mut b) = match edge.orient {
                        0 => (
                            window.corner(edge.row, edge.col),
                            window.corner(edge.row, edge.col + 1),
                        ),
                        _ => (
                            window.corner(edge.row, edge.col),
                            window.corner(edge.row + 1, edge.col),
                        ),
                    };
                    let class_a = h(a) >= 0.0;
                    while (b - a).norm() > refine_tol {
                        let mid = (a + b) / 2.0;
                        if (h(mid) >= 0.0) == class_a {
                            a = mid;
                        } else {
                            b = mid;
                        }
                    }
                    (edge, (a + b) / 2.0)
                })
                .collect();
            let crossings: BTreeMap<EdgeKey, Complex64> = refined.into_iter().collect();

            // 2. Retention filter.
            let retained: BTreeMap<EdgeKey, Complex64> = crossings
                .iter()
                .filter(|(_, &z)| {
                    let m = lambda_moduli(family, z);
                    let pair_mod = m[i].max(m[j]);
                    let dominated = m
                        .iter()
                        .enumerate()
                        .all(|(t, &mt)| t == i || t == j || mt <= pair_mod * (1.0 + TIE_TOL));
                    let positive = pair_mod > 1e-9;
                    let lead_ok = leading[i].eval(z).norm() > TIE_TOL * leading_scale[i]
                        || leading[j].eval(z).norm() > TIE_TOL * leading_scale[j];
                    dominated && positive && lead_ok
                })
                .map(|(&e, &z)| (e, z))
                .collect();

            // 3. Cell connections between retained crossings.
            let mut links: BTreeSet<(EdgeKey, EdgeKey)> = BTreeSet::new();
            for row in 0..g {
                for col in 0..g {
                    let classes = [
                        class_at(row, col),
                        class_at(row, col + 1),
                        class_at(row + 1, col + 1),
                        class_at(row + 1, col),
                    ];
                    let center = || {
                        let z = (window.corner(row, col) + window.corner(row + 1, col + 1)) / 2.0;
                        h(z) >= 0.0
                    };
                    for (sa, sb) in cell_segments(classes, center) {
                        let (ea, eb) = (cell_edge(row, col, sa), cell_edge(row, col, sb));
                        if retained.contains_key(&ea) && retained.contains_key(&eb) {
                            links.insert((ea.min(eb), ea.max(eb)));
                        }
                    }
                }
            }

            // 4. Chain links into polylines; leftovers become single points.
            for polyline in chain_polylines(&retained, &links) {
                curves.push(EquimodularCurve {
                    pair: (i, j),
                    points: polyline,
                });
            }
        }
    }
    Ok(curves)
}

/// Walks the crossing adjacency graph into polylines: open paths first
/// (started at odd-degree nodes), then closed loops (re-closed by repeating
/// the start point), then isolated nodes as one-point polylines. Iteration
/// order is fixed by the edge keys, so output is deterministic.
fn chain_polylines(
    nodes: &BTreeMap<EdgeKey, Complex64>,
    links: &BTreeSet<(EdgeKey, EdgeKey)>,
) -> Vec<Vec<Complex64>> {
    let mut adjacency: BTreeMap<EdgeKey, Vec<EdgeKey>> = BTreeMap::new();
    for &(a, b) in links {
        adjacency.entry(a).or_default().push(b);
        adjacency.entry(b).or_default().push(a);
    }
    let mut unused: BTreeSet<(EdgeKey, EdgeKey)> = links.clone();
    let mut polylines = Vec::new();

    let walk = |start: EdgeKey, unused: &mut BTreeSet<(EdgeKey, EdgeKey)>| -> Vec<EdgeKey> {
        let mut path = vec![start];
        let mut current = start;
        loop {
            let next = adjacency
                .get(&current)
                .into_iter()
                .flatten()
                .copied()
                .find(|&nb| unused.contains(&(current.min(nb), current.max(nb))));
            match next {
                Some(nb) => {
                    unused.remove(&(current.min(nb), current.max(nb)));
                    path.push(nb);
                    current = nb;
                }
                None => return path,
            }
        }
    };

    // Open paths from odd-degree endpoints.
    let endpoints: Vec<EdgeKey> = adjacency
        .iter()
        .filter(|(_, nbs)| nbs.len() % 2 == 1)
        .map(|(&e, _)| e)
        .collect();
    for start in endpoints {
        while adjacency[&start]
            .iter()
            .any(|&nb| unused.contains(&(start.min(nb), start.max(nb))))
        {
            let path = walk(start, &mut unused);
            polylines.push(path);
        }
    }
    // Remaining links form closed loops.
    loop {
        let Some(&(a, _)) = unused.iter().next() else {
            break;
        };
        let path = walk(a, &mut unused);
        polylines.push(path);
    }
    // Nodes that took part in no link at all.
    for (&e, _) in nodes.iter() {
        if !adjacency.contains_key(&e) {
            polylines.push(vec![e]);
        }
    }

    polylines
        .into_iter()
        .map(|path| path.into_iter().map(|e| nodes[&e]).collect())
        .collect()
}

/// Union of isolated points, persistent zeros, and equimodular curves.
/// Refuses to run on a family flagged by [`nondegeneracy_check`] — the
/// prediction is only meaningful under the nondegeneracy hypotheses.
pub fn limit_set(family: &ExpSumFamily, window: &Window) -> Result<LimitSet, LimitSetError> {
    let report = nondegeneracy_check(family, 16)?;
    if !report.pass {
        return Err(LimitSetError::DegenerateFamily {
            pairs: report.degenerate_pairs,
            minimal: report.minimality.pass,
        });
    }
    Ok(LimitSet {
        isolated: isolated_limit_points(family, window)?,
        persistent: persistent_zeros(family, &DEFAULT_PROBES)?,
        curves: equimodular_curves(family, window)?,
        window: *window,
    })
}

/// Result of [`nondegeneracy_check`].
#[derive(Debug, Clone, PartialEq)]
pub struct NondegeneracyReport {
    /// Pairs whose modulus ratio `|λ_i/λ_j|` is constant across samples —
    /// i.e. `λ_i = ω λ_j` with `|ω| = 1` (up to real scale), which breaks
    /// the limit-set prediction.
    pub degenerate_pairs: Vec<(usize, usize)>,
    pub minimality: MinimalityReport,
    pub pass: bool,
}

/// Samples `|λ_i/λ_j|` at `sample_count` seeded-random points in the default
/// window for every pair; a pair whose sampled ratio has standard deviation
/// below `1e-9 ×` its mean is flagged as degenerate. Also re-runs the
/// minimality check. Points where the denominator `λ_j` vanishes are
/// resampled.
pub fn nondegeneracy_check(
    family: &ExpSumFamily,
    sample_count: usize,
) -> Result<NondegeneracyReport, LimitSetError> {
    if sample_count < 8 {
        return Err(LimitSetError::TooFewSamples);
    }
    let window = Window::default();
    let mut rng = ChaCha8Rng::seed_from_u64(0x424b_5721);
    let mut degenerate_pairs = Vec::new();
    for i in 0..family.terms.len() {
        for j in (i + 1)..family.terms.len() {
            let mut ratios = Vec::with_capacity(sample_count);
            let mut attempts = 0;
            while ratios.len() < sample_count && attempts < 10_000 {
                attempts += 1;
                let z = Complex64::new(
                    rng.gen_range(window.re_min..window.re_max),
                    rng.gen_range(window.im_min..window.im_max),
                );
                let denom = family.terms[j].lambda.eval(z).norm();
                if denom < 1e-12 {
                    continue;
                }
                ratios.push(family.terms[i].lambda.eval(z).norm() / denom);
            }
            let mean = ratios.iter().sum::<f64>() / ratios.len() as f64;
            let var = ratios.iter().map(|r| (r - mean).powi(2)).sum::<f64>() / ratios.len() as f64;
            if var.sqrt() < 1e-9 * mean {
                degenerate_pairs.push((i, j));
            }
        }
    }
    let minimality = minimality_check(family);
    let pass = degenerate_pairs.is_empty() && minimality.pass;
    Ok(NondegeneracyReport {
        degenerate_pairs,
        minimality,
        pass,
    })
}

// --- JSON schema --------------------------------------------------------
//
// `{"isolated": [{"point": [re,im], "term": i}, ...], "persistent":
//   [[re,im], ...], "curves": [{"pair": [i,j], "points": [[re,im],...]},
//   ...], "window": {...}}`
// The window block records what the set was computed on; readers may omit it.

#[derive(Debug, Serialize, Deserialize)]
pub struct LimitSetJson {
    pub isolated: Vec<IsolatedJson>,
    pub persistent: Vec<[f64; 2]>,
    pub curves: Vec<CurveJson>,
    #[serde(default = "default_window")]
    pub window: Window,
}

fn default_window() -> Window {
    Window::default()
}

#[derive(Debug, Serialize, Deserialize)]
pub struct IsolatedJson {
    pub point: [f64; 2],
    pub term: usize,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct CurveJson {
    pub pair: [usize; 2],
    pub points: Vec<[f64; 2]>,
}

impl LimitSet {
    pub fn to_json(&self) -> LimitSetJson {
        LimitSetJson {
            isolated: self
                .isolated
                .iter()
                .map(|&(z, term)| IsolatedJson {
                    point: [z.re, z.im],
                    term,
                })
                .collect(),
            persistent: self.persistent.iter().map(|z| [z.re, z.im]).collect(),
            curves: self
                .curves
                .iter()
                .map(|c| CurveJson {
                    pair: [c.pair.0, c.pair.1],
                    points: c.points.iter().map(|z| [z.re, z.im]).collect(),
                })
                .collect(),
            window: self.window,
        }
    }

    pub fn from_json(json: &LimitSetJson) -> Self {
        LimitSet {
            isolated: json
                .isolated
                .iter()
                .map(|i| (Complex64::new(i.point[0], i.point[1]), i.term))
                .collect(),
            persistent: json
                .persistent
                .iter()
                .map(|p| Complex64::new(p[0], p[1]))
                .collect(),
            curves: json
                .curves
                .iter()
                .map(|c| EquimodularCurve {
                    pair: (c.pair[0], c.pair[1]),
                    points: c
                        .points
                        .iter()
                        .map(|p| Complex64::new(p[0], p[1]))
                        .collect(),
                })
                .collect(),
            window: json.window,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{ExpTerm, NCoeffPoly};

    fn two_term(l1: &[f64], l2: &[f64]) -> ExpSumFamily {
        ExpSumFamily::new(
            "test",
            vec![
                ExpTerm {
                    alpha: NCoeffPoly::constant(ComplexPoly::one()),
                    lambda: ComplexPoly::from_real(l1),
                },
                ExpTerm {
                    alpha: NCoeffPoly::constant(ComplexPoly::one()),
                    lambda: ComplexPoly::from_real(l2),
                },
            ],
            0,
        )
        .unwrap()
    }

    #[test]
    fn dominance_on_and_off_the_unit_circle() {
        let fam = two_term(&[0.0, 1.0], &[1.0]); // λ = x vs 1
        assert_eq!(
            dominant_index(&fam, Complex64::new(2.0, 0.0), TIE_TOL),
            Dominance::Single(0)
        );
        assert_eq!(
            dominant_index(&fam, Complex64::new(0.0, 1.0), TIE_TOL),
            Dominance::Tie(vec![0, 1])
        );
    }

    #[test]
    fn constant_modulus_ratio_is_flagged() {
        let fam = two_term(&[0.0, 1.0], &[0.0, 2.0]); // λ = x vs 2x
        let report = nondegeneracy_check(&fam, 16).unwrap();
        assert_eq!(report.degenerate_pairs, vec![(0, 1)]);
        assert!(!report.pass);
    }

    #[test]
    fn window_validation() {
        let mut w = Window::default();
        w.grid = 8;
        assert!(w.validate().is_err());
        assert!(Window::default().validate().is_ok());
    }

    #[test]
    fn unit_circle_curve_from_simple_family() {
        // λ = x against λ = 1: equimodular locus is |x| = 1.
        let fam = two_term(&[0.0, 1.0], &[1.0]);
        let window = Window {
            grid: 64,
            ..Window::default()
        };
        let curves = equimodular_curves(&fam, &window).unwrap();
        assert!(!curves.is_empty());
        for curve in &curves {
            for z in &curve.points {
                assert!(
                    (z.norm() - 1.0).abs() < window.cell_diagonal(),
                    "point {z} strays from |z| = 1"
                );
            }
        }
    }
}
