//! Exact Tutte polynomials of small multigraphs and the Steele polynomial.
//!
//! Everything here is exact: Tutte coefficients are arbitrary-precision
//! integers, Steele coefficients arbitrary-precision rationals. The Steele
//! polynomial `S(G; t)` is recovered from
//!
//! ```text
//! S(G; t) = (1−t)/t · T_x(G; 1/t, 1/(1−t)) / T(G; 1/t, 1/(1−t))
//! ```
//!
//! by evaluating the right-hand side at exact rational sample points and
//! interpolating — the result is a polynomial of degree at most `|E|`, so
//! `|E| + 1` samples determine it and two held-out samples certify it. Its
//! integral over `[0, 1]` is the expected length of a minimum spanning tree
//! of `G` under i.i.d. uniform `[0, 1]` edge weights.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Zero};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};
use thiserror::Error;

/// Hard edge cap for [`tutte`]; deletion–contraction is exponential.
pub const TUTTE_EDGE_CAP: usize = 16;
/// Edge cap for the brute-force [`tutte_oracle`] (enumerates all subsets).
pub const ORACLE_EDGE_CAP: usize = 12;

#[derive(Debug, Error)]
pub enum GraphError {
    #[error("edge ({u}, {v}) out of range for {n} vertices")]
    BadEdge { u: usize, v: usize, n: usize },
    #[error("graph is disconnected; spanning-tree semantics need a connected graph")]
    Disconnected,
    #[error("graph has no edges")]
    NoEdges,
    #[error("edge count {got} exceeds the hard cap {cap}; cost grows exponentially in edges")]
    TooManyEdges { got: usize, cap: usize },
    #[error("denominator vanished at every candidate sample point")]
    SamplesExhausted,
    #[error("held-out check failed at t = {at}: interpolant {got}, direct evaluation {want}")]
    HeldOutMismatch {
        at: String,
        got: String,
        want: String,
    },
}

/// Undirected multigraph: parallel edges and loops allowed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Multigraph {
    pub n_vertices: usize,
    pub edges: Vec<(usize, usize)>,
}

impl Multigraph {
    pub fn new(n_vertices: usize, edges: Vec<(usize, usize)>) -> Result<Self, GraphError> {
        for &(u, v) in &edges {
            if u >= n_vertices || v >= n_vertices {
                return Err(GraphError::BadEdge {
                    u,
                    v,
                    n: n_vertices,
                });
            }
        }
        Ok(Multigraph { n_vertices, edges })
    }

    /// Cycle `C_n` (for `n = 1` a single loop, `n = 2` a doubled edge).
    pub fn cycle(n: usize) -> Self {
        Multigraph {
            n_vertices: n,
            edges: (0..n).map(|i| (i, (i + 1) % n)).collect(),
        }
    }

    /// Path with `m` edges (`m + 1` vertices).
    pub fn path(m: usize) -> Self {
        Multigraph {
            n_vertices: m + 1,
            edges: (0..m).map(|i| (i, i + 1)).collect(),
        }
    }

    /// Complete graph `K_n`.
    pub fn complete(n: usize) -> Self {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in (u + 1)..n {
                edges.push((u, v));
            }
        }
        Multigraph {
            n_vertices: n,
            edges,
        }
    }

    /// Star with `k` leaves around a center vertex.
    pub fn star(k: usize) -> Self {
        Multigraph {
            n_vertices: k + 1,
            edges: (1..=k).map(|v| (0, v)).collect(),
        }
    }

    /// Theta graph: two hub vertices joined by three internally disjoint
    /// paths of length 2 (5 vertices, 6 edges).
    pub fn theta() -> Self {
        Multigraph {
            n_vertices: 5,
            edges: vec![(0, 2), (2, 1), (0, 3), (3, 1), (0, 4), (4, 1)],
        }
    }

    /// Small fixture with a doubled edge and a loop (3 vertices).
    pub fn doubled_edge_with_loop() -> Self {
        Multigraph {
            n_vertices: 3,
            edges: vec![(0, 1), (0, 1), (1, 2), (2, 2)],
        }
    }

    /// True when every vertex is reachable from vertex 0 (a single vertex
    /// with no edges counts as connected; an empty graph does not).
    pub fn is_connected(&self) -> bool {
        if self.n_vertices == 0 {
            return false;
        }
        let mut adjacency = vec![Vec::new(); self.n_vertices];
        for &(u, v) in &self.edges {
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        let mut seen = vec![false; self.n_vertices];
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        while let Some(u) = queue.pop_front() {
            for &v in &adjacency[u] {
                if !seen[v] {
                    seen[v] = true;
                    queue.push_back(v);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }
}

// --- Bivariate integer polynomials --------------------------------------

/// Sparse `Σ c_{ab} x^a y^b` with arbitrary-precision integer coefficients;
/// zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BivarIntPoly {
    pub terms: BTreeMap<(u32, u32), BigInt>,
}

impl BivarIntPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: BigInt) -> Self {
        let mut p = Self::default();
        p.insert_add((0, 0), c);
        p
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn x() -> Self {
        let mut p = Self::default();
        p.insert_add((1, 0), BigInt::one());
        p
    }

    pub fn y() -> Self {
        let mut p = Self::default();
        p.insert_add((0, 1), BigInt::one());
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn insert_add(&mut self, key: (u32, u32), val: BigInt) {
        if val.is_zero() {
            return;
        }
        let entry = self.terms.entry(key).or_insert_with(BigInt::zero);
        *entry += val;
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&key, val) in &other.terms {
            out.insert_add(key, val.clone());
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::default();
        for (&(a1, b1), c1) in &self.terms {
            for (&(a2, b2), c2) in &other.terms {
                out.insert_add((a1 + a2, b1 + b2), c1 * c2);
            }
        }
        out
    }

    pub fn eval_rational(&self, x: &BigRational, y: &BigRational) -> BigRational {
        let mut total = BigRational::zero();
        for (&(a, b), c) in &self.terms {
            let mut term = BigRational::from_integer(c.clone());
            for _ in 0..a {
                term *= x;
            }
            for _ in 0..b {
                term *= y;
            }
            total += term;
        }
        total
    }

    /// Sorted sparse term list `(x_exp, y_exp, coefficient)` with the
    /// coefficient as a decimal string (exact at any size).
    pub fn to_term_list(&self) -> Vec<BivarTermJson> {
        self.terms
            .iter()
            .map(|(&(x, y), c)| BivarTermJson {
                x,
                y,
                coeff: c.to_string(),
            })
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BivarTermJson {
    pub x: u32,
    pub y: u32,
    pub coeff: String,
}

impl std::fmt::Display for BivarIntPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        // Highest-degree terms first reads naturally.
        for (i, (&(a, b), c)) in self.terms.iter().rev().enumerate() {
            let c_str = c.to_string();
            let (sign, mag) = match c_str.strip_prefix('-') {
                Some(m) => ("-", m.to_string()),
                None => ("+", c_str),
            };
            if i == 0 {
                if sign == "-" {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let mut vars = String::new();
            if a == 1 {
                vars.push('x');
            } else if a > 1 {
                vars.push_str(&format!("x^{a}"));
            }
            if b == 1 {
                vars.push('y');
            } else if b > 1 {
                vars.push_str(&format!("y^{b}"));
            }
            if vars.is_empty() {
                write!(f, "{mag}")?;
            } else if mag == "1" {
                write!(f, "{vars}")?;
            } else {
                write!(f, "{mag}{vars}")?;
            }
        }
        Ok(())
    }
}

// --- Tutte polynomial ----------------------------------------------------

/// Tutte polynomial of a connected multigraph by deletion–contraction:
/// edgeless → 1, loop `e` → `y·T(G−e)`, bridge `e` → `x·T(G/e)`, otherwise
/// `T(G−e) + T(G/e)`. Memoized on a BFS-relabeled canonical edge list.
/// Hard-capped at [`TUTTE_EDGE_CAP`] edges.
pub fn tutte(g: &Multigraph) -> Result<BivarIntPoly, GraphError> {
    Multigraph::new(g.n_vertices, g.edges.clone())?;
    if !g.is_connected() {
        return Err(GraphError::Disconnected);
    }
    if g.edges.len() > TUTTE_EDGE_CAP {
        return Err(GraphError::TooManyEdges {
            got: g.edges.len(),
            cap: TUTTE_EDGE_CAP,
        });
    }
    let mut memo: HashMap<Vec<(usize, usize)>, BivarIntPoly> = HashMap::new();
    Ok(tutte_rec(&g.edges, &mut memo))
}

fn tutte_rec(
    edges: &[(usize, usize)],
    memo: &mut HashMap<Vec<(usize, usize)>, BivarIntPoly>,
) -> BivarIntPoly {
    if edges.is_empty() {
        return BivarIntPoly::one();
    }
    let key = canonical_edges(edges);
    if let Some(hit) = memo.get(&key) {
        return hit.clone();
    }
    let (u, v) = edges[0];
    let rest: Vec<(usize, usize)> = edges[1..].to_vec();
    let result = if u == v {
        BivarIntPoly::y().mul(&tutte_rec(&rest, memo))
    } else if is_bridge(&rest, u, v) {
        BivarIntPoly::x().mul(&tutte_rec(&contract(&rest, u, v), memo))
    } else {
        tutte_rec(&rest, memo).add(&tutte_rec(&contract(&rest, u, v), memo))
    };
    memo.insert(key, result.clone());
    result
}

/// `edges[0]` was (u, v); it is a bridge iff u and v are not connected by
/// the remaining edges.
fn is_bridge(rest: &[(usize, usize)], u: usize, v: usize) -> bool {
    let mut reach = BTreeSet::from([u]);
    loop {
        let before = reach.len();
        for &(a, b) in rest {
            if reach.contains(&a) {
                reach.insert(b);
            }
            if reach.contains(&b) {
                reach.insert(a);
            }
        }
        if reach.len() == before {
            return !reach.contains(&v);
        }
    }
}

/// Merge vertex `v` into `u` in the remaining edges (other parallel copies
/// of (u, v) become loops, exactly as contraction demands).
fn contract(rest: &[(usize, usize)], u: usize, v: usize) -> Vec<(usize, usize)> {
    rest.iter()
        .map(|&(a, b)| {
            let a = if a == v { u } else { a };
            let b = if b == v { u } else { b };
            (a, b)
        })
        .collect()
}

/// Canonical memo key: relabel edge-incident vertices in BFS discovery
/// order (components started at ascending smallest labels, neighbors
/// visited in ascending label order), then sort the normalized edge list.
fn canonical_edges(edges: &[(usize, usize)]) -> Vec<(usize, usize)> {
    let mut adjacency: BTreeMap<usize, BTreeSet<usize>> = BTreeMap::new();
    for &(u, v) in edges {
        adjacency.entry(u).or_default().insert(v);
        adjacency.entry(v).or_default().insert(u);
    }
    let mut relabel: BTreeMap<usize, usize> = BTreeMap::new();
    let mut queue = VecDeque::new();
    for (&start, _) in &adjacency {
        if relabel.contains_key(&start) {
            continue;
        }
        relabel.insert(start, relabel.len());
        queue.push_back(start);
        while let Some(cur) = queue.pop_front() {
            for &nb in &adjacency[&cur] {
                if !relabel.contains_key(&nb) {
                    relabel.insert(nb, relabel.len());
                    queue.push_back(nb);
                }
            }
        }
    }
    let mut relabeled: Vec<(usize, usize)> = edges
        .iter()
        .map(|&(u, v)| {
            let (a, b) = (relabel[&u], relabel[&v]);
            (a.min(b), a.max(b))
        })
        .collect();
    relabeled.sort_unstable();
    relabeled
}

/// Independent brute-force Tutte polynomial by rank–nullity subgraph
/// expansion: `T(G; x, y) = Σ_{A ⊆ E} (x−1)^{r(E)−r(A)} (y−1)^{|A|−r(A)}`
/// with `r(A) = n − (components of (V, A))`. Exponential in edges; capped
/// at [`ORACLE_EDGE_CAP`].
pub fn tutte_oracle(g: &Multigraph) -> Result<BivarIntPoly, GraphError> {
    Multigraph::new(g.n_vertices, g.edges.clone())?;
    if !g.is_connected() {
        return Err(GraphError::Disconnected);
    }
    let m = g.edges.len();
    if m > ORACLE_EDGE_CAP {
        return Err(GraphError::TooManyEdges {
            got: m,
            cap: ORACLE_EDGE_CAP,
        });
    }
    let rank = |mask: usize| -> usize {
        let mut parent: Vec<usize> = (0..g.n_vertices).collect();
        fn find(parent: &mut Vec<usize>, x: usize) -> usize {
            if parent[x] != x {
                let root = find(parent, parent[x]);
                parent[x] = root;
            }
            parent[x]
        }
        let mut components = g.n_vertices;
        for (i, &(u, v)) in g.edges.iter().enumerate() {
            if mask & (1 << i) != 0 {
                let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
                if ru != rv {
                    parent[ru] = rv;
                    components -= 1;
                }
            }
        }
        g.n_vertices - components
    };

    let full_rank = rank((1 << m) - 1);
    // (x−1)^k and (y−1)^k tables up to the largest exponents needed.
    let x_minus_1 = BivarIntPoly::x().add(&BivarIntPoly::constant(-BigInt::one()));
    let y_minus_1 = BivarIntPoly::y().add(&BivarIntPoly::constant(-BigInt::one()));
    let mut x_pows = vec![BivarIntPoly::one()];
    let mut y_pows = vec![BivarIntPoly::one()];
    for k in 1..=(full_rank.max(m)) {
        x_pows.push(x_pows[k - 1].mul(&x_minus_1));
        y_pows.push(y_pows[k - 1].mul(&y_minus_1));
    }

    let mut total = BivarIntPoly::zero();
    for mask in 0..(1usize << m) {
        let r = rank(mask);
        let size = mask.count_ones() as usize;
        total = total.add(&x_pows[full_rank - r].mul(&y_pows[size - r]));
    }
    Ok(total)
}

/// Formal partial derivative in `x`.
pub fn tutte_partial_x(t: &BivarIntPoly) -> BivarIntPoly {
    let mut out = BivarIntPoly::zero();
    for (&(a, b), c) in &t.terms {
        if a > 0 {
            out.insert_add((a - 1, b), c * BigInt::from(a));
        }
    }
    out
}

/// Number of spanning trees by a determinant-free deletion–contraction
/// count (`τ(G) = τ(G−e) + τ(G/e)` for ordinary edges, loops dropped,
/// bridges contracted). Shares no code with [`tutte`]; used to cross-check
/// `T(G; 1, 1)`.
pub fn spanning_tree_count(g: &Multigraph) -> Result<BigInt, GraphError> {
    Multigraph::new(g.n_vertices, g.edges.clone())?;
    if !g.is_connected() {
        return Err(GraphError::Disconnected);
    }
    if g.edges.len() > TUTTE_EDGE_CAP {
        return Err(GraphError::TooManyEdges {
            got: g.edges.len(),
            cap: TUTTE_EDGE_CAP,
        });
    }
    fn count(edges: &[(usize, usize)]) -> BigInt {
        match edges.split_first() {
            None => BigInt::one(),
            Some((&(u, v), rest)) if u == v => count(rest),
            Some((&(u, v), rest)) => {
                let contracted = count(&contract(rest, u, v));
                if is_bridge(rest, u, v) {
                    contracted
                } else {
                    count(rest) + contracted
                }
            }
        }
    }
    Ok(count(&g.edges))
}

// --- Rational univariate polynomials and the Steele polynomial -----------

/// Dense ascending-degree polynomial with exact rational coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalUniPoly {
    pub coeffs: Vec<BigRational>,
}

impl RationalUniPoly {
    pub fn zero() -> Self {
        RationalUniPoly { coeffs: Vec::new() }
    }

    fn trim(mut self) -> Self {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
        self
    }

    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn eval(&self, t: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * t + c;
        }
        acc
    }

    fn add(&self, other: &Self) -> Self {
        let mut coeffs = vec![BigRational::zero(); self.coeffs.len().max(other.coeffs.len())];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        RationalUniPoly { coeffs }.trim()
    }

    fn scale(&self, s: &BigRational) -> Self {
        RationalUniPoly {
            coeffs: self.coeffs.iter().map(|c| c * s).collect(),
        }
        .trim()
    }

    /// Multiply by `(t − t0)`.
    fn mul_linear(&self, t0: &BigRational) -> Self {
        let mut coeffs = vec![BigRational::zero(); self.coeffs.len() + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i + 1] += c;
            coeffs[i] -= c * t0;
        }
        RationalUniPoly { coeffs }.trim()
    }

    /// Exact `∫₀¹` by the termwise power rule.
    pub fn integral_01(&self) -> BigRational {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(j, c)| c / BigRational::from_integer(BigInt::from(j as u32 + 1)))
            .sum()
    }

    /// Coefficients as exact `"numerator/denominator"` strings, ascending.
    pub fn coeff_strings(&self) -> Vec<String> {
        self.coeffs
            .iter()
            .map(|c| format!("{}/{}", c.numer(), c.denom()))
            .collect()
    }
}

impl std::fmt::Display for RationalUniPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        // Highest-degree terms first reads naturally.
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let c_str = c.to_string();
            let (sign, mag) = match c_str.strip_prefix('-') {
                Some(m) => ("-", m.to_string()),
                None => ("+", c_str),
            };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, " {sign} ")?;
            }
            let var = match k {
                0 => String::new(),
                1 => "t".to_string(),
                _ => format!("t^{k}"),
            };
            if var.is_empty() {
                write!(f, "{mag}")?;
            } else if mag == "1" {
                write!(f, "{var}")?;
            } else {
                write!(f, "{mag}{var}")?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Unique polynomial of degree `< points.len()` through the given
/// `(t, value)` pairs, by exact Lagrange interpolation.
fn lagrange(points: &[(BigRational, BigRational)]) -> RationalUniPoly {
    let mut total = RationalUniPoly::zero();
    for (i, (ti, vi)) in points.iter().enumerate() {
        let mut basis = RationalUniPoly {
            coeffs: vec![BigRational::one()],
        };
        let mut denominator = BigRational::one();
        for (j, (tj, _)) in points.iter().enumerate() {
            if i != j {
                basis = basis.mul_linear(tj);
                denominator *= ti - tj;
            }
        }
        total = total.add(&basis.scale(&(vi / denominator)));
    }
    total
}

/// Steele polynomial `S(G; t)`: sample
/// `(1−t)/t · T_x(G; 1/t, 1/(1−t)) / T(G; 1/t, 1/(1−t))` at `|E| + 1` exact
/// rational points `k/(|E|+3)` inside `(0, 1)` (candidates with a vanishing
/// denominator are skipped and replaced from finer fractions), interpolate,
/// and certify against 2 held-out samples. The certified interpolant is the
/// unique degree-≤-`|E|` polynomial extending the sampled ratio.
pub fn steele(g: &Multigraph) -> Result<RationalUniPoly, GraphError> {
    if g.edges.is_empty() {
        return Err(GraphError::NoEdges);
    }
    let t_poly = tutte(g)?;
    let tx_poly = tutte_partial_x(&t_poly);
    let m = g.edges.len();

    let value_at = |t: &BigRational| -> Option<BigRational> {
        let one = BigRational::one();
        let x = one.clone() / t;
        let y = one.clone() / (&one - t);
        let denominator = t_poly.eval_rational(&x, &y);
        if denominator.is_zero() {
            return None;
        }
        Some((&one - t) / t * tx_poly.eval_rational(&x, &y) / denominator)
    };

    let needed = m + 3; // m + 1 to interpolate, 2 to certify
    let mut samples: Vec<(BigRational, BigRational)> = Vec::with_capacity(needed);
    let mut used: BTreeSet<BigRational> = BTreeSet::new();
    'denoms: for denominator in (m as u32 + 3).. {
        if denominator > m as u32 + 64 {
            return Err(GraphError::SamplesExhausted);
        }
        for k in 1..denominator {
            let t = BigRational::new(BigInt::from(k), BigInt::from(denominator));
            if !used.insert(t.clone()) {
                continue;
            }
            if let Some(v) = value_at(&t) {
                samples.push((t, v));
                if samples.len() == needed {
                    break 'denoms;
                }
            }
        }
    }

    let interpolant = lagrange(&samples[..=m]);
    for (t, v) in &samples[m + 1..] {
        let got = interpolant.eval(t);
        if &got != v {
            return Err(GraphError::HeldOutMismatch {
                at: t.to_string(),
                got: got.to_string(),
                want: v.to_string(),
            });
        }
    }
    Ok(interpolant)
}

/// Expected minimum-spanning-tree length of `G` under i.i.d. uniform
/// `[0, 1]` edge weights: the exact integral of the Steele polynomial over
/// `[0, 1]`.
pub fn mean_mst_length(g: &Multigraph) -> Result<BigRational, GraphError> {
    Ok(steele(g)?.integral_01())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ratio(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn single_edge_is_x_and_single_loop_is_y() {
        let edge = Multigraph::new(2, vec![(0, 1)]).unwrap();
        assert_eq!(tutte(&edge).unwrap(), BivarIntPoly::x());
        assert_eq!(tutte_oracle(&edge).unwrap(), BivarIntPoly::x());
        let lp = Multigraph::new(1, vec![(0, 0)]).unwrap();
        assert_eq!(tutte(&lp).unwrap(), BivarIntPoly::y());
    }

    #[test]
    fn triangle_tutte_is_x2_plus_x_plus_y() {
        let mut want = BivarIntPoly::x().mul(&BivarIntPoly::x());
        want = want.add(&BivarIntPoly::x()).add(&BivarIntPoly::y());
        assert_eq!(tutte(&Multigraph::cycle(3)).unwrap(), want);
        assert_eq!(tutte_oracle(&Multigraph::cycle(3)).unwrap(), want);
    }

    #[test]
    fn partial_x_basics() {
        let t = tutte(&Multigraph::cycle(3)).unwrap(); // x² + x + y
        let dx = tutte_partial_x(&t); // 2x + 1
        let mut want = BivarIntPoly::x().mul(&BivarIntPoly::constant(BigInt::from(2)));
        want = want.add(&BivarIntPoly::one());
        assert_eq!(dx, want);
        assert!(tutte_partial_x(&BivarIntPoly::y()).is_zero());
    }

    #[test]
    fn disconnected_and_oversized_inputs_are_rejected() {
        let disconnected = Multigraph::new(4, vec![(0, 1), (2, 3)]).unwrap();
        assert!(matches!(
            tutte(&disconnected),
            Err(GraphError::Disconnected)
        ));
        let big = Multigraph::cycle(17);
        assert!(matches!(tutte(&big), Err(GraphError::TooManyEdges { .. })));
        assert!(matches!(
            tutte_oracle(&Multigraph::cycle(13)),
            Err(GraphError::TooManyEdges { .. })
        ));
    }

    #[test]
    fn steele_of_trees_is_m_times_one_minus_t() {
        // For a tree T = x^m, so the ratio collapses to m(1−t).
        let p2 = steele(&Multigraph::path(2)).unwrap();
        assert_eq!(p2.coeffs, vec![ratio(2, 1), ratio(-2, 1)]);
        let e1 = steele(&Multigraph::path(1)).unwrap();
        assert_eq!(e1.coeffs, vec![ratio(1, 1), ratio(-1, 1)]);
    }

    #[test]
    fn mean_mst_of_triangle_is_three_quarters() {
        assert_eq!(mean_mst_length(&Multigraph::cycle(3)).unwrap(), ratio(3, 4));
        assert_eq!(mean_mst_length(&Multigraph::path(1)).unwrap(), ratio(1, 2));
        assert_eq!(mean_mst_length(&Multigraph::star(4)).unwrap(), ratio(2, 1));
    }

    #[test]
    fn spanning_tree_count_matches_tutte_at_one_one() {
        for g in [
            Multigraph::cycle(5),
            Multigraph::complete(4),
            Multigraph::theta(),
            Multigraph::doubled_edge_with_loop(),
        ] {
            let at_ones = tutte(&g).unwrap().eval_rational(&ratio(1, 1), &ratio(1, 1));
            assert_eq!(
                at_ones,
                BigRational::from_integer(spanning_tree_count(&g).unwrap())
            );
        }
    }

    #[test]
    fn display_reads_naturally() {
        let t = tutte(&Multigraph::cycle(3)).unwrap();
        assert_eq!(t.to_string(), "x^2 + x + y");
    }
}
