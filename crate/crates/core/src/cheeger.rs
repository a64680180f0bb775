//! Signed bipartiteness ratio, frustration index, exact multi-way signed
//! Cheeger constants and sweep-cut upper bounds.
//!
//! The numerator of the bipartiteness ratio of a sub-bipartition `(V1, V2)`
//! with union `U` is evaluated edge by edge:
//!
//! * a negative edge inside `V1` or inside `V2` costs `2w` (counted from both ends),
//! * a positive edge between `V1` and `V2` costs `2w`,
//! * an edge leaving `U` costs `w`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Sign, SignedGraph, SubBipartition, SwitchingFunction, VertexMeasure};
use crate::spectral::{max_weight_degree_ratio, rayleigh};

/// Largest vertex set accepted by exact frustration by default.
pub const DEFAULT_FRUSTRATION_CAP: usize = 24;
/// Hard ceiling on subset enumeration (bitmask width).
const MAX_ENUMERATION_VERTICES: usize = 30;

fn beta_numerator(g: &SignedGraph, sides: &[u8]) -> f64 {
    let mut num = 0.0;
    for e in g.edges() {
        let (a, b) = (sides[e.u], sides[e.v]);
        num += match (a, b) {
            (0, 0) => 0.0,
            (0, _) | (_, 0) => e.weight,
            _ => {
                let same = a == b;
                match (same, e.sign) {
                    (true, Sign::Negative) | (false, Sign::Positive) => 2.0 * e.weight,
                    _ => 0.0,
                }
            }
        };
    }
    num
}

fn volume_of_sides(mu: &VertexMeasure, sides: &[u8]) -> f64 {
    sides
        .iter()
        .enumerate()
        .filter(|(_, &s)| s != 0)
        .map(|(v, _)| mu.get(v))
        .sum()
}

/// Bipartiteness ratio from a side assignment (`0` outside, `1`/`2` the two
/// sides). The union must be nonempty.
pub(crate) fn beta_of_sides(g: &SignedGraph, sides: &[u8], mu: &VertexMeasure) -> f64 {
    beta_numerator(g, sides) / volume_of_sides(mu, sides)
}

/// Signed bipartiteness ratio `beta^sigma(V1, V2)`.
pub fn beta(g: &SignedGraph, bp: &SubBipartition, mu: &VertexMeasure) -> Result<f64> {
    let n = g.vertex_count();
    mu.check_len(n)?;
    for &x in bp.v1().iter().chain(bp.v2()) {
        g.check_vertex(x)?;
    }
    Ok(beta_of_sides(g, &bp.sides(n), mu))
}

/// Signed expansion `rho^sigma(S) = (|E^-(S)| + |E(S, S^c)|) / vol(S)`,
/// i.e. `beta^sigma(S, ∅)`.
pub fn signed_expansion(g: &SignedGraph, s: &[usize], mu: &VertexMeasure) -> Result<f64> {
    if s.is_empty() {
        return Err(Error::EmptySet);
    }
    let bp = SubBipartition::new(s.to_vec(), Vec::new(), g.vertex_count())?;
    beta(g, &bp, mu)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case", tag = "method")]
pub enum FrustrationMethod {
    /// Enumerate every switching of the induced subgraph.
    Exact { cap: usize },
    /// Steepest-descent single-vertex switching from `restarts` seeded random
    /// starts. The result is an upper bound.
    LocalSearch { restarts: usize, seed: u64 },
}

impl FrustrationMethod {
    pub fn exact() -> Self {
        FrustrationMethod::Exact {
            cap: DEFAULT_FRUSTRATION_CAP,
        }
    }

    pub fn local_search(seed: u64) -> Self {
        FrustrationMethod::LocalSearch { restarts: 20, seed }
    }
}

/// Frustration index `e_min(S)` of the induced subgraph on `S`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FrustrationResult {
    pub value: f64,
    /// Edge ids whose deletion balances the induced subgraph.
    pub deleted_edges: Vec<usize>,
    /// Switching (identity outside `S`) under which the negative edges inside
    /// `S` are exactly `deleted_edges`.
    pub best_switching: SwitchingFunction,
    /// `true` when `value` comes from a heuristic.
    pub upper_bound: bool,
}

/// Induced subgraph of `S` in local coordinates.
struct Induced {
    vertices: Vec<usize>,
    /// `(edge id, local u, local v, negative)` in edge-id order.
    edges: Vec<(usize, usize, usize, bool)>,
    weights: Vec<f64>,
    /// Per local vertex: indices into `edges`.
    incident: Vec<Vec<usize>>,
}

impl Induced {
    fn new(g: &SignedGraph, s: &[usize]) -> Result<Self> {
        let n = g.vertex_count();
        let mut local = vec![usize::MAX; n];
        let mut vertices = s.to_vec();
        vertices.sort_unstable();
        vertices.dedup();
        for (i, &v) in vertices.iter().enumerate() {
            g.check_vertex(v)?;
            local[v] = i;
        }
        let mut edges = Vec::new();
        let mut weights = Vec::new();
        let mut incident = vec![Vec::new(); vertices.len()];
        for (id, e) in g.edges().iter().enumerate() {
            let (a, b) = (local[e.u], local[e.v]);
            if a != usize::MAX && b != usize::MAX {
                incident[a].push(edges.len());
                incident[b].push(edges.len());
                edges.push((id, a, b, e.sign.is_negative()));
                weights.push(e.weight);
            }
        }
        Ok(Induced {
            vertices,
            edges,
            weights,
            incident,
        })
    }

    fn frustrated(&self, idx: usize, theta: u64) -> bool {
        let (_, a, b, neg) = self.edges[idx];
        let flip = ((theta >> a) ^ (theta >> b)) & 1 == 1;
        neg ^ flip
    }

    /// Weight of frustrated edges under `theta` (bit set = switched), summed
    /// in edge-id order.
    fn cost(&self, theta: u64) -> f64 {
        (0..self.edges.len())
            .filter(|&i| self.frustrated(i, theta))
            .map(|i| self.weights[i])
            .sum()
    }

    fn cost_of(&self, theta: &[bool]) -> f64 {
        self.edges
            .iter()
            .zip(&self.weights)
            .filter(|((_, a, b, neg), _)| neg ^ (theta[*a] != theta[*b]))
            .map(|(_, w)| w)
            .sum()
    }

    fn result(&self, g: &SignedGraph, theta: &[bool], upper_bound: bool) -> FrustrationResult {
        let deleted_edges: Vec<usize> = self
            .edges
            .iter()
            .filter(|(_, a, b, neg)| neg ^ (theta[*a] != theta[*b]))
            .map(|(id, ..)| *id)
            .collect();
        let mut signs = vec![Sign::Positive; g.vertex_count()];
        for (i, &v) in self.vertices.iter().enumerate() {
            if theta[i] {
                signs[v] = Sign::Negative;
            }
        }
        FrustrationResult {
            value: self.cost_of(theta),
            deleted_edges,
            best_switching: SwitchingFunction::new(signs),
            upper_bound,
        }
    }

    /// Exact minimum over the `2^{m-1}` switchings fixing the first vertex.
    ///
    /// Walks a Gray code with an incrementally maintained cost and recomputes
    /// the exact cost of every state that could improve the incumbent, so the
    /// reported minimum is an exact sum in edge-id order.
    fn exact_min(&self) -> (f64, u64) {
        let m = self.vertices.len();
        if m <= 1 || self.edges.is_empty() {
            return (self.cost(0), 0);
        }
        let total: f64 = self.weights.iter().sum();
        let tol = 1e-10 * total;
        let mut theta = 0u64;
        let mut approx = self.cost(0);
        let mut best = approx;
        let mut best_theta = 0u64;
        let steps: u64 = 1 << (m - 1);
        for step in 1..steps {
            // Gray code over local vertices 1..m; vertex 0 stays unswitched.
            let bit = step.trailing_zeros() as usize + 1;
            for &i in &self.incident[bit] {
                let w = self.weights[i];
                if self.frustrated(i, theta) {
                    approx -= w;
                } else {
                    approx += w;
                }
            }
            theta ^= 1 << bit;
            if step % 1024 == 0 {
                approx = self.cost(theta);
            }
            if approx <= best + tol {
                let exact = self.cost(theta);
                if exact < best {
                    best = exact;
                    best_theta = theta;
                }
            }
        }
        (best, best_theta)
    }
}

fn bits_to_vec(theta: u64, m: usize) -> Vec<bool> {
    (0..m).map(|i| (theta >> i) & 1 == 1).collect()
}

/// Frustration index `e_min(S)`: least total weight of edges whose removal
/// from the induced subgraph on `S` leaves it balanced.
pub fn frustration(
    g: &SignedGraph,
    s: &[usize],
    method: FrustrationMethod,
) -> Result<FrustrationResult> {
    if s.is_empty() {
        return Err(Error::EmptySet);
    }
    let ind = Induced::new(g, s)?;
    let m = ind.vertices.len();
    match method {
        FrustrationMethod::Exact { cap } => {
            if m > cap || m > 63 {
                return Err(Error::TooLargeForExact { size: m, cap });
            }
            let (_, theta) = ind.exact_min();
            Ok(ind.result(g, &bits_to_vec(theta, m), false))
        }
        FrustrationMethod::LocalSearch { restarts, seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut best: Option<(f64, Vec<bool>)> = None;
            for _ in 0..restarts.max(1) {
                let mut theta: Vec<bool> = (0..m).map(|_| rng.gen()).collect();
                descend(&ind, &mut theta);
                let c = ind.cost_of(&theta);
                if best.as_ref().is_none_or(|(b, _)| c < *b) {
                    best = Some((c, theta));
                }
            }
            let (_, theta) = best.unwrap();
            Ok(ind.result(g, &theta, true))
        }
    }
}

/// Steepest descent over single-vertex switchings.
fn descend(ind: &Induced, theta: &mut [bool]) {
    let total: f64 = ind.weights.iter().sum();
    let tiny = 1e-12 * total.max(1.0);
    loop {
        let mut best_gain = -tiny;
        let mut best_vertex = None;
        for (v, inc) in ind.incident.iter().enumerate() {
            let gain: f64 = inc
                .iter()
                .map(|&i| {
                    let (_, a, b, neg) = ind.edges[i];
                    if neg ^ (theta[a] != theta[b]) {
                        -ind.weights[i]
                    } else {
                        ind.weights[i]
                    }
                })
                .sum();
            if gain < best_gain {
                best_gain = gain;
                best_vertex = Some(v);
            }
        }
        match best_vertex {
            Some(v) => theta[v] = !theta[v],
            None => return,
        }
    }
}

/// Sum of `w_uv` over edges with exactly one endpoint in the mask.
fn boundary_of_mask(g: &SignedGraph, mask: u64) -> f64 {
    g.edges()
        .iter()
        .filter(|e| ((mask >> e.u) ^ (mask >> e.v)) & 1 == 1)
        .map(|e| e.weight)
        .sum()
}

fn volume_of_mask(mu: &VertexMeasure, mask: u64) -> f64 {
    (0..mu.len())
        .filter(|&v| (mask >> v) & 1 == 1)
        .map(|v| mu.get(v))
        .sum()
}

fn mask_vertices(mask: u64, n: usize) -> Vec<usize> {
    (0..n).filter(|&v| (mask >> v) & 1 == 1).collect()
}

/// `alpha_bar(S) = (2 e_min(S) + |E(S, S^c)|) / vol(S)`, together with the
/// best switching on `S` (bit set = switched).
fn alpha_bar_mask(g: &SignedGraph, mu: &VertexMeasure, mask: u64) -> (f64, u64) {
    let n = g.vertex_count();
    let vertices = mask_vertices(mask, n);
    let ind = Induced::new(g, &vertices).expect("mask within range");
    let (e_min, theta_local) = ind.exact_min();
    let mut theta = 0u64;
    for (i, &v) in vertices.iter().enumerate() {
        if (theta_local >> i) & 1 == 1 {
            theta |= 1 << v;
        }
    }
    let value = (2.0 * e_min + boundary_of_mask(g, mask)) / volume_of_mask(mu, mask);
    (value, theta)
}

/// `alpha_bar^sigma(S)` with exact frustration.
pub fn alpha_bar(g: &SignedGraph, s: &[usize], mu: &VertexMeasure) -> Result<f64> {
    if s.is_empty() {
        return Err(Error::EmptySet);
    }
    mu.check_len(g.vertex_count())?;
    let fr = frustration(g, s, FrustrationMethod::exact())?;
    let mut set = s.to_vec();
    set.sort_unstable();
    set.dedup();
    let mut in_s = vec![false; g.vertex_count()];
    set.iter().for_each(|&v| in_s[v] = true);
    let boundary: f64 = g
        .edges()
        .iter()
        .filter(|e| in_s[e.u] != in_s[e.v])
        .map(|e| e.weight)
        .sum();
    Ok((2.0 * fr.value + boundary) / mu.volume(&set))
}

/// Bipartition of `mask` induced by a switching: unswitched vertices form
/// `V1`, switched ones `V2`.
fn bipartition_from(mask: u64, theta: u64, n: usize) -> SubBipartition {
    let v1 = mask_vertices(mask & !theta, n);
    let v2 = mask_vertices(mask & theta, n);
    SubBipartition::new(v1, v2, n).expect("nonempty mask")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CertificateMode {
    ExactEnumeration,
    SweepUpperBound,
    SwitchingForm,
}

/// Value of a (multi-way) signed Cheeger constant, or an upper bound on it,
/// with the sub-bipartitions that attain it.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheegerCertificate {
    pub value: f64,
    pub witness: Vec<SubBipartition>,
    pub mode: CertificateMode,
}

impl CheegerCertificate {
    /// `max_i beta(witness_i)` recomputed from the graph.
    pub fn recompute(&self, g: &SignedGraph, mu: &VertexMeasure) -> Result<f64> {
        self.witness
            .iter()
            .map(|bp| beta(g, bp, mu))
            .try_fold(0.0f64, |acc, b| Ok(acc.max(b?)))
    }

    pub fn is_pairwise_disjoint(&self) -> bool {
        self.witness
            .iter()
            .enumerate()
            .all(|(i, a)| self.witness[i + 1..].iter().all(|b| a.is_disjoint_from(b)))
    }
}

/// Vertex caps for exact Cheeger enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ExactBudget {
    /// Largest `N` for `k = 1`.
    pub single_way: usize,
    /// Largest `N` for `k >= 2`.
    pub multi_way: usize,
}

impl Default for ExactBudget {
    fn default() -> Self {
        ExactBudget {
            single_way: 12,
            multi_way: 9,
        }
    }
}

impl ExactBudget {
    pub fn uniform(max_vertices: usize) -> Self {
        ExactBudget {
            single_way: max_vertices,
            multi_way: max_vertices,
        }
    }

    pub fn check(&self, n: usize, k: usize) -> Result<()> {
        let cap = if k == 1 {
            self.single_way
        } else {
            self.multi_way
        };
        let cap = cap.min(MAX_ENUMERATION_VERTICES);
        if n > cap {
            Err(Error::BudgetExceeded { n, k, cap })
        } else {
            Ok(())
        }
    }
}

/// Exact `h_k^sigma(mu)` with the default budget.
pub fn h_exact(g: &SignedGraph, k: usize, mu: &VertexMeasure) -> Result<CheegerCertificate> {
    h_exact_with(g, k, mu, ExactBudget::default())
}

/// Exact `h_k^sigma(mu) = min over k disjoint sub-bipartitions of the largest
/// bipartiteness ratio`.
///
/// Uses `h_k = min over k disjoint nonempty subsets S_i of max_i alpha_bar(S_i)`:
/// for `k = 1` a pruned scan over subsets, otherwise a subset dynamic
/// program over a table of `alpha_bar` values.
pub fn h_exact_with(
    g: &SignedGraph,
    k: usize,
    mu: &VertexMeasure,
    budget: ExactBudget,
) -> Result<CheegerCertificate> {
    let n = g.vertex_count();
    if k == 0 || k > n {
        return Err(Error::IndexOutOfRange { index: k, len: n });
    }
    mu.check_len(n)?;
    budget.check(n, k)?;
    if k == 1 {
        return Ok(h1_scan(g, mu));
    }
    let table = alpha_table(g, mu);
    let (value, sets) = min_max_partition(&table, n, k);
    let witness = sets
        .into_iter()
        .map(|s| bipartition_from(s, table[s as usize].1, n))
        .collect();
    Ok(CheegerCertificate {
        value,
        witness,
        mode: CertificateMode::ExactEnumeration,
    })
}

/// Dual constant `h~_k^sigma = h_k^{-sigma}`.
pub fn h_dual_exact(
    g: &SignedGraph,
    k: usize,
    mu: &VertexMeasure,
    budget: ExactBudget,
) -> Result<CheegerCertificate> {
    h_exact_with(&g.negated(), k, mu, budget)
}

fn h1_scan(g: &SignedGraph, mu: &VertexMeasure) -> CheegerCertificate {
    let n = g.vertex_count();
    let mut best = f64::INFINITY;
    let mut best_set = (0u64, 0u64);
    for mask in 1u64..(1u64 << n) {
        let boundary = boundary_of_mask(g, mask);
        let vol = volume_of_mask(mu, mask);
        if boundary / vol >= best {
            continue;
        }
        let (value, theta) = alpha_bar_mask(g, mu, mask);
        if value < best {
            best = value;
            best_set = (mask, theta);
        }
    }
    CheegerCertificate {
        value: best,
        witness: vec![bipartition_from(best_set.0, best_set.1, n)],
        mode: CertificateMode::ExactEnumeration,
    }
}

/// `alpha_bar` and best switching for every mask (index 0 unused).
fn alpha_table(g: &SignedGraph, mu: &VertexMeasure) -> Vec<(f64, u64)> {
    let n = g.vertex_count();
    (0u64..(1u64 << n))
        .into_par_iter()
        .map(|mask| {
            if mask == 0 {
                (f64::INFINITY, 0)
            } else {
                alpha_bar_mask(g, mu, mask)
            }
        })
        .collect()
}

/// Minimum over `k` disjoint nonempty subsets of `max alpha_bar`, by a DP
/// over masks. Returns the value and the chosen subsets.
fn min_max_partition(table: &[(f64, u64)], n: usize, k: usize) -> (f64, Vec<u64>) {
    let size = 1usize << n;
    // level 1: best single subset inside each mask
    let mut prev_val = vec![f64::INFINITY; size];
    let mut prev_arg = vec![0u64; size];
    for m in 1..size {
        prev_val[m] = table[m].0;
        prev_arg[m] = m as u64;
        let mut rest = m;
        while rest != 0 {
            let bit = rest & rest.wrapping_neg();
            rest ^= bit;
            let sub = m ^ bit;
            if prev_val[sub] < prev_val[m] {
                prev_val[m] = prev_val[sub];
                prev_arg[m] = prev_arg[sub];
            }
        }
    }
    let mut levels_arg: Vec<Vec<u64>> = vec![prev_arg];
    let mut level_val = prev_val;
    for j in 2..=k {
        let mut val = vec![f64::INFINITY; size];
        // 0 = lowest vertex unused, otherwise the subset taken with it.
        let mut arg = vec![0u64; size];
        for m in 1..size {
            if (m.count_ones() as usize) < j {
                continue;
            }
            let low = m & m.wrapping_neg();
            let rest = m ^ low;
            let mut best = val[rest];
            let mut choice = 0u64;
            // every subset of `rest`, including the empty one
            let mut t = rest;
            loop {
                let s = t | low;
                let r = m ^ s;
                let other = level_val[r];
                if other.is_finite() {
                    let v = table[s].0.max(other);
                    if v < best {
                        best = v;
                        choice = s as u64;
                    }
                }
                if t == 0 {
                    break;
                }
                t = (t - 1) & rest;
            }
            val[m] = best;
            arg[m] = choice;
        }
        levels_arg.push(arg);
        level_val = val;
    }

    let full = size - 1;
    let value = level_val[full];
    let mut sets = Vec::with_capacity(k);
    let mut m = full;
    let mut j = k;
    while j > 1 {
        let choice = levels_arg[j - 1][m] as usize;
        if choice == 0 {
            m ^= m & m.wrapping_neg();
        } else {
            sets.push(choice as u64);
            m ^= choice;
            j -= 1;
        }
    }
    sets.push(levels_arg[0][m]);
    sets.sort_unstable_by_key(|s| s.trailing_zeros());
    (value, sets)
}

/// Best threshold cut of a function.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepResult {
    pub bipartition: SubBipartition,
    pub value: f64,
    /// Threshold `t` on `|f|` producing the cut; `0` means the
    /// `{f >= 0}, {f < 0}` convention.
    pub threshold: f64,
    /// Upper bound the sweep is guaranteed to meet.
    pub guarantee: f64,
}

/// Sweep over `V_f(t) = {f >= t}`, `V_f(-t) = {f <= -t}` for `t` in the
/// distinct nonzero `|f(u)|` (plus the `t = 0` convention when
/// `include_zero`), restricted to `support` when given. Ties keep the smallest
/// threshold.
pub(crate) fn sweep_cuts(
    g: &SignedGraph,
    f: &[f64],
    mu: &VertexMeasure,
    support: Option<&[bool]>,
    include_zero: bool,
) -> Result<(SubBipartition, f64, f64)> {
    let n = g.vertex_count();
    if f.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: f.len(),
        });
    }
    mu.check_len(n)?;
    let inside = |v: usize| support.is_none_or(|s| s[v]);
    let mut thresholds: Vec<f64> = (0..n)
        .filter(|&v| inside(v) && f[v] != 0.0)
        .map(|v| f[v].abs())
        .collect();
    if thresholds.is_empty() {
        return Err(Error::ZeroFunction);
    }
    thresholds.sort_by(f64::total_cmp);
    thresholds.dedup();
    if include_zero {
        thresholds.insert(0, 0.0);
    }
    let mut best: Option<(f64, f64, Vec<u8>)> = None;
    let mut sides = vec![0u8; n];
    for &t in &thresholds {
        for v in 0..n {
            sides[v] = if !inside(v) {
                0
            } else if t == 0.0 {
                if f[v] >= 0.0 {
                    1
                } else {
                    2
                }
            } else if f[v] >= t {
                1
            } else if f[v] <= -t {
                2
            } else {
                0
            };
        }
        if sides.iter().all(|&s| s == 0) {
            continue;
        }
        let value = beta_of_sides(g, &sides, mu);
        if best.as_ref().is_none_or(|(b, ..)| value < *b) {
            best = Some((value, t, sides.clone()));
        }
    }
    let (value, t, sides) = best.ok_or(Error::ZeroFunction)?;
    let v1 = (0..n).filter(|&v| sides[v] == 1).collect();
    let v2 = (0..n).filter(|&v| sides[v] == 2).collect();
    Ok((SubBipartition::new(v1, v2, n)?, value, t))
}

/// Quadratic sweep: the best cut satisfies
/// `beta <= sqrt(2 d_mu^w R^sigma(f))`.
pub fn sweep_quadratic(g: &SignedGraph, f: &[f64], mu: &VertexMeasure) -> Result<SweepResult> {
    let (bipartition, value, threshold) = sweep_cuts(g, f, mu, None, true)?;
    let guarantee = (2.0 * max_weight_degree_ratio(g, mu) * rayleigh(g, f, mu)?).sqrt();
    Ok(SweepResult {
        bipartition,
        value,
        threshold,
        guarantee,
    })
}

/// `sum_{u~v} w_uv |f(u) - sigma(uv) f(v)| / sum_u mu(u) |f(u)|`.
pub fn l1_rayleigh(g: &SignedGraph, f: &[f64], mu: &VertexMeasure) -> Result<f64> {
    let den: f64 = f.iter().zip(mu.values()).map(|(x, m)| m * x.abs()).sum();
    if den == 0.0 {
        return Err(Error::ZeroFunction);
    }
    let num: f64 = g
        .edges()
        .iter()
        .map(|e| e.weight * (f[e.u] - e.sign.value() * f[e.v]).abs())
        .sum();
    Ok(num / den)
}

/// Linear sweep: the best cut satisfies `beta <= l1_rayleigh(f)`.
pub fn sweep_linear(g: &SignedGraph, f: &[f64], mu: &VertexMeasure) -> Result<SweepResult> {
    let (bipartition, value, threshold) = sweep_cuts(g, f, mu, None, false)?;
    Ok(SweepResult {
        bipartition,
        value,
        threshold,
        guarantee: l1_rayleigh(g, f, mu)?,
    })
}
