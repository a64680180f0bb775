//! k-way signed spectral clustering.
//!
//! Pipeline: spectral embedding → sphere normalization → partition under the
//! projective pseudometric → cutoff localization → coordinate selection →
//! quadratic sweep restricted to each localized support.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::cheeger::{beta, sweep_cuts};
use crate::error::{Error, Result};
use crate::graph::{SignedGraph, SubBipartition, VertexMeasure};
use crate::spectral::{rayleigh, rayleigh_vector, spectrum, Operator};

const ZERO_NORM: f64 = 1e-12;
const UNIT_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum EmbeddingMode {
    /// First `k` eigenfunctions.
    #[default]
    Balanced,
    /// Last `k` eigenfunctions, largest eigenvalue first.
    Antibalanced,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum PartitionStrategy {
    #[default]
    RandomPadded,
    ProjectiveKmeans,
}

/// Spectral embedding `Phi: V -> R^k`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Embedding {
    /// `points[v] = Phi(v)`.
    pub points: Vec<Vec<f64>>,
    pub k: usize,
    pub mode: EmbeddingMode,
    /// Eigenvalues of the coordinates, in coordinate order.
    pub eigenvalues: Vec<f64>,
}

/// Embeds `g` with the first (or last) `k` eigenfunctions of the normalized
/// Laplacian.
pub fn embed(g: &SignedGraph, k: usize, mode: EmbeddingMode) -> Result<Embedding> {
    let n = g.vertex_count();
    if k == 0 || k > n {
        return Err(Error::IndexOutOfRange { index: k, len: n });
    }
    let s = spectrum(g, Operator::Normalized)?;
    let indices: Vec<usize> = match mode {
        EmbeddingMode::Balanced => (0..k).collect(),
        EmbeddingMode::Antibalanced => (n - k..n).rev().collect(),
    };
    let points = (0..n)
        .map(|v| indices.iter().map(|&i| s.eigenfunctions[i][v]).collect())
        .collect();
    Ok(Embedding {
        points,
        k,
        mode,
        eigenvalues: indices.iter().map(|&i| s.eigenvalues[i]).collect(),
    })
}

fn norm(x: &[f64]) -> f64 {
    x.iter().map(|a| a * a).sum::<f64>().sqrt()
}

fn projective(x: &[f64], y: &[f64]) -> f64 {
    let (mut plus, mut minus) = (0.0, 0.0);
    for (a, b) in x.iter().zip(y) {
        plus += (a + b) * (a + b);
        minus += (a - b) * (a - b);
    }
    plus.min(minus).sqrt()
}

/// Projective pseudometric `min(|x + y|, |x - y|)` on unit vectors.
pub fn projective_distance(x: &[f64], y: &[f64]) -> Result<f64> {
    if x.len() != y.len() {
        return Err(Error::DimensionMismatch {
            expected: x.len(),
            got: y.len(),
        });
    }
    for z in [x, y] {
        let nz = norm(z);
        if (nz - 1.0).abs() > UNIT_TOLERANCE {
            return Err(Error::NotUnit { norm: nz });
        }
    }
    Ok(projective(x, y))
}

/// Normalized embedding on `V_Phi = {v : Phi(v) != 0}`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct NormalizedPoints {
    /// Vertices of `V_Phi`, ascending.
    pub vertices: Vec<usize>,
    /// `points[i] = Phi(vertices[i]) / |Phi(vertices[i])|`.
    pub points: Vec<Vec<f64>>,
    /// Vertices with `|Phi(v)| <= 1e-12`.
    pub excluded: Vec<usize>,
}

impl NormalizedPoints {
    /// Normalized point of vertex `v`, if it is in `V_Phi`.
    pub fn point_of(&self, v: usize) -> Option<&[f64]> {
        self.vertices
            .binary_search(&v)
            .ok()
            .map(|i| self.points[i].as_slice())
    }
}

pub fn normalize(emb: &Embedding) -> NormalizedPoints {
    let mut out = NormalizedPoints {
        vertices: Vec::new(),
        points: Vec::new(),
        excluded: Vec::new(),
    };
    for (v, x) in emb.points.iter().enumerate() {
        let nx = norm(x);
        if nx > ZERO_NORM {
            out.vertices.push(v);
            out.points.push(x.iter().map(|a| a / nx).collect());
        } else {
            out.excluded.push(v);
        }
    }
    out
}

/// Knobs of [`partition_projective`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PartitionOptions {
    pub strategy: PartitionStrategy,
    pub seed: u64,
    /// Minimum mass fraction per subset (random-padded); `None` means `1/(4k)`.
    pub mass_floor: Option<f64>,
    /// Minimum pairwise projective separation (random-padded).
    pub sep_floor: f64,
    pub max_attempts: usize,
    pub max_iterations: usize,
}

impl Default for PartitionOptions {
    fn default() -> Self {
        PartitionOptions {
            strategy: PartitionStrategy::RandomPadded,
            seed: 0,
            mass_floor: None,
            sep_floor: 0.0,
            max_attempts: 200,
            max_iterations: 100,
        }
    }
}

/// `k` disjoint nonempty subsets of `V_Phi`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Partition {
    /// Vertex ids, ascending within each subset; subsets ordered by their
    /// smallest vertex.
    pub subsets: Vec<Vec<usize>>,
    /// Fraction of the total mass carried by each subset.
    pub masses: Vec<f64>,
    /// Smallest projective distance between points of different subsets
    /// (`inf` for `k = 1`).
    pub separation: f64,
    pub attempts: usize,
}

/// Partitions the normalized points into `k` subsets. `mass[i]` is the weight
/// of `points.vertices[i]`, normally `mu(v) |Phi(v)|^2`.
pub fn partition_projective(
    points: &NormalizedPoints,
    mass: &[f64],
    k: usize,
    opts: PartitionOptions,
) -> Result<Partition> {
    let m = points.vertices.len();
    if mass.len() != m {
        return Err(Error::DimensionMismatch {
            expected: m,
            got: mass.len(),
        });
    }
    if k == 0 {
        return Err(Error::InvalidArgument("k must be at least 1".into()));
    }
    if distinct_classes(&points.points, k) < k {
        return Err(Error::PartitionFailure {
            reason: format!("fewer than {k} distinct projective points"),
            best_min_mass: 0.0,
        });
    }
    let groups = if k == 1 {
        (vec![(0..m).collect::<Vec<_>>()], 1)
    } else {
        match opts.strategy {
            PartitionStrategy::RandomPadded => padded(points, mass, k, &opts)?,
            PartitionStrategy::ProjectiveKmeans => (kmeans(points, mass, k, &opts), 1),
        }
    };
    Ok(finish(points, mass, groups.0, groups.1))
}

/// Number of distinct projective classes, counting at most `cap`.
fn distinct_classes(points: &[Vec<f64>], cap: usize) -> usize {
    let mut reps: Vec<&[f64]> = Vec::new();
    for p in points {
        if reps.iter().all(|r| projective(r, p) > 1e-9) {
            reps.push(p);
            if reps.len() >= cap {
                break;
            }
        }
    }
    reps.len()
}

fn group_stats(points: &[Vec<f64>], mass: &[f64], groups: &[Vec<usize>]) -> (Vec<f64>, f64) {
    let total: f64 = mass.iter().sum();
    let masses = groups
        .iter()
        .map(|g| g.iter().map(|&i| mass[i]).sum::<f64>() / total)
        .collect();
    let mut sep = f64::INFINITY;
    for (a, ga) in groups.iter().enumerate() {
        for gb in &groups[a + 1..] {
            for &i in ga {
                for &j in gb {
                    sep = sep.min(projective(&points[i], &points[j]));
                }
            }
        }
    }
    (masses, sep)
}

fn finish(
    points: &NormalizedPoints,
    mass: &[f64],
    mut groups: Vec<Vec<usize>>,
    attempts: usize,
) -> Partition {
    groups.iter_mut().for_each(|g| g.sort_unstable());
    groups.sort_by_key(|g| g[0]);
    let (masses, separation) = group_stats(&points.points, mass, &groups);
    Partition {
        subsets: groups
            .iter()
            .map(|g| g.iter().map(|&i| points.vertices[i]).collect())
            .collect(),
        masses,
        separation,
        attempts,
    }
}

/// Seeded random-radius ball carving, balls grouped into `k` parts by
/// largest-mass-first assignment to the lightest part. Radii are drawn from
/// `[r/2, r]`, starting at `r = 1` and halving every 10 attempts.
fn padded(
    points: &NormalizedPoints,
    mass: &[f64],
    k: usize,
    opts: &PartitionOptions,
) -> Result<(Vec<Vec<usize>>, usize)> {
    let m = points.vertices.len();
    let floor = opts.mass_floor.unwrap_or(1.0 / (4.0 * k as f64));
    let total: f64 = mass.iter().sum();
    let mut best_min_mass = 0.0f64;
    let mut r = 1.0f64;
    for attempt in 0..opts.max_attempts {
        if attempt > 0 && attempt % 10 == 0 {
            r /= 2.0;
        }
        let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
        rng.set_stream(attempt as u64);
        let mut order: Vec<usize> = (0..m).collect();
        order.shuffle(&mut rng);
        let mut assigned = vec![false; m];
        let mut balls: Vec<(f64, Vec<usize>)> = Vec::new();
        for &c in &order {
            if assigned[c] {
                continue;
            }
            let radius = rng.gen_range(r / 2.0..=r);
            let ball: Vec<usize> = (0..m)
                .filter(|&i| {
                    !assigned[i] && projective(&points.points[c], &points.points[i]) < radius
                })
                .collect();
            ball.iter().for_each(|&i| assigned[i] = true);
            balls.push((ball.iter().map(|&i| mass[i]).sum(), ball));
        }
        if balls.len() < k {
            continue;
        }
        balls.sort_by(|a, b| b.0.total_cmp(&a.0).then(a.1[0].cmp(&b.1[0])));
        let mut groups: Vec<(f64, Vec<usize>)> = vec![(0.0, Vec::new()); k];
        for (w, ball) in balls {
            let target = (0..k)
                .min_by(|&a, &b| groups[a].0.total_cmp(&groups[b].0).then(a.cmp(&b)))
                .unwrap();
            groups[target].0 += w;
            groups[target].1.extend(ball);
        }
        let groups: Vec<Vec<usize>> = groups.into_iter().map(|g| g.1).collect();
        let (masses, sep) = group_stats(&points.points, mass, &groups);
        let min_mass = masses.iter().copied().fold(f64::INFINITY, f64::min);
        best_min_mass = best_min_mass.max(min_mass);
        if min_mass >= floor && sep >= opts.sep_floor && total > 0.0 {
            return Ok((groups, attempt + 1));
        }
    }
    Err(Error::PartitionFailure {
        reason: format!(
            "no padded partition met mass floor {floor} and separation {} in {} attempts",
            opts.sep_floor, opts.max_attempts
        ),
        best_min_mass,
    })
}

/// Lloyd iteration under the projective pseudometric: centers are
/// sign-aligned weighted means, initialized by seeded farthest-point
/// selection.
fn kmeans(
    points: &NormalizedPoints,
    mass: &[f64],
    k: usize,
    opts: &PartitionOptions,
) -> Vec<Vec<usize>> {
    let pts = &points.points;
    let m = pts.len();
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut centers: Vec<Vec<f64>> = vec![pts[rng.gen_range(0..m)].clone()];
    while centers.len() < k {
        let far = (0..m)
            .max_by(|&a, &b| {
                let da = nearest(&centers, &pts[a]).1;
                let db = nearest(&centers, &pts[b]).1;
                da.total_cmp(&db).then(b.cmp(&a))
            })
            .unwrap();
        centers.push(pts[far].clone());
    }
    let mut assign: Vec<usize> = pts.iter().map(|p| nearest(&centers, p).0).collect();
    for _ in 0..opts.max_iterations {
        reseed_empty(&mut assign, &mut centers, pts);
        for (c, center) in centers.iter_mut().enumerate() {
            let mut acc = vec![0.0; center.len()];
            for i in (0..m).filter(|&i| assign[i] == c) {
                let dot: f64 = pts[i].iter().zip(center.iter()).map(|(a, b)| a * b).sum();
                let s = if dot >= 0.0 { 1.0 } else { -1.0 };
                acc.iter_mut()
                    .zip(&pts[i])
                    .for_each(|(a, x)| *a += s * mass[i] * x);
            }
            let na = norm(&acc);
            if na > ZERO_NORM {
                *center = acc.iter().map(|a| a / na).collect();
            }
        }
        let next: Vec<usize> = pts.iter().map(|p| nearest(&centers, p).0).collect();
        if next == assign {
            break;
        }
        assign = next;
    }
    reseed_empty(&mut assign, &mut centers, pts);
    (0..k)
        .map(|c| (0..m).filter(|&i| assign[i] == c).collect())
        .collect()
}

fn nearest(centers: &[Vec<f64>], p: &[f64]) -> (usize, f64) {
    centers
        .iter()
        .enumerate()
        .map(|(i, c)| (i, projective(c, p)))
        .min_by(|a, b| a.1.total_cmp(&b.1).then(a.0.cmp(&b.0)))
        .unwrap()
}

/// Moves the point farthest from its center into each empty cluster.
fn reseed_empty(assign: &mut [usize], centers: &mut [Vec<f64>], pts: &[Vec<f64>]) {
    for c in 0..centers.len() {
        if assign.contains(&c) {
            continue;
        }
        let mut counts = vec![0usize; centers.len()];
        assign.iter().for_each(|&a| counts[a] += 1);
        let donor = (0..pts.len())
            .filter(|&i| counts[assign[i]] > 1)
            .max_by(|&a, &b| {
                let da = projective(&centers[assign[a]], &pts[a]);
                let db = projective(&centers[assign[b]], &pts[b]);
                da.total_cmp(&db).then(b.cmp(&a))
            });
        if let Some(i) = donor {
            assign[i] = c;
            centers[c] = pts[i].clone();
        }
    }
}

/// Cutoff localization `Psi = theta Phi`, with
/// `theta(v) = max(0, 1 - d_Phi(v, S) / epsilon)`.
pub fn localize(
    emb: &Embedding,
    normalized: &NormalizedPoints,
    subset: &[usize],
    epsilon: f64,
) -> Result<Vec<Vec<f64>>> {
    if !(epsilon > 0.0 && epsilon < 2.0) {
        return Err(Error::BadEpsilon(epsilon));
    }
    let anchors: Vec<&[f64]> = subset
        .iter()
        .map(|&v| {
            normalized.point_of(v).ok_or_else(|| {
                Error::InvalidArgument(format!("vertex {v} is not in the embedding support"))
            })
        })
        .collect::<Result<_>>()?;
    if anchors.is_empty() {
        return Err(Error::EmptySet);
    }
    Ok(emb
        .points
        .iter()
        .enumerate()
        .map(|(v, x)| match normalized.point_of(v) {
            None => vec![0.0; x.len()],
            Some(p) => {
                let d = anchors
                    .iter()
                    .map(|a| projective(a, p))
                    .fold(f64::INFINITY, f64::min);
                let theta = (1.0 - d / epsilon).max(0.0);
                x.iter().map(|c| theta * c).collect()
            }
        })
        .collect())
}

/// Smallest slack of `|Psi(u) - s Psi(v)| <= (1 + 2/eps) |Phi(u) - s Phi(v)|`
/// over all edges (`inf` without edges).
pub fn lipschitz_slack(g: &SignedGraph, phi: &[Vec<f64>], psi: &[Vec<f64>], epsilon: f64) -> f64 {
    let c = 1.0 + 2.0 / epsilon;
    g.edges()
        .iter()
        .map(|e| {
            let s = e.sign.value();
            let diff = |m: &[Vec<f64>]| {
                m[e.u]
                    .iter()
                    .zip(&m[e.v])
                    .map(|(a, b)| (a - s * b).powi(2))
                    .sum::<f64>()
                    .sqrt()
            };
            c * diff(phi) - diff(psi)
        })
        .fold(f64::INFINITY, f64::min)
}

/// Coordinate of `Psi` with the smallest Rayleigh quotient, skipping
/// identically zero coordinates. Returns `(psi_j, j, R(psi_j))`.
pub fn select_coordinate(
    g: &SignedGraph,
    psi: &[Vec<f64>],
    mu: &VertexMeasure,
) -> Result<(Vec<f64>, usize, f64)> {
    let dim = psi.first().map_or(0, Vec::len);
    let mut best: Option<(Vec<f64>, usize, f64)> = None;
    for j in 0..dim {
        let f: Vec<f64> = psi.iter().map(|x| x[j]).collect();
        if f.iter().all(|&x| x == 0.0) {
            continue;
        }
        let r = rayleigh(g, &f, mu)?;
        if best.as_ref().is_none_or(|b| r < b.2) {
            best = Some((f, j, r));
        }
    }
    best.ok_or(Error::ZeroMap)
}

/// Options of [`cluster`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ClusterOptions {
    pub mode: EmbeddingMode,
    pub strategy: PartitionStrategy,
    /// Localization radius; `None` means `1/(2 k^{5/2})` clipped to `[0.05, 1.9]`.
    pub epsilon: Option<f64>,
    pub seed: u64,
    pub mass_floor: Option<f64>,
    pub sep_floor: f64,
}

impl Default for ClusterOptions {
    fn default() -> Self {
        ClusterOptions {
            mode: EmbeddingMode::Balanced,
            strategy: PartitionStrategy::RandomPadded,
            epsilon: None,
            seed: 0,
            mass_floor: None,
            sep_floor: 0.0,
        }
    }
}

pub fn default_epsilon(k: usize) -> f64 {
    (1.0 / (2.0 * (k as f64).powf(2.5))).clamp(0.05, 1.9)
}

/// Per-stage measurements of a clustering run.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ClusterDiagnostics {
    pub mode: EmbeddingMode,
    pub strategy: PartitionStrategy,
    pub eigenvalues: Vec<f64>,
    /// `R(Phi)` of the embedding.
    pub embedding_rayleigh: f64,
    pub excluded: Vec<usize>,
    pub attempts: usize,
    pub masses: Vec<f64>,
    pub separation: f64,
    pub epsilon: f64,
    pub epsilon_shrunk: bool,
    /// `R(Psi_i)` per cluster.
    pub localized_rayleigh: Vec<f64>,
    /// Chosen coordinate and its quotient per cluster.
    pub coordinates: Vec<usize>,
    pub coordinate_rayleigh: Vec<f64>,
    /// Smallest per-edge slack of the localization Lipschitz bound per cluster.
    pub lipschitz_slack: Vec<f64>,
    /// Always set: the partition is a stand-in whose constants are not those
    /// of the padded-decomposition guarantee.
    pub heuristic_partition: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ClusterResult {
    pub parts: Vec<SubBipartition>,
    pub betas: Vec<f64>,
    pub raw_subsets: Vec<Vec<usize>>,
    pub diagnostics: ClusterDiagnostics,
}

impl ClusterResult {
    pub fn max_beta(&self) -> f64 {
        self.betas.iter().copied().fold(0.0, f64::max)
    }
}

/// Finds `k` disjoint almost-balanced sub-bipartitions.
///
/// In antibalanced mode the pipeline runs on the negated graph, whose first
/// `k` eigenfunctions are the last `k` of `g`; the parts are then almost
/// antibalanced in `g` and `betas` are bipartiteness ratios of `-sigma`.
pub fn cluster(g: &SignedGraph, k: usize, opts: ClusterOptions) -> Result<ClusterResult> {
    let work;
    let graph = match opts.mode {
        EmbeddingMode::Balanced => g,
        EmbeddingMode::Antibalanced => {
            work = g.negated();
            &work
        }
    };
    let mut result = cluster_balanced(graph, k, &opts)?;
    result.diagnostics.mode = opts.mode;
    Ok(result)
}

fn cluster_balanced(g: &SignedGraph, k: usize, opts: &ClusterOptions) -> Result<ClusterResult> {
    let emb = embed(g, k, EmbeddingMode::Balanced)?;
    let mu = VertexMeasure::degree(g)?;
    let embedding_rayleigh = rayleigh_vector(g, &emb.points, &mu)?;
    let normalized = normalize(&emb);
    if normalized.vertices.is_empty() {
        return Err(Error::ZeroMap);
    }
    let mass: Vec<f64> = normalized
        .vertices
        .iter()
        .map(|&v| mu.get(v) * norm(&emb.points[v]).powi(2))
        .collect();
    let partition = partition_projective(
        &normalized,
        &mass,
        k,
        PartitionOptions {
            strategy: opts.strategy,
            seed: opts.seed,
            mass_floor: opts.mass_floor,
            sep_floor: opts.sep_floor,
            ..PartitionOptions::default()
        },
    )?;

    let mut epsilon = opts.epsilon.unwrap_or_else(|| default_epsilon(k));
    if !(epsilon > 0.0 && epsilon < 2.0) {
        return Err(Error::BadEpsilon(epsilon));
    }
    let mut epsilon_shrunk = false;
    if epsilon > partition.separation / 2.0 {
        epsilon = partition.separation / 2.0;
        epsilon_shrunk = true;
        if !(epsilon > 0.0) {
            return Err(Error::DisjointnessViolation {
                epsilon: opts.epsilon.unwrap_or_else(|| default_epsilon(k)),
                separation: partition.separation,
            });
        }
    }

    let per_cluster: Vec<_> = partition
        .subsets
        .par_iter()
        .map(|subset| -> Result<_> {
            let psi = localize(&emb, &normalized, subset, epsilon)?;
            let slack = lipschitz_slack(g, &emb.points, &psi, epsilon);
            debug_assert!(
                slack >= -1e-9,
                "localization Lipschitz bound violated: {slack}"
            );
            let localized = rayleigh_vector(g, &psi, &mu)?;
            let (f, j, r) = select_coordinate(g, &psi, &mu)?;
            let support: Vec<bool> = f.iter().map(|&x| x != 0.0).collect();
            let (bp, _, _) = sweep_cuts(g, &f, &mu, Some(&support), true)?;
            Ok((bp, slack, localized, j, r, support))
        })
        .collect::<Result<_>>()?;

    let n = g.vertex_count();
    let mut owner = vec![usize::MAX; n];
    for (i, c) in per_cluster.iter().enumerate() {
        for v in (0..n).filter(|&v| c.5[v]) {
            if owner[v] != usize::MAX {
                return Err(Error::DisjointnessViolation {
                    epsilon,
                    separation: partition.separation,
                });
            }
            owner[v] = i;
        }
    }

    let mut parts = Vec::with_capacity(k);
    let mut betas = Vec::with_capacity(k);
    let mut diag = ClusterDiagnostics {
        mode: EmbeddingMode::Balanced,
        strategy: opts.strategy,
        eigenvalues: emb.eigenvalues.clone(),
        embedding_rayleigh,
        excluded: normalized.excluded.clone(),
        attempts: partition.attempts,
        masses: partition.masses.clone(),
        separation: partition.separation,
        epsilon,
        epsilon_shrunk,
        localized_rayleigh: Vec::new(),
        coordinates: Vec::new(),
        coordinate_rayleigh: Vec::new(),
        lipschitz_slack: Vec::new(),
        heuristic_partition: true,
    };
    for (bp, slack, localized, j, r, _) in per_cluster {
        betas.push(beta(g, &bp, &mu)?);
        parts.push(bp);
        diag.lipschitz_slack.push(slack);
        diag.localized_rayleigh.push(localized);
        diag.coordinates.push(j);
        diag.coordinate_rayleigh.push(r);
    }
    Ok(ClusterResult {
        parts,
        betas,
        raw_subsets: partition.subsets,
        diagnostics: diag,
    })
}
