//! Triangle-count eigenvalue bounds and a harness that checks every
//! spectral/Cheeger inequality on a concrete graph.

use serde::Serialize;

use crate::cheeger::{h_exact_with, CheegerCertificate, ExactBudget};
use crate::error::{Error, Result};
use crate::graph::{for_common_neighbors, signed_triangle_counts, SignedGraph, VertexMeasure};
use crate::spectral::{duality_residual, spectrum, Operator, Spectrum};

/// Absolute tolerance applied to every inequality.
pub const BOUND_TOLERANCE: f64 = 1e-9;
/// Eigenvalues at or below this are treated as zero when dividing.
pub const DEGENERATE_EIGENVALUE: f64 = 1e-12;
/// Largest admissible duality residual.
pub const DUALITY_TOLERANCE: f64 = 1e-8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum BoundName {
    /// `lambda_1 / 2 <= h_1(mu_d)`.
    CheegerLower,
    /// `h_1(mu_d) <= sqrt(2 lambda_1)`.
    CheegerUpper,
    /// `lambda_1(L) / 2 <= h_1(mu_1)`.
    KirchhoffCheegerLower,
    /// `h_1(mu_1) <= sqrt(2 d_max lambda_1(L))`.
    KirchhoffCheegerUpper,
    /// `lambda_k / 2 <= h_k(mu_d)`.
    HigherOrderLower,
    /// `lambda_k(L) / 2 <= h_k(mu_1)`.
    KirchhoffHigherOrderLower,
    /// `h_k(mu_d) <= C k^3 sqrt(lambda_k)`; the constant is unknown.
    HigherOrderUpper,
    /// `h_1(mu_d) < 16 sqrt(2) k lambda_1 / sqrt(lambda_k)`.
    ImprovedCheeger,
    /// `h_1(mu_d) <= 8 k lambda_1` or the improved Cheeger bound.
    ImprovedCheegerDisjunction,
    /// `h_1(mu_1) < 16 sqrt(2 d_max) k lambda_1(L) / sqrt(lambda_k(L))`.
    KirchhoffImprovedCheeger,
    /// `h_1(mu_1) <= 8 k lambda_1(L)` or the Kirchhoff improved bound.
    KirchhoffImprovedCheegerDisjunction,
    /// `h_k(mu_d) < C l k^6 lambda_k / sqrt(lambda_l)`; the constant is unknown.
    ImprovedHigherOrder,
    /// `(2 - lambda_N) / 2 <= h~_1(mu_d)`.
    DualCheegerLower,
    /// `h~_1(mu_d) <= sqrt(2 (2 - lambda_N))`.
    DualCheegerUpper,
    /// `max_k |2 - lambda_{N-k+1}(sigma) - lambda_k(-sigma)| <= 1e-8`.
    Duality,
    /// `(w^2/W) min #^- / max d <= lambda_1`.
    TriangleLower,
    /// `lambda_N <= 2 - (w^2/W) min #^+ / max d`.
    TriangleUpper,
    /// `lambda_N(L) <= weighted signed-triangle edge bound`.
    KirchhoffTriangle,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum BoundStatus {
    Holds,
    Violated,
    /// Valid but carrying no information (a zero extremal count, a degenerate
    /// eigenvalue, or an unknown constant).
    Vacuous,
    /// Not evaluated (budget exceeded or quantity undefined).
    Skipped,
}

/// One inequality `lhs <= rhs` (or `lhs < rhs` when `strict`).
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundReport {
    pub name: BoundName,
    pub k: Option<usize>,
    pub lhs: f64,
    pub rhs: f64,
    /// `rhs - lhs` as computed.
    pub slack: f64,
    pub strict: bool,
    pub status: BoundStatus,
    /// Edge attaining the extremal term.
    pub witness: Option<(usize, usize)>,
    pub note: Option<String>,
}

impl BoundReport {
    fn compare(name: BoundName, k: Option<usize>, lhs: f64, rhs: f64, strict: bool) -> Self {
        let slack = rhs - lhs;
        let holds = if strict {
            lhs < rhs + BOUND_TOLERANCE
        } else {
            slack >= -BOUND_TOLERANCE
        };
        BoundReport {
            name,
            k,
            lhs,
            rhs,
            slack,
            strict,
            status: if holds {
                BoundStatus::Holds
            } else {
                BoundStatus::Violated
            },
            witness: None,
            note: None,
        }
    }

    fn without_value(name: BoundName, k: Option<usize>, status: BoundStatus, note: String) -> Self {
        BoundReport {
            name,
            k,
            lhs: f64::NAN,
            rhs: f64::NAN,
            slack: f64::NAN,
            strict: false,
            status,
            witness: None,
            note: Some(note),
        }
    }

    /// Downgrades a holding report to vacuous.
    fn vacuous_if(mut self, vacuous: bool, note: &str) -> Self {
        if vacuous && self.status == BoundStatus::Holds {
            self.status = BoundStatus::Vacuous;
            self.note = Some(note.to_string());
        }
        self
    }

    fn with_witness(mut self, w: Option<(usize, usize)>) -> Self {
        self.witness = w;
        self
    }

    pub fn is_violation(&self) -> bool {
        self.status == BoundStatus::Violated
    }
}

fn weight_range(g: &SignedGraph) -> Result<(f64, f64)> {
    if g.edge_count() == 0 {
        return Err(Error::EmptyEdgeSet);
    }
    let w = g
        .edges()
        .iter()
        .map(|e| e.weight)
        .fold(f64::INFINITY, f64::min);
    let big = g.edges().iter().map(|e| e.weight).fold(0.0, f64::max);
    Ok((w, big))
}

/// Smallest `#^+` (`positive`) or `#^-` count over edges, with the first edge
/// attaining it.
fn min_triangle_count(g: &SignedGraph, positive: bool) -> (usize, (usize, usize)) {
    g.edges()
        .iter()
        .map(|e| {
            let (p, m) = signed_triangle_counts(g, e.u, e.v).expect("edge endpoints");
            (if positive { p } else { m }, (e.u, e.v))
        })
        .min_by_key(|(c, _)| *c)
        .expect("nonempty edge set")
}

/// Triangle bounds on `lambda_1` and `lambda_N` of the normalized Laplacian,
/// as `(lower on lambda_1, upper on lambda_N)`.
pub fn triangle_bounds_normalized(g: &SignedGraph) -> Result<(BoundReport, BoundReport)> {
    let (w, big) = weight_range(g)?;
    let s = spectrum(g, Operator::Normalized)?;
    Ok(triangle_reports(g, &s, w, big))
}

fn triangle_reports(g: &SignedGraph, s: &Spectrum, w: f64, big: f64) -> (BoundReport, BoundReport) {
    let factor = w * w / big / g.max_degree();
    let (minus, at_minus) = min_triangle_count(g, false);
    let (plus, at_plus) = min_triangle_count(g, true);
    let lower = BoundReport::compare(
        BoundName::TriangleLower,
        None,
        factor * minus as f64,
        s.smallest(),
        false,
    )
    .vacuous_if(minus == 0, "some edge lies in no negative triangle")
    .with_witness(Some(at_minus));
    let upper = BoundReport::compare(
        BoundName::TriangleUpper,
        None,
        s.largest(),
        2.0 - factor * plus as f64,
        false,
    )
    .vacuous_if(plus == 0, "some edge lies in no positive triangle")
    .with_witness(Some(at_plus));
    (lower, upper)
}

/// Per-edge right-hand side of the weighted Kirchhoff bound.
///
/// Sums over `u' ~ u, u' !~ v` include `u' = v` itself.
pub fn kirchhoff_triangle_edge_term(g: &SignedGraph, u: usize, v: usize) -> Result<f64> {
    let uv = g.edge_between(u, v).ok_or_else(|| Error::NotAnEdge {
        u: g.label(u).to_string(),
        v: g.label(v).to_string(),
    })?;
    let private = |a: usize, b: usize| -> f64 {
        g.neighbors(a)
            .iter()
            .filter(|(x, _)| !g.has_edge(*x, b) && *x != a)
            .map(|&(_, id)| g.edge(id).weight)
            .sum()
    };
    let mut common = 0.0;
    for_common_neighbors(g, u, v, |_, eu, ev| {
        if eu.sign * ev.sign == uv.sign {
            common += (eu.weight - ev.weight).abs();
        } else {
            common += eu.weight + ev.weight;
        }
    });
    Ok(0.5 * (g.degree(u) + g.degree(v) + private(u, v) + private(v, u) + common))
}

/// `max_{u~v} d_u + d_v - #^+(u, v)` for unweighted graphs.
pub fn kirchhoff_triangle_unweighted(g: &SignedGraph) -> Result<f64> {
    if g.edge_count() == 0 {
        return Err(Error::EmptyEdgeSet);
    }
    g.edges()
        .iter()
        .map(|e| {
            let (p, _) = signed_triangle_counts(g, e.u, e.v)?;
            Ok(g.degree(e.u) + g.degree(e.v) - p as f64)
        })
        .try_fold(f64::NEG_INFINITY, |acc, x: Result<f64>| Ok(acc.max(x?)))
}

/// Weighted signed-triangle bound on `lambda_N(L^sigma)`. On unweighted
/// graphs each edge term is checked against `d_u + d_v - #^+(u, v)`.
pub fn kirchhoff_triangle_bound(g: &SignedGraph) -> Result<BoundReport> {
    let s = spectrum(g, Operator::Kirchhoff)?;
    kirchhoff_triangle_report(g, &s)
}

fn kirchhoff_triangle_report(g: &SignedGraph, s: &Spectrum) -> Result<BoundReport> {
    if g.edge_count() == 0 {
        return Err(Error::EmptyEdgeSet);
    }
    let unweighted = g.is_unweighted();
    let mut best = f64::NEG_INFINITY;
    let mut at = (0, 0);
    let mut mismatch = None;
    for e in g.edges() {
        let t = kirchhoff_triangle_edge_term(g, e.u, e.v)?;
        if unweighted {
            let (p, _) = signed_triangle_counts(g, e.u, e.v)?;
            if t != g.degree(e.u) + g.degree(e.v) - p as f64 {
                mismatch = Some((e.u, e.v));
            }
        }
        if t > best {
            best = t;
            at = (e.u, e.v);
        }
    }
    let mut r = BoundReport::compare(BoundName::KirchhoffTriangle, None, s.largest(), best, false)
        .with_witness(Some(at));
    if let Some((u, v)) = mismatch {
        r.status = BoundStatus::Violated;
        r.note = Some(format!(
            "unweighted reduction mismatch on edge {}-{}",
            g.label(u),
            g.label(v)
        ));
    }
    Ok(r)
}

/// Options of [`verify_all`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Default)]
pub struct VerifyOptions {
    pub budget: ExactBudget,
}

fn skipped(name: BoundName, k: Option<usize>, e: &Error) -> BoundReport {
    BoundReport::without_value(name, k, BoundStatus::Skipped, e.to_string())
}

fn unknown_constant(name: BoundName) -> BoundReport {
    BoundReport::without_value(
        name,
        None,
        BoundStatus::Vacuous,
        "absolute constant is not specified; only the constant-free direction is checked".into(),
    )
}

/// `h < c k lambda_1 / sqrt(lambda_k)` and its disjunction with
/// `h <= 8 k lambda_1`, for every `k`.
fn improved_reports(
    h: f64,
    s: &Spectrum,
    c: f64,
    names: (BoundName, BoundName),
    out: &mut Vec<BoundReport>,
) {
    let l1 = s.smallest();
    for k in 1..=s.len() {
        let lk = s.eigenvalues[k - 1];
        if lk <= DEGENERATE_EIGENVALUE {
            out.push(BoundReport::without_value(
                names.0,
                Some(k),
                BoundStatus::Vacuous,
                format!("lambda_{k} is zero"),
            ));
            let r = BoundReport::compare(names.1, Some(k), h, 8.0 * k as f64 * l1, false);
            out.push(r);
            continue;
        }
        let improved = c * k as f64 * l1 / lk.sqrt();
        out.push(BoundReport::compare(names.0, Some(k), h, improved, true));
        let first = BoundReport::compare(names.1, Some(k), h, 8.0 * k as f64 * l1, false);
        let second = BoundReport::compare(names.1, Some(k), h, improved, true);
        out.push(
            if first.status == BoundStatus::Holds || second.status == BoundStatus::Violated {
                first
            } else {
                second
            },
        );
    }
}

fn lower_report(
    name: BoundName,
    k: usize,
    lambda: f64,
    h: &Result<CheegerCertificate>,
) -> BoundReport {
    match h {
        Ok(c) => BoundReport::compare(name, Some(k), lambda / 2.0, c.value, false),
        Err(e) => skipped(name, Some(k), e),
    }
}

/// Checks every inequality that is computable on `g` within the budget.
///
/// Failures of individual quantities (budget, isolated vertices, no edges)
/// turn into skipped reports rather than errors.
pub fn verify_all(g: &SignedGraph, opts: VerifyOptions) -> Vec<BoundReport> {
    let n = g.vertex_count();
    let mut out = Vec::new();
    let budget = opts.budget;
    let mu1 = VertexMeasure::unit(n);

    let normalized = spectrum(g, Operator::Normalized);
    let negated = spectrum(&g.negated(), Operator::Normalized);
    let kirchhoff = spectrum(g, Operator::Kirchhoff);
    let mud = VertexMeasure::degree(g);

    // Normalized Cheeger family.
    match (&normalized, &mud) {
        (Ok(s), Ok(mud)) => {
            let h1 = h_exact_with(g, 1, mud, budget);
            match &h1 {
                Ok(c) => {
                    out.push(BoundReport::compare(
                        BoundName::CheegerLower,
                        Some(1),
                        s.smallest() / 2.0,
                        c.value,
                        false,
                    ));
                    out.push(BoundReport::compare(
                        BoundName::CheegerUpper,
                        Some(1),
                        c.value,
                        (2.0 * s.smallest().max(0.0)).sqrt(),
                        false,
                    ));
                    improved_reports(
                        c.value,
                        s,
                        16.0 * 2f64.sqrt(),
                        (
                            BoundName::ImprovedCheeger,
                            BoundName::ImprovedCheegerDisjunction,
                        ),
                        &mut out,
                    );
                }
                Err(e) => {
                    for name in [
                        BoundName::CheegerLower,
                        BoundName::CheegerUpper,
                        BoundName::ImprovedCheeger,
                        BoundName::ImprovedCheegerDisjunction,
                    ] {
                        out.push(skipped(name, Some(1), e));
                    }
                }
            }
            for k in 2..=n {
                let hk = h_exact_with(g, k, mud, budget);
                out.push(lower_report(
                    BoundName::HigherOrderLower,
                    k,
                    s.eigenvalues[k - 1],
                    &hk,
                ));
                if hk.is_err() {
                    break;
                }
            }
            match h_exact_with(&g.negated(), 1, mud, budget) {
                Ok(c) => {
                    let gap = 2.0 - s.largest();
                    out.push(BoundReport::compare(
                        BoundName::DualCheegerLower,
                        Some(1),
                        gap / 2.0,
                        c.value,
                        false,
                    ));
                    out.push(BoundReport::compare(
                        BoundName::DualCheegerUpper,
                        Some(1),
                        c.value,
                        (2.0 * gap.max(0.0)).sqrt(),
                        false,
                    ));
                }
                Err(e) => {
                    out.push(skipped(BoundName::DualCheegerLower, Some(1), &e));
                    out.push(skipped(BoundName::DualCheegerUpper, Some(1), &e));
                }
            }
        }
        (Err(e), _) | (_, Err(e)) => {
            for name in [
                BoundName::CheegerLower,
                BoundName::CheegerUpper,
                BoundName::ImprovedCheeger,
                BoundName::ImprovedCheegerDisjunction,
                BoundName::HigherOrderLower,
                BoundName::DualCheegerLower,
                BoundName::DualCheegerUpper,
            ] {
                out.push(skipped(name, None, e));
            }
        }
    }
    out.push(unknown_constant(BoundName::HigherOrderUpper));
    out.push(unknown_constant(BoundName::ImprovedHigherOrder));

    // Kirchhoff family.
    match &kirchhoff {
        Ok(s) => {
            let d_max = g.max_degree();
            match h_exact_with(g, 1, &mu1, budget) {
                Ok(c) => {
                    out.push(BoundReport::compare(
                        BoundName::KirchhoffCheegerLower,
                        Some(1),
                        s.smallest() / 2.0,
                        c.value,
                        false,
                    ));
                    out.push(BoundReport::compare(
                        BoundName::KirchhoffCheegerUpper,
                        Some(1),
                        c.value,
                        (2.0 * d_max * s.smallest().max(0.0)).sqrt(),
                        false,
                    ));
                    improved_reports(
                        c.value,
                        s,
                        16.0 * (2.0 * d_max).sqrt(),
                        (
                            BoundName::KirchhoffImprovedCheeger,
                            BoundName::KirchhoffImprovedCheegerDisjunction,
                        ),
                        &mut out,
                    );
                }
                Err(e) => {
                    out.push(skipped(BoundName::KirchhoffCheegerLower, Some(1), &e));
                    out.push(skipped(BoundName::KirchhoffCheegerUpper, Some(1), &e));
                }
            }
            for k in 2..=n {
                let hk = h_exact_with(g, k, &mu1, budget);
                out.push(lower_report(
                    BoundName::KirchhoffHigherOrderLower,
                    k,
                    s.eigenvalues[k - 1],
                    &hk,
                ));
                if hk.is_err() {
                    break;
                }
            }
            match kirchhoff_triangle_report(g, s) {
                Ok(r) => out.push(r),
                Err(e) => out.push(skipped(BoundName::KirchhoffTriangle, None, &e)),
            }
        }
        Err(e) => out.push(skipped(BoundName::KirchhoffCheegerLower, None, e)),
    }

    // Duality and triangles.
    match (&normalized, &negated) {
        (Ok(s), Ok(t)) => {
            let residual = (1..=n)
                .map(|k| duality_residual(s, t, k))
                .fold(0.0, f64::max);
            out.push(BoundReport::compare(
                BoundName::Duality,
                None,
                residual,
                DUALITY_TOLERANCE,
                false,
            ));
            match weight_range(g) {
                Ok((w, big)) => {
                    let (lo, hi) = triangle_reports(g, s, w, big);
                    out.push(lo);
                    out.push(hi);
                }
                Err(e) => {
                    out.push(skipped(BoundName::TriangleLower, None, &e));
                    out.push(skipped(BoundName::TriangleUpper, None, &e));
                }
            }
        }
        (Err(e), _) | (_, Err(e)) => {
            out.push(skipped(BoundName::Duality, None, e));
            out.push(skipped(BoundName::TriangleLower, None, e));
            out.push(skipped(BoundName::TriangleUpper, None, e));
        }
    }
    out
}
