//! Signed weighted graphs and the measures defined on them.
//!
//! A [`SignedGraph`] is a simple undirected graph whose edges carry a strictly
//! positive weight and a sign. Vertices are addressed by dense indices
//! `0..n`; the original string labels are kept for reporting.

use std::collections::HashMap;
use std::fmt;
use std::ops::Neg;

use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn of(x: f64) -> Sign {
        if x < 0.0 {
            Sign::Negative
        } else {
            Sign::Positive
        }
    }

    pub fn value(self) -> f64 {
        match self {
            Sign::Positive => 1.0,
            Sign::Negative => -1.0,
        }
    }

    pub fn as_i8(self) -> i8 {
        match self {
            Sign::Positive => 1,
            Sign::Negative => -1,
        }
    }

    pub fn is_negative(self) -> bool {
        self == Sign::Negative
    }
}

impl Neg for Sign {
    type Output = Sign;
    fn neg(self) -> Sign {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }
}

impl std::ops::Mul for Sign {
    type Output = Sign;
    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Positive
        } else {
            Sign::Negative
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Positive => "+",
            Sign::Negative => "-",
        })
    }
}

/// An undirected edge with `u < v`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    pub weight: f64,
    pub sign: Sign,
}

impl Edge {
    /// Signed weight `sigma(uv) * w_uv`.
    pub fn signed_weight(&self) -> f64 {
        self.sign.value() * self.weight
    }

    pub fn other(&self, x: usize) -> usize {
        if x == self.u {
            self.v
        } else {
            self.u
        }
    }
}

/// Simple undirected graph with positive edge weights and `±1` edge signs.
///
/// Immutable after construction; every operation that changes signs returns a
/// new graph.
#[derive(Debug, Clone, PartialEq)]
pub struct SignedGraph {
    labels: Vec<String>,
    edges: Vec<Edge>,
    /// Per vertex: `(neighbor, edge id)` sorted by neighbor.
    adjacency: Vec<Vec<(usize, usize)>>,
    degrees: Vec<f64>,
}

/// Incremental constructor that assigns dense indices in first-appearance order.
#[derive(Debug, Default)]
pub struct GraphBuilder {
    labels: Vec<String>,
    index: HashMap<String, usize>,
    edges: Vec<Edge>,
    pairs: HashMap<(usize, usize), usize>,
}

impl GraphBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds a vertex (no-op if the label already exists) and returns its index.
    pub fn vertex(&mut self, label: &str) -> usize {
        if let Some(&i) = self.index.get(label) {
            return i;
        }
        let i = self.labels.len();
        self.labels.push(label.to_string());
        self.index.insert(label.to_string(), i);
        i
    }

    pub fn edge(&mut self, u: &str, v: &str, signed_weight: f64) -> Result<&mut Self> {
        self.edge_at(None, u, v, signed_weight)
    }

    /// Adds an edge, recording `line` in any error it raises.
    pub fn edge_at(
        &mut self,
        line: Option<usize>,
        u: &str,
        v: &str,
        signed_weight: f64,
    ) -> Result<&mut Self> {
        if u == v {
            return Err(Error::SelfLoop {
                label: u.to_string(),
                line,
            });
        }
        if !signed_weight.is_finite() {
            return Err(Error::NonFiniteWeight {
                u: u.to_string(),
                v: v.to_string(),
                line,
            });
        }
        if signed_weight == 0.0 {
            return Err(Error::ZeroWeight {
                u: u.to_string(),
                v: v.to_string(),
                line,
            });
        }
        let (iu, iv) = (self.vertex(u), self.vertex(v));
        let key = (iu.min(iv), iu.max(iv));
        if self.pairs.contains_key(&key) {
            return Err(Error::DuplicateEdge {
                u: u.to_string(),
                v: v.to_string(),
                line,
            });
        }
        self.pairs.insert(key, self.edges.len());
        self.edges.push(Edge {
            u: key.0,
            v: key.1,
            weight: signed_weight.abs(),
            sign: Sign::of(signed_weight),
        });
        Ok(self)
    }

    pub fn build(self) -> SignedGraph {
        SignedGraph::from_parts(self.labels, self.edges)
    }
}

/// Builds a graph from `(label_u, label_v, signed_weight)` records.
///
/// Errors name the offending pair and its 1-based position in `edges`.
pub fn build_graph<'a, I>(edges: I) -> Result<SignedGraph>
where
    I: IntoIterator<Item = (&'a str, &'a str, f64)>,
{
    let mut b = GraphBuilder::new();
    for (pos, (u, v, w)) in edges.into_iter().enumerate() {
        b.edge_at(Some(pos + 1), u, v, w)?;
    }
    Ok(b.build())
}

impl SignedGraph {
    fn from_parts(labels: Vec<String>, edges: Vec<Edge>) -> Self {
        let n = labels.len();
        let mut adjacency = vec![Vec::new(); n];
        let mut degrees = vec![0.0; n];
        for (id, e) in edges.iter().enumerate() {
            adjacency[e.u].push((e.v, id));
            adjacency[e.v].push((e.u, id));
        }
        for (x, adj) in adjacency.iter_mut().enumerate() {
            adj.sort_unstable();
            degrees[x] = adj.iter().map(|&(_, id)| edges[id].weight).sum();
        }
        SignedGraph {
            labels,
            edges,
            adjacency,
            degrees,
        }
    }

    /// Builds a graph on vertices `0..n` (labelled by their index) from
    /// `(u, v, signed_weight)` triples.
    pub fn from_indexed(n: usize, edges: &[(usize, usize, f64)]) -> Result<Self> {
        let mut b = GraphBuilder::new();
        for i in 0..n {
            b.vertex(&i.to_string());
        }
        for (pos, &(u, v, w)) in edges.iter().enumerate() {
            if u >= n || v >= n {
                return Err(Error::VertexOutOfRange {
                    index: u.max(v),
                    len: n,
                });
            }
            b.edge_at(Some(pos + 1), &u.to_string(), &v.to_string(), w)?;
        }
        Ok(b.build())
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, id: usize) -> &Edge {
        &self.edges[id]
    }

    /// `(neighbor, edge id)` pairs of `v`, sorted by neighbor.
    pub fn neighbors(&self, v: usize) -> &[(usize, usize)] {
        &self.adjacency[v]
    }

    pub fn edge_between(&self, u: usize, v: usize) -> Option<&Edge> {
        self.adjacency
            .get(u)?
            .binary_search_by_key(&v, |&(x, _)| x)
            .ok()
            .map(|i| &self.edges[self.adjacency[u][i].1])
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edge_between(u, v).is_some()
    }

    /// Weighted degree `d_u = sum_v w_uv`.
    pub fn degree(&self, v: usize) -> f64 {
        self.degrees[v]
    }

    pub fn degrees(&self) -> &[f64] {
        &self.degrees
    }

    pub fn max_degree(&self) -> f64 {
        self.degrees.iter().copied().fold(0.0, f64::max)
    }

    pub fn isolated_vertex(&self) -> Option<usize> {
        (0..self.vertex_count()).find(|&v| self.adjacency[v].is_empty())
    }

    pub fn is_unweighted(&self) -> bool {
        self.edges.iter().all(|e| e.weight == 1.0)
    }

    fn with_signs(&self, sign: impl Fn(&Edge) -> Sign) -> SignedGraph {
        let mut g = self.clone();
        for e in g.edges.iter_mut() {
            e.sign = sign(e);
        }
        g
    }

    /// The graph `(G, -sigma)`.
    pub fn negated(&self) -> SignedGraph {
        self.with_signs(|e| -e.sign)
    }

    /// Same weights with every sign replaced by `sign`.
    pub fn with_uniform_sign(&self, sign: Sign) -> SignedGraph {
        self.with_signs(|_| sign)
    }

    /// Returns `sigma^theta(uv) = theta(u) sigma(uv) theta(v)`.
    pub fn switch(&self, theta: &SwitchingFunction) -> Result<SignedGraph> {
        if theta.len() != self.vertex_count() {
            return Err(Error::MissingVertex {
                expected: self.vertex_count(),
                got: theta.len(),
            });
        }
        Ok(self.with_signs(|e| theta.get(e.u) * e.sign * theta.get(e.v)))
    }

    /// Switches the single vertex `v`.
    pub fn switch_vertex(&self, v: usize) -> SignedGraph {
        self.with_signs(|e| {
            if e.u == v || e.v == v {
                -e.sign
            } else {
                e.sign
            }
        })
    }

    /// Induced subgraph on `vertices` (kept in the given order), plus the map
    /// from new to old indices.
    pub fn induced(&self, vertices: &[usize]) -> (SignedGraph, Vec<usize>) {
        let mut new_index = vec![usize::MAX; self.vertex_count()];
        for (i, &v) in vertices.iter().enumerate() {
            new_index[v] = i;
        }
        let labels = vertices.iter().map(|&v| self.labels[v].clone()).collect();
        let edges = self
            .edges
            .iter()
            .filter(|e| new_index[e.u] != usize::MAX && new_index[e.v] != usize::MAX)
            .map(|e| {
                let (a, b) = (new_index[e.u], new_index[e.v]);
                Edge {
                    u: a.min(b),
                    v: a.max(b),
                    ..*e
                }
            })
            .collect();
        (SignedGraph::from_parts(labels, edges), vertices.to_vec())
    }

    /// Graph with the edges whose ids are listed removed.
    pub fn without_edges(&self, ids: &[usize]) -> SignedGraph {
        let mut drop = vec![false; self.edges.len()];
        for &id in ids {
            drop[id] = true;
        }
        let edges = self
            .edges
            .iter()
            .zip(&drop)
            .filter(|(_, &d)| !d)
            .map(|(e, _)| *e)
            .collect();
        SignedGraph::from_parts(self.labels.clone(), edges)
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut head = 0;
            while head < comp.len() {
                let x = comp[head];
                head += 1;
                for &(y, _) in &self.adjacency[x] {
                    if !seen[y] {
                        seen[y] = true;
                        comp.push(y);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Checks that `v` is a vertex of this graph.
    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.vertex_count() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                index: v,
                len: self.vertex_count(),
            })
        }
    }
}

/// Map `V -> {+1, -1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct SwitchingFunction(Vec<Sign>);

impl SwitchingFunction {
    pub fn identity(n: usize) -> Self {
        SwitchingFunction(vec![Sign::Positive; n])
    }

    pub fn new(signs: Vec<Sign>) -> Self {
        SwitchingFunction(signs)
    }

    /// Switching function that is `-1` exactly on `subset`.
    pub fn from_subset(n: usize, subset: &[usize]) -> Self {
        let mut s = vec![Sign::Positive; n];
        for &v in subset {
            s[v] = Sign::Negative;
        }
        SwitchingFunction(s)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, v: usize) -> Sign {
        self.0[v]
    }

    pub fn signs(&self) -> &[Sign] {
        &self.0
    }

    /// `V_theta^- = {u : theta(u) = -1}`.
    pub fn negative_set(&self) -> Vec<usize> {
        (0..self.0.len())
            .filter(|&v| self.0[v].is_negative())
            .collect()
    }

    pub fn compose(&self, other: &SwitchingFunction) -> SwitchingFunction {
        SwitchingFunction(self.0.iter().zip(&other.0).map(|(&a, &b)| a * b).collect())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum MeasureKind {
    Degree,
    Unit,
    Custom,
}

/// Strictly positive vertex weighting.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VertexMeasure {
    values: Vec<f64>,
    kind: MeasureKind,
}

impl VertexMeasure {
    /// Degree measure `mu_d(u) = d_u`. Fails on isolated vertices.
    pub fn degree(g: &SignedGraph) -> Result<Self> {
        if let Some(v) = g.isolated_vertex() {
            return Err(Error::IsolatedVertex {
                label: g.label(v).to_string(),
            });
        }
        Ok(VertexMeasure {
            values: g.degrees().to_vec(),
            kind: MeasureKind::Degree,
        })
    }

    /// Constant measure `mu_1 = 1`.
    pub fn unit(n: usize) -> Self {
        VertexMeasure {
            values: vec![1.0; n],
            kind: MeasureKind::Unit,
        }
    }

    pub fn custom(values: Vec<f64>) -> Result<Self> {
        if let Some((index, &value)) = values
            .iter()
            .enumerate()
            .find(|(_, &x)| !(x > 0.0 && x.is_finite()))
        {
            return Err(Error::NonPositiveMeasure { index, value });
        }
        Ok(VertexMeasure {
            values,
            kind: MeasureKind::Custom,
        })
    }

    pub fn kind(&self) -> MeasureKind {
        self.kind
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn get(&self, v: usize) -> f64 {
        self.values[v]
    }

    /// `vol_mu(S) = sum_{u in S} mu(u)`.
    pub fn volume(&self, set: &[usize]) -> f64 {
        set.iter().map(|&v| self.values[v]).sum()
    }

    pub(crate) fn check_len(&self, n: usize) -> Result<()> {
        if self.values.len() == n {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                expected: n,
                got: self.values.len(),
            })
        }
    }
}

/// `vol_mu(S)`.
pub fn volume(mu: &VertexMeasure, set: &[usize]) -> f64 {
    mu.volume(set)
}

/// Ordered pair of disjoint vertex sets with nonempty union.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct SubBipartition {
    v1: Vec<usize>,
    v2: Vec<usize>,
}

impl SubBipartition {
    /// Validates and normalizes (sorts) the two sides.
    pub fn new(mut v1: Vec<usize>, mut v2: Vec<usize>, n: usize) -> Result<Self> {
        v1.sort_unstable();
        v1.dedup();
        v2.sort_unstable();
        v2.dedup();
        if v1.is_empty() && v2.is_empty() {
            return Err(Error::EmptyUnion);
        }
        let mut member = vec![false; n];
        for &x in &v1 {
            if x >= n {
                return Err(Error::VertexOutOfRange { index: x, len: n });
            }
            member[x] = true;
        }
        for &x in &v2 {
            if x >= n {
                return Err(Error::VertexOutOfRange { index: x, len: n });
            }
            if member[x] {
                return Err(Error::OverlappingSides { index: x });
            }
        }
        Ok(SubBipartition { v1, v2 })
    }

    pub fn v1(&self) -> &[usize] {
        &self.v1
    }

    pub fn v2(&self) -> &[usize] {
        &self.v2
    }

    /// `V_1 ∪ V_2`, sorted.
    pub fn union(&self) -> Vec<usize> {
        let mut u: Vec<usize> = self.v1.iter().chain(&self.v2).copied().collect();
        u.sort_unstable();
        u
    }

    /// Side of every vertex: `0` outside, `1` in `V_1`, `2` in `V_2`.
    pub fn sides(&self, n: usize) -> Vec<u8> {
        let mut s = vec![0u8; n];
        for &x in &self.v1 {
            s[x] = 1;
        }
        for &x in &self.v2 {
            s[x] = 2;
        }
        s
    }

    pub fn is_disjoint_from(&self, other: &SubBipartition) -> bool {
        let a = self.union();
        other.union().iter().all(|x| a.binary_search(x).is_err())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SignFilter {
    All,
    Positive,
    Negative,
}

impl SignFilter {
    fn admits(self, s: Sign) -> bool {
        match self {
            SignFilter::All => true,
            SignFilter::Positive => s == Sign::Positive,
            SignFilter::Negative => s == Sign::Negative,
        }
    }
}

/// `|E^±(V1, V2)| = sum_{u in V1} sum_{v in V2, filter} w_uv`.
///
/// Ordered double sum: when `V1 = V2` every internal edge is counted twice.
pub fn edge_measure(g: &SignedGraph, v1: &[usize], v2: &[usize], filter: SignFilter) -> f64 {
    let mut in_v2 = vec![false; g.vertex_count()];
    for &v in v2 {
        in_v2[v] = true;
    }
    let mut sorted_v1 = v1.to_vec();
    sorted_v1.sort_unstable();
    let mut total = 0.0;
    for &u in &sorted_v1 {
        for &(v, id) in g.neighbors(u) {
            let e = g.edge(id);
            if in_v2[v] && filter.admits(e.sign) {
                total += e.weight;
            }
        }
    }
    total
}

/// Number of common neighbours `u'` of the edge `{u, v}` closing a positive
/// (first) or negative (second) triangle.
pub fn signed_triangle_counts(g: &SignedGraph, u: usize, v: usize) -> Result<(usize, usize)> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    let uv = g.edge_between(u, v).ok_or_else(|| Error::NotAnEdge {
        u: g.label(u).to_string(),
        v: g.label(v).to_string(),
    })?;
    let (mut plus, mut minus) = (0, 0);
    for_common_neighbors(g, u, v, |_, eu, ev| {
        if (uv.sign * eu.sign * ev.sign) == Sign::Positive {
            plus += 1;
        } else {
            minus += 1;
        }
    });
    Ok((plus, minus))
}

/// Calls `f(w, edge uw, edge vw)` for every common neighbour `w` of `u` and `v`.
pub(crate) fn for_common_neighbors(
    g: &SignedGraph,
    u: usize,
    v: usize,
    mut f: impl FnMut(usize, &Edge, &Edge),
) {
    let (a, b) = (g.neighbors(u), g.neighbors(v));
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].0.cmp(&b[j].0) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                f(a[i].0, g.edge(a[i].1), g.edge(b[j].1));
                i += 1;
                j += 1;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k3(w: f64) -> SignedGraph {
        build_graph([("a", "b", w), ("b", "c", w), ("a", "c", w)]).unwrap()
    }

    #[test]
    fn builds_single_edges() {
        let g = build_graph([("a", "b", 1.0)]).unwrap();
        assert_eq!(g.vertex_count(), 2);
        assert_eq!(g.edges()[0].sign, Sign::Positive);
        assert_eq!(g.edges()[0].weight, 1.0);

        let g = build_graph([("a", "b", -2.5)]).unwrap();
        assert_eq!(g.edges()[0].sign, Sign::Negative);
        assert_eq!(g.edges()[0].weight, 2.5);
    }

    #[test]
    fn rejects_bad_edges() {
        assert!(matches!(
            build_graph([("a", "a", 1.0)]),
            Err(Error::SelfLoop { line: Some(1), .. })
        ));
        assert!(matches!(
            build_graph([("a", "b", 1.0), ("b", "a", -1.0)]),
            Err(Error::DuplicateEdge { line: Some(2), .. })
        ));
        assert!(matches!(
            build_graph([("a", "b", 0.0)]),
            Err(Error::ZeroWeight { .. })
        ));
    }

    #[test]
    fn index_assignment_follows_first_appearance() {
        let g = build_graph([("x", "y", 1.0), ("z", "x", 1.0)]).unwrap();
        assert_eq!(g.labels(), &["x", "y", "z"]);
    }

    #[test]
    fn switching_examples() {
        let g = k3(-1.0);
        assert_eq!(g.switch(&SwitchingFunction::identity(3)).unwrap(), g);
        let theta = SwitchingFunction::from_subset(3, &[0]);
        let h = g.switch(&theta).unwrap();
        let sign = |u, v| h.edge_between(u, v).unwrap().sign;
        assert_eq!(sign(0, 1), Sign::Positive);
        assert_eq!(sign(0, 2), Sign::Positive);
        assert_eq!(sign(1, 2), Sign::Negative);
        assert_eq!(h.switch(&theta).unwrap(), g);
        assert!(matches!(
            g.switch(&SwitchingFunction::identity(2)),
            Err(Error::MissingVertex { .. })
        ));
    }

    #[test]
    fn edge_measure_double_counts() {
        let g = k3(-1.0);
        let all = [0, 1, 2];
        assert_eq!(edge_measure(&g, &all, &all, SignFilter::Negative), 6.0);
        assert_eq!(edge_measure(&g, &all, &all, SignFilter::Positive), 0.0);
        let p = build_graph([("a", "b", 1.0), ("b", "c", 1.0)]).unwrap();
        assert_eq!(edge_measure(&p, &[0], &[1, 2], SignFilter::All), 1.0);
    }

    #[test]
    fn volumes() {
        let g = k3(1.0);
        let mu = VertexMeasure::degree(&g).unwrap();
        assert_eq!(volume(&mu, &[0, 1, 2]), 6.0);
        assert_eq!(volume(&VertexMeasure::unit(4), &[0, 1, 2, 3]), 4.0);
        assert_eq!(volume(&mu, &[]), 0.0);
    }

    #[test]
    fn triangle_counts() {
        let g = k3(1.0);
        assert_eq!(signed_triangle_counts(&g, 0, 1).unwrap(), (1, 0));
        let k4 = SignedGraph::from_indexed(
            4,
            &[
                (0, 1, -1.0),
                (0, 2, -1.0),
                (0, 3, -1.0),
                (1, 2, -1.0),
                (1, 3, -1.0),
                (2, 3, -1.0),
            ],
        )
        .unwrap();
        assert_eq!(signed_triangle_counts(&k4, 2, 3).unwrap(), (0, 2));
        let path = build_graph([("a", "b", 1.0), ("b", "c", 1.0)]).unwrap();
        assert!(matches!(
            signed_triangle_counts(&path, 0, 2),
            Err(Error::NotAnEdge { .. })
        ));
    }

    #[test]
    fn degree_measure_rejects_isolated() {
        let mut b = GraphBuilder::new();
        b.edge("a", "b", 1.0).unwrap();
        b.vertex("c");
        let g = b.build();
        assert!(matches!(
            VertexMeasure::degree(&g),
            Err(Error::IsolatedVertex { .. })
        ));
        assert!(VertexMeasure::custom(vec![1.0, 0.0]).is_err());
    }

    #[test]
    fn sub_bipartition_validation() {
        assert!(matches!(
            SubBipartition::new(vec![], vec![], 3),
            Err(Error::EmptyUnion)
        ));
        assert!(matches!(
            SubBipartition::new(vec![0, 1], vec![1], 3),
            Err(Error::OverlappingSides { index: 1 })
        ));
        let bp = SubBipartition::new(vec![2, 0], vec![1], 3).unwrap();
        assert_eq!(bp.v1(), &[0, 2]);
        assert_eq!(bp.union(), vec![0, 1, 2]);
    }
}
