//! Seeded random signed graphs and small named families.

use rand::Rng;
use serde::Serialize;

use crate::graph::{Sign, SignedGraph, SwitchingFunction};

/// Parameters of the random signed graph model.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RandomGraphParams {
    pub min_vertices: usize,
    pub max_vertices: usize,
    pub edge_probability: f64,
    pub negative_probability: f64,
    /// Weights are uniform in `[min_weight, max_weight]`; equal bounds give a
    /// constant weight.
    pub min_weight: f64,
    pub max_weight: f64,
}

impl Default for RandomGraphParams {
    fn default() -> Self {
        RandomGraphParams {
            min_vertices: 3,
            max_vertices: 10,
            edge_probability: 0.5,
            negative_probability: 0.5,
            min_weight: 0.5,
            max_weight: 2.0,
        }
    }
}

impl RandomGraphParams {
    pub fn with_vertices(mut self, min: usize, max: usize) -> Self {
        self.min_vertices = min;
        self.max_vertices = max;
        self
    }

    pub fn unweighted(mut self) -> Self {
        self.min_weight = 1.0;
        self.max_weight = 1.0;
        self
    }
}

fn draw_weight<R: Rng>(rng: &mut R, p: &RandomGraphParams) -> f64 {
    if p.min_weight == p.max_weight {
        p.min_weight
    } else {
        rng.gen_range(p.min_weight..=p.max_weight)
    }
}

fn draw_sign<R: Rng>(rng: &mut R, p: &RandomGraphParams) -> f64 {
    if rng.gen_bool(p.negative_probability) {
        -1.0
    } else {
        1.0
    }
}

/// Erdős–Rényi signed graph, resampled until no vertex is isolated.
pub fn random_signed_graph<R: Rng>(rng: &mut R, p: &RandomGraphParams) -> SignedGraph {
    let n = rng.gen_range(p.min_vertices..=p.max_vertices);
    loop {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(p.edge_probability) {
                    let w = draw_weight(rng, p);
                    edges.push((u, v, draw_sign(rng, p) * w));
                }
            }
        }
        let g = SignedGraph::from_indexed(n, &edges).expect("valid random edges");
        if g.isolated_vertex().is_none() {
            return g;
        }
    }
}

/// Complete graph on `n` vertices with random signs and weights.
pub fn random_complete_graph<R: Rng>(rng: &mut R, n: usize, p: &RandomGraphParams) -> SignedGraph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            let w = draw_weight(rng, p);
            edges.push((u, v, draw_sign(rng, p) * w));
        }
    }
    SignedGraph::from_indexed(n, &edges).expect("valid complete graph")
}

/// Unweighted cycle `0-1-...-(n-1)-0` whose edge `{0, 1}` is negative.
pub fn cycle_with_one_negative_edge(n: usize) -> SignedGraph {
    let edges: Vec<_> = (0..n)
        .map(|i| (i, (i + 1) % n, if i == 0 { -1.0 } else { 1.0 }))
        .collect();
    SignedGraph::from_indexed(n, &edges).expect("valid cycle")
}

/// Uniform random switching function.
pub fn random_switching<R: Rng>(rng: &mut R, n: usize) -> SwitchingFunction {
    SwitchingFunction::new(
        (0..n)
            .map(|_| {
                if rng.gen() {
                    Sign::Negative
                } else {
                    Sign::Positive
                }
            })
            .collect(),
    )
}

/// Uniform random function `V -> [-1, 1]`, never identically zero.
pub fn random_function<R: Rng>(rng: &mut R, n: usize) -> Vec<f64> {
    loop {
        let f: Vec<f64> = (0..n).map(|_| rng.gen_range(-1.0..=1.0)).collect();
        if f.iter().any(|&x| x != 0.0) {
            return f;
        }
    }
}

/// Disjoint union; vertices of the `i`-th graph are offset by the sizes of
/// the previous ones and labelled `"{i}:{label}"`.
pub fn disjoint_union(graphs: &[SignedGraph]) -> SignedGraph {
    let mut b = crate::graph::GraphBuilder::new();
    for (i, g) in graphs.iter().enumerate() {
        for label in g.labels() {
            b.vertex(&format!("{i}:{label}"));
        }
        for e in g.edges() {
            b.edge(
                &format!("{i}:{}", g.label(e.u)),
                &format!("{i}:{}", g.label(e.v)),
                e.signed_weight(),
            )
            .expect("edges of a valid graph");
        }
    }
    b.build()
}

/// Random connected balanced graph: a random spanning tree plus random extra
/// edges, signed consistently with a random Harary bipartition.
pub fn random_balanced_graph<R: Rng>(rng: &mut R, n: usize, p: &RandomGraphParams) -> SignedGraph {
    let side: Vec<bool> = (0..n).map(|_| rng.gen()).collect();
    let sign = |u: usize, v: usize| if side[u] == side[v] { 1.0 } else { -1.0 };
    let mut edges = Vec::new();
    let mut present = vec![vec![false; n]; n];
    for v in 1..n {
        let u = rng.gen_range(0..v);
        edges.push((u, v, sign(u, v) * draw_weight(rng, p)));
        present[u][v] = true;
    }
    for u in 0..n {
        for v in u + 1..n {
            if !present[u][v] && rng.gen_bool(p.edge_probability) {
                edges.push((u, v, sign(u, v) * draw_weight(rng, p)));
            }
        }
    }
    SignedGraph::from_indexed(n, &edges).expect("valid balanced graph")
}
