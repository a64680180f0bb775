//! Signed Laplacians, their spectra, and Rayleigh quotients.
//!
//! The normalized Laplacian `I - D^{-1} A^sigma` is not symmetric, so it is
//! diagonalized through the similar matrix `I - D^{-1/2} A^sigma D^{-1/2}`;
//! eigenvectors are mapped back by `phi = D^{-1/2} x`, which makes them
//! orthonormal in the degree-weighted inner product.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{SignedGraph, VertexMeasure};
use crate::linalg::{jacobi_eigen, DenseMatrix, JacobiOptions};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Operator {
    /// `Delta^sigma = I - D^{-1} A^sigma`, orthonormal in `mu_d`.
    Normalized,
    /// `L^sigma = D - A^sigma`, orthonormal in `mu_1`.
    Kirchhoff,
}

/// Symmetrized normalized Laplacian `I - D^{-1/2} A^sigma D^{-1/2}`.
pub fn normalized_laplacian(g: &SignedGraph) -> Result<DenseMatrix> {
    if let Some(v) = g.isolated_vertex() {
        return Err(Error::IsolatedVertex {
            label: g.label(v).to_string(),
        });
    }
    let n = g.vertex_count();
    let mut m = DenseMatrix::identity(n);
    let inv_sqrt: Vec<f64> = g.degrees().iter().map(|d| 1.0 / d.sqrt()).collect();
    for e in g.edges() {
        let x = -e.signed_weight() * inv_sqrt[e.u] * inv_sqrt[e.v];
        m[(e.u, e.v)] = x;
        m[(e.v, e.u)] = x;
    }
    Ok(m)
}

/// Kirchhoff matrix `L^sigma = D - A^sigma`.
pub fn kirchhoff(g: &SignedGraph) -> DenseMatrix {
    let n = g.vertex_count();
    let mut m = DenseMatrix::zeros(n);
    for v in 0..n {
        m[(v, v)] = g.degree(v);
    }
    for e in g.edges() {
        m[(e.u, e.v)] = -e.signed_weight();
        m[(e.v, e.u)] = -e.signed_weight();
    }
    m
}

/// Ascending eigenvalues with eigenfunctions orthonormal in the operator's
/// measure.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Spectrum {
    pub eigenvalues: Vec<f64>,
    /// `eigenfunctions[i][v] = phi_{i+1}(v)`.
    pub eigenfunctions: Vec<Vec<f64>>,
    pub measure: VertexMeasure,
    pub operator: Operator,
}

impl Spectrum {
    pub fn len(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn is_empty(&self) -> bool {
        self.eigenvalues.is_empty()
    }

    /// `lambda_k`, 1-based.
    pub fn lambda(&self, k: usize) -> Result<f64> {
        check_index(k, self.len())?;
        Ok(self.eigenvalues[k - 1])
    }

    /// `phi_k`, 1-based.
    pub fn eigenfunction(&self, k: usize) -> Result<&[f64]> {
        check_index(k, self.len())?;
        Ok(&self.eigenfunctions[k - 1])
    }

    pub fn smallest(&self) -> f64 {
        self.eigenvalues[0]
    }

    pub fn largest(&self) -> f64 {
        *self.eigenvalues.last().unwrap()
    }
}

fn check_index(k: usize, len: usize) -> Result<()> {
    if k == 0 || k > len {
        Err(Error::IndexOutOfRange { index: k, len })
    } else {
        Ok(())
    }
}

pub fn spectrum(g: &SignedGraph, op: Operator) -> Result<Spectrum> {
    spectrum_with(g, op, JacobiOptions::default())
}

pub fn spectrum_with(g: &SignedGraph, op: Operator, opts: JacobiOptions) -> Result<Spectrum> {
    let (matrix, measure) = match op {
        Operator::Normalized => (normalized_laplacian(g)?, VertexMeasure::degree(g)?),
        Operator::Kirchhoff => (kirchhoff(g), VertexMeasure::unit(g.vertex_count())),
    };
    let eig = jacobi_eigen(&matrix, opts)?;
    let eigenfunctions = match op {
        Operator::Normalized => eig
            .vectors
            .into_iter()
            .map(|x| {
                x.iter()
                    .zip(g.degrees())
                    .map(|(xi, d)| xi / d.sqrt())
                    .collect()
            })
            .collect(),
        Operator::Kirchhoff => eig.vectors,
    };
    Ok(Spectrum {
        eigenvalues: eig.values,
        eigenfunctions,
        measure,
        operator: op,
    })
}

/// Applies `Delta^sigma` (or `L^sigma` for the unit measure) in operator form:
/// `(1/mu(u)) sum_v w_uv (f(u) - sigma(uv) f(v))`.
pub fn apply_operator(g: &SignedGraph, mu: &VertexMeasure, f: &[f64]) -> Vec<f64> {
    (0..g.vertex_count())
        .map(|u| {
            let s: f64 = g
                .neighbors(u)
                .iter()
                .map(|&(v, id)| {
                    let e = g.edge(id);
                    e.weight * (f[u] - e.sign.value() * f[v])
                })
                .sum();
            s / mu.get(u)
        })
        .collect()
}

/// `(f, g)_mu`.
pub fn inner_product(mu: &VertexMeasure, f: &[f64], h: &[f64]) -> f64 {
    f.iter()
        .zip(h)
        .zip(mu.values())
        .map(|((a, b), m)| m * a * b)
        .sum()
}

fn quotient(g: &SignedGraph, map: &[Vec<f64>], mu: &VertexMeasure, plus: bool) -> Result<f64> {
    let n = g.vertex_count();
    if map.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: map.len(),
        });
    }
    mu.check_len(n)?;
    let dim = map.first().map_or(0, Vec::len);
    if map.iter().any(|x| x.len() != dim) {
        return Err(Error::InvalidArgument("ragged vector map".into()));
    }
    let den: f64 = map
        .iter()
        .zip(mu.values())
        .map(|(x, m)| m * x.iter().map(|c| c * c).sum::<f64>())
        .sum();
    if den == 0.0 {
        return Err(Error::ZeroFunction);
    }
    let num: f64 = g
        .edges()
        .iter()
        .map(|e| {
            let s = if plus {
                -e.sign.value()
            } else {
                e.sign.value()
            };
            let d2: f64 = map[e.u]
                .iter()
                .zip(&map[e.v])
                .map(|(a, b)| (a - s * b).powi(2))
                .sum();
            e.weight * d2
        })
        .sum();
    Ok(num / den)
}

fn as_map(f: &[f64]) -> Vec<Vec<f64>> {
    f.iter().map(|&x| vec![x]).collect()
}

/// Signed Rayleigh quotient
/// `sum_{u~v} w_uv (f(u) - sigma(uv) f(v))^2 / sum_u mu(u) f(u)^2`.
pub fn rayleigh(g: &SignedGraph, f: &[f64], mu: &VertexMeasure) -> Result<f64> {
    quotient(g, &as_map(f), mu, false)
}

/// Dual quotient with `f(u) + sigma(uv) f(v)`.
pub fn dual_rayleigh(g: &SignedGraph, f: &[f64], mu: &VertexMeasure) -> Result<f64> {
    quotient(g, &as_map(f), mu, true)
}

/// Rayleigh quotient of a vector-valued map `V -> R^k` (`map[v]` is the image
/// of `v`).
pub fn rayleigh_vector(g: &SignedGraph, map: &[Vec<f64>], mu: &VertexMeasure) -> Result<f64> {
    quotient(g, map, mu, false)
}

pub fn dual_rayleigh_vector(g: &SignedGraph, map: &[Vec<f64>], mu: &VertexMeasure) -> Result<f64> {
    quotient(g, map, mu, true)
}

/// `|(2 - lambda_{N-k+1}(Delta^sigma)) - lambda_k(Delta^{-sigma})|`.
pub fn check_duality(g: &SignedGraph, k: usize) -> Result<f64> {
    let n = g.vertex_count();
    check_index(k, n)?;
    let s = spectrum(g, Operator::Normalized)?;
    let t = spectrum(&g.negated(), Operator::Normalized)?;
    Ok(duality_residual(&s, &t, k))
}

/// Duality residual from precomputed spectra of `sigma` and `-sigma`.
pub fn duality_residual(spec: &Spectrum, negated: &Spectrum, k: usize) -> f64 {
    let n = spec.len();
    ((2.0 - spec.eigenvalues[n - k]) - negated.eigenvalues[k - 1]).abs()
}

/// `d_mu^w = max_u (sum_{v~u} w_uv) / mu(u)`.
pub fn max_weight_degree_ratio(g: &SignedGraph, mu: &VertexMeasure) -> f64 {
    (0..g.vertex_count())
        .map(|u| g.degree(u) / mu.get(u))
        .fold(0.0, f64::max)
}
