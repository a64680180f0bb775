//! Spectral analysis of signed graphs: signed Laplacian spectra, signed
//! Cheeger constants, k-way almost-balanced clustering and triangle-based
//! eigenvalue bounds.
//!
//! ```
//! use signed_spectra::{build_graph, h_exact, spectrum, Operator, VertexMeasure};
//!
//! let g = build_graph([("a", "b", -1.0), ("b", "c", -1.0), ("a", "c", -1.0)]).unwrap();
//! let s = spectrum(&g, Operator::Normalized).unwrap();
//! assert!((s.smallest() - 0.5).abs() < 1e-12);
//!
//! let mu = VertexMeasure::degree(&g).unwrap();
//! let h = h_exact(&g, 1, &mu).unwrap();
//! assert!((h.value - 1.0 / 3.0).abs() < 1e-12);
//! ```

pub mod balance;
pub mod bounds;
pub mod cheeger;
pub mod clustering;
pub mod error;
pub mod generators;
pub mod graph;
pub mod linalg;
pub mod spectral;

pub use balance::{
    balanced_component_count, cycle_sign, is_antibalanced, is_balanced, BalanceReport,
    BalanceWitness,
};
pub use bounds::{
    kirchhoff_triangle_bound, triangle_bounds_normalized, verify_all, BoundName, BoundReport,
    BoundStatus, VerifyOptions,
};
pub use cheeger::{
    alpha_bar, beta, frustration, h_dual_exact, h_exact, h_exact_with, l1_rayleigh,
    signed_expansion, sweep_linear, sweep_quadratic, CertificateMode, CheegerCertificate,
    ExactBudget, FrustrationMethod, FrustrationResult, SweepResult,
};
pub use clustering::{
    cluster, embed, localize, normalize, partition_projective, projective_distance,
    select_coordinate, ClusterDiagnostics, ClusterOptions, ClusterResult, Embedding, EmbeddingMode,
    NormalizedPoints, Partition, PartitionOptions, PartitionStrategy,
};
pub use error::{Error, Result};
pub use graph::{
    build_graph, edge_measure, signed_triangle_counts, volume, Edge, GraphBuilder, MeasureKind,
    Sign, SignFilter, SignedGraph, SubBipartition, SwitchingFunction, VertexMeasure,
};
pub use spectral::{
    check_duality, dual_rayleigh, dual_rayleigh_vector, kirchhoff, max_weight_degree_ratio,
    normalized_laplacian, rayleigh, rayleigh_vector, spectrum, Operator, Spectrum,
};
