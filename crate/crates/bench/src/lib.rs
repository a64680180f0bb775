//! Seeded fixtures shared by the benchmarks.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use signed_spectra::generators::{
    disjoint_union, random_balanced_graph, random_function, random_signed_graph, RandomGraphParams,
};
use signed_spectra::SignedGraph;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random signed graph with exactly `n` vertices.
pub fn graph(n: usize, seed: u64) -> SignedGraph {
    random_signed_graph(
        &mut rng(seed),
        &RandomGraphParams::default().with_vertices(n, n),
    )
}

/// `parts` balanced components of `size` vertices each.
pub fn clustered(parts: usize, size: usize, seed: u64) -> SignedGraph {
    let mut r = rng(seed);
    let p = RandomGraphParams::default();
    let comps: Vec<_> = (0..parts)
        .map(|_| random_balanced_graph(&mut r, size, &p))
        .collect();
    disjoint_union(&comps)
}

pub fn function(n: usize, seed: u64) -> Vec<f64> {
    random_function(&mut rng(seed), n)
}
