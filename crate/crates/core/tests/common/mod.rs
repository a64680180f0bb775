//! Brute-force oracles shared by the integration tests. Each one enumerates
//! directly from a definition and shares no code with the library's
//! optimized paths beyond graph construction.
#![allow(dead_code)]

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use signed_spectra::generators::{random_signed_graph, RandomGraphParams};
use signed_spectra::{SignedGraph, VertexMeasure};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn corpus(seed: u64, count: usize, params: RandomGraphParams) -> Vec<SignedGraph> {
    let mut r = rng(seed);
    (0..count)
        .map(|_| random_signed_graph(&mut r, &params))
        .collect()
}

/// Dense signed adjacency `a[u][v] = sigma(uv) w_uv`.
pub fn signed_adjacency(g: &SignedGraph) -> Vec<Vec<f64>> {
    let n = g.vertex_count();
    let mut a = vec![vec![0.0; n]; n];
    for e in g.edges() {
        a[e.u][e.v] = e.signed_weight();
        a[e.v][e.u] = e.signed_weight();
    }
    a
}

/// `beta^sigma(V1, V2)` from the defining double sums over the dense
/// adjacency. `side[v]`: 0 outside, 1 or 2.
pub fn beta_oracle(a: &[Vec<f64>], side: &[u8], mu: &[f64]) -> f64 {
    let n = a.len();
    let (mut pos_between, mut neg_inside, mut boundary, mut vol) = (0.0, 0.0, 0.0, 0.0);
    for u in 0..n {
        if side[u] == 0 {
            continue;
        }
        vol += mu[u];
        for v in 0..n {
            let x = a[u][v];
            if x == 0.0 {
                continue;
            }
            if side[v] == 0 {
                boundary += x.abs();
            } else if side[v] == side[u] && x < 0.0 {
                neg_inside += -x;
            } else if side[u] == 1 && side[v] == 2 && x > 0.0 {
                pos_between += x;
            }
        }
    }
    (2.0 * pos_between + neg_inside + boundary) / vol
}

/// `h_k` by enumerating every assignment `V -> {unused, V_1, ..., V_2k}` and
/// skipping those where some pair has an empty union.
pub fn pair_k_oracle(g: &SignedGraph, k: usize, mu: &VertexMeasure) -> f64 {
    let n = g.vertex_count();
    let a = signed_adjacency(g);
    let base = 2 * k + 1;
    let total = base.pow(n as u32);
    let mut best = f64::INFINITY;
    let mut labels = vec![0usize; n];
    for code in 0..total {
        let mut c = code;
        for l in labels.iter_mut() {
            *l = c % base;
            c /= base;
        }
        let mut worst = 0.0f64;
        let mut valid = true;
        for i in 0..k {
            let side: Vec<u8> = labels
                .iter()
                .map(|&l| {
                    if l == 2 * i + 1 {
                        1
                    } else if l == 2 * i + 2 {
                        2
                    } else {
                        0
                    }
                })
                .collect();
            if side.iter().all(|&s| s == 0) {
                valid = false;
                break;
            }
            worst = worst.max(beta_oracle(&a, &side, mu.values()));
        }
        if valid {
            best = best.min(worst);
        }
    }
    best
}

/// Two-colouring balance test on an explicit edge list.
fn balanced_edges(n: usize, edges: &[(usize, usize, bool)]) -> bool {
    let mut colour: Vec<Option<bool>> = vec![None; n];
    let mut adj = vec![Vec::new(); n];
    for &(u, v, neg) in edges {
        adj[u].push((v, neg));
        adj[v].push((u, neg));
    }
    for s in 0..n {
        if colour[s].is_some() {
            continue;
        }
        colour[s] = Some(false);
        let mut stack = vec![s];
        while let Some(x) = stack.pop() {
            let cx = colour[x].unwrap();
            for &(y, neg) in &adj[x] {
                let want = cx ^ neg;
                match colour[y] {
                    None => {
                        colour[y] = Some(want);
                        stack.push(y);
                    }
                    Some(cy) if cy != want => return false,
                    _ => {}
                }
            }
        }
    }
    true
}

/// `e_min(S)` by trying every deletion set of induced edges.
pub fn frustration_deletion_oracle(g: &SignedGraph, s: &[usize]) -> f64 {
    let n = g.vertex_count();
    let mut inside = vec![false; n];
    s.iter().for_each(|&v| inside[v] = true);
    let induced: Vec<_> = g
        .edges()
        .iter()
        .filter(|e| inside[e.u] && inside[e.v])
        .collect();
    let m = induced.len();
    assert!(m <= 20, "deletion oracle limited to 20 edges");
    let mut best = f64::INFINITY;
    for mask in 0u32..(1 << m) {
        let deleted: f64 = (0..m)
            .filter(|&i| mask >> i & 1 == 1)
            .map(|i| induced[i].weight)
            .sum();
        if deleted >= best {
            continue;
        }
        let kept: Vec<_> = (0..m)
            .filter(|&i| mask >> i & 1 == 0)
            .map(|i| (induced[i].u, induced[i].v, induced[i].sign.is_negative()))
            .collect();
        if balanced_edges(n, &kept) {
            best = deleted;
        }
    }
    best
}

/// `min over bipartitions (V1, V2) of S of beta`.
pub fn alpha_by_bipartitions(g: &SignedGraph, s: &[usize], mu: &VertexMeasure) -> f64 {
    let a = signed_adjacency(g);
    let mut best = f64::INFINITY;
    for mask in 0u32..(1 << s.len()) {
        let mut side = vec![0u8; g.vertex_count()];
        for (i, &v) in s.iter().enumerate() {
            side[v] = if mask >> i & 1 == 1 { 2 } else { 1 };
        }
        best = best.min(beta_oracle(&a, &side, mu.values()));
    }
    best
}

/// `min over switchings theta of rho^{sigma^theta}(S)`, switching only inside `S`.
pub fn alpha_by_switchings(g: &SignedGraph, s: &[usize], mu: &VertexMeasure) -> f64 {
    let mut best = f64::INFINITY;
    for mask in 0u32..(1 << s.len()) {
        let mut a = signed_adjacency(g);
        for (i, &v) in s.iter().enumerate() {
            if mask >> i & 1 == 1 {
                for x in 0..a.len() {
                    a[v][x] = -a[v][x];
                    a[x][v] = -a[x][v];
                }
            }
        }
        let mut side = vec![0u8; g.vertex_count()];
        s.iter().for_each(|&v| side[v] = 1);
        best = best.min(beta_oracle(&a, &side, mu.values()));
    }
    best
}

/// Unsigned bipartiteness ratio `min_y sum w |y_u + y_v| / sum mu |y_u|` over
/// `y in {-1, 0, 1}^V`, ignoring signs.
pub fn bipartiteness_ratio_oracle(g: &SignedGraph, mu: &VertexMeasure) -> f64 {
    let n = g.vertex_count();
    let mut best = f64::INFINITY;
    let mut y = vec![0i32; n];
    for code in 1..3usize.pow(n as u32) {
        let mut c = code;
        for x in y.iter_mut() {
            *x = (c % 3) as i32 - 1;
            c /= 3;
        }
        let den: f64 = (0..n).map(|v| mu.get(v) * y[v].abs() as f64).sum();
        if den == 0.0 {
            continue;
        }
        let num: f64 = g
            .edges()
            .iter()
            .map(|e| e.weight * (y[e.u] + y[e.v]).abs() as f64)
            .sum();
        best = best.min(num / den);
    }
    best
}

/// Every subset of `0..n` as a sorted vertex list, excluding the empty set.
pub fn nonempty_subsets(n: usize) -> impl Iterator<Item = Vec<usize>> {
    (1u32..(1 << n)).map(move |m| (0..n).filter(|&v| m >> v & 1 == 1).collect())
}
