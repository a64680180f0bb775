//! Balance and antibalance decision procedures with constructive witnesses.

use serde::Serialize;

use crate::graph::{Sign, SignedGraph, SwitchingFunction};

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BalanceWitness {
    /// `theta` with `sigma^theta ≡ +1` (for antibalance: `≡ -1`).
    Switching(SwitchingFunction),
    /// Closed walk `v_0, v_1, ..., v_{m-1}` (edge `v_{m-1} v_0` implied)
    /// whose sign product is `-1` (for antibalance: in the negated graph).
    NegativeCycle(Vec<usize>),
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BalanceReport {
    pub balanced: bool,
    pub witness: BalanceWitness,
}

impl BalanceReport {
    /// Harary bipartition `(V_theta^+, V_theta^-)` when balanced.
    pub fn harary_bipartition(&self) -> Option<(Vec<usize>, Vec<usize>)> {
        match &self.witness {
            BalanceWitness::Switching(theta) => {
                let (plus, minus): (Vec<usize>, Vec<usize>) =
                    (0..theta.len()).partition(|&v| theta.get(v) == Sign::Positive);
                Some((plus, minus))
            }
            BalanceWitness::NegativeCycle(_) => None,
        }
    }
}

/// Decides balance by a signed two-colouring of each component.
///
/// `theta(u)` is the parity of negative edges on the BFS-tree path from the
/// component root; a non-tree edge whose endpoints disagree closes a negative
/// cycle.
pub fn is_balanced(g: &SignedGraph) -> BalanceReport {
    let n = g.vertex_count();
    let mut theta: Vec<Option<Sign>> = vec![None; n];
    let mut parent: Vec<Option<usize>> = vec![None; n];
    let mut depth = vec![0usize; n];
    for root in 0..n {
        if theta[root].is_some() {
            continue;
        }
        theta[root] = Some(Sign::Positive);
        let mut queue = vec![root];
        let mut head = 0;
        while head < queue.len() {
            let x = queue[head];
            head += 1;
            let tx = theta[x].unwrap();
            for &(y, id) in g.neighbors(x) {
                let want = tx * g.edge(id).sign;
                match theta[y] {
                    None => {
                        theta[y] = Some(want);
                        parent[y] = Some(x);
                        depth[y] = depth[x] + 1;
                        queue.push(y);
                    }
                    Some(ty) if ty != want => {
                        return BalanceReport {
                            balanced: false,
                            witness: BalanceWitness::NegativeCycle(tree_cycle(
                                &parent, &depth, x, y,
                            )),
                        };
                    }
                    Some(_) => {}
                }
            }
        }
    }
    BalanceReport {
        balanced: true,
        witness: BalanceWitness::Switching(SwitchingFunction::new(
            theta.into_iter().map(Option::unwrap).collect(),
        )),
    }
}

/// Cycle formed by the tree paths from `x` and `y` to their common ancestor
/// and the edge `xy`.
fn tree_cycle(parent: &[Option<usize>], depth: &[usize], x: usize, y: usize) -> Vec<usize> {
    let (mut a, mut b) = (x, y);
    let mut left = vec![a];
    let mut right = vec![b];
    while depth[a] > depth[b] {
        a = parent[a].unwrap();
        left.push(a);
    }
    while depth[b] > depth[a] {
        b = parent[b].unwrap();
        right.push(b);
    }
    while a != b {
        a = parent[a].unwrap();
        b = parent[b].unwrap();
        left.push(a);
        right.push(b);
    }
    right.pop();
    right.reverse();
    // x -> ... -> lca -> ... -> y, closed by the edge y-x
    left.extend(right);
    left
}

/// Balance of the negated graph `(G, -sigma)`.
pub fn is_antibalanced(g: &SignedGraph) -> BalanceReport {
    is_balanced(&g.negated())
}

/// Product of edge signs along a closed walk, or `None` if some consecutive
/// pair is not adjacent.
pub fn cycle_sign(g: &SignedGraph, cycle: &[usize]) -> Option<Sign> {
    if cycle.len() < 2 {
        return None;
    }
    let mut s = Sign::Positive;
    for i in 0..cycle.len() {
        let (a, b) = (cycle[i], cycle[(i + 1) % cycle.len()]);
        s = s * g.edge_between(a, b)?.sign;
    }
    Some(s)
}

/// Number of connected components whose induced signed graph is balanced.
pub fn balanced_component_count(g: &SignedGraph) -> usize {
    g.components()
        .iter()
        .filter(|c| is_balanced(&g.induced(c).0).balanced)
        .count()
}
