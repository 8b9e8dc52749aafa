//! Shared helpers for the integration suites: hand-built fixture systems,
//! seeded random corpora, and small independent brute-force oracles.

#![allow(dead_code)]

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use structctl::matching::BipartiteGraph;
use structctl::rat::{rat, Rat};
use structctl::{StructuredMatrix, StructuredSystem};

/// Running demo pattern: 4 states, 3 inputs, two source components.
pub fn demo_system_with_costs(costs: [i128; 3]) -> StructuredSystem {
    let a = StructuredMatrix::new(
        4,
        4,
        [(0, 0), (0, 1), (1, 1), (2, 0), (2, 1), (2, 3), (3, 3)],
    )
    .unwrap();
    let b = StructuredMatrix::new(
        4,
        3,
        [(0, 0), (0, 2), (1, 1), (1, 2), (2, 0), (2, 1), (3, 2)],
    )
    .unwrap();
    StructuredSystem::new(a, b, costs.into_iter().map(rat).collect()).unwrap()
}

pub fn demo_system() -> StructuredSystem {
    demo_system_with_costs([1, 1, 1])
}

/// x1 -> {x2, x3}, input on x2 only: x1 and x3 stay unreachable.
pub fn inaccessible_three_state() -> StructuredSystem {
    let a = StructuredMatrix::new(3, 3, [(1, 0), (2, 0)]).unwrap();
    let b = StructuredMatrix::new(3, 1, [(1, 0)]).unwrap();
    StructuredSystem::new(a, b, vec![rat(1)]).unwrap()
}

/// Random system with the given shape and edge densities.
pub fn random_system(
    rng: &mut ChaCha8Rng,
    n: usize,
    m: usize,
    density_a: f64,
    density_b: f64,
    max_cost: i64,
) -> StructuredSystem {
    let mut a_entries = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if rng.random_bool(density_a) {
                a_entries.push((i, j));
            }
        }
    }
    let mut b_entries = Vec::new();
    for i in 0..n {
        for j in 0..m {
            if rng.random_bool(density_b) {
                b_entries.push((i, j));
            }
        }
    }
    let costs = (0..m)
        .map(|_| rat(rng.random_range(0..=max_cost) as i128))
        .collect();
    let a = StructuredMatrix::new(n, n, a_entries).unwrap();
    let b = StructuredMatrix::new(n, m, b_entries).unwrap();
    StructuredSystem::new(a, b, costs).unwrap()
}

/// Exhaustive maximum-matching cardinality by include/exclude recursion.
pub fn brute_max_matching(g: &BipartiteGraph) -> usize {
    fn go(edges: &[(usize, usize)], used_l: u64, used_r: u64) -> usize {
        let Some((&(l, r), rest)) = edges.split_first() else {
            return 0;
        };
        let skip = go(rest, used_l, used_r);
        if used_l & (1 << l) == 0 && used_r & (1 << r) == 0 {
            skip.max(1 + go(rest, used_l | (1 << l), used_r | (1 << r)))
        } else {
            skip
        }
    }
    go(g.edges(), 0, 0)
}

/// Weight of every matching that saturates all right vertices.
pub fn brute_right_perfect_weights(g: &BipartiteGraph) -> Vec<Rat> {
    fn go(g: &BipartiteGraph, right: usize, used_l: u64, acc: Rat, out: &mut Vec<Rat>) {
        if right == g.right_count() {
            out.push(acc);
            return;
        }
        for &(l, r) in g.edges() {
            if r == right && used_l & (1 << l) == 0 {
                let w = g.edge_weight(l, r).unwrap();
                go(g, right + 1, used_l | (1 << l), acc + w, out);
            }
        }
    }
    let mut out = Vec::new();
    go(g, 0, 0, Rat::from_integer(0), &mut out);
    out
}

/// Pairwise mutual reachability by transitive closure, for cross-checking
/// component membership on small graphs.
pub fn mutual_reachability(g: &structctl::graph::Digraph) -> Vec<Vec<bool>> {
    let n = g.vertex_count();
    let mut reach = vec![vec![false; n]; n];
    for v in 0..n {
        reach[v][v] = true;
        for &w in g.out_neighbors(v) {
            reach[v][w] = true;
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                reach[i][j] |= reach[i][k] && reach[k][j];
            }
        }
    }
    let mut mutual = vec![vec![false; n]; n];
    for i in 0..n {
        for j in 0..n {
            mutual[i][j] = reach[i][j] && reach[j][i];
        }
    }
    mutual
}
