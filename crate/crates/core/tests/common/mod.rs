//! Random graph sources and conversions shared by the integration tests.
#![allow(dead_code)]

use std::collections::BTreeSet;

use mcov_core::{Edge, Graph};
use mcov_oracle::{Pair, Small};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

pub fn small(g: &Graph) -> Small {
    Small::new(g.order(), g.edges().iter().map(|e| e.ends()))
}

pub fn pairs(edges: &[Edge]) -> BTreeSet<Pair> {
    edges.iter().map(|e| e.ends()).collect()
}

/// A uniformly random simple cubic graph from the pairing model (rejection on loops and parallel edges).
pub fn random_cubic(n: usize, rng: &mut StdRng) -> Graph {
    assert!(n.is_multiple_of(2) && n >= 4);
    loop {
        let mut points: Vec<usize> = (0..3 * n).map(|p| p / 3).collect();
        points.shuffle(rng);
        let mut seen = BTreeSet::new();
        let ok = points.chunks(2).all(|c| c[0] != c[1] && seen.insert(Edge::new(c[0], c[1])));
        if ok {
            return Graph::new(n, seen.into_iter().map(|e| e.ends())).unwrap();
        }
    }
}

pub fn random_connected_cubic(n: usize, rng: &mut StdRng) -> Graph {
    loop {
        let g = random_cubic(n, rng);
        if g.is_connected() {
            return g;
        }
    }
}

/// Erdős–Rényi `G(n, p)`.
pub fn random_graph(n: usize, p: f64, rng: &mut StdRng) -> Graph {
    let mut edges = Vec::new();
    for b in 1..n {
        for a in 0..b {
            if rng.gen_bool(p) {
                edges.push((a, b));
            }
        }
    }
    Graph::new(n, edges).unwrap()
}

/// Bipartite graph on `A = 0..k`, `B = k..2k` containing the perfect matching `i ↔ k + i`.
pub fn random_bipartite(k: usize, p: f64, rng: &mut StdRng) -> Graph {
    let mut edges = Vec::new();
    for a in 0..k {
        for b in 0..k {
            if a == b || rng.gen_bool(p) {
                edges.push((a, k + b));
            }
        }
    }
    Graph::new(2 * k, edges).unwrap()
}

pub fn random_permutation(n: usize, rng: &mut StdRng) -> Vec<usize> {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    perm
}
