//! Connected cubic graphs: a small generator and the bundled census.
//!
//! Graphs are grown from `K₄` by three operations: edge insertion (subdivide
//! two distinct edges and join the two new vertices), diamond insertion into
//! an edge, and bridging two smaller graphs through subdivided edges. One
//! representative per canonical form is kept at each order. The output is
//! checked against the published counts rather than trusted.

use std::collections::BTreeMap;

use mcov_core::constructors::complete_graph;
use mcov_core::{canonical_form, canonical_graph, read_all_graph6, Graph, Graph6Record};
use rayon::prelude::*;

use crate::error::{HarnessError, Result};

/// Published numbers of connected cubic graphs by order.
pub const KNOWN_COUNTS: [(usize, usize); 7] = [(4, 1), (6, 2), (8, 5), (10, 19), (12, 85), (14, 509), (16, 4060)];

/// Largest order shipped with the crate.
pub const BUNDLED_MAX_ORDER: usize = 16;

/// Largest order the generator accepts.
pub const GENERATOR_MAX_ORDER: usize = 18;

const BUNDLED: [(usize, &str); 7] = [
    (4, include_str!("../data/census/cubic-04.g6")),
    (6, include_str!("../data/census/cubic-06.g6")),
    (8, include_str!("../data/census/cubic-08.g6")),
    (10, include_str!("../data/census/cubic-10.g6")),
    (12, include_str!("../data/census/cubic-12.g6")),
    (14, include_str!("../data/census/cubic-14.g6")),
    (16, include_str!("../data/census/cubic-16.g6")),
];

/// Connected cubic graphs of every even order `4..=max_n`, keyed by order.
/// Each graph is in canonical labelling; each order is sorted by graph6 text.
pub fn connected_cubic(max_n: usize) -> Result<BTreeMap<usize, Vec<Graph>>> {
    if max_n > GENERATOR_MAX_ORDER {
        return Err(HarnessError::Usage(format!("cubic generation is limited to orders ≤ {GENERATOR_MAX_ORDER}")));
    }
    let mut levels: BTreeMap<usize, BTreeMap<String, Graph>> = BTreeMap::new();
    if max_n < 4 {
        return Ok(BTreeMap::new());
    }
    let k4 = canonical_graph(&complete_graph(4));
    levels.insert(4, BTreeMap::from([(canonical_form(&k4), k4)]));
    for n in (6..=max_n).step_by(2) {
        let mut children: Vec<Graph> = Vec::new();
        if let Some(prev) = levels.get(&(n - 2)) {
            children.extend(prev.values().flat_map(edge_insertions));
        }
        if let Some(prev) = levels.get(&(n - 4)) {
            children.extend(prev.values().flat_map(diamond_insertions));
        }
        for n1 in (4..=(n - 2) / 2).step_by(2) {
            let n2 = n - 2 - n1;
            if let (Some(left), Some(right)) = (levels.get(&n1), levels.get(&n2)) {
                for g in left.values() {
                    for h in right.values() {
                        children.extend(bridge_joins(g, h));
                    }
                }
            }
        }
        let level: BTreeMap<String, Graph> = children
            .par_iter()
            .map(|h| (canonical_form(h), h))
            .collect::<Vec<_>>()
            .into_iter()
            .fold(BTreeMap::new(), |mut acc, (key, h)| {
                acc.entry(key).or_insert_with(|| canonical_graph(h));
                acc
            });
        levels.insert(n, level);
    }
    Ok(levels.into_iter().map(|(n, level)| (n, level.into_values().collect())).collect())
}

fn edge_insertions(g: &Graph) -> Vec<Graph> {
    let edges = g.edges();
    let n = g.order();
    let mut out = Vec::new();
    for (i, &a) in edges.iter().enumerate() {
        for &b in &edges[i + 1..] {
            let mut list: Vec<(usize, usize)> = edges.iter().filter(|&&e| e != a && e != b).map(|e| e.ends()).collect();
            let (x, y) = (n, n + 1);
            list.extend([(a.u(), x), (x, a.v()), (b.u(), y), (y, b.v()), (x, y)]);
            out.push(Graph::new(n + 2, list).expect("edge insertion keeps the graph simple"));
        }
    }
    out
}

/// Replaces `ab` by `a–p`, `q–b` with `p, q` joined through the two middle
/// vertices of a diamond.
fn diamond_insertions(g: &Graph) -> Vec<Graph> {
    let n = g.order();
    g.edges()
        .iter()
        .map(|&e| {
            let (p, q, r, s) = (n, n + 1, n + 2, n + 3);
            let mut list: Vec<(usize, usize)> = g.edges().iter().filter(|&&f| f != e).map(|f| f.ends()).collect();
            list.extend([(e.u(), p), (q, e.v()), (p, r), (p, s), (r, s), (r, q), (s, q)]);
            Graph::new(n + 4, list).expect("diamond insertion keeps the graph simple")
        })
        .collect()
}

/// Subdivides one edge in each of `g` and `h` and joins the two new vertices by a bridge.
fn bridge_joins(g: &Graph, h: &Graph) -> Vec<Graph> {
    let (ng, nh) = (g.order(), h.order());
    let (x, y) = (ng + nh, ng + nh + 1);
    let mut out = Vec::new();
    for &a in g.edges() {
        for &b in h.edges() {
            let mut list: Vec<(usize, usize)> = g.edges().iter().filter(|&&e| e != a).map(|e| e.ends()).collect();
            list.extend(h.edges().iter().filter(|&&e| e != b).map(|e| (e.u() + ng, e.v() + ng)));
            list.extend([(a.u(), x), (x, a.v()), (b.u() + ng, y), (y, b.v() + ng), (x, y)]);
            out.push(Graph::new(ng + nh + 2, list).expect("bridge join keeps the graph simple"));
        }
    }
    out
}

/// The bundled graph6 text for one order.
pub fn bundled_text(n: usize) -> Option<&'static str> {
    BUNDLED.iter().find(|(m, _)| *m == n).map(|(_, t)| *t)
}

/// Concatenated bundled census for all orders `≤ max_n`, one graph per line.
pub fn bundled_census_text(max_n: usize) -> String {
    BUNDLED.iter().filter(|(n, _)| *n <= max_n).map(|(_, t)| *t).collect()
}

/// Parsed bundled census for all orders `≤ max_n`; line numbers run through the concatenation.
pub fn bundled_census(max_n: usize) -> Result<Vec<Graph6Record>> {
    Ok(read_all_graph6(bundled_census_text(max_n).as_bytes())?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_orders_match_published_counts() {
        let levels = connected_cubic(12).unwrap();
        for (n, count) in KNOWN_COUNTS.iter().filter(|(n, _)| *n <= 12) {
            assert_eq!(levels[n].len(), *count, "order {n}");
        }
    }

    #[test]
    fn generated_graphs_are_connected_and_cubic() {
        for (_, graphs) in connected_cubic(10).unwrap() {
            assert!(graphs.iter().all(|g| g.is_cubic() && g.is_connected()));
        }
    }

    #[test]
    fn generator_refuses_large_orders() {
        assert!(connected_cubic(GENERATOR_MAX_ORDER + 2).is_err());
        assert!(connected_cubic(2).unwrap().is_empty());
    }
}
