use std::collections::{BTreeMap, BTreeSet};

use super::complete_graph;
use super::splice::insert_triangle;
use crate::canon::{canonical_form, canonical_graph};
use crate::error::{domain, Result};
use crate::graph::{Bits, Graph, VertexSet};
use crate::transform::contract;

/// Members of the family generated from `K₄` by successive triangle
/// insertions, one per isomorphism class, by increasing order up to `max_n`.
/// Each member is returned in canonical labelling.
pub fn enumerate_family_g(max_n: usize) -> Result<Vec<Graph>> {
    if max_n > 40 {
        return domain("family enumeration is limited to orders ≤ 40");
    }
    let mut out = Vec::new();
    if max_n < 4 {
        return Ok(out);
    }
    let mut level = vec![canonical_graph(&complete_graph(4))];
    while let Some(first) = level.first() {
        let n = first.order();
        out.extend(level.iter().cloned());
        if n + 2 > max_n {
            break;
        }
        let mut next: BTreeMap<String, Graph> = BTreeMap::new();
        for g in &level {
            for v in g.vertices() {
                let h = insert_triangle(g, v)?;
                next.entry(canonical_form(&h)).or_insert_with(|| canonical_graph(&h));
            }
        }
        level = next.into_values().collect();
    }
    Ok(out)
}

/// Membership by contracting triangles back down to `K₄`, backtracking over
/// the choice of triangle (the first triangle is tried first).
pub fn is_in_family_g(g: &Graph) -> Result<bool> {
    if !g.is_cubic() {
        return domain("family membership is decided for cubic graphs");
    }
    let mut memo = BTreeMap::new();
    Ok(member(g, &mut memo))
}

fn member(g: &Graph, memo: &mut BTreeMap<String, bool>) -> bool {
    let n = g.order();
    if n == 4 {
        return g.size() == 6;
    }
    if n < 4 || !g.is_connected() {
        return false;
    }
    let key = canonical_form(g);
    if let Some(&known) = memo.get(&key) {
        return known;
    }
    let mut answer = false;
    for t in triangles(g) {
        // contraction is only simple when no outside vertex sees two triangle vertices
        let Ok(h) = contract(g, t) else {
            continue;
        };
        if member(&h, memo) {
            answer = true;
            break;
        }
    }
    memo.insert(key, answer);
    answer
}

/// Vertex sets of all triangles, in lexicographic order.
pub(crate) fn triangles(g: &Graph) -> Vec<VertexSet> {
    let adj = g.adjacency();
    let mut out = BTreeSet::new();
    for a in g.vertices() {
        for b in Bits::new(adj[a] & !((2u64 << a) - 1)) {
            for c in Bits::new(adj[a] & adj[b] & !((2u64 << b) - 1)) {
                out.insert([a, b, c]);
            }
        }
    }
    out.into_iter().map(|t| t.iter().collect()).collect()
}
