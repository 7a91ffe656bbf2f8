use serde::Serialize;

use crate::connectivity::is_bipartite;
use crate::error::{domain, Error, Result};
use crate::graph::{Edge, Graph, VertexSet};
use crate::matching::{perfect_matching, perfect_matching_with};

/// Partition of the colour classes `A = A₁ ∪ A₂`, `B = B₁ ∪ B₂` with
/// `|A₁| = |B₁|`, no edge between `A₁` and `B₂`, and the witnessed edge
/// between `A₂` and `B₁`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct DMPartition {
    pub a1: VertexSet,
    pub a2: VertexSet,
    pub b1: VertexSet,
    pub b2: VertexSet,
}

/// Certificate that the edge `e` of a bipartite graph lies in no perfect matching.
///
/// With a perfect matching `M` fixed and `e = ab` (`a ∈ A`, `b ∈ B`), `B₁` is
/// the set of `B`-vertices reachable from `b` by stepping to the `M`-partner in
/// `A` and then along any edge back into `B`; `A₁ = M(B₁)`.
pub fn dm_witness(g: &Graph, e: Edge) -> Result<DMPartition> {
    g.check_edge(e)?;
    let Some((side_a, side_b)) = is_bipartite(g) else {
        return domain("a Dulmage-Mendelsohn witness needs a bipartite graph");
    };
    let Some(m) = perfect_matching(g) else {
        return domain("the graph has no perfect matching");
    };
    if perfect_matching_with(g, &[e], &[])?.is_some() {
        return Err(Error::WitnessNotApplicable(e));
    }
    let (a, b) = if side_a.contains(e.u()) { (e.u(), e.v()) } else { (e.v(), e.u()) };
    debug_assert!(side_a.contains(a) && side_b.contains(b));
    let mut b1 = VertexSet::singleton(b);
    let mut stack = vec![b];
    while let Some(y) = stack.pop() {
        let x = m.partner(y).expect("perfect matching covers every vertex");
        for z in g.neighbors(x) {
            if !b1.contains(z) {
                b1.insert(z);
                stack.push(z);
            }
        }
    }
    let a1: VertexSet = b1.iter().map(|y| m.partner(y).expect("covered")).collect();
    let part = DMPartition { a1, a2: side_a.difference(a1), b1, b2: side_b.difference(b1) };
    debug_assert!(part.a2.contains(a));
    Ok(part)
}
