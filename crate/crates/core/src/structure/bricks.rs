use super::{is_matching_covered, mc_masked};
use crate::connectivity::{bipartition_masked, is_bipartite, is_three_connected, is_two_edge_connected};
use crate::cuts::enumerate_nontrivial_3cuts;
use crate::error::{domain, Result};
use crate::graph::{full_mask, Edge, Graph};
use crate::matching::{bicritical_unchecked, has_pm_masked, remove_edges};

/// 3-connected and bicritical.
pub fn is_brick(g: &Graph) -> bool {
    let n = g.order();
    n >= 4 && n.is_multiple_of(2) && is_three_connected(g) && bicritical_unchecked(g)
}

/// Bipartite, matching covered and free of nontrivial tight cuts.
///
/// Uses the Hall-type characterisation: with colour classes `A`, `B` and at
/// least six vertices, `G − {a₁, a₂, b₁, b₂}` must have a perfect matching
/// for all distinct `a₁, a₂ ∈ A` and `b₁, b₂ ∈ B`.
pub fn is_brace(g: &Graph) -> bool {
    let Some((a, b)) = is_bipartite(g) else {
        return false;
    };
    if !is_matching_covered(g) {
        return false;
    }
    if g.order() <= 4 {
        return true;
    }
    let adj = g.adjacency();
    let all = full_mask(g.order());
    let (a, b) = (a.to_vec(), b.to_vec());
    for (i, &a1) in a.iter().enumerate() {
        for &a2 in &a[i + 1..] {
            for (j, &b1) in b.iter().enumerate() {
                for &b2 in &b[j + 1..] {
                    let gone = 1u64 << a1 | 1u64 << a2 | 1u64 << b1 | 1u64 << b2;
                    if !has_pm_masked(adj, all & !gone, None) {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// A pair `(e, f)`, first in lexicographic order, with `G − {e, f}` bipartite
/// and matching covered.
///
/// For 3-edge-connected cubic graphs the first pair leaving a bipartite graph
/// is returned directly; otherwise every candidate is checked for matching
/// coverage as well.
pub fn is_near_bipartite(g: &Graph) -> Result<Option<(Edge, Edge)>> {
    if !is_matching_covered(g) {
        return domain("near-bipartiteness is tested on matching covered graphs");
    }
    if is_bipartite(g).is_some() {
        return domain("the graph is already bipartite");
    }
    let fast = g.is_cubic() && is_three_edge_connected(g);
    let n = g.order();
    let all = full_mask(n);
    let edges = g.edges();
    for (i, &e) in edges.iter().enumerate() {
        for &f in &edges[i + 1..] {
            let mut adj = g.adjacency().to_vec();
            remove_edges(&mut adj, &[e, f]);
            if bipartition_masked(&adj, all).is_none() {
                continue;
            }
            if fast || mc_masked(&adj, n) {
                return Ok(Some((e, f)));
            }
        }
    }
    Ok(None)
}

fn is_three_edge_connected(g: &Graph) -> bool {
    if !is_two_edge_connected(g) {
        return false;
    }
    let edges = g.edges();
    for (i, &e) in edges.iter().enumerate() {
        for &f in &edges[i + 1..] {
            if crate::connectivity::disconnects(g, &[e, f]) {
                return false;
            }
        }
    }
    true
}

/// 2-edge-connected with no nontrivial 3-cut.
pub fn is_essentially_4ec(g: &Graph) -> Result<bool> {
    if !g.is_cubic() {
        return domain("essential 4-edge-connectivity is defined here for cubic graphs");
    }
    if !is_two_edge_connected(g) {
        return Ok(false);
    }
    Ok(enumerate_nontrivial_3cuts(g)?.is_empty())
}
