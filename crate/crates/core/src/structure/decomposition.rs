use super::bricks::{is_brick, is_essentially_4ec};
use super::removable::classify_removable;
use crate::connectivity::bipartition_masked;
use crate::error::{domain, Result};
use crate::graph::{components_masked, full_mask, Graph, VertexSet};
use crate::matching::remove_edges;

/// Splits an essentially 4-edge-connected cubic brick other than `K₄` with
/// at least two removable doubletons into the components of `G − E₀`
/// (`E₀` = all doubleton edges), listed in cyclic order.
///
/// The walk starts at the part containing vertex 0 and moves first toward
/// the neighbouring part with the smaller least vertex. An error is returned
/// when the preconditions fail or when the parts do not form a cycle of
/// balanced bipartite pieces joined by one doubleton each.
pub fn doubleton_decomposition(g: &Graph) -> Result<Vec<VertexSet>> {
    if !g.is_cubic() || !is_essentially_4ec(g)? || !is_brick(g) {
        return domain("expected an essentially 4-edge-connected cubic brick");
    }
    if g.order() == 4 {
        return domain("K4 has no doubleton decomposition");
    }
    let classes = classify_removable(g)?;
    let s = classes.doubletons.len();
    if s < 2 {
        return domain(format!("needs at least two removable doubletons, found {s}"));
    }
    let e0: Vec<_> = classes.doubleton_edges().into_iter().collect();
    let mut adj = g.adjacency().to_vec();
    remove_edges(&mut adj, &e0);
    let parts = components_masked(&adj, full_mask(g.order()));
    if parts.len() != s {
        return domain(format!("{} parts for {s} doubletons", parts.len()));
    }
    let part_of = |v: usize| parts.iter().position(|p| p >> v & 1 == 1).expect("every vertex lies in a part");

    // joins[i][j]: number of doubletons running between parts i and j
    let mut joins = vec![vec![0usize; s]; s];
    for &(e, f) in &classes.doubletons {
        let (p, q) = (part_of(e.u()), part_of(e.v()));
        let (p2, q2) = (part_of(f.u()), part_of(f.v()));
        if p == q || !((p, q) == (p2, q2) || (p, q) == (q2, p2)) {
            return domain(format!("doubleton {{{e}, {f}}} does not join a single pair of parts"));
        }
        joins[p][q] += 1;
        joins[q][p] += 1;
    }

    let mut order = vec![0usize];
    if s == 2 {
        order.push(1);
    } else {
        let mut prev = usize::MAX;
        let mut cur = 0;
        for _ in 1..s {
            let next = (0..s)
                .filter(|&j| j != prev && joins[cur][j] > 0 && !order.contains(&j))
                .min_by_key(|&j| parts[j].trailing_zeros());
            let Some(next) = next else {
                return domain("doubleton cuts do not arrange the parts in a cycle");
            };
            order.push(next);
            prev = cur;
            cur = next;
        }
    }
    for i in 0..s {
        let (p, q) = (order[i], order[(i + 1) % s]);
        let expected = if s == 2 { 2 } else { 1 };
        if joins[p][q] != expected {
            return domain(format!("consecutive parts {i} and {} are not joined by exactly one doubleton", (i + 1) % s));
        }
    }
    let mut out = Vec::with_capacity(s);
    for &i in &order {
        match bipartition_masked(&adj, parts[i]) {
            Some((a, b)) if a.count_ones() == b.count_ones() => out.push(VertexSet::from_mask(parts[i])),
            _ => return domain(format!("part {} is not balanced bipartite", VertexSet::from_mask(parts[i]))),
        }
    }
    Ok(out)
}
