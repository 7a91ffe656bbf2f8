use serde::Serialize;

use super::is_matching_covered;
use crate::error::{domain, Result};
use crate::graph::{full_mask, Edge, Graph, VertexSet};
use crate::matching::{has_pm_masked, remove_edges};

/// How a cut `∂(X)` of a matching covered graph meets its perfect matchings.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CutClassification {
    /// Every edge lies in a perfect matching meeting the cut exactly once.
    pub separating: bool,
    /// Every perfect matching meets the cut exactly once.
    pub tight: bool,
    /// Separating but not tight.
    pub good: bool,
}

pub fn classify_cut(g: &Graph, x: VertexSet) -> Result<CutClassification> {
    g.check_subset(x)?;
    if x.is_empty() || x.len() == g.order() {
        return domain(format!("shore {x} must be a proper non-empty vertex subset"));
    }
    if !is_matching_covered(g) {
        return domain("cut classification needs a matching covered graph");
    }
    // parity: a perfect matching meets ∂(X) in |X| mod 2 edges
    if x.len().is_multiple_of(2) {
        return Ok(CutClassification { separating: false, tight: false, good: false });
    }
    let n = g.order();
    let all = full_mask(n);
    let boundary = g.boundary(x);
    let adj = g.adjacency();

    let mut tight = true;
    'pairs: for (i, &c) in boundary.iter().enumerate() {
        for &d in &boundary[i + 1..] {
            if c.shares_endpoint(d) {
                continue;
            }
            if has_pm_masked(adj, all & !c.mask() & !d.mask(), None) {
                tight = false;
                break 'pairs;
            }
        }
    }

    let meets_once_with = |e: Edge, c: Edge| {
        let mut a = adj.to_vec();
        let others: Vec<Edge> = boundary.iter().copied().filter(|&d| d != c).collect();
        remove_edges(&mut a, &others);
        has_pm_masked(&a, all & !c.mask() & !e.mask(), None)
    };
    let separating = tight
        || g.edges().iter().all(|&e| {
            if boundary.contains(&e) {
                meets_once_with(e, e)
            } else {
                boundary.iter().any(|&c| !c.shares_endpoint(e) && meets_once_with(e, c))
            }
        });
    Ok(CutClassification { separating, tight, good: separating && !tight })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph6::parse_graph6;

    fn prism() -> Graph {
        Graph::new(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)]).unwrap()
    }

    #[test]
    fn trivial_cuts_are_tight() {
        let k4 = parse_graph6("C~").unwrap();
        let c = classify_cut(&k4, VertexSet::singleton(2)).unwrap();
        assert_eq!(c, CutClassification { separating: true, tight: true, good: false });
    }

    #[test]
    fn prism_triangle_cut_is_good() {
        let c = classify_cut(&prism(), [0, 1, 2].iter().collect()).unwrap();
        assert!(c.separating);
        assert!(!c.tight);
        assert!(c.good);
    }

    #[test]
    fn even_shores_are_neither() {
        let c = classify_cut(&prism(), [0, 1].iter().collect()).unwrap();
        assert!(!c.separating && !c.tight && !c.good);
    }

    #[test]
    fn bad_shores_are_rejected() {
        assert!(classify_cut(&prism(), VertexSet::EMPTY).is_err());
        assert!(classify_cut(&prism(), VertexSet::full(6)).is_err());
    }
}
