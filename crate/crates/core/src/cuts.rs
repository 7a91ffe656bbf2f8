//! Edge cuts `∂(X)` and 3-cut enumeration.

use std::collections::BTreeSet;

use crate::error::{domain, Result};
use crate::graph::{components_masked, full_mask, Edge, Graph, VertexSet};

/// A shore `X` together with its boundary `∂(X)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeCut {
    pub shore: VertexSet,
    pub boundary: Vec<Edge>,
    /// Both shores have at least two vertices.
    pub nontrivial: bool,
}

impl EdgeCut {
    pub fn len(&self) -> usize {
        self.boundary.len()
    }

    pub fn is_empty(&self) -> bool {
        self.boundary.is_empty()
    }

    /// The opposite shore `V ∖ X`.
    pub fn co_shore(&self, n: usize) -> VertexSet {
        self.shore.complement(n)
    }
}

fn check_shore(g: &Graph, x: VertexSet) -> Result<()> {
    g.check_subset(x)?;
    if x.is_empty() || x.len() == g.order() {
        return domain(format!("shore {x} must be a proper non-empty vertex subset"));
    }
    Ok(())
}

pub fn edge_cut(g: &Graph, x: VertexSet) -> Result<EdgeCut> {
    check_shore(g, x)?;
    Ok(EdgeCut {
        shore: x,
        boundary: g.boundary(x),
        nontrivial: x.len() >= 2 && g.order() - x.len() >= 2,
    })
}

/// Every shore with a 3-edge boundary whose sides both have at least two
/// vertices. Each cut is reported once, by the shore containing vertex 0
/// (the lexicographically smaller one), in lexicographic shore order.
pub fn enumerate_nontrivial_3cuts(g: &Graph) -> Result<Vec<EdgeCut>> {
    if !g.is_cubic() {
        return domain("3-cut enumeration expects a cubic graph");
    }
    if !g.is_connected() {
        return domain("3-cut enumeration expects a connected graph");
    }
    Ok(three_cut_shores(g)
        .into_iter()
        .filter(|&x| x.len() >= 2 && g.order() - x.len() >= 2)
        .map(|x| EdgeCut { shore: x, boundary: g.boundary(x), nontrivial: true })
        .collect())
}

/// All 3-cuts of a cubic connected graph, trivial ones included.
pub fn enumerate_3cuts(g: &Graph) -> Result<Vec<EdgeCut>> {
    if !g.is_cubic() || !g.is_connected() {
        return domain("3-cut enumeration expects a connected cubic graph");
    }
    Ok(three_cut_shores(g)
        .into_iter()
        .map(|x| edge_cut(g, x).expect("shore is proper"))
        .collect())
}

/// Scans every edge triple; for each way of splitting the resulting
/// components into two sides, keeps it when all three edges cross.
fn three_cut_shores(g: &Graph) -> Vec<VertexSet> {
    let n = g.order();
    let all = full_mask(n);
    let edges = g.edges();
    let m = edges.len();
    let mut found = BTreeSet::new();
    let mut adj = g.adjacency().to_vec();
    for i in 0..m {
        for j in i + 1..m {
            for k in j + 1..m {
                let triple = [edges[i], edges[j], edges[k]];
                for e in triple {
                    adj[e.u()] &= !(1u64 << e.v());
                    adj[e.v()] &= !(1u64 << e.u());
                }
                let comps = components_masked(&adj, all);
                if comps.len() > 1 {
                    let c = comps.len();
                    // component 0 holds vertex 0 and always stays in the shore
                    for choice in 0u32..(1u32 << (c - 1)) {
                        let mut x = comps[0];
                        for (t, comp) in comps.iter().enumerate().skip(1) {
                            if choice >> (t - 1) & 1 == 1 {
                                x |= comp;
                            }
                        }
                        if x == all {
                            continue;
                        }
                        let crosses = triple.iter().all(|e| (x >> e.u() & 1) != (x >> e.v() & 1));
                        if crosses {
                            found.insert(Lex(VertexSet::from_mask(x)));
                        }
                    }
                }
                for e in triple {
                    adj[e.u()] |= 1u64 << e.v();
                    adj[e.v()] |= 1u64 << e.u();
                }
            }
        }
    }
    found.into_iter().map(|l| l.0).collect()
}

/// Orders vertex sets by their ascending vertex lists.
#[derive(PartialEq, Eq)]
struct Lex(VertexSet);

impl PartialOrd for Lex {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Lex {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.0.iter().cmp(other.0.iter())
    }
}

/// Two cuts cross when all four quadrants `X∩Y, X̄∩Y, X∩Ȳ, X̄∩Ȳ` are inhabited.
pub fn cuts_cross(g: &Graph, x: VertexSet, y: VertexSet) -> Result<bool> {
    check_shore(g, x)?;
    check_shore(g, y)?;
    let n = g.order();
    let (xc, yc) = (x.complement(n), y.complement(n));
    Ok(!x.intersection(y).is_empty()
        && !xc.intersection(y).is_empty()
        && !x.intersection(yc).is_empty()
        && !xc.intersection(yc).is_empty())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph6::parse_graph6;

    fn cycle(n: usize) -> Graph {
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    #[test]
    fn trivial_cut_of_k4() {
        let k4 = parse_graph6("C~").unwrap();
        let c = edge_cut(&k4, VertexSet::singleton(0)).unwrap();
        assert_eq!(c.len(), 3);
        assert!(!c.nontrivial);
        assert!(edge_cut(&k4, VertexSet::EMPTY).is_err());
        assert!(edge_cut(&k4, k4.vertex_set()).is_err());
        assert!(enumerate_nontrivial_3cuts(&k4).unwrap().is_empty());
        assert_eq!(enumerate_3cuts(&k4).unwrap().len(), 4);
    }

    #[test]
    fn prism_has_one_nontrivial_3cut() {
        let prism = Graph::new(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)]).unwrap();
        let cuts = enumerate_nontrivial_3cuts(&prism).unwrap();
        assert_eq!(cuts.len(), 1);
        assert_eq!(cuts[0].shore.to_vec(), vec![0, 1, 2]);
        assert_eq!(cuts[0].boundary, vec![Edge::new(0, 3), Edge::new(1, 4), Edge::new(2, 5)]);
    }

    #[test]
    fn crossing_quadrants() {
        let c8 = cycle(8);
        let s = |v: &[usize]| v.iter().collect::<VertexSet>();
        assert!(cuts_cross(&c8, s(&[0, 1]), s(&[1, 2])).unwrap());
        assert!(!cuts_cross(&c8, s(&[0, 1]), s(&[0, 1, 2])).unwrap());
        assert!(cuts_cross(&c8, VertexSet::EMPTY, s(&[1])).is_err());
    }

    #[test]
    fn non_cubic_input_is_rejected() {
        assert!(enumerate_nontrivial_3cuts(&cycle(6)).is_err());
    }
}
