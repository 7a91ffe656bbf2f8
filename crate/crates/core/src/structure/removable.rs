use std::collections::BTreeSet;

use serde::Serialize;

use super::{is_matching_covered, mc_masked};
use crate::error::{domain, Result};
use crate::graph::{component_of, full_mask, Edge, Graph};
use crate::matching::{allowed_masked, perfect_matching_with, remove_edges};

/// The removable classes of a matching covered graph.
///
/// `neither` holds the edges that are neither removable nor part of any
/// reported doubleton. Doubletons are stored as pairs without assuming that
/// distinct doubletons are disjoint.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct RemovableClassification {
    pub removable: Vec<Edge>,
    pub doubletons: Vec<(Edge, Edge)>,
    pub neither: Vec<Edge>,
}

impl RemovableClassification {
    /// Union of the edges of all doubletons.
    pub fn doubleton_edges(&self) -> BTreeSet<Edge> {
        self.doubletons.iter().flat_map(|&(e, f)| [e, f]).collect()
    }

    /// Number of removable classes (removable edges plus doubletons).
    pub fn class_count(&self) -> usize {
        self.removable.len() + self.doubletons.len()
    }

    /// Whether some edge belongs to two different doubletons.
    pub fn has_overlapping_doubletons(&self) -> bool {
        self.doubleton_edges().len() < 2 * self.doubletons.len()
    }
}

fn require_mc(g: &Graph) -> Result<()> {
    if is_matching_covered(g) {
        Ok(())
    } else {
        domain("the graph is not matching covered")
    }
}

/// Every perfect matching containing `e` also contains `f`.
pub fn depends_on(g: &Graph, e: Edge, f: Edge) -> Result<bool> {
    g.check_edge(e)?;
    g.check_edge(f)?;
    if e == f {
        return domain("dependence is tested between distinct edges");
    }
    require_mc(g)?;
    Ok(perfect_matching_with(g, &[e], &[f])?.is_none())
}

/// For each edge `e` (in edge order): the edges that depend on `e`, i.e.
/// those lying in no perfect matching of `G − e`; plus whether `G − e` stays connected.
fn dependents(g: &Graph) -> Vec<(bool, Vec<Edge>)> {
    let n = g.order();
    let all = full_mask(n);
    g.edges()
        .iter()
        .map(|&e| {
            let mut adj = g.adjacency().to_vec();
            remove_edges(&mut adj, &[e]);
            let connected = component_of(&adj, all, 0) == all;
            let rest: Vec<Edge> = g.edges().iter().copied().filter(|&h| h != e).collect();
            let deps = match allowed_masked(&adj, all) {
                Some(flags) => rest.iter().zip(flags).filter(|&(_, a)| !a).map(|(&h, _)| h).collect(),
                None => rest,
            };
            (connected, deps)
        })
        .collect()
}

/// Edges whose deletion leaves a matching covered graph.
pub fn removable_edges(g: &Graph) -> Result<Vec<Edge>> {
    classify_removable(g).map(|c| c.removable)
}

/// Pairs of non-removable edges whose joint deletion leaves a matching covered graph.
pub fn removable_doubletons(g: &Graph) -> Result<Vec<(Edge, Edge)>> {
    classify_removable(g).map(|c| c.doubletons)
}

pub fn classify_removable(g: &Graph) -> Result<RemovableClassification> {
    require_mc(g)?;
    let deps = dependents(g);
    let edges = g.edges();
    let removable_flag: Vec<bool> = deps.iter().map(|(conn, d)| *conn && d.is_empty()).collect();
    let removable: Vec<Edge> = edges.iter().zip(&removable_flag).filter(|&(_, &r)| r).map(|(&e, _)| e).collect();
    let mut doubletons = Vec::new();
    for (i, &e) in edges.iter().enumerate() {
        if removable_flag[i] {
            continue;
        }
        // both edges of a doubleton depend on each other, so f ranges over deps of e
        for &f in &deps[i].1 {
            let j = g.edge_index(f).expect("dependent edges belong to the graph");
            if j <= i || removable_flag[j] || !deps[j].1.contains(&e) {
                continue;
            }
            let mut adj = g.adjacency().to_vec();
            remove_edges(&mut adj, &[e, f]);
            if mc_masked(&adj, g.order()) {
                doubletons.push((e, f));
            }
        }
    }
    doubletons.sort();
    let in_doubleton: BTreeSet<Edge> = doubletons.iter().flat_map(|&(e, f)| [e, f]).collect();
    let neither = edges
        .iter()
        .zip(&removable_flag)
        .filter(|&(e, &r)| !r && !in_doubleton.contains(e))
        .map(|(&e, _)| e)
        .collect();
    Ok(RemovableClassification { removable, doubletons, neither })
}

/// Unordered pairs `{e, f}`, `e < f`, where each edge depends on the other.
pub fn mutually_dependent_pairs(g: &Graph) -> Result<Vec<(Edge, Edge)>> {
    require_mc(g)?;
    let deps = dependents(g);
    let edges = g.edges();
    let mut out = Vec::new();
    for (i, &e) in edges.iter().enumerate() {
        for &f in &deps[i].1 {
            let j = g.edge_index(f).expect("dependent edges belong to the graph");
            if j > i && deps[j].1.contains(&e) {
                out.push((e, f));
            }
        }
    }
    out.sort();
    Ok(out)
}
