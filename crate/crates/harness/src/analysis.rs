//! Single-graph summaries.

use mcov_core::{classify_removable, Error, Graph, Result};
use serde::Serialize;

use crate::facts::{removable_matching_size, Facts};

/// Structural summary of one graph. Classification fields are `None` when
/// the graph is not matching covered.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AnalysisReport {
    pub order: usize,
    pub size: usize,
    pub cubic: bool,
    pub matching_covered: bool,
    pub brick: bool,
    pub brace: bool,
    pub near_bipartite: bool,
    pub essentially_4ec: bool,
    pub removable_edge_count: Option<usize>,
    pub doubleton_count: Option<usize>,
    pub removable_class_count: Option<usize>,
    pub max_removable_matching: Option<usize>,
    pub neither_count: Option<usize>,
}

pub fn analyze(g: &Graph) -> AnalysisReport {
    let graph6 = mcov_core::to_graph6(g).expect("graph orders stay within the graph6 limit");
    report_from_facts(&Facts::new(0, graph6, g.clone()))
}

pub(crate) fn report_from_facts(f: &Facts) -> AnalysisReport {
    let c = f.classification();
    AnalysisReport {
        order: f.order(),
        size: f.graph.size(),
        cubic: f.cubic(),
        matching_covered: f.matching_covered(),
        brick: f.brick(),
        brace: f.brace(),
        near_bipartite: f.near_bipartite(),
        essentially_4ec: f.essentially_4ec(),
        removable_edge_count: c.map(|c| c.removable.len()),
        doubleton_count: c.map(|c| c.doubletons.len()),
        removable_class_count: c.map(|c| c.class_count()),
        max_removable_matching: f.max_removable_matching(),
        neither_count: c.map(|c| c.neither.len()),
    }
}

/// Largest matching all of whose edges are removable.
pub fn max_removable_matching(g: &Graph) -> Result<usize> {
    let c = classify_removable(g).map_err(|e| match e {
        Error::Domain(_) => Error::Domain("max_removable_matching needs a matching covered graph".into()),
        other => other,
    })?;
    Ok(removable_matching_size(g, &c.removable))
}

#[cfg(test)]
mod tests {
    use super::*;
    use mcov_core::constructors::{complete_graph, petersen, staircase};

    #[test]
    fn k4_summary() {
        let r = analyze(&complete_graph(4));
        assert!(r.brick && r.matching_covered && !r.brace);
        assert_eq!(r.removable_edge_count, Some(0));
        assert_eq!(r.doubleton_count, Some(3));
        assert_eq!(r.removable_class_count, Some(3));
        assert_eq!(r.max_removable_matching, Some(0));
    }

    #[test]
    fn staircase_summary() {
        let r = analyze(&staircase(1).unwrap());
        assert!(r.brick && r.near_bipartite);
        assert_eq!((r.removable_edge_count, r.doubleton_count), (Some(1), Some(2)));
        assert_eq!(r.removable_class_count, Some(3));
        assert_eq!(r.max_removable_matching, Some(1));
    }

    #[test]
    fn path_is_not_matching_covered() {
        let p4 = Graph::new(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        let r = analyze(&p4);
        assert!(!r.matching_covered);
        assert_eq!(r.removable_edge_count, None);
        assert!(max_removable_matching(&p4).is_err());
    }

    #[test]
    fn petersen_has_a_removable_perfect_matching() {
        assert_eq!(max_removable_matching(&petersen()).unwrap(), 5);
    }
}
