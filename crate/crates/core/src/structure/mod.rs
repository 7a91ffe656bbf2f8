//! Classification predicates: matching covered, dependence, removable
//! classes, tight and separating cuts, bricks, braces and their witnesses.

mod bricks;
mod decomposition;
mod dm;
mod removable;
mod tight;

pub use bricks::{is_brace, is_brick, is_essentially_4ec, is_near_bipartite};
pub use decomposition::doubleton_decomposition;
pub use dm::{dm_witness, DMPartition};
pub use removable::{
    classify_removable, depends_on, mutually_dependent_pairs, removable_doubletons, removable_edges,
    RemovableClassification,
};
pub use tight::{classify_cut, CutClassification};

use crate::graph::{component_of, full_mask, Graph};
use crate::matching::allowed_masked;

/// Connected, of even order at least two, and every edge lies in a perfect matching.
pub fn is_matching_covered(g: &Graph) -> bool {
    mc_masked(g.adjacency(), g.order())
}

pub(crate) fn mc_masked(adj: &[u64], n: usize) -> bool {
    if n < 2 || n % 2 == 1 {
        return false;
    }
    let all = full_mask(n);
    if component_of(adj, all, 0) != all {
        return false;
    }
    allowed_masked(adj, all).is_some_and(|flags| flags.iter().all(|&a| a))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_matching_covered_cases() {
        let p4 = Graph::new(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        assert!(!is_matching_covered(&p4));
        let k2 = Graph::new(2, [(0, 1)]).unwrap();
        assert!(is_matching_covered(&k2));
        let c4 = Graph::new(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert!(is_matching_covered(&c4));
        assert!(!is_matching_covered(&Graph::empty(0).unwrap()));
        let two_k2 = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        assert!(!is_matching_covered(&two_k2));
    }
}
