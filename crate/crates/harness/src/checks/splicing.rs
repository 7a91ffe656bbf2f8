//! Removability under triangle insertion.

use mcov_core::constructors::insert_triangle;
use mcov_core::{removable_edges, Edge};

use super::{Check, Outcome};
use crate::facts::Facts;

/// Removable edges of `G⟨v⟩` for every vertex `v`, or the error text.
/// The three triangle vertices come last in `G⟨v⟩`.
fn insertions(f: &Facts) -> Vec<(usize, Result<Vec<Edge>, String>)> {
    f.graph
        .vertices()
        .map(|v| {
            let h = insert_triangle(&f.graph, v).expect("cubic vertices have degree 3");
            (v, removable_edges(&h).map_err(|e| format!("G<{v}> is not matching covered: {e}")))
        })
        .collect()
}

pub struct SplicingEdgesNotRemovable;

impl Check for SplicingEdgesNotRemovable {
    fn id(&self) -> &'static str {
        "prop-e3"
    }

    fn statement(&self) -> &'static str {
        "inserting a triangle at a vertex of a matching covered cubic graph yields no removable splicing edge"
    }

    fn evaluate(&self, f: &Facts) -> Outcome {
        if !f.cubic() || !f.matching_covered() {
            return Outcome::out_of_scope();
        }
        let mut out = Outcome::in_scope();
        let first_new = f.order() - 1;
        for (v, removable) in insertions(f) {
            out.tally("insertions");
            match removable {
                Err(e) => out.violation(e),
                Ok(removable) => {
                    let bad: Vec<String> = removable
                        .iter()
                        .filter(|e| (e.u() >= first_new) != (e.v() >= first_new))
                        .map(ToString::to_string)
                        .collect();
                    if !bad.is_empty() {
                        out.violation(format!("G<{v}>: removable splicing edges {}", bad.join(" ")));
                    }
                }
            }
        }
        out
    }
}

pub struct RemovablePersists;

impl Check for RemovablePersists {
    fn id(&self) -> &'static str {
        "prop-spl-i"
    }

    fn statement(&self) -> &'static str {
        "an edge removable in a matching covered cubic graph stays removable after inserting a triangle at a vertex it avoids"
    }

    fn evaluate(&self, f: &Facts) -> Outcome {
        if !f.cubic() || !f.matching_covered() {
            return Outcome::out_of_scope();
        }
        let mut out = Outcome::in_scope();
        let before = &f.classification().expect("graph is matching covered").removable;
        for (v, after) in insertions(f) {
            let after = match after {
                Ok(a) => a,
                Err(e) => {
                    out.violation(e);
                    continue;
                }
            };
            // vertices of G − v keep their order in G⟨v⟩
            let shift = |x: usize| if x < v { x } else { x - 1 };
            for e in before.iter().filter(|e| !e.touches(v)) {
                out.tally("edges_tracked");
                if !after.contains(&Edge::new(shift(e.u()), shift(e.v()))) {
                    out.violation(format!("G<{v}>: edge {e} is no longer removable"));
                }
            }
        }
        out
    }
}
