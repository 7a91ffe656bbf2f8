//! The check registry. Each check filters graphs by scope and asserts one
//! property on every graph in scope.

use std::collections::BTreeMap;

use mcov_core::Graph;

use crate::error::{HarnessError, Result};
use crate::facts::Facts;

mod bounds;
mod cuts;
mod removable;
mod splicing;

/// What one check found on one graph.
#[derive(Clone, Debug, Default)]
pub struct Outcome {
    pub in_scope: bool,
    pub violations: Vec<String>,
    pub tallies: BTreeMap<&'static str, u64>,
    /// The graph is named in the summary listing.
    pub listed: bool,
}

impl Outcome {
    pub fn out_of_scope() -> Outcome {
        Outcome::default()
    }

    pub fn in_scope() -> Outcome {
        Outcome { in_scope: true, ..Outcome::default() }
    }

    pub fn violation(&mut self, detail: impl Into<String>) {
        self.violations.push(detail.into());
    }

    pub fn tally(&mut self, key: &'static str) {
        *self.tallies.entry(key).or_insert(0) += 1;
    }

    pub fn add(&mut self, key: &'static str, amount: u64) {
        *self.tallies.entry(key).or_insert(0) += amount;
    }

    pub fn list(&mut self) {
        self.listed = true;
    }
}

pub trait Check: Sync {
    fn id(&self) -> &'static str;

    /// One-line statement of the scope and the asserted property.
    fn statement(&self) -> &'static str;

    fn evaluate(&self, f: &Facts) -> Outcome;

    /// Inputs the check always runs on, replacing any census.
    fn fixed_inputs(&self) -> Option<Vec<Graph>> {
        None
    }
}

pub static REGISTRY: [&dyn Check; 17] = [
    &bounds::MainBound,
    &bounds::NearBipartiteBound,
    &bounds::ThreeClasses,
    &removable::TwoEdgeConnectedCovered,
    &cuts::ThreeCutsSeparating,
    &removable::BipartiteRemovable,
    &removable::Essentially4ecClasses,
    &removable::Essentially4ecPerfectMatching,
    &removable::DoubletonFreeMatching,
    &removable::MutualDependence,
    &cuts::TightIffBipartiteContraction,
    &cuts::NoCrossing,
    &splicing::SplicingEdgesNotRemovable,
    &splicing::RemovablePersists,
    &cuts::EasyRemovability,
    &cuts::ShoreMatchingBounds,
    &bounds::StaircaseRungs,
];

pub fn lookup(id: &str) -> Result<&'static dyn Check> {
    REGISTRY
        .iter()
        .copied()
        .find(|c| c.id() == id)
        .ok_or_else(|| HarnessError::UnknownCheck(id.to_string()))
}

/// Resolves a comma-separated list of ids (or `all`), keeping registry order
/// and dropping duplicates.
pub fn select(ids: &str) -> Result<Vec<&'static dyn Check>> {
    let wanted: Vec<&str> = ids.split(',').map(str::trim).filter(|s| !s.is_empty()).collect();
    if wanted.is_empty() {
        return Err(HarnessError::Usage("no check ids given".into()));
    }
    if wanted == ["all"] {
        return Ok(REGISTRY.to_vec());
    }
    for id in &wanted {
        lookup(id)?;
    }
    Ok(REGISTRY.iter().copied().filter(|c| wanted.contains(&c.id())).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_are_unique() {
        let mut ids: Vec<&str> = REGISTRY.iter().map(|c| c.id()).collect();
        ids.sort();
        ids.dedup();
        assert_eq!(ids.len(), REGISTRY.len());
    }

    #[test]
    fn selection() {
        assert_eq!(select("all").unwrap().len(), REGISTRY.len());
        let two = select("thm-con, thm-main,thm-main").unwrap();
        assert_eq!(two.iter().map(|c| c.id()).collect::<Vec<_>>(), ["thm-main", "thm-con"]);
        assert!(matches!(select("nope"), Err(HarnessError::UnknownCheck(_))));
        assert!(matches!(select(""), Err(HarnessError::Usage(_))));
    }
}
