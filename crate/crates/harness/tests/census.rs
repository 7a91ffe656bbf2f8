use std::collections::BTreeSet;

use mcov_core::{canonical_form, parse_graph6, Graph};
use mcov_harness::census::{bundled_census, bundled_text, connected_cubic, KNOWN_COUNTS};
use mcov_harness::{run_checks, select, RunOptions, REGISTRY};
use proptest::prelude::*;

/// Every connected cubic graph on `n` vertices by filling adjacency rows in
/// order. A vertex's new neighbour is either already reached or the single
/// next unreached vertex, which keeps the labelled search small and connected.
fn brute_force_cubic(n: usize) -> BTreeSet<String> {
    fn fill(adj: &mut Vec<Vec<usize>>, reached: usize, out: &mut BTreeSet<String>) {
        let n = adj.len();
        let Some(v) = (0..n).find(|&v| adj[v].len() < 3) else {
            let edges = (0..n).flat_map(|a| adj[a].iter().filter(move |&&b| a < b).map(move |&b| (a, b)));
            out.insert(canonical_form(&Graph::new(n, edges).unwrap()));
            return;
        };
        if v >= reached {
            return;
        }
        let last = adj[v].last().copied();
        for w in v + 1..n.min(reached + 1) {
            // neighbours of v are added in increasing order
            if adj[w].len() >= 3 || adj[v].contains(&w) || last.is_some_and(|l| l > v && w < l) {
                continue;
            }
            adj[v].push(w);
            adj[w].push(v);
            fill(adj, reached.max(w + 1), out);
            adj[v].pop();
            adj[w].pop();
        }
    }
    let mut out = BTreeSet::new();
    fill(&mut vec![Vec::new(); n], 1, &mut out);
    out
}

fn bundled_forms(n: usize) -> BTreeSet<String> {
    bundled_text(n)
        .unwrap()
        .lines()
        .map(|l| canonical_form(&parse_graph6(l).unwrap()))
        .collect()
}

#[test]
fn bundled_census_matches_exhaustive_search() {
    for n in [4, 6, 8, 10] {
        let reference = brute_force_cubic(n);
        assert_eq!(bundled_forms(n), reference, "n = {n}");
        let expected = KNOWN_COUNTS.iter().find(|&&(m, _)| m == n).unwrap().1;
        assert_eq!(reference.len(), expected);
    }
}

#[test]
fn bundled_census_matches_the_generator() {
    let generated = connected_cubic(12).unwrap();
    for (n, graphs) in generated {
        let forms: BTreeSet<String> = graphs.iter().map(canonical_form).collect();
        assert_eq!(forms.len(), graphs.len(), "generator output is free of duplicates at n = {n}");
        assert_eq!(forms, bundled_forms(n), "n = {n}");
    }
}

#[test]
fn bundled_census_sizes() {
    let records = bundled_census(16).unwrap();
    assert_eq!(records.len(), KNOWN_COUNTS.iter().map(|&(_, c)| c).sum::<usize>());
    assert!(records.windows(2).all(|w| w[0].line < w[1].line));
    for &(n, count) in &KNOWN_COUNTS {
        assert_eq!(records.iter().filter(|r| r.graph.order() == n).count(), count);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(6))]

    /// Reports do not depend on how many workers share the census.
    #[test]
    fn reports_are_independent_of_worker_count(
        picks in proptest::sample::subsequence((0..REGISTRY.len()).collect::<Vec<_>>(), 1..=4),
        jobs in 2usize..=4,
    ) {
        let ids: Vec<&str> = picks.iter().map(|&i| REGISTRY[i].id()).collect();
        let checks = select(&ids.join(",")).unwrap();
        let records = bundled_census(10).unwrap();
        let serial = run_checks(&records, &checks, RunOptions { jobs: Some(1) }).unwrap();
        let parallel = run_checks(&records, &checks, RunOptions { jobs: Some(jobs) }).unwrap();
        prop_assert_eq!(
            serde_json::to_string(&serial).unwrap(),
            serde_json::to_string(&parallel).unwrap()
        );
    }
}
