mod common;

use std::collections::BTreeSet;

use common::{pairs, random_bipartite, random_connected_cubic, random_graph, rng, small};
use mcov_core::constructors::{complement, complete_graph, cycle, petersen, prism, staircase};
use mcov_core::{
    classify_cut, classify_removable, depends_on, dm_witness, doubleton_decomposition, enumerate_3cuts,
    enumerate_nontrivial_3cuts, is_bipartite, is_brace, is_brick, is_essentially_4ec, is_matching_covered,
    is_near_bipartite, mutually_dependent_pairs, perfect_matching_with, removable_doubletons, removable_edges,
    to_graph6, Edge, Graph, VertexSet,
};
use mcov_oracle as oracle;
use proptest::prelude::*;
use rand::Rng;

fn edge(g: &Graph, a: &str, b: &str) -> Edge {
    g.labelled_edge(a, b).unwrap()
}

fn doubleton_pairs(d: &[(Edge, Edge)]) -> BTreeSet<((usize, usize), (usize, usize))> {
    d.iter().map(|(e, f)| (e.ends(), f.ends())).collect()
}

/// Random matching covered graphs: cubic ones of the given orders and denser ones on eight vertices.
fn mc_corpus(seed: u64, cubic_orders: &[usize], per_order: usize) -> Vec<Graph> {
    let mut r = rng(seed);
    let mut out = Vec::new();
    for &n in cubic_orders {
        let mut found = 0;
        while found < per_order {
            let g = random_connected_cubic(n, &mut r);
            if is_matching_covered(&g) {
                out.push(g);
                found += 1;
            }
        }
    }
    let mut found = 0;
    while found < 30 {
        let g = random_graph(8, r.gen_range(0.35..0.7), &mut r);
        if is_matching_covered(&g) {
            out.push(g);
            found += 1;
        }
    }
    out
}

#[test]
fn k4_has_three_doubletons_and_no_removable_edge() {
    let k4 = complete_graph(4);
    let c = classify_removable(&k4).unwrap();
    assert!(c.removable.is_empty());
    assert_eq!(c.doubletons.len(), 3);
    assert_eq!(c.class_count(), 3);
    assert!(is_brick(&k4));
    assert!(is_near_bipartite(&k4).unwrap().is_some());
    assert!(is_essentially_4ec(&k4).unwrap());
}

#[test]
fn petersen_every_edge_removable() {
    let p = petersen();
    let c = classify_removable(&p).unwrap();
    assert_eq!(c.removable.len(), 15);
    assert!(c.doubletons.is_empty() && c.neither.is_empty());
    assert!(is_brick(&p));
    assert!(is_near_bipartite(&p).unwrap().is_none());
    assert!(is_essentially_4ec(&p).unwrap());
}

#[test]
fn one_rung_staircase_classes() {
    let s1 = staircase(1).unwrap();
    let c = classify_removable(&s1).unwrap();
    assert_eq!(c.removable, vec![edge(&s1, "u1", "v1")]);
    assert_eq!(c.class_count(), 3);
    let oracle_pairs: BTreeSet<_> = oracle::removable_doubletons(&small(&s1)).into_iter().collect();
    assert_eq!(doubleton_pairs(&c.doubletons), oracle_pairs);
    assert!(is_brick(&s1));
    assert!(!is_essentially_4ec(&s1).unwrap());
}

#[test]
fn prism_is_a_brick_with_a_nontrivial_3cut() {
    let p = prism();
    assert!(is_brick(&p));
    assert!(!is_essentially_4ec(&p).unwrap());
    let cut = &enumerate_nontrivial_3cuts(&p).unwrap()[0];
    let kind = classify_cut(&p, cut.shore).unwrap();
    assert!(kind.separating && !kind.tight && kind.good);
}

#[test]
fn braces_among_even_cycles() {
    assert!(is_brace(&cycle(4)));
    assert!(!is_brace(&cycle(8)));
    assert!(!is_brick(&cycle(8)));
    assert!(is_brick(&complement(&cycle(6))));
}

#[test]
fn removable_classes_agree_with_enumeration() {
    for g in mc_corpus(1, &[4, 6, 8, 10], 8) {
        let s = small(&g);
        let c = classify_removable(&g).unwrap();
        let name = to_graph6(&g).unwrap();
        assert_eq!(pairs(&c.removable), oracle::removable_edges(&s).into_iter().collect(), "{name}");
        let expected: BTreeSet<_> = oracle::removable_doubletons(&s).into_iter().collect();
        assert_eq!(doubleton_pairs(&c.doubletons), expected, "{name}");
        assert_eq!(removable_edges(&g).unwrap(), c.removable);
        assert_eq!(removable_doubletons(&g).unwrap(), c.doubletons);
        // removable, doubleton and remaining edges partition E
        let mut all: Vec<Edge> = c.removable.clone();
        all.extend(c.doubleton_edges());
        all.extend(c.neither.iter().copied());
        all.sort();
        assert_eq!(all, g.edges(), "{name}");
    }
}

#[test]
fn twelve_vertex_cubic_classes_agree_with_enumeration() {
    for g in mc_corpus(2, &[12], 4).into_iter().filter(|g| g.order() == 12) {
        let s = small(&g);
        let c = classify_removable(&g).unwrap();
        assert_eq!(pairs(&c.removable), oracle::removable_edges(&s).into_iter().collect());
        let expected: BTreeSet<_> = oracle::removable_doubletons(&s).into_iter().collect();
        assert_eq!(doubleton_pairs(&c.doubletons), expected);
    }
}

#[test]
fn dependence_agrees_with_enumeration() {
    for g in mc_corpus(3, &[6, 8, 10], 5) {
        let s = small(&g);
        let edges = g.edges();
        for (i, &e) in edges.iter().enumerate() {
            for &f in &edges[i + 1..] {
                assert_eq!(depends_on(&g, e, f).unwrap(), oracle::depends_on(&s, e.ends(), f.ends()));
                assert_eq!(depends_on(&g, f, e).unwrap(), oracle::depends_on(&s, f.ends(), e.ends()));
            }
        }
        let mutual: BTreeSet<_> = mutually_dependent_pairs(&g).unwrap().into_iter().map(|(e, f)| (e.ends(), f.ends())).collect();
        let expected: BTreeSet<_> = edges
            .iter()
            .enumerate()
            .flat_map(|(i, &e)| edges[i + 1..].iter().map(move |&f| (e, f)))
            .filter(|&(e, f)| oracle::depends_on(&s, e.ends(), f.ends()) && oracle::depends_on(&s, f.ends(), e.ends()))
            .map(|(e, f)| (e.ends(), f.ends()))
            .collect();
        assert_eq!(mutual, expected);
        for (e, f) in classify_removable(&g).unwrap().doubletons {
            assert!(mutual.contains(&(e.ends(), f.ends())), "doubleton edges depend on each other");
        }
    }
}

#[test]
fn bricks_agree_with_tight_cut_definition() {
    let mut seen = [0usize; 2];
    for g in mc_corpus(4, &[4, 6, 8, 10], 8) {
        let ours = is_brick(&g);
        assert_eq!(ours, oracle::is_brick_by_definition(&small(&g)), "{}", to_graph6(&g).unwrap());
        seen[ours as usize] += 1;
    }
    assert!(seen[0] > 0 && seen[1] > 0);
}

#[test]
fn braces_agree_with_tight_cut_definition() {
    let mut r = rng(5);
    let mut seen = [0usize; 2];
    for _ in 0..80 {
        let k = r.gen_range(2..=5);
        let g = random_bipartite(k, r.gen_range(0.3..0.8), &mut r);
        let s = small(&g);
        assert_eq!(is_matching_covered(&g), oracle::is_matching_covered(&s));
        if !is_matching_covered(&g) {
            continue;
        }
        let ours = is_brace(&g);
        assert_eq!(ours, oracle::is_brace_by_definition(&s), "{}", to_graph6(&g).unwrap());
        assert!(!is_brick(&g));
        seen[ours as usize] += 1;
    }
    assert!(seen[0] > 0 && seen[1] > 0);
}

/// In a matching covered bipartite graph, deleting one vertex from each colour class leaves a perfect matching.
#[test]
fn bipartite_matching_covered_graphs_are_one_extendable() {
    let mut r = rng(6);
    for _ in 0..120 {
        let k = r.gen_range(2..=6);
        let g = random_bipartite(k, 0.4, &mut r);
        let s = small(&g);
        let (a, b) = is_bipartite(&g).unwrap();
        let extendable = a.iter().all(|x| {
            b.iter().all(|y| {
                let alive: Vec<bool> = (0..2 * k).map(|v| v != x && v != y).collect();
                !oracle::perfect_matchings_within(&s, &alive).is_empty()
            })
        });
        if g.is_connected() {
            assert_eq!(is_matching_covered(&g), extendable, "{}", to_graph6(&g).unwrap());
        }
    }
}

#[test]
fn three_cut_classification_agrees_with_enumeration() {
    for g in mc_corpus(7, &[6, 8, 10], 8) {
        if !g.is_cubic() {
            continue;
        }
        let s = small(&g);
        for cut in enumerate_3cuts(&g).unwrap() {
            let shore: Vec<bool> = (0..g.order()).map(|v| cut.shore.contains(v)).collect();
            let (separating, tight) = oracle::cut_type(&s, &shore);
            let kind = classify_cut(&g, cut.shore).unwrap();
            assert_eq!((kind.separating, kind.tight), (separating, tight), "{} {}", to_graph6(&g).unwrap(), cut.shore);
            assert_eq!(kind.good, separating && !tight);
        }
    }
}

#[test]
fn odd_cut_classification_agrees_with_enumeration() {
    let mut r = rng(8);
    for g in mc_corpus(9, &[], 0) {
        for _ in 0..6 {
            let mask = r.gen_range(1..(1u64 << 8) - 1);
            let x = VertexSet::from_mask(mask);
            let shore: Vec<bool> = (0..8).map(|v| x.contains(v)).collect();
            let kind = classify_cut(&g, x).unwrap();
            if x.len() % 2 == 1 {
                assert_eq!((kind.separating, kind.tight), oracle::cut_type(&small(&g), &shore));
            } else {
                assert!(!kind.separating && !kind.tight);
            }
        }
    }
}

#[test]
fn near_bipartite_pair_leaves_a_matching_covered_bipartite_graph() {
    for g in mc_corpus(10, &[6, 8, 10], 8) {
        if is_bipartite(&g).is_some() {
            assert!(is_near_bipartite(&g).is_err());
            continue;
        }
        let found = is_near_bipartite(&g).unwrap();
        let s = small(&g);
        let edges = g.edges();
        let first = edges.iter().enumerate().find_map(|(i, &e)| {
            edges[i + 1..].iter().find_map(|&f| {
                let rest = s.without(&[e.ends(), f.ends()]);
                (rest.bipartition().is_some() && oracle::is_matching_covered(&rest)).then_some((e, f))
            })
        });
        assert_eq!(found, first, "{}", to_graph6(&g).unwrap());
    }
}

/// The witness partition certifies that the edge lies in no perfect matching.
#[test]
fn dulmage_mendelsohn_witnesses_hold() {
    let mut r = rng(12);
    let mut witnessed = 0;
    for _ in 0..150 {
        let k = r.gen_range(2..=6);
        let g = random_bipartite(k, 0.3, &mut r);
        let (side_a, side_b) = is_bipartite(&g).unwrap();
        for &e in g.edges() {
            if perfect_matching_with(&g, &[e], &[]).unwrap().is_some() {
                assert!(dm_witness(&g, e).is_err());
                continue;
            }
            let w = dm_witness(&g, e).unwrap();
            witnessed += 1;
            assert_eq!(w.a1.union(w.a2), side_a);
            assert_eq!(w.b1.union(w.b2), side_b);
            assert!(w.a1.intersection(w.a2).is_empty() && w.b1.intersection(w.b2).is_empty());
            assert_eq!(w.a1.len(), w.b1.len());
            assert!(g.edges().iter().all(|h| {
                let (x, y) = if side_a.contains(h.u()) { (h.u(), h.v()) } else { (h.v(), h.u()) };
                !(w.a1.contains(x) && w.b2.contains(y))
            }));
            let (x, y) = if side_a.contains(e.u()) { (e.u(), e.v()) } else { (e.v(), e.u()) };
            assert!(w.a2.contains(x) && w.b1.contains(y));
        }
    }
    assert!(witnessed > 20);
}

/// Essentially 4-edge-connected cubic bricks with at least two doubletons split into a cycle of bipartite parts.
#[test]
fn doubleton_decomposition_forms_a_cycle() {
    let mut r = rng(13);
    let mut decomposed = 0;
    for _ in 0..4000 {
        let n = 2 * r.gen_range(4..=7);
        let g = random_connected_cubic(n, &mut r);
        if !is_brick(&g) || !is_essentially_4ec(&g).unwrap() {
            continue;
        }
        let c = classify_removable(&g).unwrap();
        if c.doubletons.len() < 2 {
            assert!(doubleton_decomposition(&g).is_err());
            continue;
        }
        let parts = doubleton_decomposition(&g).unwrap();
        decomposed += 1;
        assert_eq!(parts.len(), c.doubletons.len());
        assert_eq!(parts.iter().fold(VertexSet::EMPTY, |acc, &p| acc.union(p)), g.vertex_set());
        assert_eq!(parts.iter().map(|p| p.len()).sum::<usize>(), n);
        assert!(parts[0].contains(0));
        let e0 = c.doubleton_edges();
        for (i, &p) in parts.iter().enumerate() {
            let q = parts[(i + 1) % parts.len()];
            let crossing = e0.iter().filter(|e| p.contains(e.u()) && q.contains(e.v()) || q.contains(e.u()) && p.contains(e.v()));
            assert!(crossing.count() >= 2, "consecutive parts share a doubleton");
        }
        if decomposed >= 5 {
            break;
        }
    }
    assert!(decomposed > 0, "no decomposable brick found in the sample");
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn removable_edges_leave_matching_covered_graphs(seed in any::<u64>(), half in 3usize..=8) {
        let mut r = rng(seed);
        let g = random_connected_cubic(2 * half, &mut r);
        prop_assume!(is_matching_covered(&g));
        let c = classify_removable(&g).unwrap();
        for &e in &c.removable {
            prop_assert!(is_matching_covered(&g.without_edges(&[e])));
        }
        for &(e, f) in &c.doubletons {
            prop_assert!(!is_matching_covered(&g.without_edges(&[e])));
            prop_assert!(is_matching_covered(&g.without_edges(&[e, f])));
        }
        let bipartite = is_bipartite(&g).is_some();
        prop_assert!(!(is_brick(&g) && bipartite));
        prop_assert!(!(is_brace(&g) && !bipartite));
    }
}
