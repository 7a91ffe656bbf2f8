mod common;

use common::{random_connected_cubic, random_graph, random_permutation, rng, small};
use mcov_core::constructors::{complement, cycle, petersen, staircase};
use mcov_core::{
    canonical_form, connectivity, contract, cuts_cross, edge_cut, enumerate_3cuts, enumerate_nontrivial_3cuts,
    find_isomorphism, induced_subgraph, is_bipartite, is_isomorphic, is_three_connected, parse_graph6,
    read_all_graph6, to_graph6, Edge, Graph, VertexSet,
};
use mcov_oracle as oracle;
use proptest::prelude::*;
use rand::Rng;

fn set(g: &Graph, names: &[&str]) -> VertexSet {
    names.iter().map(|l| g.labelled(l).unwrap()).collect()
}

#[test]
fn staircase_triangle_is_induced() {
    let s1 = staircase(1).unwrap();
    let t = induced_subgraph(&s1, set(&s1, &["u", "v", "w"])).unwrap();
    assert_eq!((t.order(), t.size()), (3, 3));
    assert_eq!(t.labels()[0].as_deref(), Some("u"));
}

#[test]
fn contracting_a_prism_triangle_gives_k4() {
    let c6bar = complement(&cycle(6));
    let tri = (0..6).find_map(|a| {
        let nb: Vec<usize> = c6bar.neighbors(a).collect();
        nb.iter().flat_map(|&b| nb.iter().map(move |&c| (b, c))).find(|&(b, c)| b < c && c6bar.has_edge(b, c)).map(|(b, c)| [a, b, c])
    });
    let x: VertexSet = tri.unwrap().iter().collect();
    let k4 = contract(&c6bar, x).unwrap();
    assert!(is_isomorphic(&k4, &parse_graph6("C~").unwrap()));
}

#[test]
fn staircase_cut_at_the_first_triangle() {
    let s2 = staircase(2).unwrap();
    let x = set(&s2, &["u", "v", "w"]);
    let cut = edge_cut(&s2, x).unwrap();
    let expected: Vec<Edge> = [("u", "u1"), ("v", "v1"), ("w", "z")]
        .iter()
        .map(|(a, b)| s2.labelled_edge(a, b).unwrap())
        .collect();
    let mut boundary = cut.boundary.clone();
    boundary.sort();
    let mut expected_sorted = expected;
    expected_sorted.sort();
    assert_eq!(boundary, expected_sorted);
    assert!(cut.nontrivial);
    let shores: Vec<VertexSet> = enumerate_nontrivial_3cuts(&s2).unwrap().iter().map(|c| c.shore).collect();
    let far = x.complement(s2.order());
    assert!(shores.contains(&x) || shores.contains(&far));
}

#[test]
fn petersen_is_cyclically_four_edge_connected() {
    let p = petersen();
    assert!(enumerate_nontrivial_3cuts(&p).unwrap().is_empty());
    assert_eq!(enumerate_3cuts(&p).unwrap().len(), 10);
    assert_eq!(connectivity(&p).unwrap(), (3, 3));
    assert!(is_bipartite(&p).is_none());
}

#[test]
fn staircase_connectivity() {
    for k in 1..=4 {
        let s = staircase(k).unwrap();
        assert_eq!(connectivity(&s).unwrap(), (3, 3), "k = {k}");
        assert!(is_three_connected(&s));
    }
}

#[test]
fn graph6_stream_round_trip() {
    let graphs = [petersen(), staircase(3).unwrap(), complement(&cycle(6))];
    let text: String = std::iter::once(">>graph6<<".to_string())
        .chain(graphs.iter().map(|g| to_graph6(g).unwrap() + "\n"))
        .collect();
    let records = read_all_graph6(text.as_bytes()).unwrap();
    assert_eq!(records.len(), 3);
    for (r, g) in records.iter().zip(&graphs) {
        assert_eq!(r.graph.edges(), g.edges());
    }
}

#[test]
fn nontrivial_3cuts_agree_with_exhaustive_shores() {
    let mut r = rng(31);
    for n in [6, 8, 10, 12] {
        for _ in 0..12 {
            let g = random_connected_cubic(n, &mut r);
            let ours: Vec<Vec<usize>> = enumerate_nontrivial_3cuts(&g).unwrap().iter().map(|c| c.shore.to_vec()).collect();
            let mut reference = oracle::nontrivial_three_cut_shores(&small(&g));
            reference.sort();
            let mut sorted = ours.clone();
            sorted.sort();
            assert_eq!(sorted, reference, "{}", to_graph6(&g).unwrap());
            for c in enumerate_nontrivial_3cuts(&g).unwrap() {
                assert!(c.shore.contains(0));
                assert_eq!(c.shore.len() % 2, 1, "3-cut shores of cubic graphs are odd");
                assert_eq!(c.boundary.len(), 3);
            }
        }
    }
}

#[test]
fn three_connectivity_and_bipartition_agree_with_oracle() {
    let mut r = rng(7);
    for _ in 0..200 {
        let n = r.gen_range(4..=10);
        let g = random_graph(n, 0.45, &mut r);
        let s = small(&g);
        assert_eq!(is_three_connected(&g), oracle::is_three_connected(&s), "{}", to_graph6(&g).unwrap());
        assert_eq!(is_bipartite(&g).is_some(), s.bipartition().is_some());
        if let Some((a, b)) = is_bipartite(&g) {
            assert!(a.intersection(b).is_empty());
            assert_eq!(a.union(b), g.vertex_set());
            assert!(g.edges().iter().all(|e| a.contains(e.u()) != a.contains(e.v())));
        }
    }
}

/// Canonical forms coincide exactly when the backtracking oracle finds an isomorphism.
#[test]
fn canonical_forms_separate_isomorphism_classes() {
    let mut r = rng(11);
    let mut corpus: Vec<Graph> = (0..30).map(|_| random_connected_cubic(10, &mut r)).collect();
    for i in 0..10 {
        let perm = random_permutation(10, &mut r);
        corpus.push(corpus[i].permuted(&perm).unwrap());
    }
    corpus.extend((0..40).map(|_| random_graph(7, 0.5, &mut r)));
    let forms: Vec<String> = corpus.iter().map(canonical_form).collect();
    let smalls: Vec<_> = corpus.iter().map(small).collect();
    for i in 0..corpus.len() {
        for j in i + 1..corpus.len() {
            if corpus[i].order() != corpus[j].order() {
                continue;
            }
            let same = oracle::isomorphism(&smalls[i], &smalls[j]).is_some();
            assert_eq!(forms[i] == forms[j], same, "{} vs {}", to_graph6(&corpus[i]).unwrap(), to_graph6(&corpus[j]).unwrap());
        }
    }
}

fn arb_graph(max_n: usize) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    (2usize..=max_n, any::<u64>()).prop_map(|(n, seed)| {
        let mut r = rng(seed);
        let p = r.gen_range(0.2..0.8);
        let g = random_graph(n, p, &mut r);
        let perm = random_permutation(n, &mut r);
        (g, perm)
    })
}

proptest! {
    #[test]
    fn relabelling_preserves_the_canonical_form((g, perm) in arb_graph(16)) {
        let h = g.permuted(&perm).unwrap();
        prop_assert_eq!(canonical_form(&g), canonical_form(&h));
        let map = find_isomorphism(&g, &h).unwrap();
        for e in g.edges() {
            prop_assert!(h.has_edge(map[e.u()], map[e.v()]));
        }
    }

    #[test]
    fn crossing_is_symmetric_under_complement((g, perm) in arb_graph(12)) {
        let n = g.order();
        prop_assume!(n >= 3);
        let x: VertexSet = perm[..n / 2].iter().collect();
        let y: VertexSet = perm[1..=n / 2].iter().collect();
        let crossing = cuts_cross(&g, x, y).unwrap();
        prop_assert_eq!(crossing, cuts_cross(&g, x.complement(n), y).unwrap());
        prop_assert_eq!(crossing, cuts_cross(&g, y, x).unwrap());
    }

    #[test]
    fn cut_boundary_matches_definition((g, perm) in arb_graph(14)) {
        let n = g.order();
        let x: VertexSet = perm[..n / 2].iter().collect();
        prop_assume!(!x.is_empty());
        let cut = edge_cut(&g, x).unwrap();
        let expected: Vec<Edge> = g.edges().iter().copied().filter(|e| x.contains(e.u()) != x.contains(e.v())).collect();
        prop_assert_eq!(&cut.boundary, &expected);
        let far = edge_cut(&g, x.complement(n)).unwrap();
        prop_assert_eq!(cut.boundary, far.boundary);
    }
}
