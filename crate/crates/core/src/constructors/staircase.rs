use crate::error::{domain, Result};
use crate::graph::{Edge, Graph};

/// The staircase on `2k + 6` vertices.
///
/// Vertices are numbered `u v w z x y u1..uk v1..vk` and labelled with those
/// names. Edges: the triangles `uvw` and `xyz`, the edge `wz`, the paths
/// `u u1 … uk x` and `v v1 … vk y`, and the rungs `ui vi`.
pub fn staircase(k: usize) -> Result<Graph> {
    if k == 0 {
        return domain("staircases are defined for k ≥ 1");
    }
    let (u, v, w, z, x, y) = (0, 1, 2, 3, 4, 5);
    let ui = |i: usize| 5 + i;
    let vi = |i: usize| 5 + k + i;
    let mut edges = vec![(u, v), (u, w), (v, w), (x, y), (x, z), (y, z), (w, z)];
    for i in 1..=k {
        edges.push((ui(i), vi(i)));
    }
    let mut prev = (u, v);
    for i in 1..=k {
        edges.push((prev.0, ui(i)));
        edges.push((prev.1, vi(i)));
        prev = (ui(i), vi(i));
    }
    edges.push((prev.0, x));
    edges.push((prev.1, y));
    let names = ["u", "v", "w", "z", "x", "y"].into_iter().map(String::from);
    let labels = names
        .chain((1..=k).map(|i| format!("u{i}")))
        .chain((1..=k).map(|i| format!("v{i}")))
        .enumerate();
    Graph::new(2 * k + 6, edges)?.with_labels(labels)
}

/// The rungs `u1v1, …, ukvk` of `staircase(k)`.
pub fn staircase_rungs(k: usize) -> Vec<Edge> {
    (1..=k).map(|i| Edge::new(5 + i, 5 + k + i)).collect()
}
