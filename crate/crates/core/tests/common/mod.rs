#![allow(dead_code)]

use std::collections::BTreeSet;

use linecover::graph::{generate, GraphKind};
use linecover::Graph;

/// Every labelled graph on `n` vertices, by edge bitmask over the pairs in
/// lexicographic order.
pub fn labelled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    (0u32..1 << pairs.len()).map(move |mask| {
        let edges = pairs
            .iter()
            .enumerate()
            .filter(|&(i, _)| mask >> i & 1 == 1)
            .map(|(_, &p)| p);
        Graph::new(n, edges).unwrap()
    })
}

/// One representative per isomorphism class of connected graphs on `2..=max_n`
/// vertices with at most `max_m` edges and at least two adjacent edges.
pub fn connected_classes(max_n: usize, max_m: usize) -> Vec<Graph> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for n in 2..=max_n {
        for g in labelled_graphs(n) {
            if g.edge_count() > max_m || !g.is_connected() || !g.has_adjacent_edges() {
                continue;
            }
            if seen.insert((n, g.canonical_form())) {
                out.push(g);
            }
        }
    }
    out
}

pub fn gen(kind: GraphKind, n: usize) -> Graph {
    generate(kind, n, None, None).unwrap()
}

pub fn random(kind: GraphKind, n: usize, p: f64, seed: u64) -> Graph {
    generate(kind, n, Some(p), Some(seed)).unwrap()
}
