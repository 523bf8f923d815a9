//! Recognition of chordal, interval and equivalence graphs, plus cover
//! certificates checked against those classes.

mod chordal;
mod cover;
mod interval;

pub use chordal::{
    find_peo, is_chordal, is_chordal_oracle, is_perfect_elimination_order,
    maximum_cardinality_search, PerfectEliminationOrder, CHORDAL_ORACLE_BUDGET,
};
pub use cover::{cover_verify, Cover, CoverClass, CoverReport};
pub use interval::{find_asteroidal_triple, is_interval, is_interval_oracle, INTERVAL_ORACLE_BUDGET};

use crate::graph::Graph;

/// Disjoint union of cliques: no vertex has two non-adjacent neighbours.
pub fn is_equivalence_graph(g: &Graph) -> bool {
    (0..g.vertex_count()).all(|v| {
        let nb = g.neighbors(v);
        nb.iter()
            .enumerate()
            .all(|(i, &a)| nb[i + 1..].iter().all(|&b| g.has_edge(a, b)))
    })
}

/// Connected components with at least two vertices, each sorted, in order
/// of their smallest vertex.
pub fn nontrivial_components(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.vertex_count();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for s in 0..n {
        if seen[s] || g.degree(s) == 0 {
            continue;
        }
        seen[s] = true;
        let mut comp = vec![s];
        let mut stack = vec![s];
        while let Some(v) = stack.pop() {
            for &w in g.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    comp.push(w);
                    stack.push(w);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}
