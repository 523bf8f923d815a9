use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Vertex budget of [`is_chordal_oracle`].
pub const CHORDAL_ORACLE_BUDGET: usize = 8;

/// A vertex order `v_1..v_n` in which every `v_i` is simplicial in the
/// subgraph induced by `{v_i, ..., v_n}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PerfectEliminationOrder {
    order: Vec<usize>,
}

impl PerfectEliminationOrder {
    /// Wraps `order` after checking it is a PEO of `g`.
    pub fn new(g: &Graph, order: Vec<usize>) -> Option<Self> {
        is_perfect_elimination_order(g, &order).then_some(PerfectEliminationOrder { order })
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }

    /// `position[v]` is the index of `v` in the order.
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.order.len()];
        for (i, &v) in self.order.iter().enumerate() {
            pos[v] = i;
        }
        pos
    }
}

/// Maximum cardinality search. Returns vertices in visit order; the
/// reverse of this order is a PEO whenever the graph is chordal. Ties go to
/// the lowest vertex index.
pub fn maximum_cardinality_search(g: &Graph) -> Vec<usize> {
    let n = g.vertex_count();
    let mut weight = vec![0usize; n];
    let mut visited = vec![false; n];
    let mut visit = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !visited[v])
            .max_by_key(|&v| (weight[v], std::cmp::Reverse(v)))
            .expect("an unvisited vertex remains");
        visited[v] = true;
        visit.push(v);
        for &w in g.neighbors(v) {
            if !visited[w] {
                weight[w] += 1;
            }
        }
    }
    visit
}

/// Direct check: for each position, the later neighbours are pairwise
/// adjacent.
pub fn is_perfect_elimination_order(g: &Graph, order: &[usize]) -> bool {
    let n = g.vertex_count();
    if order.len() != n {
        return false;
    }
    let mut pos = vec![usize::MAX; n];
    for (i, &v) in order.iter().enumerate() {
        if v >= n || pos[v] != usize::MAX {
            return false;
        }
        pos[v] = i;
    }
    order.iter().enumerate().all(|(i, &v)| {
        let later: Vec<usize> = g
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&w| pos[w] > i)
            .collect();
        later
            .iter()
            .enumerate()
            .all(|(j, &a)| later[j + 1..].iter().all(|&b| g.has_edge(a, b)))
    })
}

pub fn find_peo(g: &Graph) -> Option<PerfectEliminationOrder> {
    let mut order = maximum_cardinality_search(g);
    order.reverse();
    PerfectEliminationOrder::new(g, order)
}

pub fn is_chordal(g: &Graph) -> bool {
    find_peo(g).is_some()
}

/// Exhaustive search for an induced cycle on four or more vertices.
/// Test oracle only.
pub fn is_chordal_oracle(g: &Graph) -> Result<bool> {
    let n = g.vertex_count();
    if n > CHORDAL_ORACLE_BUDGET {
        return Err(Error::budget("graph", n, CHORDAL_ORACLE_BUDGET));
    }
    for mask in 0u32..(1 << n) {
        if mask.count_ones() < 4 {
            continue;
        }
        let verts: Vec<usize> = (0..n).filter(|&v| mask & (1 << v) != 0).collect();
        let sub = g.induced(&verts);
        if sub.is_connected() && (0..sub.vertex_count()).all(|v| sub.degree(v) == 2) {
            return Ok(false);
        }
    }
    Ok(true)
}
