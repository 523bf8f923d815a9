//! Finite simple undirected graphs with a canonical edge order.
//!
//! Edges are stored as `(u, v)` with `u < v`, sorted lexicographically. The
//! position of an edge in that list is its *edge index*; the line graph uses
//! edge indices as vertex ids, so every other module agrees on the identity
//! of an edge.

mod coloring;
mod generate;
mod line;

pub use coloring::{chromatic_number_exact, greedy_coloring, Coloring, DEFAULT_VERTEX_BUDGET};
pub use generate::{generate, mycielskian, GraphKind, GraphSpec};
pub use line::{line_graph, LineGraph};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph, rejecting self-loops, out-of-range endpoints and
    /// repeated edges (in either orientation).
    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        Self::build(n, edges, false)
    }

    /// Like [`Graph::new`] but collapses repeated edges instead of failing.
    pub fn new_dedup<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        Self::build(n, edges, true)
    }

    pub fn build<I>(n: usize, edges: I, dedupe: bool) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut list = Vec::new();
        for (a, b) in edges {
            for v in [a, b] {
                if v >= n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
            }
            if a == b {
                return Err(Error::SelfLoop(a));
            }
            list.push((a.min(b), a.max(b)));
        }
        list.sort_unstable();
        if dedupe {
            list.dedup();
        } else if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateEdge(w[0].0, w[0].1));
        }
        Ok(Self::from_sorted(n, list))
    }

    fn from_sorted(n: usize, edges: Vec<(usize, usize)>) -> Self {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Graph { n, edges, adj }
    }

    pub fn empty(n: usize) -> Self {
        Self::from_sorted(n, Vec::new())
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge(&self, e: usize) -> (usize, usize) {
        self.edges[e]
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    /// Canonical index of the edge `{u, v}`, if present.
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        let key = (u.min(v), u.max(v));
        self.edges.binary_search(&key).ok()
    }

    /// Edge indices incident to `v`, in increasing order.
    pub fn incident_edges(&self, v: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self.adj[v]
            .iter()
            .map(|&w| self.edge_index(v, w).expect("adjacency and edge list agree"))
            .collect();
        out.sort_unstable();
        out
    }

    /// The unique endpoint shared by edges `e` and `f`, or `None` when they
    /// are identical or disjoint.
    pub fn shared_endpoint(&self, e: usize, f: usize) -> Option<usize> {
        if e == f {
            return None;
        }
        let (a, b) = self.edges[e];
        let (c, d) = self.edges[f];
        if a == c || a == d {
            Some(a)
        } else if b == c || b == d {
            Some(b)
        } else {
            None
        }
    }

    /// All unordered pairs of distinct edges sharing an endpoint, as
    /// `(e, f)` with `e < f`, sorted.
    pub fn adjacent_edge_pairs(&self) -> Vec<(usize, usize)> {
        let mut pairs = Vec::new();
        for v in 0..self.n {
            let inc = self.incident_edges(v);
            for (i, &e) in inc.iter().enumerate() {
                for &f in &inc[i + 1..] {
                    pairs.push((e, f));
                }
            }
        }
        pairs.sort_unstable();
        pairs
    }

    pub fn has_adjacent_edges(&self) -> bool {
        self.adj.iter().any(|a| a.len() >= 2)
    }

    /// Spanning subgraph keeping the listed edge indices.
    pub fn spanning_subgraph(&self, edge_ids: &[usize]) -> Graph {
        let mut list: Vec<(usize, usize)> = edge_ids.iter().map(|&e| self.edges[e]).collect();
        list.sort_unstable();
        list.dedup();
        Self::from_sorted(self.n, list)
    }

    /// Subgraph induced by `vertices`, relabelled `0..vertices.len()` in the
    /// given order.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut pos = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            pos[v] = i;
        }
        let mut list = Vec::new();
        for &(u, v) in &self.edges {
            if pos[u] != usize::MAX && pos[v] != usize::MAX {
                list.push((pos[u].min(pos[v]), pos[u].max(pos[v])));
            }
        }
        list.sort_unstable();
        Self::from_sorted(vertices.len(), list)
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &w in &self.adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.n
    }

    pub fn is_triangle_free(&self) -> bool {
        self.edges.iter().all(|&(u, v)| {
            let (a, b) = (&self.adj[u], &self.adj[v]);
            let (mut i, mut j) = (0, 0);
            while i < a.len() && j < b.len() {
                match a[i].cmp(&b[j]) {
                    std::cmp::Ordering::Less => i += 1,
                    std::cmp::Ordering::Greater => j += 1,
                    std::cmp::Ordering::Equal => return false,
                }
            }
            true
        })
    }

    pub fn triangle_count(&self) -> usize {
        let mut count = 0;
        for &(u, v) in &self.edges {
            count += self.adj[u]
                .iter()
                .filter(|&&w| w > v && self.has_edge(v, w))
                .count();
        }
        count
    }

    /// Canonical form under vertex relabelling, by brute force over all
    /// permutations. Only meant for tiny graphs (n <= 8).
    pub fn canonical_form(&self) -> Vec<(usize, usize)> {
        assert!(self.n <= 8, "canonical_form is brute force");
        let mut perm: Vec<usize> = (0..self.n).collect();
        let mut best: Option<Vec<(usize, usize)>> = None;
        loop {
            let mut list: Vec<(usize, usize)> = self
                .edges
                .iter()
                .map(|&(u, v)| (perm[u].min(perm[v]), perm[u].max(perm[v])))
                .collect();
            list.sort_unstable();
            if best.as_ref().is_none_or(|b| list < *b) {
                best = Some(list);
            }
            if !next_permutation(&mut perm) {
                break;
            }
        }
        best.unwrap_or_default()
    }

    pub fn is_isomorphic(&self, other: &Graph) -> bool {
        self.n == other.n
            && self.edge_count() == other.edge_count()
            && self.canonical_form() == other.canonical_form()
    }

    /// Graphviz rendering for visual inspection.
    pub fn to_dot(&self, name: &str) -> String {
        let mut s = format!("graph {name} {{\n");
        for v in 0..self.n {
            s.push_str(&format!("  {v};\n"));
        }
        for &(u, v) in &self.edges {
            s.push_str(&format!("  {u} -- {v};\n"));
        }
        s.push_str("}\n");
        s
    }
}

/// Advances `perm` to the next permutation in lexicographic order. Returns
/// `false` once the last permutation has been reached.
pub(crate) fn next_permutation(perm: &mut [usize]) -> bool {
    if perm.len() < 2 {
        return false;
    }
    let mut i = perm.len() - 1;
    while i > 0 && perm[i - 1] >= perm[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = perm.len() - 1;
    while perm[j] <= perm[i - 1] {
        j -= 1;
    }
    perm.swap(i - 1, j);
    perm[i..].reverse();
    true
}
