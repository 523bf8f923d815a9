use super::Graph;

/// A base graph together with its line graph. Line vertex `i` is base edge
/// `i` in canonical order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LineGraph {
    pub base: Graph,
    pub line: Graph,
}

impl LineGraph {
    pub fn edge_to_vertex(&self, e: usize) -> usize {
        e
    }

    pub fn vertex_to_edge(&self, v: usize) -> (usize, usize) {
        self.base.edge(v)
    }
}

pub fn line_graph(g: &Graph) -> LineGraph {
    let mut edges = Vec::new();
    for v in 0..g.vertex_count() {
        let inc = g.incident_edges(v);
        for (i, &e) in inc.iter().enumerate() {
            for &f in &inc[i + 1..] {
                edges.push((e, f));
            }
        }
    }
    // Two distinct edges of a simple graph share at most one endpoint, so no
    // pair is produced twice.
    let line = Graph::new(g.edge_count(), edges).expect("line graph is simple");
    LineGraph {
        base: g.clone(),
        line,
    }
}
