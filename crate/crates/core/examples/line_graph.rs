//! Line graphs of a few generated graphs, with the edge/vertex correspondence.

use linecover::graph::{generate, line_graph, GraphKind};

fn main() -> linecover::Result<()> {
    for (kind, n) in [(GraphKind::Path, 4), (GraphKind::Cycle, 5), (GraphKind::Star, 4), (GraphKind::Complete, 4)] {
        let g = generate(kind, n, None, None)?;
        let lg = line_graph(&g);
        println!(
            "{kind}:{n}  G has {} vertices, {} edges; L(G) has {} vertices, {} edges",
            g.vertex_count(),
            g.edge_count(),
            lg.line.vertex_count(),
            lg.line.edge_count()
        );
        for v in 0..lg.line.vertex_count() {
            let e = lg.vertex_to_edge(v);
            println!("  L vertex {v} = edge {e:?}, neighbours {:?}", lg.line.neighbors(v));
        }
    }
    let k4 = generate(GraphKind::Complete, 4, None, None)?;
    print!("{}", line_graph(&k4).line.to_dot("L_K4"));
    Ok(())
}
