//! Chordal, interval and equivalence recognition with their certificates.

use linecover::graph::{generate, line_graph, GraphKind};
use linecover::recognition::{find_asteroidal_triple, find_peo, is_equivalence_graph, is_interval};
use linecover::Graph;

fn describe(name: &str, g: &Graph) {
    let peo = find_peo(g);
    println!("{name}:");
    match &peo {
        Some(p) => println!("  chordal, elimination order {:?}", p.order()),
        None => println!("  not chordal"),
    }
    if peo.is_some() {
        match find_asteroidal_triple(g) {
            Some(t) => println!("  not interval, asteroidal triple {t:?}"),
            None => println!("  interval: {}", is_interval(g)),
        }
    }
    println!("  disjoint union of cliques: {}", is_equivalence_graph(g));
}

fn main() -> linecover::Result<()> {
    describe("C4", &generate(GraphKind::Cycle, 4, None, None)?);
    describe("K4 minus an edge", &Graph::new(4, [(0, 1), (0, 2), (0, 3), (1, 2), (2, 3)])?);
    // Subdivided claw: chordal but with an asteroidal triple.
    let net = Graph::new(7, [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)])?;
    describe("subdivided claw", &net);
    describe("two triangles", &Graph::new(6, [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5)])?);
    describe("L(C5)", &line_graph(&generate(GraphKind::Cycle, 5, None, None)?).line);
    Ok(())
}
