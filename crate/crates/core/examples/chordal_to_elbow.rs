//! Turns chordal covers of L(G) into elbow covers of G of the same size.

use linecover::graph::{generate, line_graph, GraphKind};
use linecover::orientations::CoverKind;
use linecover::recognition::{Cover, CoverClass};
use linecover::transforms::{chordal_cover_to_elbow, greedy_chordal_cover};

fn main() -> linecover::Result<()> {
    let c5 = generate(GraphKind::Cycle, 5, None, None)?;
    let lg = line_graph(&c5);
    // L(C5) is a 5-cycle; a path plus the missing edge covers it.
    let cover = Cover::new(lg.line.clone(), CoverClass::Chordal, vec![vec![0, 1, 2, 3], vec![4]])?;
    let fam = chordal_cover_to_elbow(&lg, &cover)?;
    println!("C5: chordal cover of size {} gives elbow cover of size {}", cover.len(), fam.len());
    for (i, o) in fam.members().iter().enumerate() {
        println!("  orientation {i}: {:?}", o.dirs());
    }
    println!("  verified: {}", fam.verify(CoverKind::Elbow));

    for seed in 0..5 {
        let g = generate(GraphKind::RandomTriangleFree, 9, Some(0.4), Some(seed))?;
        let lg = line_graph(&g);
        let greedy = greedy_chordal_cover(&lg.line, seed);
        let fam = chordal_cover_to_elbow(&lg, &greedy)?;
        println!(
            "random triangle-free seed {seed}: {} edges, greedy chordal cover {}, elbow cover verified {}",
            g.edge_count(),
            greedy.len(),
            fam.verify(CoverKind::Elbow)
        );
    }
    Ok(())
}
