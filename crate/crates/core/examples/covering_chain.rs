//! Lower bound, certified covers and exact values side by side for
//! triangle-free graphs.

use linecover::graph::{generate, GraphKind};
use linecover::transforms::covering_chain;

fn main() -> linecover::Result<()> {
    let graphs = [
        ("cycle:5", generate(GraphKind::Cycle, 5, None, None)?),
        ("cycle:6", generate(GraphKind::Cycle, 6, None, None)?),
        ("mycielski:4", generate(GraphKind::MycielskianIterate, 4, None, None)?),
        ("random-triangle-free:8", generate(GraphKind::RandomTriangleFree, 8, Some(0.4), Some(3))?),
    ];
    for (name, g) in &graphs {
        let r = covering_chain(g, 16, 12, 4)?;
        println!(
            "{name}: chi {} bound {} <= eq cover {} ; elbow {} ; exact elb {:?} inelb {:?} ; pass {}",
            r.chi, r.lower_bound, r.eq_upper, r.elbow_from_cover, r.exact_elb, r.exact_inelb, r.pass
        );
        for v in &r.violations {
            println!("  violation: {v}");
        }
    }
    Ok(())
}
