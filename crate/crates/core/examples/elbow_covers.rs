//! Elbow and in-elbow covers: built from a colouring and an order family,
//! then compared with the exact minimum.

use linecover::graph::{chromatic_number_exact, generate, GraphKind};
use linecover::lglg_bound;
use linecover::orders::{build_family, OrderProperty};
use linecover::orientations::{exact_elb, exact_inelb, orient_from_coloring, CoverKind};

fn main() -> linecover::Result<()> {
    for (kind, n) in [(GraphKind::Path, 3), (GraphKind::Cycle, 5), (GraphKind::Complete, 4), (GraphKind::Complete, 5)] {
        let g = generate(kind, n, None, None)?;
        let (chi, coloring) = chromatic_number_exact(&g, 16)?;
        let mixing = build_family(chi, OrderProperty::Mixing)?;
        let suitable = build_family(chi.max(3), OrderProperty::Suitable)?;
        let elbow = orient_from_coloring(&g, &coloring, &mixing)?;
        let inelbow = orient_from_coloring(&g, &coloring, &suitable)?;
        let elb = exact_elb(&g, 4)?.map(|s| s.size);
        let inelb = exact_inelb(&g, 4)?.map(|s| s.size);
        println!("{kind}:{n}  chi {chi}, formula {}", lglg_bound(chi));
        println!("  elbow cover from {} mixing orders: verified {}", elbow.len(), elbow.verify(CoverKind::Elbow));
        println!("  in-elbow cover from {} suitable orders: verified {}", inelbow.len(), inelbow.verify(CoverKind::InElbow));
        println!("  exact elb {elb:?}, exact inelb {inelb:?}");
    }
    Ok(())
}
