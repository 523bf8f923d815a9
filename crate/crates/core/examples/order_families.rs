//! Smallest 3-suitable and 3-mixing order families, and constructed ones
//! for larger universes.

use linecover::orders::{build_family, min_family_search, OrderProperty};

fn main() -> linecover::Result<()> {
    for prop in [OrderProperty::Suitable, OrderProperty::Mixing] {
        println!("{prop}");
        for c in 2..=5 {
            let f = min_family_search(c, prop)?;
            println!("  C = {c}: minimum {} orders {:?}", f.len(), f.orders());
        }
        for c in [8, 16, 64] {
            let f = build_family(c, prop)?;
            println!("  C = {c}: built {} orders, checker agrees: {}", f.len(), f.satisfies(prop));
        }
    }
    let ids = linecover::orders::OrderFamily::identity(3);
    println!("identity on 3 points violates mixing at {:?}", ids.first_violation(OrderProperty::Mixing));
    Ok(())
}
