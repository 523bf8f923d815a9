//! Elbow covers of graphs and chordal, interval and equivalence covers of
//! their line graphs.
//!
//! The crate is organised bottom-up:
//!
//! - [`graph`]: canonical simple graphs, generators, line graphs, colouring.
//! - [`recognition`]: chordal / interval / equivalence recognition and
//!   verification of [`Cover`](recognition::Cover) certificates.
//! - [`orders`]: 3-suitable and 3-mixing families of total orders.
//! - [`orientations`]: elbow predicates, orientation covers, exact solvers.
//! - [`transforms`]: conversions between orientation covers of `G` and
//!   covers of `L(G)`, including chordal cover to elbow cover.
//! - [`experiments`]: reproducible reports and the certificate verifier
//!   behind the `linecover` binary.
//!
//! See the `examples/` directory for one runnable program per capability.

pub mod error;
pub mod experiments;
pub mod graph;
pub mod io;
pub mod orders;
pub mod orientations;
pub mod recognition;
pub mod transforms;

pub use error::{Error, Result};
pub use graph::{Coloring, Graph, LineGraph};

/// `⌈lg lg χ⌉ + 1`, the elbow covering number predicted from the chromatic
/// number. Only meaningful for `chi >= 2`.
pub fn lglg_bound(chi: usize) -> usize {
    assert!(chi >= 2, "lg lg is undefined below 2");
    // Least t with chi <= 2^(2^t).
    let chi = chi as u128;
    let mut t = 0u32;
    while t < 7 && chi > 1u128 << (1u32 << t) {
        t += 1;
    }
    t as usize + 1
}

#[cfg(test)]
mod tests {
    use super::lglg_bound;

    #[test]
    fn lglg_values() {
        let expected = [(2, 1), (3, 2), (4, 2), (5, 3), (16, 3), (17, 4), (256, 4), (257, 5)];
        for (chi, v) in expected {
            assert_eq!(lglg_bound(chi), v, "chi = {chi}");
        }
    }
}
