//! Orientations, elbows and orientation covers.
//!
//! Two edges `xy` and `xz` form an *elbow* in an orientation when both point
//! towards `x` (in-elbow) or both point away from `x` (out-elbow). A family
//! of orientations is an (in-)elbow cover when every pair of adjacent edges
//! forms an (in-)elbow in at least one member.

mod exact;

pub use exact::{exact_cover_number, exact_elb, exact_inelb, ExactSolution, DEFAULT_EDGE_BUDGET, MAX_KMAX};

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Coloring, Graph};
use crate::orders::OrderFamily;

/// One direction per canonical edge, stored as `(tail, head)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Orientation {
    dirs: Vec<(usize, usize)>,
}

impl Orientation {
    pub fn new(g: &Graph, dirs: Vec<(usize, usize)>) -> Result<Self> {
        if dirs.len() != g.edge_count() {
            return Err(Error::InvalidOrientation(format!(
                "{} directions for {} edges",
                dirs.len(),
                g.edge_count()
            )));
        }
        for (e, &(t, h)) in dirs.iter().enumerate() {
            if (t.min(h), t.max(h)) != g.edge(e) {
                return Err(Error::InvalidOrientation(format!(
                    "direction ({t}, {h}) does not match edge {e} = {:?}",
                    g.edge(e)
                )));
            }
        }
        Ok(Orientation { dirs })
    }

    /// Every edge directed from its lower to its higher endpoint.
    pub fn ascending(g: &Graph) -> Self {
        Orientation {
            dirs: g.edges().to_vec(),
        }
    }

    /// Builds from per-edge flags: `true` directs edge `e` towards its higher
    /// endpoint.
    pub fn from_ascending_flags(g: &Graph, ascending: impl IntoIterator<Item = bool>) -> Self {
        let dirs = g
            .edges()
            .iter()
            .zip(ascending)
            .map(|(&(u, v), up)| if up { (u, v) } else { (v, u) })
            .collect::<Vec<_>>();
        assert_eq!(dirs.len(), g.edge_count());
        Orientation { dirs }
    }

    pub fn dirs(&self) -> &[(usize, usize)] {
        &self.dirs
    }

    pub fn head(&self, e: usize) -> usize {
        self.dirs[e].1
    }

    pub fn tail(&self, e: usize) -> usize {
        self.dirs[e].0
    }

    pub fn points_to(&self, e: usize, x: usize) -> bool {
        self.dirs[e].1 == x
    }

    /// Directs edge `e` towards `x` (`toward = true`) or away from it.
    pub fn set(&mut self, e: usize, x: usize, toward: bool) {
        let (t, h) = self.dirs[e];
        let other = if t == x { h } else { t };
        self.dirs[e] = if toward { (other, x) } else { (x, other) };
    }

    pub fn reversed(&self) -> Self {
        Orientation {
            dirs: self.dirs.iter().map(|&(t, h)| (h, t)).collect(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ElbowKind {
    InElbow,
    OutElbow,
    None,
}

/// What a family of orientations is required to cover.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CoverKind {
    Elbow,
    InElbow,
}

impl CoverKind {
    fn accepts(self, kind: ElbowKind) -> bool {
        match self {
            CoverKind::Elbow => kind != ElbowKind::None,
            CoverKind::InElbow => kind == ElbowKind::InElbow,
        }
    }
}

impl fmt::Display for CoverKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CoverKind::Elbow => "elbow",
            CoverKind::InElbow => "in-elbow",
        })
    }
}

impl std::str::FromStr for CoverKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "elbow" => Ok(CoverKind::Elbow),
            "in-elbow" => Ok(CoverKind::InElbow),
            other => Err(Error::Parse(format!("unknown cover kind `{other}`"))),
        }
    }
}

pub fn elbow_kind(g: &Graph, o: &Orientation, e: usize, f: usize) -> Result<ElbowKind> {
    let x = g.shared_endpoint(e, f).ok_or(Error::NotAdjacent(e, f))?;
    Ok(elbow_at(o, e, f, x))
}

fn elbow_at(o: &Orientation, e: usize, f: usize, x: usize) -> ElbowKind {
    match (o.points_to(e, x), o.points_to(f, x)) {
        (true, true) => ElbowKind::InElbow,
        (false, false) => ElbowKind::OutElbow,
        _ => ElbowKind::None,
    }
}

/// Adjacent edge pairs `(e, f)`, `e < f`, that form no elbow of the
/// requested kind in any member.
pub fn uncovered_pairs(g: &Graph, members: &[Orientation], kind: CoverKind) -> Vec<(usize, usize)> {
    g.adjacent_edge_pairs()
        .into_iter()
        .filter(|&(e, f)| {
            let x = g.shared_endpoint(e, f).expect("adjacent pair");
            !members.iter().any(|o| kind.accepts(elbow_at(o, e, f, x)))
        })
        .collect()
}

pub fn verify_orientation_cover(g: &Graph, members: &[Orientation], kind: CoverKind) -> bool {
    uncovered_pairs(g, members, kind).is_empty()
}

/// Orientations of one graph, optionally certified as a cover.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrientationFamily {
    graph: Graph,
    members: Vec<Orientation>,
    claimed: Option<CoverKind>,
}

impl OrientationFamily {
    pub fn new(graph: Graph, members: Vec<Orientation>) -> Result<Self> {
        for (i, o) in members.iter().enumerate() {
            if o.dirs.len() != graph.edge_count() {
                return Err(Error::InvalidOrientation(format!(
                    "member {i} orients {} edges, graph has {}",
                    o.dirs.len(),
                    graph.edge_count()
                )));
            }
        }
        Ok(OrientationFamily {
            graph,
            members,
            claimed: None,
        })
    }

    /// Verifies the family as a cover of `kind` and records the claim.
    pub fn certify(mut self, kind: CoverKind) -> Result<Self> {
        let missing = uncovered_pairs(&self.graph, &self.members, kind);
        if let Some(&(e, f)) = missing.first() {
            return Err(Error::Rejected(format!(
                "edges {:?} and {:?} form no {kind} in any of the {} orientations",
                self.graph.edge(e),
                self.graph.edge(f),
                self.members.len()
            )));
        }
        self.claimed = Some(kind);
        Ok(self)
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn members(&self) -> &[Orientation] {
        &self.members
    }

    pub fn claimed(&self) -> Option<CoverKind> {
        self.claimed
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn verify(&self, kind: CoverKind) -> bool {
        verify_orientation_cover(&self.graph, &self.members, kind)
    }

    pub fn uncovered(&self, kind: CoverKind) -> Vec<(usize, usize)> {
        uncovered_pairs(&self.graph, &self.members, kind)
    }
}

/// One orientation per order: edge `xy` goes from `x` to `y` when `c(x)`
/// precedes `c(y)`. The result is certified as an in-elbow cover when it
/// verifies as one, otherwise as an elbow cover when it verifies as one.
pub fn orient_from_coloring(
    g: &Graph,
    coloring: &Coloring,
    family: &OrderFamily,
) -> Result<OrientationFamily> {
    if !coloring.is_proper_for(g) {
        let &(u, v) = g
            .edges()
            .iter()
            .find(|&&(u, v)| coloring.colors().get(u) == coloring.colors().get(v))
            .unwrap_or(&(0, 0));
        return Err(Error::ImproperColoring(u, v));
    }
    if family.universe() < coloring.k() {
        return Err(Error::InvalidParams(format!(
            "order universe {} is smaller than the {} colours used",
            family.universe(),
            coloring.k()
        )));
    }
    let members = family
        .positions()
        .iter()
        .map(|pos| {
            Orientation::from_ascending_flags(
                g,
                g.edges()
                    .iter()
                    .map(|&(u, v)| pos[coloring.color(u)] < pos[coloring.color(v)]),
            )
        })
        .collect();
    let fam = OrientationFamily::new(g.clone(), members)?;
    if fam.verify(CoverKind::InElbow) {
        fam.certify(CoverKind::InElbow)
    } else if fam.verify(CoverKind::Elbow) {
        fam.certify(CoverKind::Elbow)
    } else {
        Ok(fam)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, GraphKind};

    fn gen(kind: GraphKind, n: usize) -> Graph {
        generate(kind, n, None, None).unwrap()
    }

    #[test]
    fn elbow_kinds_on_a_path() {
        // a=0, b=1, c=2; edges (0,1) and (1,2).
        let p = gen(GraphKind::Path, 3);
        let inward = Orientation::new(&p, vec![(0, 1), (2, 1)]).unwrap();
        assert_eq!(elbow_kind(&p, &inward, 0, 1).unwrap(), ElbowKind::InElbow);
        let outward = Orientation::new(&p, vec![(1, 0), (1, 2)]).unwrap();
        assert_eq!(elbow_kind(&p, &outward, 0, 1).unwrap(), ElbowKind::OutElbow);
        let through = Orientation::new(&p, vec![(0, 1), (1, 2)]).unwrap();
        assert_eq!(elbow_kind(&p, &through, 0, 1).unwrap(), ElbowKind::None);
    }

    #[test]
    fn elbow_kind_rejects_non_adjacent() {
        let p = gen(GraphKind::Path, 4);
        let o = Orientation::ascending(&p);
        assert!(matches!(elbow_kind(&p, &o, 0, 2), Err(Error::NotAdjacent(0, 2))));
        assert!(elbow_kind(&p, &o, 1, 1).is_err());
    }

    #[test]
    fn orientation_validation() {
        let p = gen(GraphKind::Path, 3);
        assert!(Orientation::new(&p, vec![(0, 1)]).is_err());
        assert!(Orientation::new(&p, vec![(0, 2), (1, 2)]).is_err());
    }

    #[test]
    fn alternating_c4_is_one_elbow_cover() {
        let c4 = gen(GraphKind::Cycle, 4);
        // Even vertices are sources, odd vertices sinks.
        let o = Orientation::from_ascending_flags(
            &c4,
            c4.edges().iter().map(|&(u, _)| u % 2 == 0),
        );
        assert!(verify_orientation_cover(&c4, &[o], CoverKind::Elbow));
    }

    #[test]
    fn no_single_orientation_covers_a_triangle() {
        let k3 = gen(GraphKind::Complete, 3);
        for mask in 0..8u32 {
            let o = Orientation::from_ascending_flags(&k3, (0..3).map(|i| mask & (1 << i) != 0));
            assert!(!verify_orientation_cover(&k3, &[o], CoverKind::Elbow));
        }
    }

    #[test]
    fn matching_needs_nothing() {
        let m = gen(GraphKind::Matching, 2);
        assert!(verify_orientation_cover(&m, &[], CoverKind::InElbow));
        assert!(verify_orientation_cover(&m, &[], CoverKind::Elbow));
    }

    #[test]
    fn coloring_orientation_on_a_path() {
        let p = gen(GraphKind::Path, 3);
        let c = Coloring::new(&p, vec![0, 1, 0]).unwrap();
        let f = OrderFamily::identity(2);
        let fam = orient_from_coloring(&p, &c, &f).unwrap();
        assert_eq!(fam.members()[0].dirs(), &[(0, 1), (2, 1)]);
        assert_eq!(fam.claimed(), Some(CoverKind::InElbow));
    }

    #[test]
    fn coloring_orientation_on_k4() {
        let k4 = gen(GraphKind::Complete, 4);
        let c = Coloring::new(&k4, vec![0, 1, 2, 3]).unwrap();
        let f = OrderFamily::new(4, vec![vec![0, 1, 2, 3], vec![1, 3, 0, 2]]).unwrap();
        let fam = orient_from_coloring(&k4, &c, &f).unwrap();
        assert_eq!(fam.len(), 2);
        assert_eq!(fam.claimed(), Some(CoverKind::Elbow));
        assert!(fam.verify(CoverKind::Elbow));
    }

    #[test]
    fn coloring_orientation_on_edgeless_graph() {
        let g = Graph::empty(3);
        let c = Coloring::new(&g, vec![0, 0, 0]).unwrap();
        let fam = orient_from_coloring(&g, &c, &OrderFamily::identity(1)).unwrap();
        assert!(fam.members()[0].dirs().is_empty());
        assert!(fam.verify(CoverKind::Elbow) && fam.verify(CoverKind::InElbow));
    }

    #[test]
    fn coloring_orientation_rejects_small_universe() {
        let k3 = gen(GraphKind::Complete, 3);
        let c = Coloring::new(&k3, vec![0, 1, 2]).unwrap();
        assert!(orient_from_coloring(&k3, &c, &OrderFamily::identity(2)).is_err());
    }

    #[test]
    fn certify_names_the_uncovered_pair() {
        let k3 = gen(GraphKind::Complete, 3);
        let fam = OrientationFamily::new(k3.clone(), vec![Orientation::ascending(&k3)]).unwrap();
        // Ascending K_3: 0 is a source, 2 a sink, 1 is pass-through.
        assert_eq!(fam.uncovered(CoverKind::Elbow), vec![(0, 2)]);
        assert!(fam.certify(CoverKind::Elbow).is_err());
    }
}
