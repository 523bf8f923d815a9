use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{chromatic_number_exact, greedy_coloring, line_graph, Coloring, Graph};
use crate::io::{to_json, CoverJson, OrientationFamilyJson};
use crate::orders::{build_family, OrderProperty};
use crate::orientations::{orient_from_coloring, OrientationFamily};
use crate::recognition::Cover;
use crate::transforms::{chordal_cover_to_elbow, coloring_equivalence_cover, greedy_chordal_cover};

use super::RunConfig;

/// What `cover-build` constructs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BuildKind {
    /// Equivalence cover of `L(G)` from colouring orientations.
    Equivalence,
    /// Seeded greedy chordal cover of `L(G)`.
    Chordal,
    /// Colouring orientations of a 3-suitable family.
    InElbow,
    /// Colouring orientations of a 3-mixing family.
    Elbow,
    /// Elbow cover extracted from a greedy chordal cover of `L(G)`.
    ElbowFromChordal,
}

impl FromStr for BuildKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "equivalence" => BuildKind::Equivalence,
            "chordal" => BuildKind::Chordal,
            "in-elbow" => BuildKind::InElbow,
            "elbow" => BuildKind::Elbow,
            "elbow-from-chordal" => BuildKind::ElbowFromChordal,
            other => return Err(Error::Parse(format!("unknown cover kind `{other}`"))),
        })
    }
}

impl fmt::Display for BuildKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BuildKind::Equivalence => "equivalence",
            BuildKind::Chordal => "chordal",
            BuildKind::InElbow => "in-elbow",
            BuildKind::Elbow => "elbow",
            BuildKind::ElbowFromChordal => "elbow-from-chordal",
        })
    }
}

/// A verified certificate.
#[derive(Clone, Debug)]
pub enum Built {
    Cover(Cover),
    Family(OrientationFamily),
}

impl Built {
    pub fn len(&self) -> usize {
        match self {
            Built::Cover(c) => c.len(),
            Built::Family(f) => f.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn to_json(&self) -> String {
        match self {
            Built::Cover(c) => to_json(&CoverJson::from(c)),
            Built::Family(f) => to_json(&OrientationFamilyJson::from(f)),
        }
    }
}

/// Exact colouring within the vertex budget, DSATUR beyond it.
fn coloring_for(g: &Graph, cfg: &RunConfig) -> Coloring {
    match chromatic_number_exact(g, cfg.budgets.vertices) {
        Ok((_, c)) => c,
        Err(_) => greedy_coloring(g),
    }
}

pub fn cmd_cover_build(cfg: &RunConfig, g: &Graph, kind: BuildKind) -> Result<Built> {
    cfg.validate()?;
    let lg = line_graph(g);
    let built = match kind {
        BuildKind::Equivalence => Built::Cover(coloring_equivalence_cover(&lg, &coloring_for(g, cfg))?),
        BuildKind::Chordal => Built::Cover(greedy_chordal_cover(&lg.line, cfg.seed)),
        BuildKind::InElbow | BuildKind::Elbow => {
            let coloring = coloring_for(g, cfg);
            let (universe, property) = match kind {
                BuildKind::InElbow => (coloring.k().max(3), OrderProperty::Suitable),
                _ => (coloring.k(), OrderProperty::Mixing),
            };
            let family = build_family(universe, property)?;
            Built::Family(orient_from_coloring(g, &coloring, &family)?)
        }
        BuildKind::ElbowFromChordal => {
            Built::Family(chordal_cover_to_elbow(&lg, &greedy_chordal_cover(&lg.line, cfg.seed))?)
        }
    };
    let ok = match &built {
        Built::Cover(c) => c.verify().pass,
        Built::Family(f) => f.claimed().is_some_and(|k| f.verify(k)),
    };
    if !ok {
        return Err(Error::ConstructionFailure(format!("{kind} construction failed verification")));
    }
    Ok(built)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, GraphKind};
    use crate::orientations::CoverKind;

    #[test]
    fn every_kind_on_c5() {
        let c5 = generate(GraphKind::Cycle, 5, None, None).unwrap();
        let cfg = RunConfig::new("cover-build");
        for kind in ["equivalence", "chordal", "in-elbow", "elbow", "elbow-from-chordal"] {
            let built = cmd_cover_build(&cfg, &c5, kind.parse().unwrap()).unwrap();
            assert!(!built.is_empty(), "{kind}");
        }
        match cmd_cover_build(&cfg, &c5, BuildKind::Elbow).unwrap() {
            Built::Family(f) => assert_eq!((f.len(), f.claimed()), (2, Some(CoverKind::Elbow))),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn chordal_extraction_needs_triangle_free() {
        let k4 = generate(GraphKind::Complete, 4, None, None).unwrap();
        assert!(cmd_cover_build(&RunConfig::new("cover-build"), &k4, BuildKind::ElbowFromChordal).is_err());
    }
}
