use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{is_chordal, is_equivalence_graph, is_interval};
use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CoverClass {
    Equivalence,
    Interval,
    Chordal,
    Unrestricted,
}

impl CoverClass {
    pub fn admits(self, g: &Graph) -> bool {
        match self {
            CoverClass::Equivalence => is_equivalence_graph(g),
            CoverClass::Interval => is_interval(g),
            CoverClass::Chordal => is_chordal(g),
            CoverClass::Unrestricted => true,
        }
    }
}

impl fmt::Display for CoverClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CoverClass::Equivalence => "equivalence",
            CoverClass::Interval => "interval",
            CoverClass::Chordal => "chordal",
            CoverClass::Unrestricted => "unrestricted",
        })
    }
}

impl FromStr for CoverClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "equivalence" => Ok(CoverClass::Equivalence),
            "interval" => Ok(CoverClass::Interval),
            "chordal" => Ok(CoverClass::Chordal),
            "unrestricted" => Ok(CoverClass::Unrestricted),
            other => Err(Error::Parse(format!("unknown cover class `{other}`"))),
        }
    }
}

/// A family of spanning subgraphs of `target`, each stored as a sorted set
/// of target edge indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cover {
    target: Graph,
    class: CoverClass,
    members: Vec<Vec<usize>>,
}

impl Cover {
    pub fn new(target: Graph, class: CoverClass, members: Vec<Vec<usize>>) -> Result<Self> {
        let m = target.edge_count();
        let mut clean = Vec::with_capacity(members.len());
        for mut member in members {
            if let Some(&bad) = member.iter().find(|&&e| e >= m) {
                return Err(Error::InvalidParams(format!(
                    "member edge index {bad} out of range for {m} target edges"
                )));
            }
            member.sort_unstable();
            member.dedup();
            clean.push(member);
        }
        Ok(Cover {
            target,
            class,
            members: clean,
        })
    }

    pub fn target(&self) -> &Graph {
        &self.target
    }

    pub fn class(&self) -> CoverClass {
        self.class
    }

    pub fn members(&self) -> &[Vec<usize>] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Member `i` as a spanning subgraph of the target.
    pub fn member_graph(&self, i: usize) -> Graph {
        self.target.spanning_subgraph(&self.members[i])
    }

    /// Same members, different claimed class.
    pub fn with_class(&self, class: CoverClass) -> Cover {
        Cover {
            class,
            ..self.clone()
        }
    }

    pub fn verify(&self) -> CoverReport {
        cover_verify(self)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverReport {
    pub class: CoverClass,
    pub size: usize,
    /// Target edges no member contains.
    pub missing_edges: Vec<(usize, usize)>,
    /// Members that are not in the claimed class.
    pub failed_members: Vec<usize>,
    pub pass: bool,
}

/// Checks that the members' union is exactly the target edge set and that
/// each member belongs to the claimed class. A passing report certifies
/// that the covering number of the class is at most `size`.
pub fn cover_verify(c: &Cover) -> CoverReport {
    let mut covered = vec![false; c.target.edge_count()];
    for member in &c.members {
        for &e in member {
            covered[e] = true;
        }
    }
    let missing_edges: Vec<(usize, usize)> = covered
        .iter()
        .enumerate()
        .filter(|(_, &hit)| !hit)
        .map(|(e, _)| c.target.edge(e))
        .collect();
    let failed_members: Vec<usize> = (0..c.members.len())
        .filter(|&i| !c.class.admits(&c.member_graph(i)))
        .collect();
    CoverReport {
        class: c.class,
        size: c.members.len(),
        pass: missing_edges.is_empty() && failed_members.is_empty(),
        missing_edges,
        failed_members,
    }
}
