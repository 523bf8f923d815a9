//! JSON and DOT formats.
//!
//! - graph: `{"n": 3, "edges": [[0, 1], [1, 2]]}`, edges canonical (`u < v`,
//!   sorted, no repeats) unless read with `normalize`;
//! - cover: `{"target": <graph>, "class": "chordal", "members": [[0, 2], ...]}`
//!   with members as target edge indices;
//! - orientation: `{"graph": <graph>, "dirs": [[tail, head], ...]}`;
//! - orientation family: `{"graph": <graph>, "kind": "elbow" | "in-elbow" |
//!   null, "orientations": [[[tail, head], ...], ...]}`.

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::orders::OrderFamily;
use crate::orientations::{CoverKind, Orientation, OrientationFamily};
use crate::recognition::{Cover, CoverClass};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
}

impl From<&Graph> for GraphJson {
    fn from(g: &Graph) -> Self {
        GraphJson {
            n: g.vertex_count(),
            edges: g.edges().iter().map(|&(u, v)| [u, v]).collect(),
        }
    }
}

impl GraphJson {
    /// Strict mode rejects non-canonical edge lists; `normalize` sorts them
    /// and collapses repeats.
    pub fn to_graph(&self, normalize: bool) -> Result<Graph> {
        let pairs = self.edges.iter().map(|&[u, v]| (u, v));
        if normalize {
            return Graph::new_dedup(self.n, pairs);
        }
        let g = Graph::new(self.n, pairs)?;
        let canonical = g.edges().iter().zip(&self.edges).all(|(&(u, v), &[a, b])| (u, v) == (a, b));
        if !canonical {
            return Err(Error::NotCanonical(
                "edges must be listed as sorted pairs [u, v] with u < v".into(),
            ));
        }
        Ok(g)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CoverJson {
    pub target: GraphJson,
    pub class: CoverClass,
    pub members: Vec<Vec<usize>>,
}

impl From<&Cover> for CoverJson {
    fn from(c: &Cover) -> Self {
        CoverJson {
            target: c.target().into(),
            class: c.class(),
            members: c.members().to_vec(),
        }
    }
}

impl CoverJson {
    pub fn to_cover(&self, normalize: bool) -> Result<Cover> {
        Cover::new(self.target.to_graph(normalize)?, self.class, self.members.clone())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OrientationJson {
    pub graph: GraphJson,
    pub dirs: Vec<[usize; 2]>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OrientationFamilyJson {
    pub graph: GraphJson,
    pub kind: Option<CoverKind>,
    pub orientations: Vec<Vec<[usize; 2]>>,
}

impl From<&OrientationFamily> for OrientationFamilyJson {
    fn from(f: &OrientationFamily) -> Self {
        OrientationFamilyJson {
            graph: f.graph().into(),
            kind: f.claimed(),
            orientations: f.members().iter().map(dirs_json).collect(),
        }
    }
}

impl OrientationFamilyJson {
    /// The family without its claim; callers verify `kind` themselves.
    pub fn to_family(&self, normalize: bool) -> Result<OrientationFamily> {
        let g = self.graph.to_graph(normalize)?;
        let members = self
            .orientations
            .iter()
            .map(|dirs| orientation_from(&g, dirs, normalize))
            .collect::<Result<Vec<_>>>()?;
        OrientationFamily::new(g, members)
    }
}

fn dirs_json(o: &Orientation) -> Vec<[usize; 2]> {
    o.dirs().iter().map(|&(t, h)| [t, h]).collect()
}

/// Directions may be given in edge order, or in any order with
/// `normalize`.
fn orientation_from(g: &Graph, dirs: &[[usize; 2]], normalize: bool) -> Result<Orientation> {
    let mut pairs: Vec<(usize, usize)> = dirs.iter().map(|&[t, h]| (t, h)).collect();
    if normalize {
        pairs.sort_by_key(|&(t, h)| (t.min(h), t.max(h)));
    }
    Orientation::new(g, pairs)
}

pub fn orientation_to_json(g: &Graph, o: &Orientation) -> OrientationJson {
    OrientationJson {
        graph: g.into(),
        dirs: dirs_json(o),
    }
}

/// Any artifact the toolkit reads back.
#[derive(Clone, Debug)]
pub enum Artifact {
    Graph(Graph),
    Cover(Cover),
    Orientation(Graph, Orientation),
    OrientationFamily(OrientationFamily, Option<CoverKind>),
    OrderFamily(OrderFamily),
}

/// Parses JSON, telling artifacts apart by their keys. Syntax errors carry
/// the line and column.
pub fn parse_artifact(text: &str, normalize: bool) -> Result<Artifact> {
    let value: Value = serde_json::from_str(text)
        .map_err(|e| Error::Parse(format!("line {}, column {}: {e}", e.line(), e.column())))?;
    let has = |k: &str| value.get(k).is_some();
    let shape = |e: serde_json::Error| Error::Parse(e.to_string());
    if has("members") {
        let j: CoverJson = serde_json::from_value(value).map_err(shape)?;
        Ok(Artifact::Cover(j.to_cover(normalize)?))
    } else if has("orientations") {
        let j: OrientationFamilyJson = serde_json::from_value(value).map_err(shape)?;
        Ok(Artifact::OrientationFamily(j.to_family(normalize)?, j.kind))
    } else if has("dirs") {
        let j: OrientationJson = serde_json::from_value(value).map_err(shape)?;
        let g = j.graph.to_graph(normalize)?;
        let o = orientation_from(&g, &j.dirs, normalize)?;
        Ok(Artifact::Orientation(g, o))
    } else if has("orders") {
        let f: OrderFamily = serde_json::from_value(value).map_err(shape)?;
        Ok(Artifact::OrderFamily(f))
    } else if has("edges") {
        let j: GraphJson = serde_json::from_value(value).map_err(shape)?;
        Ok(Artifact::Graph(j.to_graph(normalize)?))
    } else {
        Err(Error::Parse("unrecognised artifact: expected a graph, cover, orientation, orientation family or order family".into()))
    }
}

pub fn read_graph(text: &str, normalize: bool) -> Result<Graph> {
    match parse_artifact(text, normalize)? {
        Artifact::Graph(g) => Ok(g),
        _ => Err(Error::Parse("expected a graph".into())),
    }
}

pub fn read_cover(text: &str, normalize: bool) -> Result<Cover> {
    match parse_artifact(text, normalize)? {
        Artifact::Cover(c) => Ok(c),
        _ => Err(Error::Parse("expected a cover".into())),
    }
}

/// A graph from a generator spec such as `cycle:5` or `random:8:0.4:7`, or
/// from a JSON file when `source` names an existing path.
pub fn load_graph(source: &str, normalize: bool) -> Result<(String, Graph)> {
    let path = std::path::Path::new(source);
    if path.is_file() {
        let text = std::fs::read_to_string(path)?;
        return Ok((source.to_string(), read_graph(&text, normalize)?));
    }
    let spec: crate::graph::GraphSpec = source.parse()?;
    Ok((spec.to_string(), spec.build()?))
}

/// Pretty JSON with a trailing newline. Output is a pure function of the
/// value.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serialisable value");
    s.push('\n');
    s
}

/// Graphviz digraph of one orientation.
pub fn orientation_to_dot(g: &Graph, o: &Orientation, name: &str) -> String {
    let mut s = format!("digraph {name} {{\n");
    for v in 0..g.vertex_count() {
        s.push_str(&format!("  {v};\n"));
    }
    for &(t, h) in o.dirs() {
        s.push_str(&format!("  {t} -> {h};\n"));
    }
    s.push_str("}\n");
    s
}
