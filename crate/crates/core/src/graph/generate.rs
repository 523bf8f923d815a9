use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::Graph;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum GraphKind {
    Complete,
    Cycle,
    Path,
    /// Star with the given number of leaves (centre is vertex 0).
    Star,
    /// Perfect matching with the given number of edges.
    Matching,
    /// k-th Mycielski iterate: k = 1 is K_1, k = 2 is K_2, k = 3 is C_5.
    MycielskianIterate,
    /// G(n, p).
    Random,
    /// Random triangle-free graph: edges of G(n, p) inserted in random order,
    /// skipping any edge that would close a triangle.
    RandomTriangleFree,
}

impl FromStr for GraphKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "complete" | "K" => GraphKind::Complete,
            "cycle" | "C" => GraphKind::Cycle,
            "path" | "P" => GraphKind::Path,
            "star" => GraphKind::Star,
            "matching" => GraphKind::Matching,
            "mycielskian-iterate" | "mycielski" => GraphKind::MycielskianIterate,
            "random" => GraphKind::Random,
            "random-triangle-free" => GraphKind::RandomTriangleFree,
            other => return Err(Error::UnknownKind(other.to_string())),
        })
    }
}

impl fmt::Display for GraphKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            GraphKind::Complete => "complete",
            GraphKind::Cycle => "cycle",
            GraphKind::Path => "path",
            GraphKind::Star => "star",
            GraphKind::Matching => "matching",
            GraphKind::MycielskianIterate => "mycielskian-iterate",
            GraphKind::Random => "random",
            GraphKind::RandomTriangleFree => "random-triangle-free",
        };
        f.write_str(s)
    }
}

/// A generator invocation, written `kind:size[:p:seed]`, e.g. `complete:4`,
/// `mycielski:4` or `random:10:0.3:7`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GraphSpec {
    pub kind: GraphKind,
    pub size: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub probability: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

impl GraphSpec {
    pub fn new(kind: GraphKind, size: usize) -> Self {
        GraphSpec {
            kind,
            size,
            probability: None,
            seed: None,
        }
    }

    pub fn random(kind: GraphKind, size: usize, probability: f64, seed: u64) -> Self {
        GraphSpec {
            kind,
            size,
            probability: Some(probability),
            seed: Some(seed),
        }
    }

    pub fn build(&self) -> Result<Graph> {
        generate(self.kind, self.size, self.probability, self.seed)
    }
}

impl fmt::Display for GraphSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.kind, self.size)?;
        if let (Some(p), Some(seed)) = (self.probability, self.seed) {
            write!(f, ":{p}:{seed}")?;
        }
        Ok(())
    }
}

impl FromStr for GraphSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(':').collect();
        let bad = || Error::Parse(format!("bad graph spec `{s}`, expected kind:size[:p:seed]"));
        if parts.len() < 2 {
            return Err(bad());
        }
        let kind: GraphKind = parts[0].parse()?;
        let size: usize = parts[1].parse().map_err(|_| bad())?;
        match parts.len() {
            2 => Ok(GraphSpec::new(kind, size)),
            4 => {
                let p: f64 = parts[2].parse().map_err(|_| bad())?;
                let seed: u64 = parts[3].parse().map_err(|_| bad())?;
                Ok(GraphSpec::random(kind, size, p, seed))
            }
            _ => Err(bad()),
        }
    }
}

pub fn generate(
    kind: GraphKind,
    size: usize,
    probability: Option<f64>,
    seed: Option<u64>,
) -> Result<Graph> {
    if size == 0 {
        return Err(Error::InvalidParams(format!("{kind}: size must be at least 1")));
    }
    match kind {
        GraphKind::Complete => Graph::new(
            size,
            (0..size).flat_map(|u| (u + 1..size).map(move |v| (u, v))),
        ),
        GraphKind::Cycle => {
            if size < 3 {
                return Err(Error::InvalidParams("cycle needs at least 3 vertices".into()));
            }
            Graph::new(size, (0..size).map(|i| (i, (i + 1) % size)))
        }
        GraphKind::Path => Graph::new(size, (1..size).map(|i| (i - 1, i))),
        GraphKind::Star => Graph::new(size + 1, (1..=size).map(|i| (0, i))),
        GraphKind::Matching => Graph::new(2 * size, (0..size).map(|i| (2 * i, 2 * i + 1))),
        GraphKind::MycielskianIterate => {
            if size == 1 {
                return Ok(Graph::empty(1));
            }
            let mut g = Graph::new(2, [(0, 1)])?;
            for _ in 2..size {
                g = mycielskian(&g);
            }
            Ok(g)
        }
        GraphKind::Random | GraphKind::RandomTriangleFree => {
            let (p, seed) = match (probability, seed) {
                (Some(p), Some(seed)) => (p, seed),
                _ => {
                    return Err(Error::InvalidParams(
                        "random graphs need an explicit probability and seed".into(),
                    ))
                }
            };
            if !(0.0..=1.0).contains(&p) {
                return Err(Error::InvalidParams(format!("probability {p} not in [0, 1]")));
            }
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut pairs: Vec<(usize, usize)> = Vec::new();
            for u in 0..size {
                for v in u + 1..size {
                    if rng.gen_bool(p) {
                        pairs.push((u, v));
                    }
                }
            }
            if kind == GraphKind::Random {
                return Graph::new(size, pairs);
            }
            // Fisher-Yates so that the insertion order is random as well.
            for i in (1..pairs.len()).rev() {
                let j = rng.gen_range(0..=i);
                pairs.swap(i, j);
            }
            let mut adj = vec![vec![false; size]; size];
            let mut kept = Vec::new();
            for (u, v) in pairs {
                if (0..size).any(|w| adj[u][w] && adj[v][w]) {
                    continue;
                }
                adj[u][v] = true;
                adj[v][u] = true;
                kept.push((u, v));
            }
            Graph::new(size, kept)
        }
    }
}

/// Mycielski construction: vertices `0..n` copy `g`, `n..2n` are the
/// shadows (shadow of `i` adjacent to the neighbours of `i`), and `2n` is
/// joined to every shadow.
pub fn mycielskian(g: &Graph) -> Graph {
    let n = g.vertex_count();
    let mut edges: Vec<(usize, usize)> = g.edges().to_vec();
    for &(u, v) in g.edges() {
        edges.push((u, n + v));
        edges.push((v, n + u));
    }
    for i in 0..n {
        edges.push((n + i, 2 * n));
    }
    Graph::new(2 * n + 1, edges).expect("Mycielski construction yields a simple graph")
}
