//! Report generators behind the command-line verbs.
//!
//! Every report embeds a [`ReportHeader`] and serialises deterministically:
//! the same [`RunConfig`] always yields byte-identical JSON.

mod build;
mod chordal_bound;
mod kn;
mod formula_table;
mod trend;
mod verify;

pub use build::{cmd_cover_build, BuildKind, Built};
pub use chordal_bound::{chordal_cover_below, cmd_chordal_bound_check, ChordalBoundReport, ChordalBoundRow, EXHAUSTIVE_LINE_EDGES};
pub use kn::{cmd_kn_report, KnReport, KnRow, KN_LIMIT};
pub use formula_table::{cmd_formula_table, RowStatus, FormulaReport, FormulaRow};
pub use trend::{cmd_mycielski_trend, TrendReport, TrendRow};
pub use verify::{cmd_verify, Verdict};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, GraphSpec};
use crate::orientations::{DEFAULT_EDGE_BUDGET, MAX_KMAX};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Budgets {
    /// Largest graph handed to the exact chromatic-number solver.
    pub vertices: usize,
    /// Largest graph handed to the exact elb/inelb solvers.
    pub edges: usize,
    pub k_max: usize,
}

impl Default for Budgets {
    fn default() -> Self {
        Budgets {
            vertices: crate::graph::DEFAULT_VERTEX_BUDGET,
            edges: DEFAULT_EDGE_BUDGET,
            k_max: MAX_KMAX,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunConfig {
    pub command: String,
    /// Generator specs or file paths the graphs came from.
    pub sources: Vec<String>,
    pub budgets: Budgets,
    pub seed: u64,
    /// Randomised attempts per graph, where a report uses them.
    pub trials: usize,
}

impl RunConfig {
    pub fn new(command: &str) -> Self {
        RunConfig {
            command: command.to_string(),
            sources: Vec::new(),
            budgets: Budgets::default(),
            seed: 0,
            trials: 20,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let b = &self.budgets;
        if b.vertices == 0 || b.edges == 0 || b.k_max == 0 {
            return Err(Error::InvalidParams("budgets must be positive".into()));
        }
        if b.k_max > MAX_KMAX {
            return Err(Error::budget("k_max", b.k_max, MAX_KMAX));
        }
        Ok(())
    }

    pub fn header(&self) -> ReportHeader {
        ReportHeader {
            tool: env!("CARGO_PKG_NAME").to_string(),
            version: env!("CARGO_PKG_VERSION").to_string(),
            command: self.command.clone(),
            sources: self.sources.clone(),
            seed: self.seed,
            trials: self.trials,
            budgets: self.budgets,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportHeader {
    pub tool: String,
    pub version: String,
    pub command: String,
    pub sources: Vec<String>,
    pub seed: u64,
    pub trials: usize,
    pub budgets: Budgets,
}

impl ReportHeader {
    fn text(&self) -> String {
        format!(
            "# {} {} {} | seed {} | budgets: {} vertices, {} edges, k_max {}\n",
            self.tool,
            self.version,
            self.command,
            self.seed,
            self.budgets.vertices,
            self.budgets.edges,
            self.budgets.k_max
        )
    }
}

/// A graph with the label it is reported under.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NamedGraph {
    pub name: String,
    pub graph: Graph,
}

impl NamedGraph {
    pub fn new(name: impl Into<String>, graph: Graph) -> Self {
        NamedGraph {
            name: name.into(),
            graph,
        }
    }

    pub fn from_spec(spec: &GraphSpec) -> Result<Self> {
        Ok(NamedGraph::new(spec.to_string(), spec.build()?))
    }
}

/// Left-aligned plain-text table.
pub(crate) fn table(headers: &[&str], rows: &[Vec<String>]) -> String {
    let mut width: Vec<usize> = headers.iter().map(|h| h.len()).collect();
    for row in rows {
        for (w, cell) in width.iter_mut().zip(row) {
            *w = (*w).max(cell.len());
        }
    }
    let line = |cells: Vec<&str>| {
        let padded: Vec<String> = cells
            .iter()
            .zip(&width)
            .map(|(c, &w)| format!("{c:<w$}"))
            .collect();
        padded.join("  ").trim_end().to_string() + "\n"
    };
    let mut s = line(headers.to_vec());
    s += &line(width.iter().map(|&w| "-".repeat(w)).collect::<Vec<_>>().iter().map(String::as_str).collect());
    for row in rows {
        s += &line(row.iter().map(String::as_str).collect());
    }
    s
}

pub(crate) fn opt<T: ToString>(v: &Option<T>) -> String {
    v.as_ref().map_or_else(|| "-".to_string(), T::to_string)
}

/// Rounds for stable, readable JSON.
pub(crate) fn round6(x: f64) -> f64 {
    (x * 1e6).round() / 1e6
}
