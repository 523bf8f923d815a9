use serde::{Deserialize, Serialize};

use super::{opt, table, NamedGraph, ReportHeader, RunConfig};
use crate::error::Result;
use crate::graph::chromatic_number_exact;
use crate::lglg_bound;
use crate::orientations::exact_cover_number;
use crate::orientations::CoverKind;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RowStatus {
    Match,
    Mismatch,
    /// No two edges share an endpoint, so the empty family covers.
    VacuousPair,
    Skipped,
}

impl RowStatus {
    fn as_str(self) -> &'static str {
        match self {
            RowStatus::Match => "match",
            RowStatus::Mismatch => "MISMATCH",
            RowStatus::VacuousPair => "vacuous-pair",
            RowStatus::Skipped => "skipped",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FormulaRow {
    pub graph: String,
    pub vertices: usize,
    pub edges: usize,
    pub chi: Option<usize>,
    /// `⌈lg lg χ⌉ + 1`.
    pub formula: Option<usize>,
    pub exact_elb: Option<usize>,
    pub status: RowStatus,
    pub note: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FormulaReport {
    pub header: ReportHeader,
    pub rows: Vec<FormulaRow>,
    pub mismatches: usize,
    pub pass: bool,
}

/// Compares `elb(G)` from the exact solver with `⌈lg lg χ(G)⌉ + 1`.
pub fn cmd_formula_table(cfg: &RunConfig, graphs: &[NamedGraph]) -> Result<FormulaReport> {
    cfg.validate()?;
    let rows = graphs.iter().map(|ng| row(cfg, ng)).collect::<Result<Vec<_>>>()?;
    let mismatches = rows.iter().filter(|r| r.status == RowStatus::Mismatch).count();
    Ok(FormulaReport {
        header: cfg.header(),
        rows,
        mismatches,
        pass: mismatches == 0,
    })
}

fn row(cfg: &RunConfig, ng: &NamedGraph) -> Result<FormulaRow> {
    let g = &ng.graph;
    let mut r = FormulaRow {
        graph: ng.name.clone(),
        vertices: g.vertex_count(),
        edges: g.edge_count(),
        chi: None,
        formula: None,
        exact_elb: None,
        status: RowStatus::Skipped,
        note: None,
    };
    if g.edge_count() == 0 {
        r.note = Some("no edges".into());
        return Ok(r);
    }
    let Ok((chi, _)) = chromatic_number_exact(g, cfg.budgets.vertices) else {
        r.note = Some(format!("more than {} vertices for exact χ", cfg.budgets.vertices));
        return Ok(r);
    };
    r.chi = Some(chi);
    r.formula = Some(lglg_bound(chi));
    if g.edge_count() > cfg.budgets.edges {
        r.note = Some(format!("more than {} edges for the exact solver", cfg.budgets.edges));
        return Ok(r);
    }
    let formula = lglg_bound(chi);
    let exact = exact_cover_number(g, CoverKind::Elbow, cfg.budgets.k_max, cfg.budgets.edges)?;
    r.exact_elb = exact.as_ref().map(|s| s.size);
    r.status = match r.exact_elb {
        _ if !g.has_adjacent_edges() => {
            r.note = Some("no adjacent edges; elb = 0 by convention".into());
            RowStatus::VacuousPair
        }
        Some(e) if e == formula => RowStatus::Match,
        None if formula > cfg.budgets.k_max => {
            r.note = Some(format!("formula exceeds k_max {}", cfg.budgets.k_max));
            RowStatus::Skipped
        }
        None => {
            r.note = Some(format!("no elbow cover with {} orientations", cfg.budgets.k_max));
            RowStatus::Mismatch
        }
        Some(_) => RowStatus::Mismatch,
    };
    Ok(r)
}

impl FormulaReport {
    pub fn to_text(&self) -> String {
        let rows: Vec<Vec<String>> = self
            .rows
            .iter()
            .map(|r| {
                vec![
                    r.graph.clone(),
                    r.vertices.to_string(),
                    r.edges.to_string(),
                    opt(&r.chi),
                    opt(&r.formula),
                    opt(&r.exact_elb),
                    r.status.as_str().to_string(),
                    r.note.clone().unwrap_or_default(),
                ]
            })
            .collect();
        let mut s = self.header.text();
        s += &table(&["graph", "n", "m", "chi", "lglg+1", "elb", "status", "note"], &rows);
        s += &format!("mismatches: {} | {}\n", self.mismatches, if self.pass { "PASS" } else { "FAIL" });
        s
    }
}
