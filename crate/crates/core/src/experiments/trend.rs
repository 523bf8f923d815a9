use serde::{Deserialize, Serialize};

use super::{opt, table, ReportHeader, RunConfig};
use crate::error::Result;
use crate::graph::{chromatic_number_exact, generate, line_graph, GraphKind};
use crate::lglg_bound;
use crate::recognition::CoverClass;
use crate::transforms::{chordal_cover_to_elbow, coloring_equivalence_cover};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TrendRow {
    /// Mycielski iterate index; the graph has chromatic number `k`.
    pub k: usize,
    pub vertices: usize,
    pub edges: usize,
    pub chi: Option<usize>,
    pub lower_bound: Option<usize>,
    /// Verified equivalence cover of `L(G)`.
    pub eq_cover_size: Option<usize>,
    /// Elbow cover extracted from that cover.
    pub elbow_cover_size: Option<usize>,
    pub note: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TrendReport {
    pub header: ReportHeader,
    pub rows: Vec<TrendRow>,
    pub bound_nondecreasing: bool,
    pub bound_below_cover: bool,
    pub pass: bool,
}

/// Lower bound against constructed covers along the Mycielski iterates.
pub fn cmd_mycielski_trend(cfg: &RunConfig, ks: &[usize]) -> Result<TrendReport> {
    cfg.validate()?;
    let mut rows = Vec::new();
    for &k in ks {
        let g = generate(GraphKind::MycielskianIterate, k, None, None)?;
        let mut r = TrendRow {
            k,
            vertices: g.vertex_count(),
            edges: g.edge_count(),
            chi: None,
            lower_bound: None,
            eq_cover_size: None,
            elbow_cover_size: None,
            note: None,
        };
        if g.has_adjacent_edges() {
            match chromatic_number_exact(&g, cfg.budgets.vertices) {
                Ok((chi, coloring)) => {
                    let lg = line_graph(&g);
                    let eq = coloring_equivalence_cover(&lg, &coloring)?;
                    let elbow = chordal_cover_to_elbow(&lg, &eq.with_class(CoverClass::Chordal))?;
                    r.chi = Some(chi);
                    r.lower_bound = Some(lglg_bound(chi));
                    r.eq_cover_size = Some(eq.len());
                    r.elbow_cover_size = Some(elbow.len());
                }
                Err(e) => r.note = Some(e.to_string()),
            }
        } else {
            r.note = Some("no adjacent edges".into());
        }
        rows.push(r);
    }
    let bounds: Vec<usize> = rows.iter().filter_map(|r| r.lower_bound).collect();
    let bound_nondecreasing = bounds.windows(2).all(|w| w[0] <= w[1]);
    let bound_below_cover = rows
        .iter()
        .all(|r| match (r.lower_bound, r.eq_cover_size) {
            (Some(b), Some(c)) => b <= c,
            _ => true,
        });
    Ok(TrendReport {
        header: cfg.header(),
        rows,
        bound_nondecreasing,
        bound_below_cover,
        pass: bound_nondecreasing && bound_below_cover,
    })
}

impl TrendReport {
    pub fn to_text(&self) -> String {
        let rows: Vec<Vec<String>> = self
            .rows
            .iter()
            .map(|r| {
                vec![
                    r.k.to_string(),
                    r.vertices.to_string(),
                    r.edges.to_string(),
                    opt(&r.chi),
                    opt(&r.lower_bound),
                    opt(&r.eq_cover_size),
                    opt(&r.elbow_cover_size),
                    r.note.clone().unwrap_or_default(),
                ]
            })
            .collect();
        let mut s = self.header.text();
        s += &table(&["k", "n", "m", "chi", "bound", "eq cover", "elbow cover", "note"], &rows);
        s += &format!(
            "bound nondecreasing: {} | bound <= cover: {} | {}\n",
            self.bound_nondecreasing,
            self.bound_below_cover,
            if self.pass { "PASS" } else { "FAIL" }
        );
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn iterates_three_and_four() {
        let rep = cmd_mycielski_trend(&RunConfig::new("report-trend"), &[3, 4]).unwrap();
        let bounds: Vec<_> = rep.rows.iter().map(|r| r.lower_bound).collect();
        assert_eq!(bounds, vec![Some(2), Some(2)]);
        assert!(rep.pass);
    }

    #[test]
    fn over_budget_rows_are_skipped() {
        let rep = cmd_mycielski_trend(&RunConfig::new("report-trend"), &[5]).unwrap();
        assert!(rep.rows[0].chi.is_none() && rep.rows[0].note.is_some());
    }

    #[test]
    fn edge_without_neighbours_has_no_bound() {
        let rep = cmd_mycielski_trend(&RunConfig::new("report-trend"), &[2, 3]).unwrap();
        assert_eq!(rep.rows[0].lower_bound, None);
        assert_eq!(rep.rows[0].note.as_deref(), Some("no adjacent edges"));
        assert!(rep.pass);
    }
}
