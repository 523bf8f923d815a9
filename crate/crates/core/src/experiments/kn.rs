use serde::{Deserialize, Serialize};

use super::{opt, round6, table, ReportHeader, RunConfig};
use crate::error::Result;
use crate::graph::{generate, line_graph, Coloring, GraphKind};
use crate::orders::{build_family, min_family_search, suitable_yardstick, OrderProperty, SEARCH_BUDGET};
use crate::orientations::{orient_from_coloring, CoverKind};
use crate::transforms::inelbow_to_equivalence_cover;

/// Largest `n` accepted for `K_n`.
pub const KN_LIMIT: usize = 64;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct KnRow {
    pub n: usize,
    /// Orders in the 3-suitable family used for colouring orientations.
    pub family_size: Option<usize>,
    /// Smallest 3-suitable family, when the exact search is within budget.
    pub min_family_size: Option<usize>,
    /// Verified equivalence cover of `L(K_n)`.
    pub cover_size: Option<usize>,
    pub verified: bool,
    pub lglg: Option<f64>,
    /// `f(n) + 1` with `f(n) = lg lg n + ½ lg lg lg n + ½ lg π`.
    pub yardstick: Option<f64>,
    pub note: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct KnReport {
    pub header: ReportHeader,
    pub rows: Vec<KnRow>,
    pub pass: bool,
}

/// Equivalence covers of `L(K_n)` from colouring orientations of `K_n`.
pub fn cmd_kn_report(cfg: &RunConfig, ns: &[usize]) -> Result<KnReport> {
    cfg.validate()?;
    let rows: Vec<KnRow> = ns.iter().map(|&n| row(n)).collect::<Result<_>>()?;
    let pass = rows.iter().all(|r| r.cover_size.is_none() || r.verified);
    Ok(KnReport {
        header: cfg.header(),
        rows,
        pass,
    })
}

fn row(n: usize) -> Result<KnRow> {
    let mut r = KnRow {
        n,
        family_size: None,
        min_family_size: None,
        cover_size: None,
        verified: false,
        lglg: (n >= 2).then(|| round6((n as f64).log2().log2())),
        yardstick: (n >= 3).then(|| round6(suitable_yardstick(n) + 1.0)),
        note: None,
    };
    if !(3..=KN_LIMIT).contains(&n) {
        r.note = Some(format!("n must lie in 3..={KN_LIMIT}"));
        return Ok(r);
    }
    let family = match build_family(n, OrderProperty::Suitable) {
        Ok(f) => f,
        Err(e) => {
            r.note = Some(e.to_string());
            return Ok(r);
        }
    };
    r.family_size = Some(family.len());
    if n <= SEARCH_BUDGET {
        r.min_family_size = Some(min_family_search(n, OrderProperty::Suitable)?.len());
    }
    let kn = generate(GraphKind::Complete, n, None, None)?;
    let coloring = Coloring::new(&kn, (0..n).collect())?;
    let fam = orient_from_coloring(&kn, &coloring, &family)?.certify(CoverKind::InElbow)?;
    let cover = inelbow_to_equivalence_cover(&line_graph(&kn), &fam)?;
    r.verified = cover.verify().pass;
    r.cover_size = Some(cover.len());
    Ok(r)
}

impl KnReport {
    pub fn to_text(&self) -> String {
        let rows: Vec<Vec<String>> = self
            .rows
            .iter()
            .map(|r| {
                vec![
                    r.n.to_string(),
                    opt(&r.family_size),
                    opt(&r.min_family_size),
                    opt(&r.cover_size),
                    r.verified.to_string(),
                    r.lglg.map_or("-".into(), |x| format!("{x:.3}")),
                    r.yardstick.map_or("-".into(), |x| format!("{x:.3}")),
                    r.note.clone().unwrap_or_default(),
                ]
            })
            .collect();
        let mut s = self.header.text();
        s += &table(&["n", "family", "min", "cover", "verified", "lglg n", "f(n)+1", "note"], &rows);
        s += if self.pass { "PASS\n" } else { "FAIL\n" };
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_complete_graphs() {
        let rep = cmd_kn_report(&RunConfig::new("report-kn"), &[2, 3, 4, 16]).unwrap();
        assert!(rep.rows[0].cover_size.is_none());
        assert_eq!(rep.rows[1].cover_size, Some(3));
        assert_eq!(rep.rows[2].cover_size, Some(3));
        assert_eq!(rep.rows[2].min_family_size, Some(3));
        let r16 = &rep.rows[3];
        assert!(r16.verified);
        // ⌈f(16)⌉ + 1 = 5.
        assert!(r16.cover_size.unwrap() <= 5);
        assert!(rep.pass);
    }
}
