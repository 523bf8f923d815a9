use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::graph::Graph;
use crate::io::{parse_artifact, Artifact};
use crate::orders::OrderProperty;
use crate::orientations::{uncovered_pairs, CoverKind, Orientation};
use crate::recognition::Cover;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub artifact: String,
    pub pass: bool,
    pub summary: String,
    pub problems: Vec<String>,
}

/// Reads any artifact and runs the matching checker. Malformed input is an
/// error; a failed check is a verdict with `pass = false`.
pub fn cmd_verify(text: &str, normalize: bool) -> Result<Verdict> {
    Ok(match parse_artifact(text, normalize)? {
        Artifact::Graph(g) => Verdict {
            artifact: "graph".into(),
            pass: true,
            summary: format!("graph with {} vertices and {} edges", g.vertex_count(), g.edge_count()),
            problems: Vec::new(),
        },
        Artifact::Cover(c) => cover_verdict(&c),
        Artifact::Orientation(g, o) => orientations_verdict(&g, &[o], CoverKind::Elbow, "orientation"),
        Artifact::OrientationFamily(f, kind) => orientations_verdict(
            f.graph(),
            f.members(),
            kind.unwrap_or(CoverKind::Elbow),
            "orientation-family",
        ),
        Artifact::OrderFamily(f) => {
            let mut held = Vec::new();
            let mut problems = Vec::new();
            for p in [OrderProperty::Suitable, OrderProperty::Mixing] {
                match f.first_violation(p) {
                    None => held.push(p.to_string()),
                    Some((a, b, c)) => problems.push(format!("not {p}: {a} against {{{b}, {c}}}")),
                }
            }
            Verdict {
                artifact: "order-family".into(),
                pass: true,
                summary: format!(
                    "{} orders on {} elements; holds: {}",
                    f.len(),
                    f.universe(),
                    if held.is_empty() { "none".to_string() } else { held.join(", ") }
                ),
                problems,
            }
        }
    })
}

fn cover_verdict(c: &Cover) -> Verdict {
    let report = c.verify();
    let mut problems = Vec::new();
    if !report.missing_edges.is_empty() {
        let list: Vec<String> = report.missing_edges.iter().map(|(a, b)| format!("({a}, {b})")).collect();
        problems.push(format!("union incomplete: missing edges {}", list.join(", ")));
    }
    for i in &report.failed_members {
        problems.push(format!("member {i} is not {}", c.class()));
    }
    Verdict {
        artifact: "cover".into(),
        pass: report.pass,
        summary: format!("{} cover with {} members", c.class(), c.len()),
        problems,
    }
}

fn orientations_verdict(g: &Graph, members: &[Orientation], kind: CoverKind, artifact: &str) -> Verdict {
    let problems: Vec<String> = uncovered_pairs(g, members, kind)
        .into_iter()
        .map(|(e, f)| format!("edges {:?} and {:?} form no {kind}", g.edge(e), g.edge(f)))
        .collect();
    Verdict {
        artifact: artifact.into(),
        pass: problems.is_empty(),
        summary: format!("{kind} cover candidate with {} orientations", members.len()),
        problems,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const K3: &str = r#"{"n": 3, "edges": [[0, 1], [0, 2], [1, 2]]}"#;

    #[test]
    fn equivalence_cover_of_line_triangle() {
        let text = format!(r#"{{"target": {K3}, "class": "equivalence", "members": [[0, 1, 2]]}}"#);
        assert!(cmd_verify(&text, false).unwrap().pass);
    }

    #[test]
    fn missing_edge_is_named() {
        let text = format!(r#"{{"target": {K3}, "class": "equivalence", "members": [[0], [1]]}}"#);
        let v = cmd_verify(&text, false).unwrap();
        assert!(!v.pass);
        assert_eq!(v.problems, vec!["union incomplete: missing edges (1, 2)"]);
    }

    #[test]
    fn uncovered_pair_is_named() {
        let text = format!(
            r#"{{"graph": {K3}, "kind": "elbow", "orientations": [[[0, 1], [0, 2], [1, 2]]]}}"#
        );
        let v = cmd_verify(&text, false).unwrap();
        assert!(!v.pass);
        assert_eq!(v.problems, vec!["edges (0, 1) and (1, 2) form no elbow"]);
    }

    #[test]
    fn malformed_input_is_an_error() {
        assert!(cmd_verify("{", false).is_err());
    }
}
