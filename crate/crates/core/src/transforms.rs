//! Transforms between orientation covers of a graph `G` and covers of its
//! line graph `L(G)`.
//!
//! Every transform re-verifies its input and certifies its output.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{chromatic_number_exact, line_graph, Coloring, Graph, LineGraph};
use crate::orders::{build_family, OrderProperty};
use crate::orientations::{
    exact_cover_number, orient_from_coloring, CoverKind, Orientation, OrientationFamily,
};
use crate::recognition::{find_peo, is_chordal, nontrivial_components, Cover, CoverClass};
use crate::lglg_bound;

/// Member `i` has one clique per base vertex `j`: the edges that point to
/// `j` in orientation `i`.
pub fn inelbow_to_equivalence_cover(lg: &LineGraph, fam: &OrientationFamily) -> Result<Cover> {
    check_family(lg, fam, CoverKind::InElbow)?;
    let base = &lg.base;
    let members = fam
        .members()
        .iter()
        .map(|o| {
            let mut member = Vec::new();
            for (e, f) in base.adjacent_edge_pairs() {
                let x = base.shared_endpoint(e, f).expect("adjacent pair");
                if o.points_to(e, x) && o.points_to(f, x) {
                    member.push(lg.line.edge_index(e, f).expect("line edge"));
                }
            }
            member
        })
        .collect();
    certified_cover(lg, CoverClass::Equivalence, members)
}

/// Three orientations per member. Star-cliques point to their common
/// vertex in all three; the triangle-clique on `a < b < c` uses, in
/// orientation `t`, the vertex `[a, b, c][t]` as a sink with the third edge
/// ascending.
pub fn equivalence_cover_to_inelbow(lg: &LineGraph, c: &Cover) -> Result<OrientationFamily> {
    check_cover(lg, c, CoverClass::Equivalence)?;
    let base = &lg.base;
    let mut members = Vec::with_capacity(3 * c.len());
    for i in 0..c.len() {
        let mut out = vec![Orientation::ascending(base); 3];
        for clique in nontrivial_components(&c.member_graph(i)) {
            match classify(base, &clique)? {
                Clique::Star(x) => {
                    for o in out.iter_mut() {
                        for &e in &clique {
                            o.set(e, x, true);
                        }
                    }
                }
                Clique::Triangle(tri) => {
                    for (o, &sink) in out.iter_mut().zip(&tri) {
                        for &e in &clique {
                            let (u, v) = base.edge(e);
                            if u == sink || v == sink {
                                o.set(e, sink, true);
                            }
                        }
                    }
                }
            }
        }
        members.extend(out);
    }
    OrientationFamily::new(base.clone(), members)?.certify(CoverKind::InElbow)
}

/// Two orientations per member. Star-cliques point to their common vertex
/// in both; the triangle-clique on `a < b < c` follows the transitive
/// orders `a, b, c` and `b, a, c`.
pub fn equivalence_cover_to_elbow(lg: &LineGraph, c: &Cover) -> Result<OrientationFamily> {
    check_cover(lg, c, CoverClass::Equivalence)?;
    let base = &lg.base;
    let mut members = Vec::with_capacity(2 * c.len());
    for i in 0..c.len() {
        let mut out = vec![Orientation::ascending(base); 2];
        for clique in nontrivial_components(&c.member_graph(i)) {
            match classify(base, &clique)? {
                Clique::Star(x) => {
                    for o in out.iter_mut() {
                        for &e in &clique {
                            o.set(e, x, true);
                        }
                    }
                }
                Clique::Triangle([a, b, c]) => {
                    for (o, order) in out.iter_mut().zip([[a, b, c], [b, a, c]]) {
                        let rank = |v: usize| order.iter().position(|&w| w == v).unwrap();
                        for &e in &clique {
                            let (u, v) = base.edge(e);
                            let head = if rank(u) < rank(v) { v } else { u };
                            o.set(e, head, true);
                        }
                    }
                }
            }
        }
        members.extend(out);
    }
    OrientationFamily::new(base.clone(), members)?.certify(CoverKind::Elbow)
}

/// One orientation per chordal member `H` of a cover of `L(G)`, `G`
/// triangle-free. With `e_1, ..., e_m` a perfect elimination order of `H`,
/// edges are oriented from `e_m` down to `e_1`; `e_i` copies, at the shared
/// endpoint, the direction of its adjacent `e_j` with the least `j > i`.
/// Edges with no such neighbour are ascending.
///
/// Every pair adjacent in `H` forms an elbow in its orientation; this is
/// checked separately from the cover verification.
pub fn chordal_cover_to_elbow(lg: &LineGraph, c: &Cover) -> Result<OrientationFamily> {
    if !lg.base.is_triangle_free() {
        return Err(Error::NotTriangleFree);
    }
    check_cover(lg, c, CoverClass::Chordal)?;
    let base = &lg.base;
    let mut members = Vec::with_capacity(c.len());
    for i in 0..c.len() {
        let h = c.member_graph(i);
        let o = orient_chordal_member(base, &h)?;
        if let Some((e, f)) = first_non_elbow(base, &h, &o) {
            return Err(Error::Internal(format!(
                "member {i}: edges {:?} and {:?} are adjacent in the member but form no elbow",
                base.edge(e),
                base.edge(f)
            )));
        }
        members.push(o);
    }
    OrientationFamily::new(base.clone(), members)?.certify(CoverKind::Elbow)
}

/// The orientation built for one chordal member `h` (a spanning subgraph of
/// `L(base)`).
pub fn orient_chordal_member(base: &Graph, h: &Graph) -> Result<Orientation> {
    let peo = find_peo(h).ok_or_else(|| Error::Rejected("member is not chordal".into()))?;
    let pos = peo.positions();
    let mut o = Orientation::ascending(base);
    for &e in peo.order().iter().rev() {
        let next = h
            .neighbors(e)
            .iter()
            .copied()
            .filter(|&f| pos[f] > pos[e])
            .min_by_key(|&f| pos[f]);
        if let Some(f) = next {
            let x = base.shared_endpoint(e, f).expect("line neighbours share an endpoint");
            let toward = o.points_to(f, x);
            o.set(e, x, toward);
        }
    }
    Ok(o)
}

/// First pair adjacent in `h` that forms no elbow in `o`.
pub fn first_non_elbow(base: &Graph, h: &Graph, o: &Orientation) -> Option<(usize, usize)> {
    h.edges().iter().copied().find(|&(e, f)| {
        let x = base.shared_endpoint(e, f).expect("line neighbours share an endpoint");
        o.points_to(e, x) != o.points_to(f, x)
    })
}

/// Random maximal chordal cover of `line`: each member starts from an
/// uncovered edge and greedily absorbs edges, uncovered ones first, in a
/// seeded order while staying chordal.
pub fn greedy_chordal_cover(line: &Graph, seed: u64) -> Cover {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let m = line.edge_count();
    let mut covered = vec![false; m];
    let mut members = Vec::new();
    while let Some(start) = (0..m).find(|&e| !covered[e]) {
        let mut order: Vec<usize> = (0..m).filter(|&e| e != start).collect();
        order.shuffle(&mut rng);
        order.sort_by_key(|&e| covered[e]);
        let mut member = vec![start];
        for e in order {
            member.push(e);
            if !is_chordal(&line.spanning_subgraph(&member)) {
                member.pop();
            }
        }
        for &e in &member {
            covered[e] = true;
        }
        members.push(member);
    }
    Cover::new(line.clone(), CoverClass::Chordal, members).expect("indices are in range")
}

/// Equivalence cover of `L(G)` from the colouring orientations of a
/// 3-suitable family on `max(k, 3)` colours, `k` the number of colours used.
/// Empty members are dropped.
pub fn coloring_equivalence_cover(lg: &LineGraph, coloring: &Coloring) -> Result<Cover> {
    let family = build_family(coloring.k().max(3), OrderProperty::Suitable)?;
    let inelbow = orient_from_coloring(&lg.base, coloring, &family)?.certify(CoverKind::InElbow)?;
    let full = inelbow_to_equivalence_cover(lg, &inelbow)?;
    let members = full.members().iter().filter(|m| !m.is_empty()).cloned().collect();
    certified_cover(lg, CoverClass::Equivalence, members)
}

/// Bounds around the chordal covering number of `L(G)` for triangle-free
/// `G`, each backed by a verified certificate.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainReport {
    pub vertices: usize,
    pub edges: usize,
    pub chi: usize,
    /// `⌈lg lg χ⌉ + 1`, a lower bound on `cc(L(G))`.
    pub lower_bound: usize,
    /// Equivalence cover of `L(G)` from colouring orientations of a
    /// 3-suitable family.
    pub eq_from_coloring: usize,
    /// Equivalence cover of `L(G)` from a minimum in-elbow cover, when the
    /// exact solver is within budget.
    pub eq_from_exact: Option<usize>,
    /// Smallest verified equivalence cover, an upper bound on `cc`, `τ` and
    /// `eq` of `L(G)`.
    pub eq_upper: usize,
    /// Elbow cover extracted from the smallest equivalence cover.
    pub elbow_from_cover: usize,
    pub exact_elb: Option<usize>,
    pub exact_inelb: Option<usize>,
    pub violations: Vec<String>,
    pub pass: bool,
}

/// Builds verified covers for triangle-free `g` and checks them against
/// each other and against the exact values where affordable.
pub fn covering_chain(g: &Graph, vertex_budget: usize, edge_budget: usize, k_max: usize) -> Result<ChainReport> {
    if !g.is_triangle_free() {
        return Err(Error::NotTriangleFree);
    }
    let lg = line_graph(g);
    let (chi, coloring) = chromatic_number_exact(g, vertex_budget)?;
    let chi = chi.max(1);
    let lower_bound = if g.edge_count() == 0 { 0 } else { lglg_bound(chi.max(2)) };

    let eq_coloring = coloring_equivalence_cover(&lg, &coloring)?;

    let affordable = g.edge_count() <= edge_budget;
    let solve = |kind| -> Result<Option<_>> {
        if affordable {
            exact_cover_number(g, kind, k_max, edge_budget)
        } else {
            Ok(None)
        }
    };
    let exact_elb = solve(CoverKind::Elbow)?;
    let exact_inelb = solve(CoverKind::InElbow)?;
    let eq_exact = match &exact_inelb {
        Some(sol) => {
            let fam = OrientationFamily::new(g.clone(), sol.witness.clone())?;
            Some(inelbow_to_equivalence_cover(&lg, &fam)?)
        }
        None => None,
    };
    let best = match &eq_exact {
        Some(c) if c.len() < eq_coloring.len() => c,
        _ => &eq_coloring,
    };
    let elbow = chordal_cover_to_elbow(&lg, &best.with_class(CoverClass::Chordal))?;

    let eq_upper = best.len();
    let elb = exact_elb.as_ref().map(|s| s.size);
    let inelb = exact_inelb.as_ref().map(|s| s.size);
    let mut violations = Vec::new();
    let mut check = |ok: bool, what: String| {
        if !ok {
            violations.push(what);
        }
    };
    check(lower_bound <= eq_upper, format!("lower bound {lower_bound} exceeds cover size {eq_upper}"));
    check(elbow.len() == eq_upper, format!("elbow cover size {} differs from cover size {eq_upper}", elbow.len()));
    if let Some(elb) = elb {
        check(elb <= eq_upper, format!("elb {elb} exceeds cover size {eq_upper}"));
        check(elb <= 2 * eq_upper, format!("elb {elb} exceeds twice the cover size"));
        if g.has_adjacent_edges() {
            check(elb == lower_bound, format!("elb {elb} differs from lg lg formula {lower_bound}"));
        }
    }
    if let Some(inelb) = inelb {
        check(inelb <= 3 * eq_upper, format!("inelb {inelb} exceeds three times the cover size"));
        if let Some(elb) = elb {
            check(elb <= inelb && inelb <= 2 * elb, format!("inelb {inelb} outside [elb, 2 elb] for elb {elb}"));
        }
    }
    check(lower_bound <= 2 * eq_upper, format!("lower bound {lower_bound} exceeds twice the cover size"));
    Ok(ChainReport {
        vertices: g.vertex_count(),
        edges: g.edge_count(),
        chi,
        lower_bound,
        eq_from_coloring: eq_coloring.len(),
        eq_from_exact: eq_exact.as_ref().map(Cover::len),
        eq_upper,
        elbow_from_cover: elbow.len(),
        exact_elb: elb,
        exact_inelb: inelb,
        pass: violations.is_empty(),
        violations,
    })
}

enum Clique {
    Star(usize),
    /// Sorted vertices of a base triangle.
    Triangle([usize; 3]),
}

/// A clique of `L(G)` is the edge set of a star or of a triangle.
fn classify(base: &Graph, clique: &[usize]) -> Result<Clique> {
    let (u, v) = base.edge(clique[0]);
    for x in [u, v] {
        if clique.iter().all(|&e| {
            let (a, b) = base.edge(e);
            a == x || b == x
        }) {
            return Ok(Clique::Star(x));
        }
    }
    let mut vs: Vec<usize> = clique
        .iter()
        .flat_map(|&e| {
            let (a, b) = base.edge(e);
            [a, b]
        })
        .collect();
    vs.sort_unstable();
    vs.dedup();
    if clique.len() == 3 && vs.len() == 3 {
        return Ok(Clique::Triangle([vs[0], vs[1], vs[2]]));
    }
    Err(Error::Internal(format!(
        "clique {clique:?} of the line graph is neither a star nor a triangle"
    )))
}

fn check_family(lg: &LineGraph, fam: &OrientationFamily, kind: CoverKind) -> Result<()> {
    if fam.graph() != &lg.base {
        return Err(Error::Rejected("orientations are of a different graph".into()));
    }
    let missing = fam.uncovered(kind);
    if let Some(&(e, f)) = missing.first() {
        return Err(Error::Rejected(format!(
            "not an {kind} cover: edges {:?} and {:?} are uncovered",
            lg.base.edge(e),
            lg.base.edge(f)
        )));
    }
    Ok(())
}

/// The cover must be of `lg.line` and verify under `class`, whatever class
/// it claims.
fn check_cover(lg: &LineGraph, c: &Cover, class: CoverClass) -> Result<()> {
    if c.target() != &lg.line {
        return Err(Error::Rejected("cover target is not the line graph".into()));
    }
    let report = c.with_class(class).verify();
    if let Some(&(a, b)) = report.missing_edges.first() {
        return Err(Error::Rejected(format!("union incomplete: line edge ({a}, {b}) is missing")));
    }
    if let Some(&i) = report.failed_members.first() {
        return Err(Error::Rejected(format!("member {i} is not a {class} graph")));
    }
    Ok(())
}

fn certified_cover(lg: &LineGraph, class: CoverClass, members: Vec<Vec<usize>>) -> Result<Cover> {
    let cover = Cover::new(lg.line.clone(), class, members)?;
    if !cover.verify().pass {
        return Err(Error::Internal(format!("constructed {class} cover fails verification")));
    }
    Ok(cover)
}
