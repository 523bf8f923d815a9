mod common;

use proptest::prelude::*;

use common::{connected_classes, gen, random};
use linecover::graph::{chromatic_number_exact, line_graph, GraphKind};
use linecover::io::{read_graph, to_json, GraphJson};
use linecover::orders::{build_family, is_3_mixing, is_3_suitable, min_family_search, OrderFamily, OrderProperty};
use linecover::orientations::{exact_elb, exact_inelb, orient_from_coloring, CoverKind};
use linecover::recognition::{Cover, CoverClass};
use linecover::transforms::{
    chordal_cover_to_elbow, coloring_equivalence_cover, equivalence_cover_to_elbow, equivalence_cover_to_inelbow,
};
use linecover::{lglg_bound, Graph};

fn size(g: &Graph, kind: CoverKind) -> usize {
    let sol = match kind {
        CoverKind::Elbow => exact_elb(g, 4),
        CoverKind::InElbow => exact_inelb(g, 4),
    };
    sol.unwrap().expect("within k_max").size
}

#[test]
fn inelb_between_elb_and_twice_elb() {
    let mut graphs = connected_classes(5, 8);
    graphs.extend((0..40).map(|s| random(GraphKind::Random, 6, 0.35, s)).filter(|g| g.edge_count() <= 8));
    for g in &graphs {
        let (elb, inelb) = (size(g, CoverKind::Elbow), size(g, CoverKind::InElbow));
        assert!(elb <= inelb && inelb <= 2 * elb, "{:?}: elb {elb}, inelb {inelb}", g.edges());
    }
}

#[test]
fn exact_elb_below_constructed_covers() {
    for seed in 0..60 {
        let g = random(GraphKind::RandomTriangleFree, 7, 0.45, seed);
        if g.edge_count() > 8 || !g.has_adjacent_edges() {
            continue;
        }
        let elb = size(&g, CoverKind::Elbow);
        let lg = line_graph(&g);
        let (chi, coloring) = chromatic_number_exact(&g, 16).unwrap();
        let mixing = build_family(coloring.k(), OrderProperty::Mixing).unwrap();
        let from_mixing = orient_from_coloring(&g, &coloring, &mixing).unwrap();
        assert!(from_mixing.verify(CoverKind::Elbow));
        let eq = coloring_equivalence_cover(&lg, &coloring).unwrap();
        let from_chordal = chordal_cover_to_elbow(&lg, &eq.with_class(CoverClass::Chordal)).unwrap();
        assert!(elb <= from_mixing.len() && elb <= from_chordal.len() && elb <= eq.len());
        assert_eq!(elb, lglg_bound(chi));
    }
}

#[test]
fn mixed_star_and_triangle_covers() {
    for seed in 0..30 {
        let g = random(GraphKind::Random, 7, 0.5, seed);
        let lg = line_graph(&g);
        let line_edge = |e: usize, f: usize| lg.line.edge_index(e.min(f), e.max(f)).unwrap();
        let mut members = Vec::new();
        // One member per star and one per triangle, each a single clique.
        for v in 0..g.vertex_count() {
            let inc = g.incident_edges(v);
            let star: Vec<usize> = inc
                .iter()
                .enumerate()
                .flat_map(|(i, &e)| inc[i + 1..].iter().map(move |&f| (e, f)))
                .map(|(e, f)| line_edge(e, f))
                .collect();
            if !star.is_empty() {
                members.push(star);
            }
        }
        for (a, b) in g.edges().to_vec() {
            for c in b + 1..g.vertex_count() {
                if g.has_edge(a, c) && g.has_edge(b, c) {
                    let es = [g.edge_index(a, b), g.edge_index(a, c), g.edge_index(b, c)].map(Option::unwrap);
                    members.push(vec![line_edge(es[0], es[1]), line_edge(es[0], es[2]), line_edge(es[1], es[2])]);
                }
            }
        }
        let cover = Cover::new(lg.line.clone(), CoverClass::Equivalence, members).unwrap();
        assert!(cover.verify().pass);
        let inelbow = equivalence_cover_to_inelbow(&lg, &cover).unwrap();
        let elbow = equivalence_cover_to_elbow(&lg, &cover).unwrap();
        assert_eq!((inelbow.len(), elbow.len()), (3 * cover.len(), 2 * cover.len()));
    }
}

#[test]
fn suitable_implies_mixing_and_minima_are_monotone() {
    let mut last = [0usize; 2];
    for c in 2..=8 {
        for (i, prop) in [OrderProperty::Suitable, OrderProperty::Mixing].into_iter().enumerate() {
            let f = min_family_search(c, prop).unwrap();
            assert!(f.len() >= last[i], "{prop} not monotone at C = {c}");
            last[i] = f.len();
            if is_3_suitable(&f) {
                assert!(is_3_mixing(&f));
            }
        }
    }
}

#[test]
fn exact_values_on_named_graphs() {
    assert_eq!(size(&gen(GraphKind::Cycle, 4), CoverKind::Elbow), 1);
    assert_eq!(size(&gen(GraphKind::Cycle, 5), CoverKind::Elbow), 2);
    assert_eq!(size(&gen(GraphKind::Complete, 4), CoverKind::Elbow), 2);
    assert_eq!(size(&gen(GraphKind::Star, 5), CoverKind::InElbow), 1);
}

fn arb_graph() -> impl Strategy<Value = Graph> {
    (1usize..=12, 0.0f64..0.7, any::<u64>()).prop_map(|(n, p, seed)| random(GraphKind::Random, n, p, seed))
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 200, ..ProptestConfig::default() })]

    #[test]
    fn coloring_orientations_cover(g in arb_graph()) {
        let (_, coloring) = chromatic_number_exact(&g, 16).unwrap();
        let suitable = build_family(coloring.k().max(3), OrderProperty::Suitable).unwrap();
        let mixing = build_family(coloring.k(), OrderProperty::Mixing).unwrap();
        let a = orient_from_coloring(&g, &coloring, &suitable).unwrap();
        let b = orient_from_coloring(&g, &coloring, &mixing).unwrap();
        prop_assert!(a.verify(CoverKind::InElbow));
        prop_assert!(b.verify(CoverKind::Elbow));
        prop_assert_eq!(a.claimed(), Some(CoverKind::InElbow));
        prop_assert!(b.claimed().is_some());
    }

    #[test]
    fn graph_json_round_trip(g in arb_graph()) {
        let text = to_json(&GraphJson::from(&g));
        prop_assert_eq!(read_graph(&text, false).unwrap(), g);
    }

    #[test]
    fn identity_orders_on_two_colours_cover_bipartite_graphs(n in 2usize..9, seed in any::<u64>()) {
        let g = random(GraphKind::RandomTriangleFree, n, 0.5, seed);
        if let Ok((2, coloring)) = chromatic_number_exact(&g, 16) {
            let fam = orient_from_coloring(&g, &coloring, &OrderFamily::identity(2)).unwrap();
            prop_assert!(fam.verify(CoverKind::Elbow));
        }
    }
}
