use proptest::prelude::*;

use super::*;
use crate::caps::Caps;
use crate::clutter::{classify, PowerMode};
use crate::homology::{depth, homological_summary, Field};
use crate::ideal::VarContext;

const Q: Field = Field::Rational;

fn graph(n: usize, edges: &[(usize, usize)]) -> Graph {
    Graph::new(
        &VarContext::numbered("x", n),
        edges.iter().map(|&(a, b)| (a - 1, b - 1)).collect(),
    )
    .unwrap()
}

fn set(v: &[usize]) -> VarSet {
    VarSet::from_indices(v.iter().map(|i| i - 1))
}

fn caps() -> Caps {
    Caps::default()
}

fn cycle(n: usize) -> Graph {
    let mut edges: Vec<_> = (1..n).map(|i| (i, i + 1)).collect();
    edges.push((1, n));
    graph(n, &edges)
}

fn path(n: usize) -> Graph {
    graph(n, &(1..n).map(|i| (i, i + 1)).collect::<Vec<_>>())
}

fn ten_edge_graph() -> Graph {
    graph(
        8,
        &[(1, 2), (2, 3), (1, 5), (4, 5), (3, 4), (4, 8), (7, 8), (6, 7), (5, 6), (3, 6)],
    )
}

fn whiskered_triangle() -> Graph {
    graph(6, &[(1, 2), (2, 3), (1, 3), (1, 4), (2, 5), (3, 6)])
}

#[test]
fn structure_examples() {
    let s = structure(&cycle(4));
    assert_eq!((s.c0, s.isolated.len(), s.limit_depth), (1, 0, 1));
    assert!(s.bipartite && s.triangle_free);
    assert_eq!(s.perfect_matching.map(|m| m.len()), Some(2));

    let s = structure(&graph(4, &[(1, 2), (2, 3), (1, 3)]));
    assert_eq!((s.c0, s.isolated, s.limit_depth), (0, set(&[4]), 1));
    assert!(!s.bipartite && !s.triangle_free);
    assert_eq!(s.components.len(), 2);
    assert_eq!(s.perfect_matching, None);

    let s = structure(&graph(4, &[(1, 2), (3, 4)]));
    assert_eq!((s.c0, s.limit_depth), (2, 2));
}

#[test]
fn construction_and_deletion() {
    let ctx = VarContext::numbered("x", 3);
    assert!(Graph::new(&ctx, vec![(0, 0)]).is_err());
    assert!(Graph::new(&ctx, vec![(0, 3)]).is_err());
    let g = Graph::new(&ctx, vec![(1, 0), (0, 1), (1, 2)]).unwrap();
    assert_eq!(g.edges(), &[(0, 1), (1, 2)]);
    assert_eq!(g.neighbors(1), set(&[1, 3]));

    let h = path(4).delete_vertices(set(&[2]));
    assert_eq!(h.num_vertices(), 4);
    assert_eq!(h.edges(), &[(2, 3)]);
    assert_eq!(h.isolated_vertices(), set(&[1, 2]));
    assert_eq!(Graph::from_clutter(&cycle(5).clutter()).unwrap(), cycle(5));
}

#[test]
fn triangles_and_matchings() {
    assert_eq!(graph(4, &[(1, 2), (2, 3), (1, 3), (3, 4)]).triangles(), vec![[0, 1, 2]]);
    assert!(cycle(5).is_triangle_free() && !cycle(5).is_bipartite());
    assert_eq!(cycle(5).perfect_matching(), None);
    let m = cycle(6).perfect_matching().unwrap();
    let covered = m.iter().fold(VarSet::EMPTY, |s, &(a, b)| s.with(a).with(b));
    assert_eq!(covered, cycle(6).vertex_set());
    assert_eq!(path(3).maximal_independent_sets(), vec![set(&[1, 3]), set(&[2])]);
}

#[test]
fn clique_examples() {
    let k3 = graph(3, &[(1, 2), (2, 3), (1, 3)]);
    assert_eq!(clique_clutter(&k3, &caps()).unwrap().edges(), &[set(&[1, 2, 3])]);
    for g in [cycle(4), cycle(6), path(5)] {
        assert_eq!(clique_clutter(&g, &caps()).unwrap(), g.clutter());
    }
    assert_eq!(
        clique_clutter(&path(3), &caps()).unwrap().edges(),
        &[set(&[1, 2]), set(&[2, 3])]
    );
    let tight = Caps { cliques: 1, ..caps() };
    assert!(maximal_cliques(&path(3), &tight).unwrap_err().is_resource());
}

#[test]
fn isolated_vertices_are_cliques() {
    let g = graph(3, &[(1, 2)]);
    assert_eq!(maximal_cliques(&g, &caps()).unwrap(), vec![set(&[1, 2]), set(&[3])]);
}

#[test]
fn strong_perfection_examples() {
    assert_eq!(strongly_perfect_certificate(&cycle(4), &caps()).unwrap(), Some(set(&[1, 3])));
    assert_eq!(strongly_perfect_certificate(&cycle(5), &caps()).unwrap(), None);
    match is_strongly_perfect(&cycle(5), &caps()).unwrap() {
        StrongPerfection::No { subgraph } => assert_eq!(subgraph, cycle(5).vertex_set()),
        other => panic!("{other:?}"),
    }
    for g in [cycle(4), cycle(6), path(5), graph(5, &[(1, 2), (1, 3), (1, 4), (1, 5)])] {
        assert_eq!(is_strongly_perfect(&g, &caps()).unwrap(), StrongPerfection::Yes);
    }
    let chordal = graph(5, &[(1, 2), (2, 3), (1, 3), (3, 4), (2, 4), (4, 5)]);
    assert_eq!(is_strongly_perfect(&chordal, &caps()).unwrap(), StrongPerfection::Yes);
    let tight = Caps { induced_vertices: 4, ..caps() };
    assert!(matches!(
        is_strongly_perfect(&cycle(6), &tight).unwrap(),
        StrongPerfection::Inconclusive { .. }
    ));
}

#[test]
fn colon_structure_examples() {
    let c4 = colon_structure_check(&cycle(4), 0, 2, Q, &caps()).unwrap();
    assert!(c4.colon_equals_deletion && c4.depth_inequality);
    let colon = c4.bipartite.unwrap();
    assert!(colon.colon_of_power && colon.colon_normally_torsion_free);

    let p3 = colon_structure_check(&path(3), 1, 2, Q, &caps()).unwrap();
    assert!(p3.depth_inequality);
    assert!(p3.colon_depth.is_some() && p3.deletion_depth.is_some());

    let c5 = colon_structure_check(&cycle(5), 2, 1, Q, &caps()).unwrap();
    assert!(c5.colon_equals_deletion && c5.bipartite.is_none());
    assert!(colon_structure_check(&cycle(5), 2, 0, Q, &caps()).is_err());
}

#[test]
fn strongly_perfect_symbolic_examples() {
    let p3 = strongly_perfect_symbolic_check(&path(3), 3, Q, &caps()).unwrap();
    assert_eq!(p3.certificate, vec![0, 2]);
    assert!(p3.colon_identities);

    let k3 = graph(3, &[(1, 2), (2, 3), (1, 3)]);
    assert!(strongly_perfect_symbolic_check(&k3, 3, Q, &caps()).unwrap().colon_identities);

    let c4 = strongly_perfect_symbolic_check(&cycle(4), 3, Q, &caps()).unwrap();
    assert!(c4.colon_identities && c4.sequence.is_complete());
    assert!(c4.sequence.depth_non_increasing && c4.sequence.reg_non_decreasing);
    assert_eq!(c4.sequence.mode, PowerMode::Symbolic);

    assert!(strongly_perfect_symbolic_check(&cycle(5), 2, Q, &caps()).is_err());
}

#[test]
fn cm_square_examples() {
    let two_edges = cm_square_predicates(&graph(4, &[(1, 2), (3, 4)]), Q, &caps()).unwrap();
    assert!(two_edges.combinatorial_cm2 && two_edges.homological_cm2 && two_edges.agree);

    let c3 = cm_square_predicates(&cycle(3), Q, &caps()).unwrap();
    assert!(c3.depth_zero_triangle.is_some());
    assert_eq!(c3.depth_of_square, 0);
    assert!(!c3.homological_cm2 && c3.agree);

    let fig = cm_square_predicates(&ten_edge_graph(), Q, &caps()).unwrap();
    assert!(fig.combinatorial_cm2 && fig.homological_cm2 && fig.agree);
    assert!(fig.depth_zero_triangle.is_none());

    assert!(cm_square_predicates(&graph(3, &[(1, 2)]), Q, &caps()).is_err());
}

#[test]
fn ten_edge_graph_is_gorenstein() {
    let s = homological_summary(&ten_edge_graph().edge_ideal(), Q, &caps()).unwrap();
    assert!(s.is_cohen_macaulay && s.is_gorenstein);
}

#[test]
fn cm_square_reduces_to_components() {
    let pieces: [&[(usize, usize)]; 4] = [
        &[(1, 2)],
        &[(1, 2), (2, 3), (3, 4), (1, 4)],
        &[(1, 2), (2, 3), (3, 4), (4, 5), (1, 5)],
        &[(1, 2), (2, 3), (1, 3)],
    ];
    let sizes = [2, 4, 5, 3];
    for a in 0..pieces.len() {
        for b in a..pieces.len() {
            let n = sizes[a] + sizes[b];
            let shifted = pieces[b].iter().map(|&(u, v)| (u + sizes[a], v + sizes[a]));
            let union = graph(n, &pieces[a].iter().copied().chain(shifted).collect::<Vec<_>>());
            let cm2 = |g: &Graph| cm_square_predicates(g, Q, &caps()).unwrap().homological_cm2;
            let expected = cm2(&graph(sizes[a], pieces[a])) && cm2(&graph(sizes[b], pieces[b]));
            let verdict = cm_square_predicates(&union, Q, &caps()).unwrap();
            assert_eq!(verdict.homological_cm2, expected, "pieces {a} and {b}");
            assert!(verdict.agree);
        }
    }
}

#[test]
fn very_well_covered_examples() {
    let c4 = very_well_covered_check(&cycle(4), 3, Q, &caps()).unwrap();
    assert!(c4.colon_identities && c4.sequence.reg_non_decreasing);

    let edge = very_well_covered_check(&graph(2, &[(1, 2)]), 4, Q, &caps()).unwrap();
    assert!(edge.colon_identities);
    assert_eq!(edge.matching_edge, (0, 1));

    let wt = whiskered_triangle();
    assert_eq!(classify(&wt.clutter()).very_well_covered, Some(true));
    assert!(very_well_covered_check(&wt, 2, Q, &caps()).unwrap().colon_identities);

    assert!(very_well_covered_check(&cycle(5), 2, Q, &caps()).is_err());
}

#[test]
fn weighted_reduction_examples() {
    let ctx = VarContext::numbered("x", 3);
    let single = WeightedDigraph::new(&VarContext::numbered("x", 2), vec![(0, 1)], vec![1, 5]).unwrap();
    let r = weighted_cm_reduction_check(&single, Q, &caps()).unwrap();
    assert!(r.original_cm && r.reduced_cm && r.agree);

    let path = WeightedDigraph::new(&ctx, vec![(0, 1), (1, 2)], vec![1, 3, 2]).unwrap();
    assert!(weighted_cm_reduction_check(&path, Q, &caps()).unwrap().agree);

    let star_ctx = VarContext::numbered("x", 4);
    let star = WeightedDigraph::new(&star_ctx, vec![(1, 0), (2, 0), (3, 0)], vec![4, 1, 1, 1]).unwrap();
    assert!(weighted_cm_reduction_check(&star, Q, &caps()).unwrap().agree);

    assert!(WeightedDigraph::new(&ctx, vec![(0, 0)], vec![1, 1, 1]).is_err());
    assert!(WeightedDigraph::new(&ctx, vec![(0, 1)], vec![0, 1, 1]).is_err());
}

#[test]
fn isomorphism_class_counts() {
    let counts: Vec<usize> = (1..=6).map(|n| graphs_up_to_isomorphism(n).len()).collect();
    assert_eq!(counts, vec![1, 2, 4, 11, 34, 156]);
}

fn arb_graph(n: usize) -> impl Strategy<Value = Graph> {
    let pairs: Vec<(usize, usize)> =
        (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
    proptest::collection::vec(any::<bool>(), pairs.len()).prop_map(move |mask| {
        let edges = pairs.iter().zip(mask).filter(|(_, m)| *m).map(|(e, _)| *e).collect();
        Graph::new(&VarContext::numbered("x", n), edges).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn square_equals_symbolic_square_iff_triangle_free(g in arb_graph(7)) {
        prop_assume!(!g.edges().is_empty());
        let i = g.edge_ideal();
        let same = i.power(2).unwrap() == i.symbolic_power(2).unwrap();
        prop_assert_eq!(same, g.is_triangle_free());
    }

    #[test]
    fn colon_by_vertex_is_deletion_plus_neighbours(g in arb_graph(6), v in 0usize..6) {
        prop_assume!(!g.edges().is_empty());
        let r = colon_structure_check(&g, v, 1, Q, &caps()).unwrap();
        prop_assert!(r.colon_equals_deletion);
        prop_assert!(r.depth_inequality);
    }

    #[test]
    fn bipartite_colon_identities(g in arb_graph(6), v in 0usize..6, k in 1u32..4) {
        prop_assume!(g.is_bipartite() && !g.edges().is_empty());
        let r = colon_structure_check(&g, v, k, Q, &caps()).unwrap();
        let colon = r.bipartite.unwrap();
        prop_assert!(colon.colon_of_power && colon.colon_normally_torsion_free);
        prop_assert!(r.depth_inequality);
    }

    #[test]
    fn bipartite_graphs_are_strongly_perfect(g in arb_graph(7)) {
        prop_assume!(g.is_bipartite());
        prop_assert_eq!(is_strongly_perfect(&g, &caps()).unwrap(), StrongPerfection::Yes);
    }

    #[test]
    fn cm_square_views_agree(g in arb_graph(6)) {
        prop_assume!(!g.edges().is_empty() && g.isolated_vertices().is_empty());
        prop_assert!(cm_square_predicates(&g, Q, &caps()).unwrap().agree);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn bipartite_depth_settles_at_limit(g in arb_graph(5)) {
        prop_assume!(g.is_bipartite() && !g.edges().is_empty());
        let limit = structure(&g).limit_depth;
        let i = g.edge_ideal();
        let depths: Vec<usize> = (1..=5)
            .map(|k| depth(&i.power(k).unwrap(), Q, &caps()).unwrap())
            .collect();
        prop_assert!(depths.iter().all(|&d| d >= limit), "{:?} vs {}", depths, limit);
        prop_assert!(depths.windows(2).all(|w| w[0] >= w[1]), "{:?}", depths);
        prop_assert_eq!(depths[4], limit, "{:?}", depths);
    }
}
