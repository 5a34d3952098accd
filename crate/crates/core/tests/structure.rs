use std::collections::BTreeSet;

use flowsg::decompose::{bridge_edges, two_edge_connected_components};
use flowsg::fixtures;
use flowsg::oracle::{defect_group_oracle, FlowSemigroup, DEFAULT_ORACLE_CAP};
use flowsg::structure::{defect_structure, digraph_structure, maximal_k_subgraphs, uniform_k_choice, SubgraphKind};
use flowsg::{matches, Graph};
use itertools::Itertools;

fn shaped_graphs(max_n: usize) -> impl Iterator<Item = Graph> {
    (4..=max_n).flat_map(fixtures::enumerate_connected_graphs).filter(|g| !g.is_cycle() && !g.is_path())
}

fn induced_connected(g: &Graph, set: &[usize]) -> bool {
    g.induced(set).is_connected()
}

#[test]
fn maximal_subgraphs_overlap_only_along_bridges() {
    for g in shaped_graphs(6) {
        let bridge_vertices: BTreeSet<usize> = bridge_edges(&g).into_iter().flat_map(|(u, v)| [u, v]).collect();
        for k in 2..g.len() - 1 {
            let subs = maximal_k_subgraphs(&g, k).unwrap();
            for (a, b) in subs.iter().tuple_combinations() {
                let common: Vec<usize> = a.vertices.iter().copied().filter(|v| b.vertices.contains(v)).collect();
                assert!(common.len() <= k, "{g} k={k}: {:?} {:?}", a.vertices, b.vertices);
                if !common.is_empty() {
                    assert!(g.induced(&common).is_path(), "{g} k={k}: {common:?}");
                    if common.len() > 1 {
                        assert!(common.iter().all(|v| bridge_vertices.contains(v)), "{g} k={k}: {common:?}");
                    }
                }
            }
            for s in &subs {
                assert!(s.vertices.len() > k);
                assert!(induced_connected(&g, &s.vertices));
                if s.kind == SubgraphKind::TrivialPath {
                    assert_eq!(s.vertices.len(), k + 1);
                }
            }
        }
    }
}

#[test]
fn every_connected_window_lies_in_a_maximal_subgraph() {
    for g in shaped_graphs(6) {
        for k in 2..g.len() - 1 {
            let subs = maximal_k_subgraphs(&g, k).unwrap();
            for set in (0..g.len()).combinations(k + 1).filter(|s| induced_connected(&g, s)) {
                assert!(
                    subs.iter().any(|s| set.iter().all(|v| s.vertices.contains(v))),
                    "{g} k={k}: {set:?} uncovered"
                );
            }
        }
    }
}

#[test]
fn cycle_edges_and_branch_points_belong_to_one_subgraph() {
    for g in shaped_graphs(6) {
        let te = two_edge_connected_components(&g).unwrap();
        for k in 2..g.len() - 1 {
            let subs = maximal_k_subgraphs(&g, k).unwrap();
            let holding = |vs: &[usize]| subs.iter().filter(|s| vs.iter().all(|v| s.vertices.contains(v))).count();
            for (u, v) in g.edges().filter(|&(u, v)| te.class_of[u] == te.class_of[v]) {
                assert_eq!(holding(&[u, v]), 1, "{g} k={k}: edge {u} {v}");
            }
            for v in (0..g.len()).filter(|&v| g.degree(v) >= 3) {
                for (a, b) in g.neighbors(v).iter().copied().tuple_combinations() {
                    assert_eq!(holding(&[v, a, b]), 1, "{g} k={k}: {v} with {a} {b}");
                }
            }
        }
    }
}

#[test]
fn colour_class_extensions_are_never_too_small() {
    // The construction asserts every extension has more than k vertices.
    for n in 4..=6 {
        for g in fixtures::enumerate_connected_graphs(n).into_iter().filter(|g| !g.is_cycle()) {
            for k in 2..n {
                maximal_k_subgraphs(&g, k).unwrap();
            }
        }
    }
    let spider = Graph::from_label_edges(&[("c", "a"), ("c", "b"), ("c", "d1"), ("d1", "d2"), ("d2", "d3")]).unwrap();
    for k in 2..spider.len() {
        maximal_k_subgraphs(&spider, k).unwrap();
    }
}

#[test]
fn a_long_bridge_blocks_movement_between_its_ends() {
    for k in 2..=3 {
        let g = fixtures::two_triangles_bridge(k);
        let interior: Vec<usize> = (1..=k).map(|i| g.index_of(&format!("m{i}")).unwrap()).collect();
        let group = defect_group_oracle(&g, &interior, DEFAULT_ORACLE_CAP).unwrap();
        for orbit in group.orbits() {
            let sides: BTreeSet<char> = orbit.iter().map(|&p| group.labels[p].chars().next().unwrap()).collect();
            assert_eq!(sides.len(), 1, "k={k}: orbit {orbit:?} crosses the bridge");
        }
        let side_order = |prefix: &str| {
            let keep: Vec<usize> =
                (0..g.len()).filter(|&v| g.label(v).starts_with(prefix) || g.label(v).starts_with('m')).collect();
            let h = g.induced(&keep);
            let defect: Vec<usize> = (1..=k).map(|i| h.index_of(&format!("m{i}")).unwrap()).collect();
            defect_group_oracle(&h, &defect, DEFAULT_ORACLE_CAP).unwrap().order()
        };
        assert_eq!(group.order(), side_order("a") * side_order("b"));
        let structural = defect_structure(&g, k).unwrap();
        assert!(matches(&structural.descriptor, &group).0, "k={k}");
    }
}

#[test]
fn structure_matches_oracle_on_small_graphs() {
    for n in 2..=6 {
        for g in fixtures::enumerate_connected_graphs(n).into_iter().step_by(if n == 6 { 40 } else { 1 }) {
            let s = FlowSemigroup::enumerate(&g, DEFAULT_ORACLE_CAP).unwrap();
            for k in 1..n {
                let structural = defect_structure(&g, k).unwrap();
                let group = s.defect_group(&(0..k).collect::<Vec<_>>()).unwrap();
                let (ok, report) = matches(&structural.descriptor, &group);
                assert!(ok, "{g} k={k}: {report:?}");
            }
        }
    }
}

#[test]
fn two_directed_cycles_give_order_four() {
    let d = fixtures::digraph_corpus().into_iter().find(|(name, _)| name == "two_dicycles").unwrap().1;
    let analysis = digraph_structure(&d, &uniform_k_choice(&d, 1)).unwrap();
    assert_eq!(analysis.descriptor.order(), 4u32.into());
}
