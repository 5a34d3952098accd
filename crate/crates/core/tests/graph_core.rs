use std::collections::BTreeSet;

use flowsg::decompose::{
    biconnected_components, bridge_edges, is_exceptional, maximal_bridge_through, maximal_bridges,
    two_edge_connected_components,
};
use flowsg::fixtures;
use flowsg::{parse_graph, Digraph, Graph, ParsedGraph};
use proptest::prelude::*;

fn random_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let all: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
            let edges: Vec<(usize, usize)> = all.into_iter().zip(bits).filter(|(_, b)| *b).map(|(e, _)| e).collect();
            Graph::from_index_edges((0..n).map(|i| format!("v{i}")), &edges).unwrap()
        })
    })
}

fn connected_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    random_graph(max_n).prop_filter("connected", Graph::is_connected)
}

fn random_digraph(max_n: usize) -> impl Strategy<Value = Digraph> {
    (2..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * n).prop_map(move |bits| {
            let edges: Vec<(usize, usize)> = (0..n)
                .flat_map(|i| (0..n).map(move |j| (i, j)))
                .zip(bits)
                .filter(|((i, j), b)| *b && i != j)
                .map(|(e, _)| e)
                .collect();
            Digraph::from_index_edges((0..n).map(|i| format!("v{i}")), &edges).unwrap()
        })
    })
}

fn component_count(g: &Graph) -> usize {
    g.components().len()
}

proptest! {
    #[test]
    fn blocks_cover_edges_and_meet_in_at_most_one_vertex(g in connected_graph(6)) {
        let blocks = biconnected_components(&g).unwrap().blocks;
        for (i, a) in blocks.iter().enumerate() {
            for b in &blocks[i + 1..] {
                let common = a.iter().filter(|v| b.contains(v)).count();
                prop_assert!(common <= 1);
            }
        }
        let mut covered = BTreeSet::new();
        for b in &blocks {
            for &u in b {
                for &v in b {
                    if u < v && g.has_edge(u, v) {
                        covered.insert((u, v));
                    }
                }
            }
        }
        prop_assert_eq!(covered, g.edges().collect::<BTreeSet<_>>());
    }

    #[test]
    fn bridge_iff_deletion_disconnects(g in random_graph(7)) {
        let bridges: BTreeSet<(usize, usize)> = bridge_edges(&g).into_iter().collect();
        let base = component_count(&g);
        for (u, v) in g.edges() {
            let disconnects = component_count(&g.without_edge(u, v)) > base;
            prop_assert_eq!(bridges.contains(&(u, v)), disconnects, "edge {} {}", u, v);
        }
    }

    #[test]
    fn forgetting_directions_is_idempotent(d in random_digraph(6)) {
        let once = d.forget_directions();
        let twice = once.to_digraph().forget_directions();
        prop_assert_eq!(&once, &twice);
        for (u, v) in once.edges() {
            prop_assert!(d.has_edge(u, v) || d.has_edge(v, u));
        }
        for (u, v) in d.edges() {
            prop_assert!(once.has_edge(u, v));
        }
    }

    #[test]
    fn exceptional_recognition_is_relabeling_invariant(
        perm in Just((0..7).collect::<Vec<usize>>()).prop_shuffle(),
        other in connected_graph(7),
    ) {
        prop_assert!(is_exceptional(&fixtures::exceptional().permuted(&perm)));
        if other.len() == 7 {
            let shuffled: Vec<usize> = perm.clone();
            prop_assert_eq!(is_exceptional(&other), is_exceptional(&other.permuted(&shuffled)));
        }
    }

    #[test]
    fn maximal_bridges_satisfy_their_invariants(g in connected_graph(8)) {
        let bridge_set: BTreeSet<(usize, usize)> = bridge_edges(&g).into_iter().collect();
        for (u, v) in bridge_set.iter().copied() {
            let b = maximal_bridge_through(&g, u, v).unwrap();
            prop_assert!(b.contains_edge(u, v));
            for w in b.path.windows(2) {
                prop_assert!(bridge_set.contains(&(w[0].min(w[1]), w[0].max(w[1]))));
            }
            for &x in b.interior() {
                prop_assert_eq!(g.degree(x), 2);
            }
            // Inextensible: each end has degree 1 or at least 3.
            prop_assert!(g.degree(b.first()) != 2 && g.degree(b.last()) != 2);
        }
        let covered: usize = maximal_bridges(&g).iter().map(|b| b.len() - 1).sum();
        prop_assert_eq!(covered, bridge_set.len());
    }

    #[test]
    fn scc_matches_mutual_reachability(d in random_digraph(6)) {
        let n = d.len();
        let reach: Vec<Vec<bool>> = (0..n)
            .map(|s| {
                let mut seen = vec![false; n];
                let mut stack = vec![s];
                seen[s] = true;
                while let Some(u) = stack.pop() {
                    for &w in d.successors(u) {
                        if !seen[w] {
                            seen[w] = true;
                            stack.push(w);
                        }
                    }
                }
                seen
            })
            .collect();
        let scc = d.strongly_connected_components();
        for u in 0..n {
            for v in 0..n {
                let same = scc.component_of[u] == scc.component_of[v];
                prop_assert_eq!(same, reach[u][v] && reach[v][u]);
            }
        }
    }
}

#[test]
fn two_edge_examples_by_deletion() {
    let g = fixtures::two_triangles_bridge(0);
    let te = two_edge_connected_components(&g).unwrap();
    assert_eq!(te.classes.len(), 2);
    assert_eq!(te.bridges.len(), 1);
    assert_eq!(te.tree.len(), 1);
    let bowtie = two_edge_connected_components(&fixtures::bowtie()).unwrap();
    assert_eq!(bowtie.classes.len(), 1);
    assert!(bowtie.bridges.is_empty());
}

#[test]
fn bridge_through_middle_of_three_edge_path() {
    let g = fixtures::two_triangles_bridge(2);
    let m1 = g.index_of("m1").unwrap();
    let m2 = g.index_of("m2").unwrap();
    let b = maximal_bridge_through(&g, m1, m2).unwrap();
    let labels: Vec<&str> = b.path.iter().map(|&v| g.label(v)).collect();
    assert!(labels == ["a3", "m1", "m2", "b1"] || labels == ["b1", "m2", "m1", "a3"]);
    let a1 = g.index_of("a1").unwrap();
    let a2 = g.index_of("a2").unwrap();
    assert!(maximal_bridge_through(&g, a1, a2).is_err());
}

#[test]
fn fixture_files_match_the_built_in_corpus() {
    let dir = concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures");
    for (name, expected) in fixtures::corpus() {
        let text = std::fs::read_to_string(format!("{dir}/{name}.txt")).unwrap();
        let parsed = parse_graph(&text).unwrap();
        match (&parsed, &expected) {
            (ParsedGraph::Graph(a), ParsedGraph::Graph(b)) => assert_eq!(a, b, "{name}"),
            (ParsedGraph::Digraph(a), ParsedGraph::Digraph(b)) => assert_eq!(a, b, "{name}"),
            _ => panic!("{name}: directedness differs"),
        }
    }
}
