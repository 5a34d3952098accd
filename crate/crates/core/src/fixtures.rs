//! Named test graphs and exhaustive enumeration of small connected graphs.

use crate::decompose::EXCEPTIONAL_EDGES;
use crate::graph::{Digraph, Graph, ParsedGraph};

fn indexed(prefix: &str, n: usize, edges: &[(usize, usize)]) -> Graph {
    Graph::from_index_edges((0..n).map(|i| format!("{prefix}{i}")), edges).expect("valid fixture")
}

fn labelled(edges: &[(&str, &str)]) -> Graph {
    Graph::from_label_edges(edges).expect("valid fixture")
}

pub fn cycle(n: usize) -> Graph {
    let edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    indexed("c", n, &edges)
}

pub fn path(n: usize) -> Graph {
    let edges: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
    indexed("p", n, &edges)
}

pub fn complete(n: usize) -> Graph {
    let edges: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    indexed("k", n, &edges)
}

pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    let edges: Vec<(usize, usize)> = (0..a).flat_map(|i| (0..b).map(move |j| (i, a + j))).collect();
    let labels = (0..a).map(|i| format!("a{i}")).chain((0..b).map(|j| format!("b{j}")));
    Graph::from_index_edges(labels, &edges).expect("valid fixture")
}

/// `K_{1,leaves}` with centre `hub`.
pub fn star(leaves: usize) -> Graph {
    let edges: Vec<(usize, usize)> = (1..=leaves).map(|i| (0, i)).collect();
    let labels = std::iter::once("hub".to_string()).chain((1..=leaves).map(|i| format!("l{i}")));
    Graph::from_index_edges(labels, &edges).expect("valid fixture")
}

/// The 7-vertex graph whose defect 1 group is `PGL2(5)`.
pub fn exceptional() -> Graph {
    labelled(&EXCEPTIONAL_EDGES)
}

/// Two triangles sharing the vertex `w`.
pub fn bowtie() -> Graph {
    labelled(&[("u", "v"), ("v", "w"), ("w", "u"), ("w", "x"), ("x", "y"), ("y", "w")])
}

/// Triangles `a1 a2 a3` and `b1 b2 b3` joined by a path from `a3` to `b1`
/// through `interior` extra vertices `m1 ..`.
pub fn two_triangles_bridge(interior: usize) -> Graph {
    let mut labels: Vec<String> = ["a1", "a2", "a3", "b1", "b2", "b3"].map(String::from).to_vec();
    labels.extend((1..=interior).map(|i| format!("m{i}")));
    let mut edges = vec![(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)];
    let mut chain = vec![2];
    chain.extend(6..6 + interior);
    chain.push(3);
    edges.extend(chain.windows(2).map(|w| (w[0], w[1])));
    Graph::from_index_edges(labels, &edges).expect("valid fixture")
}

/// Cycle on `n` vertices with the chord `c0 - c{chord}`.
pub fn cycle_with_chord(n: usize, chord: usize) -> Graph {
    let mut edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    edges.push((0, chord));
    indexed("c", n, &edges)
}

/// Two vertices joined by internally disjoint paths with the given numbers of edges.
pub fn theta(lengths: &[usize]) -> Graph {
    let mut labels = vec!["s".to_string(), "t".to_string()];
    let mut edges = Vec::new();
    for (p, &len) in lengths.iter().enumerate() {
        let mut prev = 0;
        for step in 1..len {
            labels.push(format!("q{p}_{step}"));
            let cur = labels.len() - 1;
            edges.push((prev, cur));
            prev = cur;
        }
        edges.push((prev, 1));
    }
    Graph::from_index_edges(labels, &edges).expect("valid fixture")
}

/// Wheel: a cycle on `rim` vertices plus a hub joined to all of them.
pub fn wheel(rim: usize) -> Graph {
    let mut edges: Vec<(usize, usize)> = (0..rim).map(|i| (i, (i + 1) % rim)).collect();
    edges.extend((0..rim).map(|i| (i, rim)));
    indexed("w", rim + 1, &edges)
}

/// Directed cycle on `n` vertices.
pub fn directed_cycle(n: usize) -> Digraph {
    let edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Digraph::from_index_edges((0..n).map(|i| format!("d{i}")), &edges).expect("valid fixture")
}

fn digraph(edges: &[(&str, &str)]) -> Digraph {
    Digraph::from_label_edges(edges).expect("valid fixture")
}

/// Undirected graphs of the fixture corpus, sorted by name.
pub fn graph_corpus() -> Vec<(String, Graph)> {
    let mut out: Vec<(String, Graph)> = vec![
        ("exceptional".into(), exceptional()),
        ("bowtie".into(), bowtie()),
        ("k23".into(), complete_bipartite(2, 3)),
        ("theta_2_2_2".into(), theta(&[2, 2, 2])),
        ("theta_2_2_3".into(), theta(&[2, 2, 3])),
        ("wheel4".into(), wheel(4)),
        ("c5_chord2".into(), cycle_with_chord(5, 2)),
        ("c6_chord3".into(), cycle_with_chord(6, 3)),
    ];
    out.extend((3..=8).map(|n| (format!("c{n}"), cycle(n))));
    out.extend((3..=5).map(|n| (format!("k{n}"), complete(n))));
    out.extend((2..=6).map(|n| (format!("p{n}"), path(n))));
    out.extend((3..=4).map(|l| (format!("star{l}"), star(l))));
    out.extend((0..=3).map(|i| (format!("two_triangles_bridge{i}"), two_triangles_bridge(i))));
    out.sort_by(|a, b| a.0.cmp(&b.0));
    out
}

/// Directed graphs of the fixture corpus, sorted by name.
pub fn digraph_corpus() -> Vec<(String, Digraph)> {
    let mut out: Vec<(String, Digraph)> = vec![
        ("dag3".into(), digraph(&[("a", "b"), ("b", "c")])),
        ("dicycle3".into(), directed_cycle(3)),
        ("dicycle5".into(), directed_cycle(5)),
        (
            "two_dicycles".into(),
            digraph(&[("a", "b"), ("b", "c"), ("c", "a"), ("c", "x"), ("x", "y"), ("y", "z"), ("z", "x")]),
        ),
        ("two_way_edge".into(), digraph(&[("a", "b"), ("b", "a")])),
        (
            "antisymmetric_strong".into(),
            digraph(&[("a", "b"), ("b", "c"), ("c", "d"), ("d", "a"), ("a", "c")]),
        ),
    ];
    out.sort_by(|a, b| a.0.cmp(&b.0));
    out
}

/// Both corpora as parsed graphs, sorted by name.
pub fn corpus() -> Vec<(String, ParsedGraph)> {
    let mut out: Vec<(String, ParsedGraph)> = graph_corpus()
        .into_iter()
        .map(|(n, g)| (n, ParsedGraph::Graph(g)))
        .chain(digraph_corpus().into_iter().map(|(n, d)| (n, ParsedGraph::Digraph(d))))
        .collect();
    out.sort_by(|a, b| a.0.cmp(&b.0));
    out
}

/// Every connected simple graph on the vertex set `0..n` (labelled `v0..`),
/// in order of edge bitmask.
pub fn enumerate_connected_graphs(n: usize) -> Vec<Graph> {
    assert!(n <= 7, "2^21 edge subsets is the practical limit");
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let mut out = Vec::new();
    for mask in 0u32..(1 << pairs.len()) {
        let edges: Vec<(usize, usize)> =
            pairs.iter().enumerate().filter(|(b, _)| mask >> b & 1 == 1).map(|(_, &e)| e).collect();
        if edges.len() + 1 < n {
            continue;
        }
        let g = indexed("v", n, &edges);
        if g.is_connected() {
            out.push(g);
        }
    }
    out
}
