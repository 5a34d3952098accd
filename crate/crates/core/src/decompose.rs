//! Block, 2-edge-connected and bridge decompositions of undirected graphs,
//! plus recognition of the exceptional 7-vertex graph.

use std::collections::BTreeSet;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Maximal 2-vertex-connected subgraphs and the cut vertices joining them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockDecomposition {
    /// Sorted vertex sets; each block is the induced subgraph on its set.
    pub blocks: Vec<Vec<usize>>,
    pub cut_vertices: Vec<usize>,
}

/// Maximal 2-edge-connected vertex classes and the bridge edges between them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoEdgeDecomposition {
    pub classes: Vec<Vec<usize>>,
    pub class_of: Vec<usize>,
    /// Bridge edges as `(u, v)` with `u < v`.
    pub bridges: Vec<(usize, usize)>,
    /// The bridge tree: one arc per bridge edge, as class index pairs.
    pub tree: Vec<(usize, usize)>,
}

/// A path whose interior vertices have degree 2 and whose every edge is a
/// bridge edge. Its length is the number of vertices on it.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Bridge {
    pub path: Vec<usize>,
}

impl Bridge {
    pub fn len(&self) -> usize {
        self.path.len()
    }

    pub fn is_empty(&self) -> bool {
        self.path.is_empty()
    }

    pub fn first(&self) -> usize {
        self.path[0]
    }

    pub fn last(&self) -> usize {
        *self.path.last().unwrap()
    }

    pub fn interior(&self) -> &[usize] {
        &self.path[1..self.path.len() - 1]
    }

    pub fn contains_edge(&self, u: usize, v: usize) -> bool {
        self.path.windows(2).any(|w| (w[0], w[1]) == (u, v) || (w[0], w[1]) == (v, u))
    }
}

struct LowpointDfs {
    blocks: Vec<Vec<usize>>,
    is_cut: Vec<bool>,
    bridges: Vec<(usize, usize)>,
}

// Iterative Hopcroft-Tarjan over every component.
fn lowpoint_dfs(g: &Graph) -> LowpointDfs {
    const UNSEEN: usize = usize::MAX;
    let n = g.len();
    let mut disc = vec![UNSEEN; n];
    let mut low = vec![0; n];
    let mut is_cut = vec![false; n];
    let mut blocks = Vec::new();
    let mut bridges = Vec::new();
    let mut edge_stack: Vec<(usize, usize)> = Vec::new();
    let mut timer = 0;

    for root in 0..n {
        if disc[root] != UNSEEN {
            continue;
        }
        disc[root] = timer;
        low[root] = timer;
        timer += 1;
        let mut root_children = 0;
        // (vertex, parent, next neighbour position)
        let mut stack = vec![(root, UNSEEN, 0usize)];
        while let Some(top) = stack.len().checked_sub(1) {
            let (v, parent, pos) = stack[top];
            if pos < g.degree(v) {
                stack[top].2 += 1;
                let w = g.neighbors(v)[pos];
                if w == parent {
                    continue;
                }
                if disc[w] == UNSEEN {
                    edge_stack.push((v, w));
                    disc[w] = timer;
                    low[w] = timer;
                    timer += 1;
                    if v == root {
                        root_children += 1;
                    }
                    stack.push((w, v, 0));
                } else if disc[w] < disc[v] {
                    edge_stack.push((v, w));
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if parent == UNSEEN {
                    continue;
                }
                low[parent] = low[parent].min(low[v]);
                if low[v] > disc[parent] {
                    bridges.push((parent.min(v), parent.max(v)));
                }
                if low[v] >= disc[parent] {
                    if parent != root {
                        is_cut[parent] = true;
                    }
                    let mut verts = BTreeSet::new();
                    while let Some((a, b)) = edge_stack.pop() {
                        verts.insert(a);
                        verts.insert(b);
                        if (a, b) == (parent, v) {
                            break;
                        }
                    }
                    blocks.push(verts.into_iter().collect());
                }
            }
        }
        if root_children > 1 {
            is_cut[root] = true;
        }
    }
    blocks.sort();
    bridges.sort_unstable();
    LowpointDfs { blocks, is_cut, bridges }
}

/// Blocks (maximal 2-vertex-connected subgraphs, single edges included) and
/// cut vertices of a connected graph.
pub fn biconnected_components(g: &Graph) -> Result<BlockDecomposition> {
    g.require_connected()?;
    let dfs = lowpoint_dfs(g);
    let cut_vertices = (0..g.len()).filter(|&v| dfs.is_cut[v]).collect();
    Ok(BlockDecomposition { blocks: dfs.blocks, cut_vertices })
}

/// Bridge edges of any graph (connected or not), sorted.
pub fn bridge_edges(g: &Graph) -> Vec<(usize, usize)> {
    lowpoint_dfs(g).bridges
}

/// 2-edge-connected classes, bridge edges and the bridge tree of a connected graph.
pub fn two_edge_connected_components(g: &Graph) -> Result<TwoEdgeDecomposition> {
    g.require_connected()?;
    let bridges = bridge_edges(g);
    let mut reduced = g.clone();
    for &(u, v) in &bridges {
        reduced = reduced.without_edge(u, v);
    }
    let classes = reduced.components();
    let mut class_of = vec![0; g.len()];
    for (i, c) in classes.iter().enumerate() {
        for &v in c {
            class_of[v] = i;
        }
    }
    let tree = bridges.iter().map(|&(u, v)| (class_of[u], class_of[v])).collect();
    Ok(TwoEdgeDecomposition { classes, class_of, bridges, tree })
}

/// True if 2-vertex connected: a single edge, or connected on at least three
/// vertices with no cut vertex.
pub fn is_two_vertex_connected(g: &Graph) -> bool {
    if g.len() < 2 || !g.is_connected() {
        return false;
    }
    let dfs = lowpoint_dfs(g);
    dfs.blocks.len() == 1
}

/// True if connected on at least two vertices with no bridge edge.
pub fn is_two_edge_connected(g: &Graph) -> bool {
    g.len() >= 2 && g.is_connected() && bridge_edges(g).is_empty()
}

/// The longest bridge containing the bridge edge `uv`.
///
/// Starting from the edge, the path is extended past every end vertex of
/// degree 2; it stops at vertices of degree 1 or at least 3.
pub fn maximal_bridge_through(g: &Graph, u: usize, v: usize) -> Result<Bridge> {
    if !g.has_edge(u, v) {
        return Err(Error::NotAnEdge(g.label(u).into(), g.label(v).into()));
    }
    if !bridge_edges(g).contains(&(u.min(v), u.max(v))) {
        return Err(Error::Precondition(format!(
            "edge {} {} lies on a cycle",
            g.label(u),
            g.label(v)
        )));
    }
    Ok(extend_bridge(g, u, v))
}

fn extend_bridge(g: &Graph, u: usize, v: usize) -> Bridge {
    let grow = |mut prev: usize, mut cur: usize| {
        let mut tail = Vec::new();
        while g.degree(cur) == 2 {
            let next = g.neighbors(cur).iter().copied().find(|&w| w != prev).unwrap();
            tail.push(next);
            prev = cur;
            cur = next;
        }
        tail
    };
    let mut path: Vec<usize> = grow(v, u);
    path.reverse();
    path.push(u);
    path.push(v);
    path.extend(grow(u, v));
    Bridge { path }
}

/// Every maximal bridge of the graph, each listed once, oriented so that the
/// first vertex is the smaller index. For a path this is the whole path.
pub fn maximal_bridges(g: &Graph) -> Vec<Bridge> {
    let mut covered: BTreeSet<(usize, usize)> = BTreeSet::new();
    let mut out = Vec::new();
    for (u, v) in bridge_edges(g) {
        if covered.contains(&(u, v)) {
            continue;
        }
        let mut b = extend_bridge(g, u, v);
        if b.first() > b.last() {
            b.path.reverse();
        }
        for w in b.path.windows(2) {
            covered.insert((w[0].min(w[1]), w[0].max(w[1])));
        }
        out.push(b);
    }
    out.sort_by(|a, b| a.path.cmp(&b.path));
    out
}

/// Edge list of the exceptional graph on `v, 1, ..., 6`.
pub const EXCEPTIONAL_EDGES: [(&str, &str); 8] = [
    ("v", "1"),
    ("1", "2"),
    ("2", "3"),
    ("3", "4"),
    ("4", "v"),
    ("5", "2"),
    ("5", "6"),
    ("6", "v"),
];

/// Whether `g` is isomorphic to the exceptional 7-vertex, 8-edge graph.
///
/// Degree sequence first, then all 5040 vertex bijections.
pub fn is_exceptional(g: &Graph) -> bool {
    if g.len() != 7 || g.edge_count() != 8 {
        return false;
    }
    let mut degrees: Vec<usize> = (0..7).map(|v| g.degree(v)).collect();
    degrees.sort_unstable_by(|a, b| b.cmp(a));
    if degrees != [3, 3, 2, 2, 2, 2, 2] {
        return false;
    }
    let template = Graph::from_label_edges(&EXCEPTIONAL_EDGES).expect("valid template");
    let template_edges: Vec<(usize, usize)> = template.edges().collect();
    (0..7)
        .permutations(7)
        .any(|map| template_edges.iter().all(|&(a, b)| g.has_edge(map[a], map[b])))
}
