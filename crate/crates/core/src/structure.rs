//! Defect group structure computed from the shape of the graph alone.

use std::collections::BTreeMap;
use std::fmt;

use petgraph::unionfind::UnionFind;
use serde::{Deserialize, Serialize};

use crate::decompose::{biconnected_components, is_exceptional, maximal_bridges, two_edge_connected_components};
use crate::descriptor::{GroupDescriptor, GroupFactor};
use crate::error::{Error, Result};
use crate::graph::{Digraph, Graph};

/// Which classification rule produced a factor.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Rule {
    /// Defect 1, a block that is a single edge.
    SingleEdgeBlock,
    /// Defect 1, a block that is a cycle on `m` vertices: `Z_{m-1}`.
    CycleBlock,
    /// Defect 1, the exceptional block: `PGL2(5)` on 6 points.
    ExceptionalBlock,
    /// Defect 1, any other bipartite block: `A_{m-1}`.
    BipartiteBlock,
    /// Defect 1, any other non-bipartite block: `S_{m-1}`.
    NonBipartiteBlock,
    /// Defect `k`, the whole graph is a cycle: `Z_{n-k}`.
    Cycle,
    /// Defect `k`, a maximal `k`-subgraph on `n_i` vertices: `S_{n_i-k}`.
    MaximalKSubgraph,
    /// Defect `k`, a `k+1` vertex window inside a long bridge or a path.
    TrivialPath,
    /// A strongly connected component with one vertex.
    SingletonComponent,
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Rule::SingleEdgeBlock => "single_edge_block",
            Rule::CycleBlock => "cycle_block",
            Rule::ExceptionalBlock => "exceptional_block",
            Rule::BipartiteBlock => "bipartite_block",
            Rule::NonBipartiteBlock => "non_bipartite_block",
            Rule::Cycle => "cycle",
            Rule::MaximalKSubgraph => "maximal_k_subgraph",
            Rule::TrivialPath => "trivial_path",
            Rule::SingletonComponent => "singleton_component",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SubgraphKind {
    Nontrivial,
    TrivialPath,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MaximalKSubgraph {
    /// Sorted vertex indices.
    pub vertices: Vec<usize>,
    pub kind: SubgraphKind,
    pub k: usize,
}

/// One part of a structural answer and the factor it contributes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EvidencePart {
    pub vertices: Vec<String>,
    pub k: usize,
    pub rule: Rule,
    pub factor: GroupFactor,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DefectAnalysis {
    /// Total defect; for a digraph the sum over its components.
    pub k: usize,
    pub descriptor: GroupDescriptor,
    /// One entry per factor of `descriptor`, in the same order.
    pub evidence: Vec<EvidencePart>,
}

impl DefectAnalysis {
    fn from_parts(k: usize, evidence: Vec<EvidencePart>) -> Self {
        let descriptor = GroupDescriptor::new(evidence.iter().map(|p| p.factor.clone()).collect());
        DefectAnalysis { k, descriptor, evidence }
    }
}

fn labels_of(g: &Graph, vs: &[usize]) -> Vec<String> {
    vs.iter().map(|&v| g.label(v).to_string()).collect()
}

/// Defect 1 group as a product over blocks.
pub fn defect1_structure(g: &Graph) -> Result<DefectAnalysis> {
    if g.len() < 2 {
        return Err(Error::InvalidDefect { k: 1, n: g.len() });
    }
    let blocks = biconnected_components(g)?;
    let parts = blocks
        .blocks
        .iter()
        .map(|block| {
            let b = g.induced(block);
            let m = block.len();
            let support = labels_of(g, block);
            let (rule, factor) = if m == 2 {
                (Rule::SingleEdgeBlock, GroupFactor::trivial(support.clone()))
            } else if b.is_cycle() {
                (Rule::CycleBlock, GroupFactor::cyclic(m - 1, support.clone()))
            } else if is_exceptional(&b) {
                (Rule::ExceptionalBlock, GroupFactor::pgl25(support.clone()))
            } else if b.is_bipartite() {
                (Rule::BipartiteBlock, GroupFactor::alternating(m - 1, support.clone()))
            } else {
                (Rule::NonBipartiteBlock, GroupFactor::symmetric(m - 1, support.clone()))
            };
            EvidencePart { vertices: support, k: 1, rule, factor }
        })
        .collect();
    Ok(DefectAnalysis::from_parts(1, parts))
}

/// Vertices of a path graph from one end to the other.
fn path_order(g: &Graph) -> Vec<usize> {
    let start = (0..g.len()).find(|&v| g.degree(v) <= 1).unwrap_or(0);
    let mut order = vec![start];
    let mut prev = usize::MAX;
    while let Some(&next) = g.neighbors(*order.last().unwrap()).iter().find(|&&w| w != prev) {
        prev = *order.last().unwrap();
        order.push(next);
    }
    order
}

fn windows(path: &[usize], k: usize) -> impl Iterator<Item = MaximalKSubgraph> + '_ {
    path.windows(k + 1).map(move |w| {
        let mut vertices = w.to_vec();
        vertices.sort_unstable();
        MaximalKSubgraph { vertices, kind: SubgraphKind::TrivialPath, k }
    })
}

/// Maximal `k`-subgraphs of a connected graph that is not a cycle, `k >= 2`.
///
/// Colour the nontrivial 2-edge-connected classes and every remaining vertex
/// of degree at least 3, merge colours across bridges with at most `k - 1`
/// vertices (absorbing short pendant bridges), and grow each colour class by
/// everything within distance `k - 1`. Windows of `k + 1` vertices in the
/// remaining bridges are the trivial ones. A path yields only windows and a
/// graph on `k + 1` vertices is its own unique maximal `k`-subgraph.
pub fn maximal_k_subgraphs(g: &Graph, k: usize) -> Result<Vec<MaximalKSubgraph>> {
    g.require_connected()?;
    let n = g.len();
    if k < 2 || n <= k {
        return Err(Error::InvalidDefect { k, n });
    }
    if g.is_cycle() {
        return Err(Error::Precondition("a cycle has no maximal k-subgraphs".into()));
    }
    if g.is_path() {
        return Ok(windows(&path_order(g), k).collect());
    }
    if n == k + 1 {
        return Ok(vec![MaximalKSubgraph { vertices: (0..n).collect(), kind: SubgraphKind::Nontrivial, k }]);
    }

    let te = two_edge_connected_components(g)?;
    let mut color: Vec<Option<usize>> = vec![None; n];
    let mut colors = 0;
    for class in te.classes.iter().filter(|c| c.len() > 1) {
        for &v in class {
            color[v] = Some(colors);
        }
        colors += 1;
    }
    for v in 0..n {
        if color[v].is_none() && g.degree(v) >= 3 {
            color[v] = Some(colors);
            colors += 1;
        }
    }

    let bridges = maximal_bridges(g);
    let mut uf = UnionFind::<usize>::new(colors);
    for b in bridges.iter().filter(|b| b.len() < k) {
        let (a, z) = (b.first(), b.last());
        let c = match (color[a], color[z]) {
            (Some(ca), Some(cz)) => {
                uf.union(ca, cz);
                ca
            }
            (Some(c), None) | (None, Some(c)) => c,
            (None, None) => unreachable!("both ends of degree 1 means a path"),
        };
        for &v in &b.path {
            color[v].get_or_insert(c);
        }
    }

    let mut classes: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for v in 0..n {
        if let Some(c) = color[v] {
            classes.entry(uf.find(c)).or_default().push(v);
        }
    }
    let mut out: Vec<MaximalKSubgraph> = classes
        .values()
        .map(|class| {
            let dist = g.bfs_distances(class);
            let vertices: Vec<usize> = (0..n).filter(|&v| dist[v].is_some_and(|d| d < k)).collect();
            assert!(
                vertices.len() > k,
                "extension of colour class {:?} has only {} vertices for k = {k}",
                labels_of(g, class),
                vertices.len()
            );
            MaximalKSubgraph { vertices, kind: SubgraphKind::Nontrivial, k }
        })
        .collect();
    out.sort_by(|a, b| a.vertices.cmp(&b.vertices));
    out.dedup();
    for b in bridges.iter().filter(|b| b.len() >= k) {
        out.extend(windows(&b.path, k));
    }
    Ok(out)
}

/// Defect `k >= 2` group: `Z_{n-k}` for a cycle, otherwise one symmetric
/// factor per maximal `k`-subgraph.
pub fn defectk_structure(g: &Graph, k: usize) -> Result<DefectAnalysis> {
    g.require_connected()?;
    let n = g.len();
    if k < 2 || n <= k {
        return Err(Error::InvalidDefect { k, n });
    }
    if g.is_cycle() {
        let support = labels_of(g, &(0..n).collect::<Vec<_>>());
        let part = EvidencePart {
            vertices: support.clone(),
            k,
            rule: Rule::Cycle,
            factor: GroupFactor::cyclic(n - k, support),
        };
        return Ok(DefectAnalysis::from_parts(k, vec![part]));
    }
    let parts = maximal_k_subgraphs(g, k)?
        .into_iter()
        .map(|s| {
            let support = labels_of(g, &s.vertices);
            let (rule, factor) = match s.kind {
                SubgraphKind::Nontrivial => {
                    (Rule::MaximalKSubgraph, GroupFactor::symmetric(s.vertices.len() - k, support.clone()))
                }
                SubgraphKind::TrivialPath => (Rule::TrivialPath, GroupFactor::trivial(support.clone())),
            };
            EvidencePart { vertices: support, k, rule, factor }
        })
        .collect();
    Ok(DefectAnalysis::from_parts(k, parts))
}

/// Defect `k` group of a connected graph for any `1 <= k < n`.
pub fn defect_structure(g: &Graph, k: usize) -> Result<DefectAnalysis> {
    if k == 1 {
        defect1_structure(g)
    } else {
        defectk_structure(g, k)
    }
}

/// Product over strongly connected components, each analysed as the
/// undirected graph underneath it. `k_choice[i]` is the defect used for
/// component `i` of [`Digraph::strongly_connected_components`]; entries for
/// one-vertex components are ignored.
pub fn digraph_structure(d: &Digraph, k_choice: &[usize]) -> Result<DefectAnalysis> {
    let scc = d.strongly_connected_components();
    if k_choice.len() != scc.components.len() {
        return Err(Error::Precondition(format!(
            "{} defect choices for {} strongly connected components",
            k_choice.len(),
            scc.components.len()
        )));
    }
    let mut parts = Vec::new();
    let mut total = 0;
    for (component, &k) in scc.components.iter().zip(k_choice) {
        if component.len() == 1 {
            let support = vec![d.label(component[0]).to_string()];
            parts.push(EvidencePart {
                vertices: support.clone(),
                k: 0,
                rule: Rule::SingletonComponent,
                factor: GroupFactor::trivial(support),
            });
            continue;
        }
        if k == 0 || k >= component.len() {
            return Err(Error::InvalidDefect { k, n: component.len() });
        }
        let g = d.induced(component).forget_directions();
        parts.extend(defect_structure(&g, k)?.evidence);
        total += k;
    }
    Ok(DefectAnalysis::from_parts(total, parts))
}

/// The same defect for every component with more than one vertex.
pub fn uniform_k_choice(d: &Digraph, k: usize) -> Vec<usize> {
    vec![k; d.strongly_connected_components().components.len()]
}

/// Least `k` whose defect group is the full symmetric group `S_{n-k}`.
pub fn smallest_k_full_symmetric(g: &Graph) -> Result<usize> {
    let n = g.len();
    if n < 2 {
        return Err(Error::InvalidDefect { k: 1, n });
    }
    g.require_connected()?;
    for k in 1..n {
        if defect_structure(g, k)?.descriptor.is_full_symmetric(n - k) {
            return Ok(k);
        }
    }
    unreachable!("k = n - 1 always gives the trivial group")
}
