//! Structural answers checked against the enumeration oracle.

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::descriptor::{identify_concrete, matches, MatchReport};
use crate::error::{Error, Result};
use crate::graph::{Digraph, Graph, ParsedGraph};
use crate::oracle::FlowSemigroup;
use crate::structure::{defect_structure, digraph_structure, uniform_k_choice};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckCase {
    pub k: usize,
    pub defect_set: Vec<String>,
    pub structural: String,
    pub report: MatchReport,
    /// Defect sets whose group differs in order or orbit sizes from the first one.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub defect_set_violations: Vec<Vec<String>>,
    /// Smallest subgraph found that still mismatches, as an edge list.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
}

impl CheckCase {
    pub fn passed(&self) -> bool {
        self.report.matched && self.defect_set_violations.is_empty()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CheckOptions {
    pub cap: usize,
    pub all_defect_sets: bool,
    pub minimize: bool,
}

/// The lexicographically smallest `k`-subset of the vertices.
pub fn default_defect_set(k: usize) -> Vec<usize> {
    (0..k).collect()
}

fn labels(labels: &[String], vs: &[usize]) -> Vec<String> {
    vs.iter().map(|&v| labels[v].clone()).collect()
}

/// Checks the structural defect group of `g` for `k` against one oracle run.
pub fn check_graph_k(g: &Graph, semigroup: &FlowSemigroup, k: usize, opts: CheckOptions) -> Result<CheckCase> {
    let all: Vec<String> = g.labels().map(String::from).collect();
    let structural = defect_structure(g, k)?;
    let defect = default_defect_set(k);
    let group = semigroup.defect_group(&defect)?;
    let (matched, report) = matches(&structural.descriptor, &group);

    let mut violations = Vec::new();
    if opts.all_defect_sets {
        let base = identify_concrete(&group);
        for set in (0..g.len()).combinations(k) {
            let other = identify_concrete(&semigroup.defect_group(&set)?);
            if other.order != base.order || other.orbit_sizes() != base.orbit_sizes() {
                violations.push(labels(&all, &set));
            }
        }
    }
    let counterexample = if !matched && opts.minimize { Some(minimize(g, k, opts.cap).to_edge_list()) } else { None };
    Ok(CheckCase {
        k,
        defect_set: labels(&all, &defect),
        structural: structural.descriptor.to_string(),
        report,
        defect_set_violations: violations,
        counterexample,
    })
}

fn mismatches(g: &Graph, k: usize, cap: usize) -> bool {
    let Ok(structural) = defect_structure(g, k) else { return false };
    let Ok(s) = FlowSemigroup::enumerate(g, cap) else { return false };
    let Ok(group) = s.defect_group(&default_defect_set(k)) else { return false };
    !matches(&structural.descriptor, &group).0
}

/// Greedily deletes edges and vertices while the graph stays connected,
/// keeps more than `k` vertices and still mismatches.
pub fn minimize(g: &Graph, k: usize, cap: usize) -> Graph {
    let mut current = g.clone();
    loop {
        let edges: Vec<(usize, usize)> = current.edges().collect();
        let by_edge = edges.iter().map(|&(u, v)| current.without_edge(u, v));
        let by_vertex = (0..current.len()).map(|v| {
            let keep: Vec<usize> = (0..current.len()).filter(|&w| w != v).collect();
            current.induced(&keep)
        });
        let smaller = by_vertex
            .chain(by_edge)
            .find(|h| h.len() > k && h.is_connected() && mismatches(h, k, cap));
        match smaller {
            Some(h) => current = h,
            None => return current,
        }
    }
}

/// Checks every `k` in `1..n` for a connected graph.
pub fn check_graph(g: &Graph, opts: CheckOptions) -> Result<Vec<CheckCase>> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let semigroup = FlowSemigroup::enumerate(g, opts.cap)?;
    (1..g.len()).map(|k| check_graph_k(g, &semigroup, k, opts)).collect()
}

/// Checks a digraph with the same defect `k` on every nontrivial strongly
/// connected component, for every `k` that all of them admit. The defect
/// set takes the first `k` vertices of each such component.
pub fn check_digraph(d: &Digraph, opts: CheckOptions) -> Result<Vec<CheckCase>> {
    let all: Vec<String> = d.labels().map(String::from).collect();
    let scc = d.strongly_connected_components();
    let big: Vec<&Vec<usize>> = scc.components.iter().filter(|c| c.len() > 1).collect();
    let Some(max_k) = big.iter().map(|c| c.len() - 1).min() else {
        return Ok(Vec::new());
    };
    let semigroup = FlowSemigroup::enumerate(d, opts.cap)?;
    let mut out = Vec::new();
    for k in 1..=max_k {
        let structural = digraph_structure(d, &uniform_k_choice(d, k))?;
        let mut defect: Vec<usize> = big.iter().flat_map(|c| c[..k].iter().copied()).collect();
        defect.sort_unstable();
        let group = semigroup.defect_group(&defect)?;
        let (_, report) = matches(&structural.descriptor, &group);
        out.push(CheckCase {
            k,
            defect_set: labels(&all, &defect),
            structural: structural.descriptor.to_string(),
            report,
            defect_set_violations: Vec::new(),
            counterexample: None,
        });
    }
    Ok(out)
}

pub fn check_parsed(g: &ParsedGraph, opts: CheckOptions) -> Result<Vec<CheckCase>> {
    match g {
        ParsedGraph::Graph(g) => check_graph(g, opts),
        ParsedGraph::Digraph(d) => check_digraph(d, opts),
    }
}
