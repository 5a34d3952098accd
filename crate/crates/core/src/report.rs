//! Serializable analysis reports and their plain-text rendering.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::complexity::{complexity_bounds, complexity_bounds_digraph, ComplexityBounds, ComponentBounds};
use crate::descriptor::{GroupAnalysis, GroupFactor};
use crate::error::{Error, Result};
use crate::graph::ParsedGraph;
use crate::structure::{defect_structure, digraph_structure, uniform_k_choice, DefectAnalysis, EvidencePart};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InputSummary {
    pub n: usize,
    pub edges: usize,
    pub directed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DefectGroupEntry {
    pub k: usize,
    pub descriptor: String,
    /// Decimal, since orders outgrow every fixed-width integer.
    pub order: String,
    pub factors: Vec<GroupFactor>,
    pub evidence: Vec<EvidencePart>,
}

impl DefectGroupEntry {
    /// `k` is the per-component defect for digraphs.
    pub fn new(k: usize, analysis: &DefectAnalysis) -> Self {
        DefectGroupEntry {
            k,
            descriptor: analysis.descriptor.to_string(),
            order: analysis.descriptor.order().to_string(),
            factors: analysis.descriptor.factors.clone(),
            evidence: analysis.evidence.clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ComplexitySection {
    Graph(ComplexityBounds),
    Digraph { components: Vec<ComponentBounds> },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleSummary {
    pub k: usize,
    pub defect_set: Vec<String>,
    pub semigroup_size: usize,
    pub group: GroupAnalysis,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub input: InputSummary,
    pub defect_groups: Vec<DefectGroupEntry>,
    pub complexity: ComplexitySection,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub oracle: Option<OracleSummary>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<f64>,
}

impl InputSummary {
    pub fn of(g: &ParsedGraph) -> Self {
        match g {
            ParsedGraph::Graph(g) => InputSummary { n: g.len(), edges: g.edge_count(), directed: false },
            ParsedGraph::Digraph(d) => InputSummary { n: d.len(), edges: d.edge_count(), directed: true },
        }
    }
}

/// Every `k` the input admits: `1..n` for a graph, and for a digraph every
/// `k` below the size of each strongly connected component with more than
/// one vertex.
pub fn admissible_defects(g: &ParsedGraph) -> Vec<usize> {
    match g {
        ParsedGraph::Graph(g) => (1..g.len()).collect(),
        ParsedGraph::Digraph(d) => {
            let scc = d.strongly_connected_components();
            let max = scc.components.iter().filter(|c| c.len() > 1).map(|c| c.len() - 1).min().unwrap_or(0);
            (1..=max).collect()
        }
    }
}

/// Structural defect group for `k`; digraphs use `k` on every nontrivial
/// strongly connected component.
pub fn defect_entry(g: &ParsedGraph, k: usize) -> Result<DefectGroupEntry> {
    let analysis = match g {
        ParsedGraph::Graph(g) => defect_structure(g, k)?,
        ParsedGraph::Digraph(d) => {
            if !admissible_defects(g).contains(&k) {
                let smallest = d
                    .strongly_connected_components()
                    .components
                    .iter()
                    .filter(|c| c.len() > 1)
                    .map(Vec::len)
                    .min()
                    .unwrap_or(1);
                return Err(Error::InvalidDefect { k, n: smallest });
            }
            digraph_structure(d, &uniform_k_choice(d, k))?
        }
    };
    Ok(DefectGroupEntry::new(k, &analysis))
}

pub fn complexity_section(g: &ParsedGraph) -> Result<ComplexitySection> {
    Ok(match g {
        ParsedGraph::Graph(g) => ComplexitySection::Graph(complexity_bounds(g)?),
        ParsedGraph::Digraph(d) => ComplexitySection::Digraph { components: complexity_bounds_digraph(d)? },
    })
}

/// Structural report for the given defects. Never runs the oracle.
pub fn analyze(g: &ParsedGraph, defects: &[usize]) -> Result<AnalysisReport> {
    let defect_groups = defects.iter().map(|&k| defect_entry(g, k)).collect::<Result<_>>()?;
    Ok(AnalysisReport {
        input: InputSummary::of(g),
        defect_groups,
        complexity: complexity_section(g)?,
        oracle: None,
        timing_ms: None,
    })
}

pub fn render_complexity(c: &ComplexitySection) -> String {
    let mut out = String::new();
    let mut bounds = |prefix: &str, b: &ComplexityBounds| {
        let note = if b.exact { "" } else { " (not exact)" };
        let _ = writeln!(out, "{prefix}{b}{note}");
        for r in &b.rules {
            let _ = writeln!(out, "{prefix}  [{}] {}", r.id, r.detail);
        }
    };
    match c {
        ComplexitySection::Graph(b) => bounds("", b),
        ComplexitySection::Digraph { components } => {
            for comp in components {
                bounds(&format!("{{{}}}: ", comp.vertices.join(",")), &comp.bounds);
            }
        }
    }
    out
}

pub fn render_text(r: &AnalysisReport) -> String {
    let mut out = String::new();
    let kind = if r.input.directed { "digraph" } else { "graph" };
    let _ = writeln!(out, "{kind}: {} vertices, {} edges", r.input.n, r.input.edges);
    for e in &r.defect_groups {
        let _ = writeln!(out, "G_{} ≅ {} (order {})", e.k, e.descriptor, e.order);
        for part in &e.evidence {
            let _ = writeln!(out, "  {} on {{{}}} [{}]", part.factor.normalized(), part.vertices.join(","), part.rule);
        }
    }
    out.push_str(&render_complexity(&r.complexity));
    if let Some(o) = &r.oracle {
        let _ = writeln!(
            out,
            "oracle: |S| = {}, defect set {{{}}}, group order {}",
            o.semigroup_size,
            o.defect_set.join(","),
            o.group.order
        );
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::parse_graph;

    #[test]
    fn bowtie_text_and_round_trip() {
        let g = parse_graph("graph\nu v\nv w\nw u\nw x\nx y\ny w\n").unwrap();
        let report = analyze(&g, &[1]).unwrap();
        let text = render_text(&report);
        assert!(text.contains("G_1 ≅ S2 x S2 (order 4)"), "{text}");
        assert!(text.contains("2 <= cpx <= 3 (not exact)"));
        let json = serde_json::to_string(&report).unwrap();
        let back: AnalysisReport = serde_json::from_str(&json).unwrap();
        assert_eq!(back, report);
    }

    #[test]
    fn digraph_round_trip() {
        let g = parse_graph("digraph\na b\nb c\nc a\nc d\n").unwrap();
        assert_eq!(admissible_defects(&g), vec![1, 2]);
        let report = analyze(&g, &[1, 2]).unwrap();
        let json = serde_json::to_string_pretty(&report).unwrap();
        let back: AnalysisReport = serde_json::from_str(&json).unwrap();
        assert_eq!(back, report);
        assert!(defect_entry(&g, 3).is_err());
    }
}
