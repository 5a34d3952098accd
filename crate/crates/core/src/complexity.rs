//! Known values and bounds for the Krohn-Rhodes complexity of flow semigroups.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::decompose::{is_two_edge_connected, is_two_vertex_connected};
use crate::error::{Error, Result};
use crate::graph::{Digraph, Graph};
use crate::structure::smallest_k_full_symmetric;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundRule {
    pub id: String,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexityBounds {
    pub lower: usize,
    pub upper: usize,
    pub exact: bool,
    pub rules: Vec<BoundRule>,
}

impl ComplexityBounds {
    fn new(lower: usize, upper: usize, rules: Vec<BoundRule>) -> Self {
        debug_assert!(lower <= upper);
        ComplexityBounds { lower, upper, exact: lower == upper, rules }
    }
}

impl fmt::Display for ComplexityBounds {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exact {
            write!(f, "cpx = {}", self.lower)
        } else {
            write!(f, "{} <= cpx <= {}", self.lower, self.upper)
        }
    }
}

fn rule(id: &str, detail: String) -> BoundRule {
    BoundRule { id: id.into(), detail }
}

/// Complexity bounds for the flow semigroup of a connected graph on `n >= 2`
/// vertices.
///
/// Always at most `n - 2`, the value for `K_n`, since the semigroup sits
/// inside that of the complete graph. Exactly `n - 2` when 2-vertex
/// connected; at least `n - 3` when 2-edge connected; otherwise at least
/// `n - 1 - k` for the least `k` with full symmetric defect `k` group.
pub fn complexity_bounds(g: &Graph) -> Result<ComplexityBounds> {
    let n = g.len();
    if n < 2 {
        return Err(Error::Precondition("complexity needs at least two vertices".into()));
    }
    g.require_connected()?;
    let upper = n - 2;
    let mut rules = vec![rule(
        "complete_graph_upper",
        format!("contained in the flow semigroup of K_{n}, whose complexity is {upper}"),
    )];
    if is_two_vertex_connected(g) {
        rules.push(rule("two_vertex_connected", format!("2-vertex connected on {n} vertices: exactly {upper}")));
        return Ok(ComplexityBounds::new(upper, upper, rules));
    }
    if is_two_edge_connected(g) {
        rules.push(rule(
            "two_edge_connected",
            format!("2-edge connected on {n} vertices: at least {}; the exact value is an open problem", n - 3),
        ));
        return Ok(ComplexityBounds::new(n - 3, upper, rules));
    }
    let k = smallest_k_full_symmetric(g)?;
    let lower = (n - 1).saturating_sub(k);
    rules.push(rule(
        "full_symmetric_defect",
        format!("defect {k} group is S_{}: at least n - 1 - k = {lower}", n - k),
    ));
    Ok(ComplexityBounds::new(lower, upper, rules))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentBounds {
    pub vertices: Vec<String>,
    pub bounds: ComplexityBounds,
}

/// Bounds per strongly connected component, each through the undirected
/// graph underneath it. One-vertex components have complexity 0.
pub fn complexity_bounds_digraph(d: &Digraph) -> Result<Vec<ComponentBounds>> {
    let scc = d.strongly_connected_components();
    scc.components
        .iter()
        .map(|c| {
            let vertices = c.iter().map(|&v| d.label(v).to_string()).collect();
            let bounds = if c.len() == 1 {
                ComplexityBounds::new(0, 0, vec![rule("singleton_component", "one vertex: exactly 0".into())])
            } else {
                complexity_bounds(&d.induced(c).forget_directions())?
            };
            Ok(ComponentBounds { vertices, bounds })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn examples() {
        assert_eq!(complexity_bounds(&fixtures::complete(4)).unwrap().to_string(), "cpx = 2");
        assert_eq!(complexity_bounds(&fixtures::cycle(5)).unwrap().to_string(), "cpx = 3");
        let bowtie = complexity_bounds(&fixtures::bowtie()).unwrap();
        assert_eq!((bowtie.lower, bowtie.upper, bowtie.exact), (2, 3, false));
        assert!(bowtie.rules.iter().any(|r| r.detail.contains("open")));
        let p3 = complexity_bounds(&fixtures::path(3)).unwrap();
        assert_eq!(p3.to_string(), "0 <= cpx <= 1");
        assert_eq!(complexity_bounds(&fixtures::path(2)).unwrap().to_string(), "cpx = 0");
    }

    #[test]
    fn digraph_examples() {
        let c5 = complexity_bounds_digraph(&fixtures::directed_cycle(5)).unwrap();
        assert_eq!(c5.len(), 1);
        assert_eq!(c5[0].bounds.to_string(), "cpx = 3");
        let dag = Digraph::from_label_edges(&[("a", "b"), ("b", "c")]).unwrap();
        assert!(complexity_bounds_digraph(&dag).unwrap().iter().all(|c| c.bounds.to_string() == "cpx = 0"));
    }

    #[test]
    fn bounds_are_ordered_on_small_graphs() {
        for n in 2..=5 {
            for g in fixtures::enumerate_connected_graphs(n) {
                let b = complexity_bounds(&g).unwrap();
                assert!(b.lower <= b.upper);
                assert_eq!(b.exact, b.lower == b.upper);
                if is_two_vertex_connected(&g) {
                    assert_eq!(b.lower, n - 2);
                    assert!(n < 3 || b.lower >= n - 3);
                }
            }
        }
    }
}
