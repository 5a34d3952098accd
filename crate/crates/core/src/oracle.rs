//! Brute-force ground truth: the flow semigroup enumerated element by
//! element, and defect groups read off it straight from their definition.

use std::collections::{BTreeSet, HashSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Digraph, Graph};
use crate::perm::{ConcreteGroup, Permutation};
use crate::transform::{CollapsingWord, Transformation, MAX_POINTS};

/// Default closure size limit. Covers `7^7`, every map on seven points.
pub const DEFAULT_ORACLE_CAP: usize = 2_000_000;

/// Anything whose directed edges generate a flow semigroup. An undirected
/// graph contributes both directions of every edge.
pub trait FlowSource {
    fn vertex_count(&self) -> usize;
    fn vertex_label(&self, v: usize) -> &str;
    fn has_arc(&self, u: usize, v: usize) -> bool;
    fn arcs(&self) -> Vec<(usize, usize)>;
}

impl FlowSource for Graph {
    fn vertex_count(&self) -> usize {
        self.len()
    }

    fn vertex_label(&self, v: usize) -> &str {
        self.label(v)
    }

    fn has_arc(&self, u: usize, v: usize) -> bool {
        self.has_edge(u, v)
    }

    fn arcs(&self) -> Vec<(usize, usize)> {
        self.edges().flat_map(|(u, v)| [(u, v), (v, u)]).collect()
    }
}

impl FlowSource for Digraph {
    fn vertex_count(&self) -> usize {
        self.len()
    }

    fn vertex_label(&self, v: usize) -> &str {
        self.label(v)
    }

    fn has_arc(&self, u: usize, v: usize) -> bool {
        self.has_edge(u, v)
    }

    fn arcs(&self) -> Vec<(usize, usize)> {
        self.edges().collect()
    }
}

fn check_size(n: usize) -> Result<()> {
    if n > MAX_POINTS {
        Err(Error::TooManyVertices { n, max: MAX_POINTS })
    } else {
        Ok(())
    }
}

/// `e_uv` for an arc of `g`.
pub fn elementary_collapsing<G: FlowSource>(g: &G, u: usize, v: usize) -> Result<Transformation> {
    check_size(g.vertex_count())?;
    let n = g.vertex_count();
    if u >= n || v >= n || !g.has_arc(u, v) {
        let label = |x: usize| if x < n { g.vertex_label(x).to_string() } else { x.to_string() };
        return Err(Error::NotAnEdge(label(u), label(v)));
    }
    Ok(Transformation::collapsing(n, u, v))
}

/// Closure of `generators` under composition, sorted.
///
/// Breadth-first: every element found is multiplied on the right by every
/// generator. Fails as soon as more than `cap` distinct elements are known.
pub fn semigroup_closure(generators: &[Transformation], cap: usize) -> Result<Vec<Transformation>> {
    let Some(first) = generators.first() else {
        return Ok(Vec::new());
    };
    let n = first.len();
    if generators.iter().any(|g| g.len() != n) {
        return Err(Error::Precondition("generators act on different point sets".into()));
    }
    let gens: Vec<Transformation> = generators.iter().copied().collect::<BTreeSet<_>>().into_iter().collect();
    if gens.len() > cap {
        return Err(Error::OracleTooLarge { cap });
    }
    let mut seen: HashSet<u64> = gens.iter().map(Transformation::packed).collect();
    let mut found: Vec<u64> = gens.iter().map(Transformation::packed).collect();
    let mut next = 0;
    while next < found.len() {
        let s = Transformation::from_packed(n, found[next]);
        next += 1;
        for g in &gens {
            let t = s.then(g).packed();
            if seen.insert(t) {
                found.push(t);
                if found.len() > cap {
                    return Err(Error::OracleTooLarge { cap });
                }
            }
        }
    }
    found.sort_unstable();
    Ok(found.into_iter().map(|p| Transformation::from_packed(n, p)).collect())
}

/// The flow semigroup of a (di)graph, fully enumerated.
#[derive(Debug, Clone)]
pub struct FlowSemigroup {
    labels: Vec<String>,
    elements: Vec<Transformation>,
}

impl FlowSemigroup {
    pub fn enumerate<G: FlowSource>(g: &G, cap: usize) -> Result<Self> {
        let n = g.vertex_count();
        check_size(n)?;
        let gens: Vec<Transformation> = g
            .arcs()
            .into_iter()
            .map(|(u, v)| Transformation::collapsing(n, u, v))
            .collect();
        let elements = semigroup_closure(&gens, cap)?;
        let labels = (0..n).map(|v| g.vertex_label(v).to_string()).collect();
        Ok(FlowSemigroup { labels, elements })
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    /// Elements in sorted order.
    pub fn elements(&self) -> &[Transformation] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, t: &Transformation) -> bool {
        self.elements.binary_search(t).is_ok()
    }

    /// Defect group with defect set `defect_set`: restrictions to the
    /// complement `P` of all elements `s` with `Ps = P` and `V_k s ⊆ P`.
    pub fn defect_group(&self, defect_set: &[usize]) -> Result<ConcreteGroup> {
        let n = self.vertex_count();
        let defect: BTreeSet<usize> = defect_set.iter().copied().collect();
        if defect.is_empty() || defect.len() >= n || defect.iter().any(|&v| v >= n) {
            return Err(Error::InvalidDefect { k: defect.len(), n });
        }
        let points: Vec<usize> = (0..n).filter(|v| !defect.contains(v)).collect();
        let mask = points.iter().fold(0u32, |m, &v| m | (1 << v));
        let mut local = vec![usize::MAX; n];
        for (i, &v) in points.iter().enumerate() {
            local[v] = i;
        }

        let mut restricted: BTreeSet<Permutation> = BTreeSet::new();
        for s in &self.elements {
            if s.image_mask() != mask {
                continue;
            }
            let on_points = points.iter().fold(0u32, |m, &v| m | (1 << s.apply(v)));
            if on_points != mask {
                continue;
            }
            let map: Vec<usize> = points.iter().map(|&v| local[s.apply(v)]).collect();
            restricted.insert(Permutation::from_map(&map).expect("bijective on P"));
        }
        if restricted.is_empty() {
            return Err(Error::Precondition(
                "no semigroup element has the complement of the defect set as its image".into(),
            ));
        }

        let labels: Vec<String> = points.iter().map(|&v| self.labels[v].clone()).collect();
        let mut generators = Vec::new();
        let mut group = ConcreteGroup::generate(points.clone(), labels.clone(), Vec::new());
        for x in &restricted {
            if !group.contains(x) {
                generators.push(x.clone());
                group = ConcreteGroup::generate(points.clone(), labels.clone(), generators.clone());
            }
        }
        debug_assert_eq!(group.elements, restricted);
        Ok(group)
    }
}

/// Enumerates `S_Γ` and extracts the defect group for `defect_set`.
pub fn defect_group_oracle<G: FlowSource>(g: &G, defect_set: &[usize], cap: usize) -> Result<ConcreteGroup> {
    let n = g.vertex_count();
    let k = defect_set.iter().collect::<BTreeSet<_>>().len();
    if k == 0 || k >= n {
        return Err(Error::InvalidDefect { k, n });
    }
    FlowSemigroup::enumerate(g, cap)?.defect_group(defect_set)
}

/// Why a collapsing is (or is not) in the flow semigroup.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MembershipRule {
    /// `a -> b` is itself an edge.
    Edge,
    /// `b -> a` is an edge on a directed cycle.
    ReversedCycleEdge,
    NotMember,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Membership {
    pub member: bool,
    pub rule: MembershipRule,
    pub witness: Option<CollapsingWord>,
}

/// Decides whether `e_ab` lies in the flow semigroup of `d`.
///
/// When `b -> a` lies on the directed cycle `b -> a -> u_1 -> ... -> u_{m-1} -> b`
/// the witness is `(e_ba e_{u_{m-1} b} ... e_{u_1 u_2} e_{a u_1})^m`, built on a
/// shortest path from `a` back to `b`.
pub fn collapsing_membership(d: &Digraph, a: usize, b: usize) -> Result<Membership> {
    let n = d.len();
    for x in [a, b] {
        if x >= n {
            return Err(Error::UnknownVertex(x.to_string()));
        }
    }
    if a == b {
        return Err(Error::Precondition("membership needs two distinct vertices".into()));
    }
    if d.has_edge(a, b) {
        return Ok(Membership {
            member: true,
            rule: MembershipRule::Edge,
            witness: Some(CollapsingWord::letter(a, b)),
        });
    }
    if d.has_edge(b, a) {
        if let Some(path) = d.shortest_path(a, b) {
            let mut base = CollapsingWord::letter(b, a);
            for w in path.windows(2).rev() {
                base.push(w[0], w[1]);
            }
            let m = path.len() - 1;
            return Ok(Membership {
                member: true,
                rule: MembershipRule::ReversedCycleEdge,
                witness: Some(base.repeat(m)),
            });
        }
    }
    Ok(Membership { member: false, rule: MembershipRule::NotMember, witness: None })
}
