//! Explicit collapsing words that realise specific defect group elements.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::perm::{ConcreteGroup, Permutation};
use crate::transform::CollapsingWord;

/// Largest graph `defect1_cycle_generators` will enumerate cycles on.
pub const CYCLE_ENUMERATION_LIMIT: usize = 10;

/// The cycle's vertices in cyclic order, rotated and oriented so that the
/// defect set comes first.
fn arc_order(g: &Graph, defect: &BTreeSet<usize>) -> Result<Vec<usize>> {
    let n = g.len();
    let mut order = vec![0];
    let mut prev = usize::MAX;
    while order.len() < n {
        let cur = *order.last().unwrap();
        let next = g.neighbors(cur).iter().copied().find(|&w| w != prev && !order.contains(&w));
        prev = cur;
        order.push(next.expect("cycle"));
    }
    let k = defect.len();
    for reversed in [false, true] {
        let walk: Vec<usize> = if reversed { order.iter().rev().copied().collect() } else { order.clone() };
        for shift in 0..n {
            let rotated: Vec<usize> = (0..n).map(|i| walk[(i + shift) % n]).collect();
            if rotated[..k].iter().all(|v| defect.contains(v)) {
                return Ok(rotated);
            }
        }
    }
    Err(Error::Precondition("defect set is not a contiguous arc of the cycle".into()))
}

/// A word of defect `k` on the cycle `g` whose restriction to the
/// complement of `defect_set` is one full cycle of those `n - k` vertices.
///
/// With the defect arc `v_1 .. v_k` followed by `u_1 .. u_{n-k}` around the
/// cycle, the word first pushes the arc onto `v_k`, then sends `u_{n-k}`
/// round to `v_k` through `v_1`, shifts each `u_j` to `u_{j+1}` and finally
/// moves everything at `v_k` onto `u_1`.
pub fn cycle_generator_word(g: &Graph, defect_set: &[usize]) -> Result<CollapsingWord> {
    if !g.is_cycle() {
        return Err(Error::Precondition("graph is not a cycle".into()));
    }
    let n = g.len();
    let defect: BTreeSet<usize> = defect_set.iter().copied().collect();
    if defect.is_empty() || defect.len() >= n || defect.iter().any(|&v| v >= n) {
        return Err(Error::InvalidDefect { k: defect.len(), n });
    }
    let k = defect.len();
    let order = arc_order(g, &defect)?;
    let (vs, us) = order.split_at(k);
    let (v1, vk) = (vs[0], vs[k - 1]);
    let last = us[us.len() - 1];

    let mut word = CollapsingWord::along(vs);
    word.push(last, v1);
    word.extend(&CollapsingWord::along(vs));
    for j in (0..us.len() - 1).rev() {
        word.push(us[j], us[j + 1]);
    }
    word.push(vk, us[0]);
    Ok(word)
}

/// Vertices of a transposition configuration: a path `y x_1 .. x_l v` with a
/// second path `u_1 .. u_m` hanging off `x_1`, where `y` and every `x_j` lie
/// in the defect set and `v` and every `u_j` do not.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TranspositionConfig {
    pub y: usize,
    pub x: Vec<usize>,
    pub v: usize,
    pub u: Vec<usize>,
    /// 1-based index of the `u` vertex swapped with `v`.
    pub i: usize,
    pub defect_set: Vec<usize>,
}

impl TranspositionConfig {
    pub fn validate(&self, g: &Graph) -> Result<()> {
        let (l, m, k, n) = (self.x.len(), self.u.len(), self.defect_set.len(), g.len());
        let fail = |msg: &str| Err(Error::Precondition(format!("transposition configuration: {msg}")));
        if m == 0 || m > l || l >= k || k > n.saturating_sub(2) {
            return fail("needs 1 <= m <= l < k <= n - 2");
        }
        if self.i == 0 || self.i > m {
            return fail("index out of range");
        }
        let mut all = vec![self.y, self.v];
        all.extend(&self.x);
        all.extend(&self.u);
        if all.iter().any(|&a| a >= n) || all.iter().collect::<BTreeSet<_>>().len() != all.len() {
            return fail("vertices must be distinct vertices of the graph");
        }
        let defect: BTreeSet<usize> = self.defect_set.iter().copied().collect();
        if defect.len() != k || defect.iter().any(|&a| a >= n) {
            return fail("defect set has repeated or unknown vertices");
        }
        if !defect.contains(&self.y) || !self.x.iter().all(|a| defect.contains(a)) {
            return fail("y and x must lie in the defect set");
        }
        if defect.contains(&self.v) || self.u.iter().any(|a| defect.contains(a)) {
            return fail("v and u must avoid the defect set");
        }
        let mut main = vec![self.y];
        main.extend(&self.x);
        main.push(self.v);
        let mut side = vec![self.x[0]];
        side.extend(&self.u);
        let missing = main.windows(2).chain(side.windows(2)).find(|w| !g.has_edge(w[0], w[1]));
        if let Some(w) = missing {
            return Err(Error::NotAnEdge(g.label(w[0]).into(), g.label(w[1]).into()));
        }
        Ok(())
    }
}

/// A word whose restriction to the complement of the defect set swaps
/// `u_i` and `v` and fixes every other point there.
pub fn transposition_witness(g: &Graph, c: &TranspositionConfig) -> Result<CollapsingWord> {
    c.validate(g)?;
    let (x, u, l, i) = (&c.x, &c.u, c.x.len(), c.i);
    // x_j and u_j are 1-based in the construction.
    let xs = |from: usize, to: usize| -> Vec<usize> {
        if from <= to {
            (from..=to).map(|j| x[j - 1]).collect()
        } else {
            (to..=from).rev().map(|j| x[j - 1]).collect()
        }
    };
    let us = |from: usize, to: usize| -> Vec<usize> {
        if from <= to {
            (from..=to).map(|j| u[j - 1]).collect()
        } else {
            (to..=from).rev().map(|j| u[j - 1]).collect()
        }
    };
    let path = |parts: &[&[usize]]| CollapsingWord::along(&parts.concat());

    let s = path(&[&[c.v], &xs(l, 1), &[c.y]]);
    let s1 = path(&[&[u[0]], &xs(1, l), &[c.v]]);
    let p = path(&[&[c.y], &[x[0]], &us(1, i)]);
    let q = path(&[&[c.y], &xs(1, l), &[c.v]]);

    let mut word = CollapsingWord::concat([&s, &s1]);
    if i == 1 {
        word.extend(&p);
        return Ok(word);
    }
    for j in 2..=i {
        word.extend(&path(&[&us(j, 1), &xs(1, l - j + 2)]));
    }
    word.extend(&p);
    word.extend(&path(&[&xs(l - i + 2, 1), &[c.y]]));
    for j in (2..i).rev() {
        word.extend(&path(&[&xs(l - j + 2, 1), &us(1, j)]));
    }
    word.extend(&path(&[&[c.v], &xs(l, 1), &[u[0]]]));
    word.extend(&q);
    Ok(word)
}

/// For every simple cycle `v u_1 .. u_j v` of length at least 3, the cyclic
/// permutation `(u_1 .. u_j)` of `V - {v}`. Points are numbered by position
/// in `V - {v}`. These generate the defect 1 group when `g` is 2-vertex
/// connected; otherwise only cycles through `v` are seen.
pub fn defect1_cycle_generators(g: &Graph, v: usize) -> Result<Vec<Permutation>> {
    let n = g.len();
    if n > CYCLE_ENUMERATION_LIMIT {
        return Err(Error::TooManyVertices { n, max: CYCLE_ENUMERATION_LIMIT });
    }
    if v >= n {
        return Err(Error::UnknownVertex(v.to_string()));
    }
    g.require_connected()?;
    let local = |w: usize| if w < v { w } else { w - 1 };

    fn dfs(g: &Graph, v: usize, path: &mut Vec<usize>, on_path: &mut [bool], found: &mut Vec<Vec<usize>>) {
        let cur = *path.last().unwrap();
        for &w in g.neighbors(cur) {
            if w == v && path.len() >= 3 {
                found.push(path[1..].to_vec());
            } else if w != v && !on_path[w] {
                on_path[w] = true;
                path.push(w);
                dfs(g, v, path, on_path, found);
                path.pop();
                on_path[w] = false;
            }
        }
    }

    let mut cycles = Vec::new();
    let mut on_path = vec![false; n];
    on_path[v] = true;
    dfs(g, v, &mut vec![v], &mut on_path, &mut cycles);

    let gens: BTreeSet<Permutation> = cycles
        .iter()
        .map(|c| {
            let c: Vec<usize> = c.iter().map(|&w| local(w)).collect();
            Permutation::cycle(n - 1, &c)
        })
        .collect();
    Ok(gens.into_iter().collect())
}

/// The group generated by [`defect1_cycle_generators`], labelled like the
/// oracle's defect group for `{v}`.
pub fn defect1_cycle_group(g: &Graph, v: usize) -> Result<ConcreteGroup> {
    let gens = defect1_cycle_generators(g, v)?;
    let points: Vec<usize> = (0..g.len()).filter(|&w| w != v).collect();
    let labels = points.iter().map(|&w| g.label(w).to_string()).collect();
    Ok(ConcreteGroup::generate(points, labels, gens))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{defect_group_oracle, DEFAULT_ORACLE_CAP};

    fn cycle(n: usize) -> Graph {
        let edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_index_edges((0..n).map(|i| format!("c{i}")), &edges).unwrap()
    }

    fn restriction(word: &CollapsingWord, n: usize, points: &[usize]) -> Option<Permutation> {
        let t = word.evaluate(n);
        let map: Option<Vec<usize>> =
            points.iter().map(|&p| points.iter().position(|&q| q == t.apply(p))).collect();
        Permutation::from_map(&map?)
    }

    #[test]
    fn cycle_word_c5_k2_is_a_three_cycle() {
        let g = cycle(5);
        let w = cycle_generator_word(&g, &[1, 2]).unwrap();
        for (a, b) in &w.letters {
            assert!(g.has_edge(*a, *b));
        }
        assert_eq!(w.evaluate(5).defect(), 2);
        let r = restriction(&w, 5, &[0, 3, 4]).unwrap();
        assert_eq!(r.cycles().len(), 1);
        assert_eq!(r.cycles()[0].len(), 3);
    }

    #[test]
    fn cycle_word_c3_k1_is_a_transposition() {
        let w = cycle_generator_word(&cycle(3), &[2]).unwrap();
        assert!(restriction(&w, 3, &[0, 1]).unwrap().is_transposition());
    }

    #[test]
    fn cycle_word_rejects_non_arcs() {
        assert!(cycle_generator_word(&cycle(6), &[0, 2]).is_err());
        assert!(cycle_generator_word(&cycle(6), &[5, 0]).is_ok());
    }

    fn labelled(edges: &[(&str, &str)]) -> Graph {
        Graph::from_label_edges(edges).unwrap()
    }

    #[test]
    fn transposition_smallest_case() {
        // y - x1 - v, x1 - u1, defect {y, x1}
        let g = labelled(&[("y", "x1"), ("x1", "v"), ("x1", "u1")]);
        let id = |s: &str| g.index_of(s).unwrap();
        let c = TranspositionConfig {
            y: id("y"),
            x: vec![id("x1")],
            v: id("v"),
            u: vec![id("u1")],
            i: 1,
            defect_set: vec![id("y"), id("x1")],
        };
        let w = transposition_witness(&g, &c).unwrap();
        let r = restriction(&w, 4, &[id("v"), id("u1")]).unwrap();
        assert!(r.is_transposition());
        let oracle = defect_group_oracle(&g, &c.defect_set, DEFAULT_ORACLE_CAP).unwrap();
        assert!(oracle.contains(&r));
    }

    #[test]
    fn transposition_config_is_validated() {
        let g = labelled(&[("y", "x1"), ("x1", "v"), ("x1", "u1")]);
        let c = TranspositionConfig { y: 0, x: vec![1], v: 2, u: vec![3], i: 1, defect_set: vec![0, 2] };
        assert!(transposition_witness(&g, &c).is_err());
    }

    #[test]
    fn cycle_generators_small_cases() {
        let tri = labelled(&[("a", "b"), ("b", "c"), ("c", "a")]);
        let gens = defect1_cycle_generators(&tri, 2).unwrap();
        assert_eq!(gens, vec![Permutation::transposition(2, 0, 1)]);

        let c4 = cycle(4);
        let grp = defect1_cycle_group(&c4, 0).unwrap();
        assert_eq!(grp.order(), 3);
    }

    #[test]
    fn cycle_generators_agree_with_oracle_on_k4() {
        let k4 = labelled(&[("a", "b"), ("a", "c"), ("a", "d"), ("b", "c"), ("b", "d"), ("c", "d")]);
        let grp = defect1_cycle_group(&k4, 0).unwrap();
        let oracle = defect_group_oracle(&k4, &[0], DEFAULT_ORACLE_CAP).unwrap();
        assert_eq!(grp.elements, oracle.elements);
    }
}
