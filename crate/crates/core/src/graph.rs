//! Simple graphs and loop-free digraphs over string-labelled vertices.
//!
//! Vertices are stored densely in declaration order; every algorithm in the
//! crate works on the dense indices and maps back to labels only for output.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use indexmap::IndexSet;
use petgraph::algo::tarjan_scc;
use petgraph::graph::{DiGraph, NodeIndex};

use crate::error::{Error, ParseError, ParseErrorKind, Result};

/// Undirected simple graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    labels: IndexSet<String>,
    adj: Vec<Vec<usize>>,
}

/// Directed graph without loop edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Digraph {
    labels: IndexSet<String>,
    out: Vec<Vec<usize>>,
}

/// Result of parsing an edge-list document.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParsedGraph {
    Graph(Graph),
    Digraph(Digraph),
}

fn label_set<I, S>(labels: I) -> Result<IndexSet<String>>
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let mut set = IndexSet::new();
    for l in labels {
        let l = l.into();
        if !set.insert(l.clone()) {
            return Err(Error::Precondition(format!("duplicate vertex label `{l}`")));
        }
    }
    Ok(set)
}

impl Graph {
    /// Graph on `labels` with no edges.
    pub fn empty<I, S>(labels: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let labels = label_set(labels)?;
        let adj = vec![Vec::new(); labels.len()];
        Ok(Graph { labels, adj })
    }

    /// Graph with vertices `0..n` labelled by their index.
    pub fn with_vertices(n: usize) -> Self {
        Graph::empty((0..n).map(|i| i.to_string())).expect("distinct labels")
    }

    /// Builds a graph from index pairs; loops and duplicates are rejected.
    pub fn from_index_edges<I, S>(labels: I, edges: &[(usize, usize)]) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut g = Graph::empty(labels)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Builds a graph from label pairs, declaring vertices in first-seen order.
    pub fn from_label_edges(edges: &[(&str, &str)]) -> Result<Self> {
        let mut labels = IndexSet::new();
        for (u, v) in edges {
            labels.insert(u.to_string());
            labels.insert(v.to_string());
        }
        let mut g = Graph { adj: vec![Vec::new(); labels.len()], labels };
        for (u, v) in edges {
            let (a, b) = (g.index_of(u)?, g.index_of(v)?);
            g.add_edge(a, b)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let n = self.len();
        if u >= n || v >= n {
            return Err(Error::Precondition(format!("edge ({u}, {v}) out of range")));
        }
        if u == v {
            return Err(Error::Precondition(format!("loop edge on `{}`", self.label(u))));
        }
        match self.adj[u].binary_search(&v) {
            Ok(_) => Err(Error::Precondition(format!(
                "duplicate edge {} {}",
                self.label(u),
                self.label(v)
            ))),
            Err(pos) => {
                self.adj[u].insert(pos, v);
                let pos = self.adj[v].binary_search(&u).unwrap_err();
                self.adj[v].insert(pos, u);
                Ok(())
            }
        }
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn labels(&self) -> impl Iterator<Item = &str> {
        self.labels.iter().map(String::as_str)
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.labels
            .get_index_of(label)
            .ok_or_else(|| Error::UnknownVertex(label.to_string()))
    }

    /// Sorted neighbour list.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, ns)| ns.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    /// The graph seen as a digraph with every edge directed both ways.
    pub fn to_digraph(&self) -> Digraph {
        Digraph { labels: self.labels.clone(), out: self.adj.clone() }
    }

    /// Induced subgraph on `vertices`, numbered in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut local = vec![usize::MAX; self.len()];
        for (i, &v) in vertices.iter().enumerate() {
            local[v] = i;
        }
        let labels = vertices.iter().map(|&v| self.labels[v].clone()).collect();
        let adj = vertices
            .iter()
            .map(|&v| {
                let mut ns: Vec<usize> = self.adj[v]
                    .iter()
                    .filter_map(|&w| (local[w] != usize::MAX).then_some(local[w]))
                    .collect();
                ns.sort_unstable();
                ns
            })
            .collect();
        Graph { labels, adj }
    }

    /// The same graph with its vertices relabelled by `perm` (vertex `i`
    /// becomes vertex `perm[i]`, keeping its label).
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.len());
        let mut order = vec![0; self.len()];
        for (i, &p) in perm.iter().enumerate() {
            order[p] = i;
        }
        let labels = order.iter().map(|&i| self.labels[i].clone()).collect();
        let mut adj = vec![Vec::new(); self.len()];
        for (u, ns) in self.adj.iter().enumerate() {
            let mut mapped: Vec<usize> = ns.iter().map(|&v| perm[v]).collect();
            mapped.sort_unstable();
            adj[perm[u]] = mapped;
        }
        Graph { labels, adj }
    }

    pub fn without_edge(&self, u: usize, v: usize) -> Graph {
        let mut g = self.clone();
        g.adj[u].retain(|&w| w != v);
        g.adj[v].retain(|&w| w != u);
        g
    }

    /// Breadth-first distances from a set of sources; `None` means unreachable.
    pub fn bfs_distances(&self, sources: &[usize]) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.len()];
        let mut queue = VecDeque::new();
        for &s in sources {
            if dist[s].is_none() {
                dist[s] = Some(0);
                queue.push_back(s);
            }
        }
        while let Some(u) = queue.pop_front() {
            let d = dist[u].unwrap() + 1;
            for &w in &self.adj[u] {
                if dist[w].is_none() {
                    dist[w] = Some(d);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.len()];
        let mut comps = Vec::new();
        for s in 0..self.len() {
            if seen[s] {
                continue;
            }
            let dist = self.bfs_distances(&[s]);
            let comp: Vec<usize> = (0..self.len()).filter(|&v| dist[v].is_some()).collect();
            for &v in &comp {
                seen[v] = true;
            }
            comps.push(comp);
        }
        comps
    }

    /// True for the empty graph and for every graph with one component.
    pub fn is_connected(&self) -> bool {
        self.is_empty() || self.bfs_distances(&[0]).iter().all(Option::is_some)
    }

    pub(crate) fn require_connected(&self) -> Result<()> {
        if self.is_connected() {
            Ok(())
        } else {
            Err(Error::Disconnected)
        }
    }

    /// A connected graph on at least 3 vertices, all of degree 2.
    pub fn is_cycle(&self) -> bool {
        self.len() >= 3 && self.adj.iter().all(|ns| ns.len() == 2) && self.is_connected()
    }

    /// A connected graph with `n - 1` edges and maximum degree at most 2.
    pub fn is_path(&self) -> bool {
        !self.is_empty()
            && self.edge_count() + 1 == self.len()
            && self.adj.iter().all(|ns| ns.len() <= 2)
            && self.is_connected()
    }

    /// A proper 2-colouring if one exists.
    pub fn two_coloring(&self) -> Option<Vec<bool>> {
        let mut color: Vec<Option<bool>> = vec![None; self.len()];
        for s in 0..self.len() {
            if color[s].is_some() {
                continue;
            }
            color[s] = Some(false);
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                let cu = color[u].unwrap();
                for &w in &self.adj[u] {
                    match color[w] {
                        None => {
                            color[w] = Some(!cu);
                            queue.push_back(w);
                        }
                        Some(cw) if cw == cu => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(color.into_iter().map(Option::unwrap).collect())
    }

    pub fn is_bipartite(&self) -> bool {
        self.two_coloring().is_some()
    }

    /// Renders the graph in the edge-list text format.
    pub fn to_edge_list(&self) -> String {
        render_edge_list("graph", &self.labels, self.edges())
    }
}

impl Digraph {
    pub fn empty<I, S>(labels: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let labels = label_set(labels)?;
        let out = vec![Vec::new(); labels.len()];
        Ok(Digraph { labels, out })
    }

    pub fn from_index_edges<I, S>(labels: I, edges: &[(usize, usize)]) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut d = Digraph::empty(labels)?;
        for &(u, v) in edges {
            d.add_edge(u, v)?;
        }
        Ok(d)
    }

    pub fn from_label_edges(edges: &[(&str, &str)]) -> Result<Self> {
        let mut labels = IndexSet::new();
        for (u, v) in edges {
            labels.insert(u.to_string());
            labels.insert(v.to_string());
        }
        let mut d = Digraph { out: vec![Vec::new(); labels.len()], labels };
        for (u, v) in edges {
            let (a, b) = (d.index_of(u)?, d.index_of(v)?);
            d.add_edge(a, b)?;
        }
        Ok(d)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let n = self.len();
        if u >= n || v >= n {
            return Err(Error::Precondition(format!("edge ({u}, {v}) out of range")));
        }
        if u == v {
            return Err(Error::Precondition(format!("loop edge on `{}`", self.label(u))));
        }
        match self.out[u].binary_search(&v) {
            Ok(_) => Err(Error::Precondition(format!(
                "duplicate edge {} {}",
                self.label(u),
                self.label(v)
            ))),
            Err(pos) => {
                self.out[u].insert(pos, v);
                Ok(())
            }
        }
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn edge_count(&self) -> usize {
        self.out.iter().map(Vec::len).sum()
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn labels(&self) -> impl Iterator<Item = &str> {
        self.labels.iter().map(String::as_str)
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.labels
            .get_index_of(label)
            .ok_or_else(|| Error::UnknownVertex(label.to_string()))
    }

    pub fn successors(&self, v: usize) -> &[usize] {
        &self.out[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.out[u].binary_search(&v).is_ok()
    }

    /// Directed edges in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.out
            .iter()
            .enumerate()
            .flat_map(|(u, ns)| ns.iter().map(move |&v| (u, v)))
    }

    /// Underlying undirected graph: `uv` is an edge iff `u -> v` or `v -> u` is.
    pub fn forget_directions(&self) -> Graph {
        let mut adj: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); self.len()];
        for (u, v) in self.edges() {
            adj[u].insert(v);
            adj[v].insert(u);
        }
        Graph {
            labels: self.labels.clone(),
            adj: adj.into_iter().map(|s| s.into_iter().collect()).collect(),
        }
    }

    /// Induced sub-digraph on `vertices`, numbered in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Digraph {
        let mut local = vec![usize::MAX; self.len()];
        for (i, &v) in vertices.iter().enumerate() {
            local[v] = i;
        }
        let labels = vertices.iter().map(|&v| self.labels[v].clone()).collect();
        let out = vertices
            .iter()
            .map(|&v| {
                let mut ns: Vec<usize> = self.out[v]
                    .iter()
                    .filter_map(|&w| (local[w] != usize::MAX).then_some(local[w]))
                    .collect();
                ns.sort_unstable();
                ns
            })
            .collect();
        Digraph { labels, out }
    }

    /// Shortest directed path from `from` to `to`, both ends included.
    pub fn shortest_path(&self, from: usize, to: usize) -> Option<Vec<usize>> {
        let mut prev = vec![usize::MAX; self.len()];
        let mut seen = vec![false; self.len()];
        seen[from] = true;
        let mut queue = VecDeque::from([from]);
        while let Some(u) = queue.pop_front() {
            if u == to {
                let mut path = vec![to];
                let mut cur = to;
                while cur != from {
                    cur = prev[cur];
                    path.push(cur);
                }
                path.reverse();
                return Some(path);
            }
            for &w in &self.out[u] {
                if !seen[w] {
                    seen[w] = true;
                    prev[w] = u;
                    queue.push_back(w);
                }
            }
        }
        None
    }

    /// Strongly connected components and the condensation DAG.
    pub fn strongly_connected_components(&self) -> SccDecomposition {
        let mut pg = DiGraph::<(), ()>::with_capacity(self.len(), self.edge_count());
        for _ in 0..self.len() {
            pg.add_node(());
        }
        for (u, v) in self.edges() {
            pg.add_edge(NodeIndex::new(u), NodeIndex::new(v), ());
        }
        let mut components: Vec<Vec<usize>> = tarjan_scc(&pg)
            .into_iter()
            .map(|c| {
                let mut c: Vec<usize> = c.into_iter().map(NodeIndex::index).collect();
                c.sort_unstable();
                c
            })
            .collect();
        components.sort_unstable_by_key(|c| c[0]);
        let mut component_of = vec![0; self.len()];
        for (i, c) in components.iter().enumerate() {
            for &v in c {
                component_of[v] = i;
            }
        }
        let dag: BTreeSet<(usize, usize)> = self
            .edges()
            .map(|(u, v)| (component_of[u], component_of[v]))
            .filter(|(a, b)| a != b)
            .collect();
        SccDecomposition { components, component_of, dag: dag.into_iter().collect() }
    }

    pub fn to_edge_list(&self) -> String {
        render_edge_list("digraph", &self.labels, self.edges())
    }
}

/// Partition of a digraph into strongly connected components.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SccDecomposition {
    /// Sorted vertex lists, ordered by smallest member.
    pub components: Vec<Vec<usize>>,
    pub component_of: Vec<usize>,
    /// Arcs of the condensation, as component index pairs.
    pub dag: Vec<(usize, usize)>,
}

fn render_edge_list(
    header: &str,
    labels: &IndexSet<String>,
    edges: impl Iterator<Item = (usize, usize)>,
) -> String {
    let mut out = String::from(header);
    out.push('\n');
    out.push_str("vertices:");
    for l in labels {
        out.push(' ');
        out.push_str(l);
    }
    out.push('\n');
    for (u, v) in edges {
        out.push_str(&labels[u]);
        out.push(' ');
        out.push_str(&labels[v]);
        out.push('\n');
    }
    out
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_edge_list())
    }
}

impl fmt::Display for Digraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_edge_list())
    }
}

/// Parses the edge-list text format.
///
/// The first significant line is `graph` or `digraph`. Every later line that
/// is neither blank nor a `#` comment is either `u v` (an edge) or
/// `vertices: a b c ...`. Without a `vertices:` line, edge endpoints are
/// declared implicitly in order of first appearance. With one (or more), the
/// listed vertices are the whole vertex set, in listed order, and an edge
/// endpoint outside it is an error.
pub fn parse_graph(text: &str) -> std::result::Result<ParsedGraph, ParseError> {
    let err = |line: usize, kind| ParseError { line, kind };
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (header_line, header) = lines.next().ok_or(err(1, ParseErrorKind::MissingHeader))?;
    let directed = match header {
        "graph" => false,
        "digraph" => true,
        other => return Err(err(header_line, ParseErrorKind::BadHeader(other.to_string()))),
    };

    let mut declared: IndexSet<String> = IndexSet::new();
    let mut has_declaration = false;
    let mut edge_lines: Vec<(usize, &str, &str)> = Vec::new();
    for (no, line) in lines {
        if let Some(rest) = line.strip_prefix("vertices:") {
            has_declaration = true;
            for v in rest.split_whitespace() {
                if !declared.insert(v.to_string()) {
                    return Err(err(no, ParseErrorKind::DuplicateVertex(v.to_string())));
                }
            }
            continue;
        }
        let mut parts = line.split_whitespace();
        match (parts.next(), parts.next(), parts.next()) {
            (Some(u), Some(v), None) => edge_lines.push((no, u, v)),
            _ => return Err(err(no, ParseErrorKind::Malformed)),
        }
    }

    let mut labels = declared;
    for &(no, u, v) in &edge_lines {
        for x in [u, v] {
            if has_declaration {
                if !labels.contains(x) {
                    return Err(err(no, ParseErrorKind::UndeclaredVertex(x.to_string())));
                }
            } else {
                labels.insert(x.to_string());
            }
        }
    }

    let n = labels.len();
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
    for &(no, u, v) in &edge_lines {
        if u == v {
            return Err(err(no, ParseErrorKind::LoopEdge(u.to_string())));
        }
        let a = labels.get_index_of(u).unwrap();
        let b = labels.get_index_of(v).unwrap();
        let dup = adj[a].contains(&b) || (!directed && adj[b].contains(&a));
        if dup {
            return Err(err(no, ParseErrorKind::DuplicateEdge(u.to_string(), v.to_string())));
        }
        adj[a].push(b);
        if !directed {
            adj[b].push(a);
        }
    }
    for ns in &mut adj {
        ns.sort_unstable();
    }
    Ok(if directed {
        ParsedGraph::Digraph(Digraph { labels, out: adj })
    } else {
        ParsedGraph::Graph(Graph { labels, adj })
    })
}
