//! Finite simplicial graphs.
//!
//! Vertices are addressed by their position in the graph's vertex list. That
//! list is the canonical total order: word normal forms, fiber products and
//! every search in this crate break ties by it, and serialization preserves it.

mod hairy;
mod io;
mod obstruction;
mod search;
pub mod trees;

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Result};

pub use hairy::HairyDecomposition;
pub use io::{parse_graph, parse_graph_json, parse_graph_text};
pub use obstruction::TripodObstruction;
pub use search::find_induced_embeddings;

/// Vertex label. Nonempty and free of whitespace and of the characters used
/// by the word and extension-vertex syntax (`^ ( ) ; , :`).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct VertexId(String);

impl VertexId {
    pub fn new(label: impl Into<String>) -> Result<Self> {
        let label = label.into();
        if label.is_empty() {
            return Err(invalid("empty vertex label"));
        }
        if let Some(c) = label
            .chars()
            .find(|c| c.is_whitespace() || "^();,:\"".contains(*c))
        {
            return Err(invalid(format!("vertex label {label:?} contains {c:?}")));
        }
        Ok(VertexId(label))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl std::borrow::Borrow<str> for VertexId {
    fn borrow(&self) -> &str {
        &self.0
    }
}

impl TryFrom<String> for VertexId {
    type Error = crate::Error;
    fn try_from(s: String) -> Result<Self> {
        VertexId::new(s)
    }
}

impl From<VertexId> for String {
    fn from(v: VertexId) -> String {
        v.0
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// A finite undirected loop-free graph with an ordered vertex list.
#[derive(Clone)]
pub struct SimplicialGraph {
    labels: Vec<VertexId>,
    index: HashMap<VertexId, usize>,
    // row-major n*n adjacency matrix
    adj: Vec<bool>,
    nbrs: Vec<Vec<usize>>,
}

impl PartialEq for SimplicialGraph {
    fn eq(&self, other: &Self) -> bool {
        self.labels == other.labels && self.adj == other.adj
    }
}

impl Eq for SimplicialGraph {}

impl fmt::Debug for SimplicialGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<String> = self
            .edges()
            .into_iter()
            .map(|(u, v)| format!("{}-{}", self.labels[u], self.labels[v]))
            .collect();
        f.debug_struct("SimplicialGraph")
            .field("vertices", &self.labels)
            .field("edges", &edges)
            .finish()
    }
}

impl SimplicialGraph {
    /// Builds a graph from labels and index pairs. Duplicate edges are merged.
    pub fn new(labels: Vec<VertexId>, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let n = labels.len();
        let mut index = HashMap::with_capacity(n);
        for (i, l) in labels.iter().enumerate() {
            if index.insert(l.clone(), i).is_some() {
                return Err(invalid(format!("duplicate vertex label {l}")));
            }
        }
        let mut adj = vec![false; n * n];
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(invalid(format!("edge ({u}, {v}) out of range for {n} vertices")));
            }
            if u == v {
                return Err(invalid(format!("loop at vertex {}", labels[u])));
            }
            adj[u * n + v] = true;
            adj[v * n + u] = true;
        }
        let nbrs = (0..n)
            .map(|u| (0..n).filter(|&v| adj[u * n + v]).collect())
            .collect();
        Ok(SimplicialGraph { labels, index, adj, nbrs })
    }

    /// Builds a graph from string labels and labelled edges.
    pub fn from_labels(labels: &[&str], edges: &[(&str, &str)]) -> Result<Self> {
        let ids = labels.iter().map(|l| VertexId::new(*l)).collect::<Result<Vec<_>>>()?;
        let lookup: HashMap<&str, usize> = labels.iter().enumerate().map(|(i, l)| (*l, i)).collect();
        let mut pairs = Vec::with_capacity(edges.len());
        for (a, b) in edges {
            let u = *lookup.get(a).ok_or_else(|| invalid(format!("unknown vertex {a}")))?;
            let v = *lookup.get(b).ok_or_else(|| invalid(format!("unknown vertex {b}")))?;
            pairs.push((u, v));
        }
        SimplicialGraph::new(ids, pairs)
    }

    /// Path `x1 - x2 - ... - xn`.
    pub fn path(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(invalid("path graph needs at least one vertex"));
        }
        Self::numbered("x", n, (1..n).map(|i| (i - 1, i)))
    }

    /// Cycle `x1 - ... - xn - x1`.
    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(invalid(format!("cycle needs at least 3 vertices, got {n}")));
        }
        Self::numbered("x", n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    fn numbered(prefix: &str, n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let labels = (1..=n).map(|i| VertexId(format!("{prefix}{i}"))).collect();
        SimplicialGraph::new(labels, edges)
    }

    /// Tripod with legs of `p`, `q` and `r` vertices. The center is `x`; the
    /// legs are `a1..ap`, `b1..bq`, `c1..cr`, numbered outwards from the center.
    pub fn tripod(p: usize, q: usize, r: usize) -> Result<Self> {
        if p == 0 || q == 0 || r == 0 {
            return Err(invalid(format!("tripod legs must be nonempty, got ({p}, {q}, {r})")));
        }
        let mut labels = vec![VertexId("x".into())];
        let mut edges = Vec::new();
        for (name, len) in [("a", p), ("b", q), ("c", r)] {
            let mut prev = 0;
            for i in 1..=len {
                labels.push(VertexId(format!("{name}{i}")));
                let cur = labels.len() - 1;
                edges.push((prev, cur));
                prev = cur;
            }
        }
        SimplicialGraph::new(labels, edges)
    }

    /// The tripod `T_{2,2,2}` labelled with center `x`, neighbours `a b c`
    /// and leaves `p q r` (`p-a`, `q-b`, `r-c`).
    pub fn t2() -> Self {
        SimplicialGraph::from_labels(
            &["x", "a", "b", "c", "p", "q", "r"],
            &[("x", "a"), ("x", "b"), ("x", "c"), ("a", "p"), ("b", "q"), ("c", "r")],
        )
        .expect("static graph")
    }

    /// Complete graph on `x1..xn`.
    pub fn complete(n: usize) -> Self {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        Self::numbered("x", n, edges).expect("static graph")
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.nbrs.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[VertexId] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &VertexId {
        &self.labels[v]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.index.get(label).copied()
    }

    /// Like [`index_of`](Self::index_of) but reports an unknown label as an error.
    pub fn vertex(&self, label: &str) -> Result<usize> {
        self.index_of(label)
            .ok_or_else(|| invalid(format!("unknown vertex {label}")))
    }

    pub fn index_of_id(&self, id: &VertexId) -> Option<usize> {
        self.index.get(id).copied()
    }

    #[inline]
    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u * self.labels.len() + v]
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.nbrs[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.nbrs[v].len()
    }

    /// `Lk(v)`: the neighbours of `v`.
    pub fn link(&self, v: usize) -> Result<Vec<usize>> {
        self.check_vertex(v)?;
        Ok(self.nbrs[v].clone())
    }

    /// All edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.vertex_count())
            .flat_map(|u| self.nbrs[u].iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
            .collect()
    }

    pub fn complement(&self) -> Self {
        let n = self.vertex_count();
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        let edges: Vec<_> = edges.filter(|&(u, v)| !self.adjacent(u, v)).collect();
        SimplicialGraph::new(self.labels.clone(), edges).expect("labels already validated")
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.vertex_count() {
            Ok(())
        } else {
            Err(invalid(format!("vertex index {v} out of range")))
        }
    }

    fn check_set(&self, set: &[usize]) -> Result<()> {
        set.iter().try_for_each(|&v| self.check_vertex(v))
    }

    /// Subgraph induced by `set`, with vertices kept in canonical order.
    pub fn induced(&self, set: &[usize]) -> Result<Self> {
        self.check_set(set)?;
        let mut keep: Vec<usize> = set.to_vec();
        keep.sort_unstable();
        keep.dedup();
        Ok(self.induced_ordered(&keep))
    }

    /// Subgraph induced by `order`, whose vertex list follows `order` exactly.
    /// `order` must be duplicate free and in range.
    pub(crate) fn induced_ordered(&self, order: &[usize]) -> Self {
        let labels = order.iter().map(|&v| self.labels[v].clone()).collect();
        let mut edges = Vec::new();
        for (i, &u) in order.iter().enumerate() {
            for (j, &v) in order.iter().enumerate().skip(i + 1) {
                if self.adjacent(u, v) {
                    edges.push((i, j));
                }
            }
        }
        SimplicialGraph::new(labels, edges).expect("subgraph of a valid graph")
    }

    /// `G \ set`: the subgraph induced by the remaining vertices.
    pub fn remove(&self, set: &[usize]) -> Result<Self> {
        self.check_set(set)?;
        let keep: Vec<usize> = (0..self.vertex_count()).filter(|v| !set.contains(v)).collect();
        Ok(self.induced_ordered(&keep))
    }

    pub fn is_independent(&self, set: &[usize]) -> bool {
        set.iter()
            .enumerate()
            .all(|(i, &u)| set[i + 1..].iter().all(|&v| u != v && !self.adjacent(u, v)))
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut comp = vec![start];
            let mut stack = vec![start];
            while let Some(u) = stack.pop() {
                for &v in &self.nbrs[u] {
                    if !seen[v] {
                        seen[v] = true;
                        comp.push(v);
                        stack.push(v);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    pub fn is_tree(&self) -> bool {
        !self.is_empty() && self.is_connected() && self.edge_count() + 1 == self.vertex_count()
    }

    /// Whether the vertices in `set` span a connected induced subgraph.
    pub fn spans_connected(&self, set: &[usize]) -> bool {
        match self.induced(set) {
            Ok(sub) => sub.is_connected(),
            Err(_) => false,
        }
    }

    /// Breadth-first distances from `start` (`usize::MAX` when unreachable).
    pub fn distances_from(&self, start: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.vertex_count()];
        let mut queue = std::collections::VecDeque::new();
        dist[start] = 0;
        queue.push_back(start);
        while let Some(u) = queue.pop_front() {
            for &v in &self.nbrs[u] {
                if dist[v] == usize::MAX {
                    dist[v] = dist[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    /// The lexicographically first maximum independent set.
    pub fn first_maximum_independent_set(&self) -> Vec<usize> {
        let n = self.vertex_count();
        let mut best: Vec<usize> = Vec::new();
        let mut cur = Vec::new();
        // candidates are tried in increasing order, so the first set reaching
        // a new maximum size is the lexicographically first of that size
        fn grow(g: &SimplicialGraph, next: usize, cur: &mut Vec<usize>, best: &mut Vec<usize>) {
            let n = g.vertex_count();
            if cur.len() > best.len() {
                *best = cur.clone();
            }
            if cur.len() + (n - next) <= best.len() {
                return;
            }
            for v in next..n {
                if cur.len() + (n - v) <= best.len() {
                    return;
                }
                if cur.iter().all(|&u| !g.adjacent(u, v)) {
                    cur.push(v);
                    grow(g, v + 1, cur, best);
                    cur.pop();
                }
            }
        }
        if n > 0 {
            grow(self, 0, &mut cur, &mut best);
        }
        best
    }

    /// Replaces every label, keeping structure and order.
    pub fn relabeled(&self, labels: Vec<VertexId>) -> Result<Self> {
        if labels.len() != self.vertex_count() {
            return Err(invalid("label count does not match vertex count"));
        }
        SimplicialGraph::new(labels, self.edges())
    }

    /// Whether `map` (indexed by vertices of `pattern`) is an injective map
    /// into this graph preserving adjacency and non-adjacency.
    pub fn is_induced_embedding(&self, pattern: &SimplicialGraph, map: &[usize]) -> bool {
        if map.len() != pattern.vertex_count() || map.iter().any(|&v| v >= self.vertex_count()) {
            return false;
        }
        (0..map.len()).all(|i| {
            (i + 1..map.len())
                .all(|j| map[i] != map[j] && pattern.adjacent(i, j) == self.adjacent(map[i], map[j]))
        })
    }
}

pub(crate) fn fresh_label(g_labels: &[VertexId], wanted: String, taken: &[VertexId]) -> VertexId {
    let mut label = wanted;
    while g_labels.iter().chain(taken).any(|l| l.0 == label) {
        label.push('\'');
    }
    VertexId(label)
}
