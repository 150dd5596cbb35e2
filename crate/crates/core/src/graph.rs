//! Index-based undirected graphs with self-loops.
//!
//! # Self-loop convention
//!
//! A self-loop `{v, v}` is a single edge and writes a single `1` on the
//! diagonal of the adjacency matrix. With `m` edges of which `s` are loops,
//! the adjacency matrix therefore has exactly `2m - s` nonzero entries, and
//! the "degree" used throughout this crate is the number of nonzero entries
//! in a node's row (a loop contributes one).

use std::collections::VecDeque;
use std::fmt;
use std::hash::{Hash, Hasher};

use serde::{Deserialize, Serialize};

use crate::error::{GraphError, Result};

/// A finite undirected graph on nodes `0..n` where self-loops are allowed.
///
/// Node labels are decoration for I/O; equality and every algorithm only look
/// at the node count and the edge set.
#[derive(Clone)]
pub struct Graph {
    n: usize,
    /// Sorted, deduplicated, each pair stored as `(min, max)`.
    edges: Vec<(usize, usize)>,
    adj: Vec<bool>,
    labels: Option<Vec<String>>,
}

impl Graph {
    /// A graph with `n` nodes and no edges.
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            edges: Vec::new(),
            adj: vec![false; n * n],
            labels: None,
        }
    }

    /// Builds a graph from an edge iterator. Orientation does not matter;
    /// duplicate edges are merged.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(GraphError::Argument(format!(
                    "edge {{{u},{v}}} references a node outside 0..{n}"
                )));
            }
            g.set(u, v);
        }
        g.rebuild_edges();
        Ok(g)
    }

    /// Builds a graph from a symmetric adjacency predicate.
    pub(crate) fn from_fn(n: usize, mut adjacent: impl FnMut(usize, usize) -> bool) -> Self {
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in u..n {
                if adjacent(u, v) {
                    g.set(u, v);
                }
            }
        }
        g.rebuild_edges();
        g
    }

    fn set(&mut self, u: usize, v: usize) {
        self.adj[u * self.n + v] = true;
        self.adj[v * self.n + u] = true;
    }

    fn rebuild_edges(&mut self) {
        self.edges.clear();
        for u in 0..self.n {
            for v in u..self.n {
                if self.adj[u * self.n + v] {
                    self.edges.push((u, v));
                }
            }
        }
    }

    pub fn complete(n: usize) -> Self {
        Graph::from_fn(n, |u, v| u != v)
    }

    /// The path `0 - 1 - ... - (n-1)`.
    pub fn path(n: usize) -> Self {
        Graph::from_fn(n, |u, v| v == u + 1)
    }

    /// The cycle `0 - 1 - ... - (n-1) - 0`; requires `n >= 3`.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a simple cycle needs at least three nodes");
        Graph::from_fn(n, |u, v| v == u + 1 || (u == 0 && v == n - 1))
    }

    /// The star `K_{1,leaves}` with center 0.
    pub fn star(leaves: usize) -> Self {
        Graph::from_fn(leaves + 1, |u, v| u == 0 && v != 0)
    }

    /// `L1`: one node carrying a self-loop, the identity of the direct product.
    pub fn looped_node() -> Self {
        Graph::empty(1).with_loop(0)
    }

    /// `D2`: two looped nodes and no other edge. Its adjacency matrix is `I2`.
    pub fn d2() -> Self {
        Graph::empty(2).with_loop(0).with_loop(1)
    }

    /// Returns a copy with the edge `{u, v}` added.
    pub fn with_edge(mut self, u: usize, v: usize) -> Self {
        assert!(u < self.n && v < self.n, "edge endpoint out of range");
        self.set(u, v);
        self.rebuild_edges();
        self
    }

    pub fn with_loop(self, v: usize) -> Self {
        self.with_edge(v, v)
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.n {
            return Err(GraphError::Argument(format!(
                "{} labels supplied for {} nodes",
                labels.len(),
                self.n
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn node_count(&self) -> usize {
        self.n
    }

    /// `m`: a self-loop counts as one edge.
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// `s`.
    pub fn loop_count(&self) -> usize {
        self.edges.iter().filter(|(u, v)| u == v).count()
    }

    /// Nonzero entries of the adjacency matrix, `2m - s`.
    pub fn nonzero_count(&self) -> usize {
        2 * self.edge_count() - self.loop_count()
    }

    /// Edges as `(min, max)` pairs in ascending order.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u * self.n + v]
    }

    #[inline]
    pub fn has_loop(&self, v: usize) -> bool {
        self.has_edge(v, v)
    }

    /// Neighbors of `u` in ascending order, including `u` itself if looped.
    pub fn neighbors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        let row = &self.adj[u * self.n..(u + 1) * self.n];
        row.iter().enumerate().filter_map(|(v, &b)| b.then_some(v))
    }

    /// Nonzero entries in row `u` of the adjacency matrix.
    pub fn degree(&self, u: usize) -> usize {
        self.neighbors(u).count()
    }

    /// Relabels node `i` as `perm[i]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        check_permutation(perm, self.n)?;
        Graph::from_edges(self.n, self.edges.iter().map(|&(u, v)| (perm[u], perm[v])))
    }

    /// The subgraph induced by `nodes`, renumbered in the given order.
    pub fn induced_subgraph(&self, nodes: &[usize]) -> Graph {
        Graph::from_fn(nodes.len(), |i, j| self.has_edge(nodes[i], nodes[j]))
    }

    /// Connected components, each sorted, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            let mut comp = self.bfs_from(start, &mut seen);
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Nodes reachable from `start` in BFS order (neighbors ascending),
    /// marking them in `seen`.
    pub(crate) fn bfs_from(&self, start: usize, seen: &mut [bool]) -> Vec<usize> {
        let mut order = vec![start];
        let mut queue = VecDeque::from([start]);
        seen[start] = true;
        while let Some(u) = queue.pop_front() {
            for v in self.neighbors(u) {
                if !seen[v] {
                    seen[v] = true;
                    order.push(v);
                    queue.push_back(v);
                }
            }
        }
        order
    }

    /// True iff every node is reachable from node 0. Rejects the empty graph.
    pub fn is_connected(&self) -> Result<bool> {
        if self.n == 0 {
            return Err(GraphError::Argument(
                "connectivity is undefined for a graph with no nodes".into(),
            ));
        }
        let mut seen = vec![false; self.n];
        Ok(self.bfs_from(0, &mut seen).len() == self.n)
    }

    /// True iff the graph has a proper 2-coloring. A self-loop is an odd
    /// cycle of length one, so any loop makes the graph non-bipartite.
    pub fn is_bipartite(&self) -> bool {
        let mut color: Vec<Option<bool>> = vec![None; self.n];
        for start in 0..self.n {
            if color[start].is_some() {
                continue;
            }
            color[start] = Some(false);
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                let cu = color[u].unwrap();
                for v in self.neighbors(u) {
                    match color[v] {
                        None => {
                            color[v] = Some(!cu);
                            queue.push_back(v);
                        }
                        Some(cv) if cv == cu => return false,
                        Some(_) => {}
                    }
                }
            }
        }
        true
    }

    /// `self ∪ other`: `other`'s nodes are shifted by `self.node_count()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.n;
        let edges = self
            .edges
            .iter()
            .copied()
            .chain(other.edges.iter().map(|&(u, v)| (u + shift, v + shift)));
        let mut g = Graph::from_edges(self.n + other.n, edges).expect("indices in range");
        if let (Some(a), Some(b)) = (&self.labels, &other.labels) {
            g.labels = Some(a.iter().chain(b.iter()).cloned().collect());
        }
        g
    }

    pub fn adjacency_matrix(&self) -> AdjacencyMatrix {
        AdjacencyMatrix {
            order: self.n,
            bits: self.adj.clone(),
        }
    }

    /// Row `u` of the adjacency matrix as a bitmask. Requires `n <= 64`.
    pub(crate) fn row_mask(&self, u: usize) -> u64 {
        debug_assert!(self.n <= 64);
        self.neighbors(u).fold(0u64, |acc, v| acc | (1 << v))
    }
}

pub(crate) fn check_permutation(perm: &[usize], n: usize) -> Result<()> {
    if perm.len() != n {
        return Err(GraphError::Argument(format!(
            "permutation has length {} but the graph has {n} nodes",
            perm.len()
        )));
    }
    let mut seen = vec![false; n];
    for &p in perm {
        if p >= n || std::mem::replace(&mut seen[p], true) {
            return Err(GraphError::Argument(format!(
                "{perm:?} is not a permutation of 0..{n}"
            )));
        }
    }
    Ok(())
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.edges == other.edges
    }
}

impl Eq for Graph {}

impl Hash for Graph {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.n.hash(state);
        self.edges.hash(state);
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges)
    }
}

/// Serialized shape of a graph inside JSON reports.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub nodes: usize,
    pub edges: Vec<(usize, usize)>,
}

impl From<&Graph> for GraphJson {
    fn from(g: &Graph) -> Self {
        GraphJson {
            nodes: g.n,
            edges: g.edges.clone(),
        }
    }
}

impl TryFrom<GraphJson> for Graph {
    type Error = GraphError;

    fn try_from(j: GraphJson) -> Result<Self> {
        Graph::from_edges(j.nodes, j.edges)
    }
}

/// Symmetric 0/1 square matrix. A loop on node `i` is a single `1` at `(i, i)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct AdjacencyMatrix {
    order: usize,
    bits: Vec<bool>,
}

impl AdjacencyMatrix {
    pub fn zero(order: usize) -> Self {
        AdjacencyMatrix {
            order,
            bits: vec![false; order * order],
        }
    }

    pub fn identity(order: usize) -> Self {
        let mut m = AdjacencyMatrix::zero(order);
        for i in 0..order {
            m.bits[i * order + i] = true;
        }
        m
    }

    /// Builds a matrix from rows of 0/1 values, rejecting asymmetric input.
    pub fn from_rows(rows: &[Vec<u8>]) -> Result<Self> {
        let order = rows.len();
        let mut bits = Vec::with_capacity(order * order);
        for row in rows {
            if row.len() != order {
                return Err(GraphError::Argument("matrix is not square".into()));
            }
            for &x in row {
                match x {
                    0 => bits.push(false),
                    1 => bits.push(true),
                    _ => return Err(GraphError::Argument(format!("entry {x} is not 0/1"))),
                }
            }
        }
        let m = AdjacencyMatrix { order, bits };
        if !m.is_symmetric() {
            return Err(GraphError::Argument(
                "adjacency matrix must be symmetric".into(),
            ));
        }
        Ok(m)
    }

    pub(crate) fn from_bits(order: usize, bits: Vec<bool>) -> Self {
        debug_assert_eq!(bits.len(), order * order);
        AdjacencyMatrix { order, bits }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> bool {
        self.bits[i * self.order + j]
    }

    pub fn nonzero_count(&self) -> usize {
        self.bits.iter().filter(|&&b| b).count()
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.order).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn to_graph(&self) -> Graph {
        Graph::from_fn(self.order, |u, v| self.get(u, v))
    }
}

impl fmt::Debug for AdjacencyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "AdjacencyMatrix({})", self.order)?;
        for i in 0..self.order {
            let row: String = (0..self.order)
                .map(|j| if self.get(i, j) { '1' } else { '0' })
                .collect();
            writeln!(f, "  {row}")?;
        }
        Ok(())
    }
}
