//! Cartesian, direct, strong and lexicographic graph products, and the
//! Kronecker product of adjacency matrices.
//!
//! Product nodes are indexed row-major: the pair `(x, y)` with `x` in the left
//! factor and `y` in the right factor is node `x * n2 + y`. Under this
//! indexing the adjacency matrix of a direct product is exactly the Kronecker
//! product of the factor matrices, with no permutation needed.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{GraphError, Result};
use crate::graph::{AdjacencyMatrix, Graph};

pub const DEFAULT_PRODUCT_MAX_NODES: usize = 4096;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ProductKind {
    Cartesian,
    Direct,
    Strong,
    Lexicographic,
}

impl ProductKind {
    pub const ALL: [ProductKind; 4] = [
        ProductKind::Cartesian,
        ProductKind::Direct,
        ProductKind::Strong,
        ProductKind::Lexicographic,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ProductKind::Cartesian => "cartesian",
            ProductKind::Direct => "direct",
            ProductKind::Strong => "strong",
            ProductKind::Lexicographic => "lexicographic",
        }
    }

    /// Whether `(x, y) ~ (x2, y2)` in the product, read verbatim from the
    /// definitions (self-loops get no special treatment).
    fn adjacent(
        self,
        g1: &Graph,
        g2: &Graph,
        (x, y): (usize, usize),
        (x2, y2): (usize, usize),
    ) -> bool {
        let cartesian = || (x == x2 && g2.has_edge(y, y2)) || (g1.has_edge(x, x2) && y == y2);
        let direct = || g1.has_edge(x, x2) && g2.has_edge(y, y2);
        match self {
            ProductKind::Cartesian => cartesian(),
            ProductKind::Direct => direct(),
            ProductKind::Strong => cartesian() || direct(),
            ProductKind::Lexicographic => g1.has_edge(x, x2) || (x == x2 && g2.has_edge(y, y2)),
        }
    }
}

impl fmt::Display for ProductKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ProductKind {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self> {
        ProductKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| GraphError::Argument(format!("unknown product kind `{s}`")))
    }
}

/// Row-major bijection between `V(G1) x V(G2)` and `0..n1*n2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VertexPairIndexing {
    n2: usize,
}

impl VertexPairIndexing {
    pub fn new(n2: usize) -> Self {
        assert!(n2 > 0, "right factor must be nonempty");
        VertexPairIndexing { n2 }
    }

    #[inline]
    pub fn index(&self, x: usize, y: usize) -> usize {
        x * self.n2 + y
    }

    #[inline]
    pub fn pair(&self, i: usize) -> (usize, usize) {
        (i / self.n2, i % self.n2)
    }
}

pub fn product(kind: ProductKind, g1: &Graph, g2: &Graph) -> Result<Graph> {
    product_within(kind, g1, g2, DEFAULT_PRODUCT_MAX_NODES)
}

pub fn product_within(
    kind: ProductKind,
    g1: &Graph,
    g2: &Graph,
    max_nodes: usize,
) -> Result<Graph> {
    let (n1, n2) = (g1.node_count(), g2.node_count());
    if n1 == 0 || n2 == 0 {
        return Err(GraphError::Argument(
            "product factors must be nonempty".into(),
        ));
    }
    GraphError::check_size("product", n1.saturating_mul(n2), max_nodes)?;
    let idx = VertexPairIndexing::new(n2);
    if kind == ProductKind::Direct {
        return Ok(direct_from_edges(g1, g2, idx));
    }
    Ok(Graph::from_fn(n1 * n2, |i, j| {
        kind.adjacent(g1, g2, idx.pair(i), idx.pair(j))
    }))
}

/// Each edge pair `{x,x'}`, `{y,y'}` yields `{(x,y),(x',y')}` and `{(x,y'),(x',y)}`.
fn direct_from_edges(g1: &Graph, g2: &Graph, idx: VertexPairIndexing) -> Graph {
    let edges = g1.edges().iter().flat_map(|&(x, x2)| {
        g2.edges().iter().flat_map(move |&(y, y2)| {
            [
                (idx.index(x, y), idx.index(x2, y2)),
                (idx.index(x, y2), idx.index(x2, y)),
            ]
        })
    });
    Graph::from_edges(g1.node_count() * g2.node_count(), edges).expect("indices in range")
}

/// `g1 ⨯ g2` with no size bound; used internally where the order is already
/// known to be small.
pub(crate) fn direct_unbounded(g1: &Graph, g2: &Graph) -> Graph {
    product_within(ProductKind::Direct, g1, g2, usize::MAX).expect("nonempty factors")
}

pub fn kronecker(a: &AdjacencyMatrix, b: &AdjacencyMatrix) -> Result<AdjacencyMatrix> {
    kronecker_within(a, b, DEFAULT_PRODUCT_MAX_NODES)
}

/// `C[i*q + k][j*q + l] = a[i][j] * b[k][l]` where `q = b.order()`.
pub fn kronecker_within(
    a: &AdjacencyMatrix,
    b: &AdjacencyMatrix,
    max_order: usize,
) -> Result<AdjacencyMatrix> {
    let (p, q) = (a.order(), b.order());
    let order = p.saturating_mul(q);
    GraphError::check_size("kronecker", order, max_order)?;
    let mut bits = vec![false; order * order];
    for i in 0..p {
        for j in 0..p {
            if !a.get(i, j) {
                continue;
            }
            for k in 0..q {
                for l in 0..q {
                    bits[(i * q + k) * order + (j * q + l)] = b.get(k, l);
                }
            }
        }
    }
    Ok(AdjacencyMatrix::from_bits(order, bits))
}

/// Checks `A(g1 ⨯ g2) == A(g1) ⊗ A(g2)` entrywise. Under row-major pair
/// indexing the relating permutation is the identity, so equality is exact.
pub fn verify_observation1(g1: &Graph, g2: &Graph) -> bool {
    if g1.node_count() == 0 || g2.node_count() == 0 {
        return g1.node_count() * g2.node_count() == 0;
    }
    let lhs = direct_unbounded(g1, g2).adjacency_matrix();
    let rhs = kronecker_within(&g1.adjacency_matrix(), &g2.adjacency_matrix(), usize::MAX)
        .expect("unbounded");
    lhs == rhs
}
