//! Graph products, direct-product factorization, and the reduction from graph
//! isomorphism to direct-product compositeness.
//!
//! Graphs are finite, undirected and index-based, with self-loops allowed. A
//! loop is one edge and one diagonal entry, so a graph with `m` edges and `s`
//! loops has `2m - s` nonzero adjacency entries.

pub mod edgelist;
pub mod error;
pub mod factorization;
pub mod figures;
pub mod graph;
pub mod iso;
pub mod products;
pub mod reduction;

pub use error::{GraphError, Result};
pub use factorization::{
    classG_union_compositeness, decompose_within, factor_search, factor_search_with_left,
    factor_search_within, is_prime_direct, is_prime_direct_within, lemma1_forward, lemma1_reverse,
    Decomposition, FactorizationWitness, DEFAULT_FACTOR_MAX_NODES,
};
pub use graph::{AdjacencyMatrix, Graph};
pub use iso::{are_isomorphic, are_isomorphic_within, IsomorphismWitness, DEFAULT_ISO_MAX_NODES};
pub use products::{kronecker, product, verify_observation1, ProductKind, VertexPairIndexing};
pub use reduction::{
    class_g_check, div2div3_offset, gg_graph_isomorphism, graph_isomorphism_via_compositeness,
    pad_to_class_g, prime_in_bertrand_range, ClassGEliminationOracle, ClassGReport,
    CompositenessOracle, FactorSearchOracle, PaddingResult,
};
