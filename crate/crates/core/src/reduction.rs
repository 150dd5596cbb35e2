//! Class-G membership, the padding transformation into class G, and the two
//! isomorphism-via-compositeness drivers.
//!
//! A graph is in class G when it is connected and nonbipartite (P1), has a
//! prime number of nodes (P2), fewer loops than edges (P3), and `2m - s`
//! divisible by neither 2 (P4) nor 3 (P5). For two class-G graphs with equal
//! node and edge counts, the disjoint union is direct-product composite
//! exactly when they are isomorphic.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::edgelist;
use crate::error::{GraphError, Result};
use crate::factorization::{class_g_union_compositeness_within, decompose_within, Decomposition};
use crate::graph::Graph;
use crate::iso::DEFAULT_ISO_MAX_NODES;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassGReport {
    pub member: bool,
    pub p1_connected_nonbipartite: bool,
    pub p2_prime_order: bool,
    pub p3_loops_lt_edges: bool,
    pub p4_not_div2: bool,
    pub p5_not_div3: bool,
}

impl ClassGReport {
    /// `(name, holds)` for the five properties in order.
    pub fn properties(&self) -> [(&'static str, bool); 5] {
        [
            (
                "P1 connected and nonbipartite",
                self.p1_connected_nonbipartite,
            ),
            ("P2 prime number of nodes", self.p2_prime_order),
            ("P3 fewer loops than edges", self.p3_loops_lt_edges),
            ("P4 2m-s not divisible by 2", self.p4_not_div2),
            ("P5 2m-s not divisible by 3", self.p5_not_div3),
        ]
    }
}

impl fmt::Display for ClassGReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.member {
            return f.write_str("all properties hold");
        }
        let failed: Vec<&str> = self
            .properties()
            .iter()
            .filter(|(_, ok)| !ok)
            .map(|(name, _)| *name)
            .collect();
        write!(f, "violates {}", failed.join(", "))
    }
}

pub fn class_g_check(g: &Graph) -> ClassGReport {
    let n = g.node_count();
    let (m, s) = (g.edge_count(), g.loop_count());
    let t = 2 * m - s;
    let p1 = n > 0 && g.is_connected().unwrap_or(false) && !g.is_bipartite();
    let p2 = is_prime(n as u64);
    let p3 = s < m;
    let p4 = t % 2 != 0;
    let p5 = t % 3 != 0;
    ClassGReport {
        member: p1 && p2 && p3 && p4 && p5,
        p1_connected_nonbipartite: p1,
        p2_prime_order: p2,
        p3_loops_lt_edges: p3,
        p4_not_div2: p4,
        p5_not_div3: p5,
    }
}

/// Smallest `d` in `0..=3` with `t + d` divisible by neither 2 nor 3, read
/// from the residue table indexed by `(t mod 2, t mod 3)`.
pub fn div2div3_offset(t: i64) -> u8 {
    const TABLE: [[u8; 3]; 2] = [[1, 1, 3], [2, 0, 0]];
    TABLE[t.rem_euclid(2) as usize][t.rem_euclid(3) as usize]
}

pub(crate) fn is_prime(k: u64) -> bool {
    if k < 2 {
        return false;
    }
    if k < 4 {
        return true;
    }
    if k.is_multiple_of(2) {
        return false;
    }
    let mut d = 3;
    while d * d <= k {
        if k.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Smallest prime `p` with `2n < p < 4n`.
pub fn prime_in_bertrand_range(n: u64) -> Result<u64> {
    if n < 2 {
        return Err(GraphError::Argument(format!("need n >= 2, got {n}")));
    }
    (2 * n + 1..4 * n)
        .find(|&p| is_prime(p))
        .ok_or_else(|| GraphError::Precondition(format!("no prime in ({}, {})", 2 * n, 4 * n)))
}

/// The padded graph `f(G)` and how it was built. Original nodes keep their
/// indices `0..n`; the hub is node `n` and the cycle runs `n, n+1, ..., p-1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PaddingResult {
    pub padded: Graph,
    pub chosen_prime: usize,
    pub fan_edges: Vec<(usize, usize)>,
    pub cycle_edges: Vec<(usize, usize)>,
    pub loop_nodes: Vec<usize>,
    pub loops_added: u8,
}

/// JSON form of a [`PaddingResult`], with the padded graph embedded as
/// edge-list text.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PaddingJson {
    pub p: usize,
    pub d: u8,
    pub fan_edges: Vec<(usize, usize)>,
    pub cycle_edges: Vec<(usize, usize)>,
    pub loop_nodes: Vec<usize>,
    pub padded_graph: String,
}

impl PaddingResult {
    pub fn to_json(&self) -> PaddingJson {
        PaddingJson {
            p: self.chosen_prime,
            d: self.loops_added,
            fan_edges: self.fan_edges.clone(),
            cycle_edges: self.cycle_edges.clone(),
            loop_nodes: self.loop_nodes.clone(),
            padded_graph: edgelist::write(&self.padded),
        }
    }

    pub fn cycle_length(&self) -> usize {
        self.cycle_edges.len()
    }
}

/// Maps a connected graph into class G while preserving isomorphism.
///
/// With `p` the smallest prime in `(2n, 4n)`: new nodes `n..p` are added, every
/// original node is joined to the hub `n`, the new nodes form the cycle
/// `n -> n+1 -> ... -> p-1 -> n`, and `d` loops are placed on `n+1, n+2, n+3`
/// where `d` makes `2m - s` coprime to 6. Each loop raises `2m - s` by one.
pub fn pad_to_class_g(g: &Graph) -> Result<PaddingResult> {
    let n = g.node_count();
    if n < 2 {
        return Err(GraphError::Precondition(
            "padding needs at least two nodes".into(),
        ));
    }
    if !g.is_connected()? {
        return Err(GraphError::Precondition(
            "padding needs a connected graph".into(),
        ));
    }
    let p = prime_in_bertrand_range(n as u64)? as usize;
    let hub = n;

    let fan_edges: Vec<(usize, usize)> = (0..n).map(|x| (x, hub)).collect();
    let mut cycle_edges: Vec<(usize, usize)> = (hub..p - 1).map(|v| (v, v + 1)).collect();
    cycle_edges.push((hub, p - 1));

    let edges_before_loops = g.edge_count() + fan_edges.len() + cycle_edges.len();
    let t = 2 * edges_before_loops as i64 - g.loop_count() as i64;
    let d = div2div3_offset(t);

    // p - n >= 3 always; only for n = 2 is there no fourth new node, and the
    // third loop then goes on the hub.
    let loop_nodes: Vec<usize> = (hub + 1..p)
        .chain(std::iter::once(hub))
        .take(d as usize)
        .collect();

    let padded = Graph::from_edges(
        p,
        g.edges()
            .iter()
            .copied()
            .chain(fan_edges.iter().copied())
            .chain(cycle_edges.iter().copied())
            .chain(loop_nodes.iter().map(|&v| (v, v))),
    )?;
    let report = class_g_check(&padded);
    assert!(report.member, "padding left class G: {report}");

    Ok(PaddingResult {
        padded,
        chosen_prime: p,
        fan_edges,
        cycle_edges,
        loop_nodes,
        loops_added: d,
    })
}

/// A decision procedure for direct-product compositeness.
pub trait CompositenessOracle {
    fn is_composite(&self, g: &Graph) -> Result<bool>;
}

impl<F> CompositenessOracle for F
where
    F: Fn(&Graph) -> Result<bool>,
{
    fn is_composite(&self, g: &Graph) -> Result<bool> {
        self(g)
    }
}

/// Bound large enough for the union of two paddings of 5-node graphs
/// (2 * 11 nodes) with room to spare.
pub const DEFAULT_ORACLE_MAX_NODES: usize = 32;

/// Decides compositeness by exhaustive factor search.
#[derive(Debug, Clone, Copy)]
pub struct FactorSearchOracle {
    pub max_nodes: usize,
}

impl Default for FactorSearchOracle {
    fn default() -> Self {
        FactorSearchOracle {
            max_nodes: DEFAULT_ORACLE_MAX_NODES,
        }
    }
}

impl CompositenessOracle for FactorSearchOracle {
    fn is_composite(&self, g: &Graph) -> Result<bool> {
        Ok(matches!(
            decompose_within(g, self.max_nodes)?,
            Decomposition::Composite(_)
        ))
    }
}

/// Decides compositeness of a union of two class-G graphs with the
/// sixteen-matrix elimination followed by an isomorphism test. The input
/// must split into exactly two connected components.
#[derive(Debug, Clone, Copy)]
pub struct ClassGEliminationOracle {
    pub iso_max_nodes: usize,
}

impl Default for ClassGEliminationOracle {
    fn default() -> Self {
        ClassGEliminationOracle {
            iso_max_nodes: DEFAULT_ISO_MAX_NODES,
        }
    }
}

impl CompositenessOracle for ClassGEliminationOracle {
    fn is_composite(&self, g: &Graph) -> Result<bool> {
        let comps = g.components();
        let [c1, c2] = &comps[..] else {
            return Err(GraphError::Precondition(format!(
                "expected a union of two connected graphs, found {} components",
                comps.len()
            )));
        };
        class_g_union_compositeness_within(
            &g.induced_subgraph(c1),
            &g.induced_subgraph(c2),
            self.iso_max_nodes,
        )
    }
}

/// Isomorphism for class-G graphs with a single oracle call on `g1 ∪ g2`.
pub fn gg_graph_isomorphism(
    g1: &Graph,
    g2: &Graph,
    oracle: &dyn CompositenessOracle,
) -> Result<bool> {
    for g in [g1, g2] {
        let report = class_g_check(g);
        if !report.member {
            return Err(GraphError::NotClassG(report));
        }
    }
    if g1.node_count() != g2.node_count() || g1.edge_count() != g2.edge_count() {
        return Ok(false);
    }
    oracle.is_composite(&g1.disjoint_union(g2))
}

/// What the general reduction did for one pair of inputs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionTrace {
    pub isomorphic: bool,
    /// False when the node/edge count filter decided the answer.
    pub oracle_called: bool,
    /// `(p, d)` per input, present once padding ran.
    pub paddings: Option<[(usize, u8); 2]>,
    pub union_nodes: Option<usize>,
}

/// Isomorphism of connected graphs: count filter, pad both into class G, then
/// one oracle call on the union of the paddings.
pub fn graph_isomorphism_via_compositeness(
    g1: &Graph,
    g2: &Graph,
    oracle: &dyn CompositenessOracle,
) -> Result<bool> {
    trace_graph_isomorphism(g1, g2, oracle).map(|t| t.isomorphic)
}

pub fn trace_graph_isomorphism(
    g1: &Graph,
    g2: &Graph,
    oracle: &dyn CompositenessOracle,
) -> Result<ReductionTrace> {
    for g in [g1, g2] {
        if g.node_count() < 2 || !g.is_connected()? {
            return Err(GraphError::Precondition(
                "inputs must be connected graphs with at least two nodes".into(),
            ));
        }
    }
    if g1.node_count() != g2.node_count() || g1.edge_count() != g2.edge_count() {
        return Ok(ReductionTrace {
            isomorphic: false,
            oracle_called: false,
            paddings: None,
            union_nodes: None,
        });
    }
    let f1 = pad_to_class_g(g1)?;
    let f2 = pad_to_class_g(g2)?;
    let union = f1.padded.disjoint_union(&f2.padded);
    let isomorphic = oracle.is_composite(&union)?;
    Ok(ReductionTrace {
        isomorphic,
        oracle_called: true,
        paddings: Some([
            (f1.chosen_prime, f1.loops_added),
            (f2.chosen_prime, f2.loops_added),
        ]),
        union_nodes: Some(union.node_count()),
    })
}
