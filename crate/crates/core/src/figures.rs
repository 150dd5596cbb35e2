//! The two counterexamples showing why testing `g1 ∪ g2` for *some* two-node
//! factor is not an isomorphism test in general.
//!
//! * Non-unique factorization: for connected bipartite `K_{1,4}`, the union of
//!   two copies factors both as `K2 ⨯ K_{1,4}` and as `D2 ⨯ K_{1,4}`.
//! * A two-node factor other than `D2`: `G1 ⨯ G2` with `G1` an edge plus one
//!   loop and `G2` two loop-decorated paths is the union of two
//!   non-isomorphic components with equal counts, has `G1` as a factor, and has
//!   no `D2` factor.
//!
//! The second `G2` is read from its drawing: paths on three nodes, one with a
//! loop on an endpoint and one with a loop on the middle node.

use serde::Serialize;

use crate::factorization::{factor_search_with_left, factor_search_within, FactorizationWitness};
use crate::graph::Graph;
use crate::iso::are_isomorphic_within;
use crate::products::{product, ProductKind};

const BOUND: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Claim {
    pub statement: String,
    pub pass: bool,
    pub detail: String,
}

impl Claim {
    fn new(statement: impl Into<String>, pass: bool, detail: impl Into<String>) -> Self {
        Claim {
            statement: statement.into(),
            pass,
            detail: detail.into(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Figure {
    NonUniqueFactorization,
    NonD2Factor,
}

impl Figure {
    pub fn from_name(name: &str) -> Option<Self> {
        match name {
            "fig2" => Some(Figure::NonUniqueFactorization),
            "fig3" => Some(Figure::NonD2Factor),
            _ => None,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Figure::NonUniqueFactorization => "fig2",
            Figure::NonD2Factor => "fig3",
        }
    }

    pub fn claims(self) -> Vec<Claim> {
        match self {
            Figure::NonUniqueFactorization => non_unique_factorization(),
            Figure::NonD2Factor => non_d2_factor(),
        }
    }
}

fn iso(g: &Graph, h: &Graph) -> bool {
    are_isomorphic_within(g, h, BOUND).is_ok_and(|w| w.is_some())
}

fn describe(w: &Option<FactorizationWitness>, g: &Graph) -> (bool, String) {
    match w {
        Some(w) => (
            w.verifies(g),
            format!(
                "witness {:?} x {:?}, recomputed product matches",
                w.factor_a(),
                w.factor_b()
            ),
        ),
        None => (false, "no witness".into()),
    }
}

pub fn star_k14() -> Graph {
    Graph::star(4)
}

pub fn non_unique_factorization() -> Vec<Claim> {
    let g2 = star_k14();
    let x = g2.disjoint_union(&g2);
    let mut claims = vec![Claim::new(
        "G2 = K1,4 is connected with a prime number of nodes",
        g2.is_connected().unwrap_or(false) && g2.node_count() == 5,
        format!("{} nodes", g2.node_count()),
    )];

    let by_k2 = factor_search_with_left(&x, &Graph::complete(2), BOUND)
        .ok()
        .flatten();
    let (ok, detail) = describe(&by_k2, &x);
    let ok = ok && by_k2.as_ref().is_some_and(|w| iso(w.factor_b(), &g2));
    claims.push(Claim::new("G2 ∪ G2 = K2 x G2", ok, detail));

    let by_d2 = factor_search_with_left(&x, &Graph::d2(), BOUND)
        .ok()
        .flatten();
    let (ok, detail) = describe(&by_d2, &x);
    let ok = ok && by_d2.as_ref().is_some_and(|w| iso(w.factor_b(), &g2));
    claims.push(Claim::new("G2 ∪ G2 = D2 x G2", ok, detail));

    let direct_k2 = product(ProductKind::Direct, &Graph::complete(2), &g2).expect("small");
    let direct_d2 = product(ProductKind::Direct, &Graph::d2(), &g2).expect("small");
    claims.push(Claim::new(
        "K2 x G2 and D2 x G2 are isomorphic, with non-isomorphic left factors",
        iso(&direct_k2, &direct_d2) && !iso(&Graph::complete(2), &Graph::d2()),
        "two distinct factorizations of the same graph",
    ));
    claims
}

pub fn fig3_g1() -> Graph {
    Graph::complete(2).with_loop(0)
}

pub fn fig3_g2() -> Graph {
    Graph::path(3)
        .with_loop(2)
        .disjoint_union(&Graph::path(3).with_loop(1))
}

pub fn non_d2_factor() -> Vec<Claim> {
    let g1 = fig3_g1();
    let g3 = product(ProductKind::Direct, &g1, &fig3_g2()).expect("small");
    let comps = g3.components();
    let parts: Vec<Graph> = comps.iter().map(|c| g3.induced_subgraph(c)).collect();

    let mut claims = vec![Claim::new(
        "G3 has exactly two connected components",
        parts.len() == 2,
        format!("{} components", parts.len()),
    )];
    if let [c1, c2] = &parts[..] {
        claims.push(Claim::new(
            "the components have equal node and edge counts",
            c1.node_count() == c2.node_count() && c1.edge_count() == c2.edge_count(),
            format!(
                "({}, {}) and ({}, {})",
                c1.node_count(),
                c1.edge_count(),
                c2.node_count(),
                c2.edge_count()
            ),
        ));
        claims.push(Claim::new(
            "the components are not isomorphic",
            !iso(c1, c2),
            "exhaustive isomorphism search",
        ));
    }

    let by_g1 = factor_search_with_left(&g3, &g1, BOUND).ok().flatten();
    let (ok, detail) = describe(&by_g1, &g3);
    claims.push(Claim::new("G3 admits the two-node factor G1", ok, detail));

    let any = factor_search_within(&g3, 2, 6, BOUND).ok().flatten();
    let (ok, detail) = describe(&any, &g3);
    let ok = ok && any.as_ref().is_some_and(|w| iso(w.factor_a(), &g1));
    claims.push(Claim::new(
        "unrestricted search at 2 x 6 finds a two-node factor isomorphic to G1",
        ok,
        detail,
    ));

    let by_d2 = factor_search_with_left(&g3, &Graph::d2(), BOUND);
    claims.push(Claim::new(
        "G3 does not admit D2 as a factor",
        matches!(by_d2, Ok(None)),
        "exhaustive search with the left factor fixed to D2",
    ));
    claims
}
