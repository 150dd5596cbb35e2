//! Generators and brute-force oracles shared by the integration tests. None of
//! these route through the search code they are used to check.

#![allow(dead_code)]

use std::collections::HashSet;

use graphprod_core::{are_isomorphic_within, class_g_check, Graph};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

/// All `(u, v)` with `u <= v`, the possible edges of an `n`-node graph.
pub fn slots(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|u| (u..n).map(move |v| (u, v))).collect()
}

pub fn graph_from_mask(n: usize, slots: &[(usize, usize)], mask: u64) -> Graph {
    Graph::from_edges(
        n,
        slots
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e),
    )
    .unwrap()
}

/// Every labeled graph on `n` nodes, loops allowed.
pub fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let s = slots(n);
    assert!(s.len() < 32);
    (0u64..1 << s.len()).map(move |mask| graph_from_mask(n, &s, mask))
}

pub fn random_graph(rng: &mut StdRng, n: usize, edge_p: f64, loop_p: f64) -> Graph {
    Graph::from_edges(
        n,
        slots(n)
            .into_iter()
            .filter(|&(u, v)| rng.random_bool(if u == v { loop_p } else { edge_p })),
    )
    .unwrap()
}

/// Random spanning tree plus random extra edges and loops.
pub fn random_connected(rng: &mut StdRng, n: usize, extra_p: f64, loop_p: f64) -> Graph {
    let mut edges: Vec<(usize, usize)> = (1..n).map(|v| (rng.random_range(0..v), v)).collect();
    for (u, v) in slots(n) {
        let p = if u == v { loop_p } else { extra_p };
        if rng.random_bool(p) {
            edges.push((u, v));
        }
    }
    let g = Graph::from_edges(n, edges).unwrap();
    g.relabel(&random_perm(rng, n)).unwrap()
}

pub fn random_connected_bipartite(rng: &mut StdRng, n: usize) -> Graph {
    loop {
        let g = random_connected(rng, n, 0.3, 0.0);
        if g.is_bipartite() {
            return g;
        }
    }
}

pub fn random_perm(rng: &mut StdRng, n: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(rng);
    p
}

pub fn shuffled(rng: &mut StdRng, g: &Graph) -> Graph {
    g.relabel(&random_perm(rng, g.node_count())).unwrap()
}

/// Rejection-samples a class-G graph on `n` nodes.
pub fn random_class_g(rng: &mut StdRng, n: usize) -> Graph {
    loop {
        let g = random_connected(rng, n, 0.35, 0.25);
        if class_g_check(&g).member {
            return g;
        }
    }
}

/// Heap's algorithm over all permutations of `0..n`.
pub fn for_each_permutation(n: usize, mut f: impl FnMut(&[usize]) -> bool) -> bool {
    let mut p: Vec<usize> = (0..n).collect();
    let mut c = vec![0; n];
    if f(&p) {
        return true;
    }
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                p.swap(0, i);
            } else {
                p.swap(c[i], i);
            }
            if f(&p) {
                return true;
            }
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    false
}

/// Unpruned isomorphism test: try every bijection.
pub fn brute_iso(g1: &Graph, g2: &Graph) -> bool {
    if g1.node_count() != g2.node_count() || g1.edge_count() != g2.edge_count() {
        return false;
    }
    for_each_permutation(g1.node_count(), |p| {
        g1.edges().iter().all(|&(u, v)| g2.has_edge(p[u], p[v]))
    })
}

pub fn iso(g1: &Graph, g2: &Graph) -> bool {
    are_isomorphic_within(g1, g2, 64).unwrap().is_some()
}

/// One representative per isomorphism class.
pub fn iso_classes(graphs: impl IntoIterator<Item = Graph>) -> Vec<Graph> {
    let mut reps: Vec<Graph> = Vec::new();
    let mut seen: HashSet<Graph> = HashSet::new();
    for g in graphs {
        if !seen.insert(g.clone()) {
            continue;
        }
        if !reps.iter().any(|r| iso(r, &g)) {
            reps.push(g);
        }
    }
    reps
}

/// Connected graphs on `n` nodes up to isomorphism.
pub fn connected_classes(n: usize) -> Vec<Graph> {
    iso_classes(all_graphs(n).filter(|g| g.is_connected().unwrap()))
}

/// Finds a pair of non-isomorphic graphs with matching node and edge counts.
pub fn non_iso_pair(rng: &mut StdRng, mut gen: impl FnMut(&mut StdRng) -> Graph) -> (Graph, Graph) {
    loop {
        let g1 = gen(rng);
        for _ in 0..50 {
            let g2 = gen(rng);
            if g2.node_count() == g1.node_count()
                && g2.edge_count() == g1.edge_count()
                && !iso(&g1, &g2)
            {
                return (g1, g2);
            }
        }
    }
}
