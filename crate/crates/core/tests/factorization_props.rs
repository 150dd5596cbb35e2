mod common;

use std::collections::HashSet;

use common::*;
use graphprod_core::factorization::{
    class_g_union_compositeness_within, factor_search_within, lemma1_reverse_within,
};
use graphprod_core::products::{product, ProductKind};
use graphprod_core::{
    are_isomorphic, factor_search, is_prime_direct_within, lemma1_forward, Graph,
};

/// Bitmask of a labeled graph over `slots(n)`.
fn mask_of(g: &Graph, slots: &[(usize, usize)]) -> u64 {
    slots
        .iter()
        .enumerate()
        .filter(|(_, &(u, v))| g.has_edge(u, v))
        .fold(0, |m, (i, _)| m | 1 << i)
}

/// Every labeled `n`-node graph that is `A ⨯ B` with `|A| = a`: all products
/// of all factor pairs under all relabelings.
fn labeled_products(a: usize, b: usize) -> HashSet<u64> {
    let n = a * b;
    let s = slots(n);
    let mut out = HashSet::new();
    let left: Vec<Graph> = all_graphs(a).collect();
    let right: Vec<Graph> = all_graphs(b).collect();
    for x in &left {
        for y in &right {
            let p = product(ProductKind::Direct, x, y).unwrap();
            for_each_permutation(n, |perm| {
                out.insert(mask_of(&p.relabel(perm).unwrap(), &s));
                false
            });
        }
    }
    out
}

#[test]
fn complete_and_sound_on_all_graphs_up_to_six_nodes() {
    for (a, b) in [(2, 2), (2, 3)] {
        let n = a * b;
        let products = labeled_products(a, b);
        let s = slots(n);
        let mut composites = 0;
        for mask in 0u64..1 << s.len() {
            let g = graph_from_mask(n, &s, mask);
            let found = factor_search(&g, a, b).unwrap();
            if let Some(w) = &found {
                assert!(w.verifies(&g));
                composites += 1;
            }
            assert_eq!(found.is_some(), products.contains(&mask), "{g:?}");
        }
        assert_eq!(composites, products.len());
    }
}

/// Products of every factor pair for an 8-node split, bucketed by a cheap
/// invariant so each query only runs a few isomorphism tests.
struct ProductTable {
    by_invariant: std::collections::HashMap<(Vec<usize>, usize), Vec<Graph>>,
}

fn invariant(g: &Graph) -> (Vec<usize>, usize) {
    let mut degrees: Vec<usize> = (0..g.node_count())
        .map(|v| g.degree(v) * 2 + g.has_loop(v) as usize)
        .collect();
    degrees.sort_unstable();
    (degrees, g.edge_count())
}

impl ProductTable {
    fn new(a: usize, b: usize) -> Self {
        let mut by_invariant: std::collections::HashMap<_, Vec<Graph>> = Default::default();
        for x in all_graphs(a) {
            for y in all_graphs(b) {
                let p = product(ProductKind::Direct, &x, &y).unwrap();
                let bucket = by_invariant.entry(invariant(&p)).or_default();
                if !bucket.iter().any(|q| iso(q, &p)) {
                    bucket.push(p);
                }
            }
        }
        ProductTable { by_invariant }
    }

    fn contains(&self, g: &Graph) -> bool {
        self.by_invariant
            .get(&invariant(g))
            .is_some_and(|bucket| bucket.iter().any(|q| iso(q, g)))
    }
}

#[test]
fn complete_on_random_eight_node_graphs() {
    let table = ProductTable::new(2, 4);
    let mut r = rng(8);
    let mut positives = 0;
    for k in 0..1200 {
        let g = if k % 2 == 0 {
            let x = random_graph(&mut r, 2, 0.5, 0.5);
            let y = random_graph(&mut r, 4, 0.5, 0.4);
            shuffled(&mut r, &product(ProductKind::Direct, &x, &y).unwrap())
        } else {
            random_graph(&mut r, 8, r_density(k), 0.3)
        };
        let found = factor_search(&g, 2, 4).unwrap();
        if let Some(w) = &found {
            assert!(w.verifies(&g));
            positives += 1;
        }
        assert_eq!(found.is_some(), table.contains(&g), "{g:?}");
    }
    assert!(positives >= 600);
}

fn r_density(k: usize) -> f64 {
    [0.15, 0.3, 0.5, 0.7][k % 4]
}

#[test]
fn witnesses_reverify_for_larger_products() {
    let mut r = rng(9);
    for (a, b) in [(2, 5), (3, 3), (2, 7), (3, 4), (4, 4), (2, 9)] {
        for _ in 0..30 {
            let x = random_graph(&mut r, a, 0.5, 0.5);
            let y = random_graph(&mut r, b, 0.4, 0.3);
            let g = shuffled(&mut r, &product(ProductKind::Direct, &x, &y).unwrap());
            let w = factor_search_within(&g, a, b, 20)
                .unwrap()
                .expect("product must factor");
            assert!(w.verifies(&g));
        }
    }
}

#[test]
fn lemma1_reverse_agrees_with_isomorphism() {
    let mut r = rng(10);
    for k in 0..600 {
        let n = 1 + k % 7;
        let g1 = random_connected(&mut r, n, 0.3, 0.3);
        let g2 = if k % 3 == 0 {
            shuffled(&mut r, &g1)
        } else {
            random_connected(&mut r, n, 0.3, 0.3)
        };
        let expected = are_isomorphic(&g1, &g2).unwrap().is_some();
        let got = lemma1_reverse_within(&g1, &g2, 20).unwrap();
        assert_eq!(got.is_some(), expected, "{g1:?} {g2:?}");
        if let Some(w) = got {
            assert!(w.maps(&g1, &g2));
            let fw = lemma1_forward(&g1, &g2, &w).unwrap();
            if n >= 2 {
                assert!(fw.verifies(&g1.disjoint_union(&g2)));
            }
        }
    }
}

#[test]
fn class_g_unions_agree_three_ways() {
    let mut r = rng(11);
    for k in 0..300 {
        let n = if k % 2 == 0 { 5 } else { 7 };
        let g1 = random_class_g(&mut r, n);
        let g2 = if k % 3 == 0 {
            shuffled(&mut r, &g1)
        } else {
            loop {
                let h = random_class_g(&mut r, n);
                if h.edge_count() == g1.edge_count() {
                    break h;
                }
            }
        };
        let by_elimination = class_g_union_compositeness_within(&g1, &g2, 16).unwrap();
        let by_search = !is_prime_direct_within(&g1.disjoint_union(&g2), 20).unwrap();
        let by_iso = brute_iso(&g1, &g2);
        assert_eq!(by_elimination, by_search);
        assert_eq!(by_search, by_iso);
    }
}

#[test]
fn search_is_deterministic() {
    let mut r = rng(12);
    for _ in 0..50 {
        let x = random_graph(&mut r, 3, 0.6, 0.5);
        let y = random_graph(&mut r, 4, 0.5, 0.4);
        let g = shuffled(&mut r, &product(ProductKind::Direct, &x, &y).unwrap());
        assert_eq!(
            factor_search(&g, 3, 4).unwrap(),
            factor_search(&g, 3, 4).unwrap()
        );
    }
}
