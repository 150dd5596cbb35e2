mod common;

use std::cell::Cell;

use common::*;
use graphprod_core::reduction::{
    class_g_check, div2div3_offset, gg_graph_isomorphism, graph_isomorphism_via_compositeness,
    pad_to_class_g, prime_in_bertrand_range, trace_graph_isomorphism, CompositenessOracle,
    FactorSearchOracle,
};
use graphprod_core::{are_isomorphic, Graph, GraphError};
use rand::Rng;

fn sieve(limit: usize) -> Vec<bool> {
    let mut is_prime = vec![true; limit + 1];
    is_prime[0] = false;
    if limit >= 1 {
        is_prime[1] = false;
    }
    let mut i = 2;
    while i * i <= limit {
        if is_prime[i] {
            let mut j = i * i;
            while j <= limit {
                is_prime[j] = false;
                j += i;
            }
        }
        i += 1;
    }
    is_prime
}

#[test]
fn offset_table_exhaustive() {
    // Rows are t mod 2, columns t mod 3.
    let table = [[1u8, 1, 3], [2, 0, 0]];
    for t in -1000i64..=1000 {
        let d = div2div3_offset(t);
        assert!(d <= 3);
        let u = t + d as i64;
        assert!(u.rem_euclid(2) != 0 && u.rem_euclid(3) != 0, "t = {t}");
        assert_eq!(d, table[t.rem_euclid(2) as usize][t.rem_euclid(3) as usize]);
    }
}

#[test]
fn bertrand_prime_is_smallest_in_range() {
    let limit = 100_000;
    let primes = sieve(4 * limit);
    for n in 2..=limit {
        let p = prime_in_bertrand_range(n as u64).unwrap() as usize;
        let expected = (2 * n + 1..4 * n).find(|&k| primes[k]).unwrap();
        assert_eq!(p, expected, "n = {n}");
    }
    assert!(prime_in_bertrand_range(1).is_err());
}

#[test]
fn padding_lands_in_class_g() {
    let mut r = rng(20);
    for k in 0..500 {
        let n = 2 + k % 5;
        let g = random_connected(&mut r, n, 0.4, 0.3);
        let res = pad_to_class_g(&g).unwrap();
        let p = res.chosen_prime;
        assert!(2 * n < p && p < 4 * n);
        assert_eq!(res.padded.node_count(), p);
        assert!(class_g_check(&res.padded).member, "{g:?}");
        assert!(res.cycle_length() > n);
        assert_eq!(res.fan_edges.len(), n);
        assert!(res.fan_edges.iter().all(|&(u, v)| v == n && u < n));
        assert_eq!(res.cycle_edges.len(), p - n);
        // The original graph survives as the induced subgraph on 0..n.
        let original: Vec<usize> = (0..n).collect();
        assert_eq!(res.padded.induced_subgraph(&original), g);
        // Each loop adds one to 2m - s.
        let t = 2 * (g.edge_count() + n + (p - n)) - g.loop_count();
        assert_eq!(res.padded.nonzero_count(), t + res.loops_added as usize);
    }
}

#[test]
fn padding_preserves_isomorphism_both_ways() {
    let mut r = rng(21);
    for k in 0..100 {
        let n = 2 + k % 4;
        let g = random_connected(&mut r, n, 0.4, 0.3);
        let h = shuffled(&mut r, &g);
        let (fg, fh) = (pad_to_class_g(&g).unwrap(), pad_to_class_g(&h).unwrap());
        assert!(iso(&fg.padded, &fh.padded));
    }
    for k in 0..100 {
        let n = 3 + k % 3;
        let (g, h) = non_iso_pair(&mut r, |r| random_connected(r, n, 0.4, 0.3));
        let (fg, fh) = (pad_to_class_g(&g).unwrap(), pad_to_class_g(&h).unwrap());
        assert!(!iso(&fg.padded, &fh.padded), "{g:?} {h:?}");
    }
}

#[test]
fn end_to_end_exhaustive_to_four_nodes() {
    let oracle = FactorSearchOracle::default();
    let graphs: Vec<Graph> = (2..=4)
        .flat_map(all_graphs)
        .filter(|g| g.is_connected().unwrap())
        .collect();
    let mut r = rng(22);
    // Every class against a random partner sample; the acceptance suite runs all pairs.
    for g in &graphs {
        for _ in 0..4 {
            let h = &graphs[r.random_range(0..graphs.len())];
            let expected = are_isomorphic(g, h).unwrap().is_some();
            assert_eq!(
                graph_isomorphism_via_compositeness(g, h, &oracle).unwrap(),
                expected
            );
        }
        let h = shuffled(&mut r, g);
        assert!(graph_isomorphism_via_compositeness(g, &h, &oracle).unwrap());
    }
}

#[test]
fn end_to_end_random_five_node_pairs() {
    let oracle = FactorSearchOracle::default();
    let mut r = rng(23);
    for k in 0..50 {
        let g = random_connected(&mut r, 5, 0.35, 0.3);
        let h = if k % 2 == 0 {
            shuffled(&mut r, &g)
        } else {
            non_iso_pair(&mut r, |r| random_connected(r, 5, 0.35, 0.3)).1
        };
        let expected = brute_iso(&g, &h);
        assert_eq!(
            graph_isomorphism_via_compositeness(&g, &h, &oracle).unwrap(),
            expected
        );
    }
}

#[test]
fn count_filter_skips_oracle() {
    let calls = Cell::new(0);
    let counting = |g: &Graph| {
        calls.set(calls.get() + 1);
        FactorSearchOracle::default().is_composite(g)
    };
    let t = trace_graph_isomorphism(&Graph::cycle(3), &Graph::cycle(4), &counting).unwrap();
    assert!(!t.isomorphic && !t.oracle_called);
    assert_eq!(calls.get(), 0);
    let t = trace_graph_isomorphism(&Graph::path(4), &Graph::star(3), &counting).unwrap();
    assert!(!t.isomorphic && t.oracle_called);
    assert_eq!(calls.get(), 1);
    assert_eq!(t.paddings, Some([(11, t.paddings.unwrap()[0].1); 2]));
}

#[test]
fn class_g_driver_rejects_outsiders() {
    let oracle = FactorSearchOracle::default();
    let c4 = Graph::cycle(4);
    match gg_graph_isomorphism(&c4, &c4, &oracle) {
        Err(GraphError::NotClassG(report)) => {
            assert!(!report.p1_connected_nonbipartite && !report.p2_prime_order)
        }
        other => panic!("{other:?}"),
    }
}

#[test]
fn disconnected_inputs_are_rejected() {
    let oracle = FactorSearchOracle::default();
    let two = Graph::complete(2).disjoint_union(&Graph::complete(2));
    assert!(matches!(
        graph_isomorphism_via_compositeness(&two, &two, &oracle),
        Err(GraphError::Precondition(_))
    ));
}

#[test]
fn padding_is_deterministic() {
    let mut r = rng(24);
    for _ in 0..50 {
        let g = random_connected(&mut r, 5, 0.4, 0.3);
        let a = serde_json::to_string(&pad_to_class_g(&g).unwrap().to_json()).unwrap();
        let b = serde_json::to_string(&pad_to_class_g(&g).unwrap().to_json()).unwrap();
        assert_eq!(a, b);
    }
}
