//! Brute-force isomorphism decider with invariant refinement.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{GraphError, Result};
use crate::graph::{check_permutation, Graph};

pub const DEFAULT_ISO_MAX_NODES: usize = 16;

/// A node bijection `g1 -> g2`: node `i` of `g1` maps to `mapping[i]` of `g2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct IsomorphismWitness {
    mapping: Vec<usize>,
}

impl IsomorphismWitness {
    /// Validates that `mapping` is a permutation carrying `g1`'s edges exactly
    /// onto `g2`'s.
    pub fn new(mapping: Vec<usize>, g1: &Graph, g2: &Graph) -> Result<Self> {
        if g1.node_count() != g2.node_count() {
            return Err(GraphError::Argument("graphs have different orders".into()));
        }
        check_permutation(&mapping, g1.node_count())?;
        let w = IsomorphismWitness { mapping };
        if !w.maps(g1, g2) {
            return Err(GraphError::Argument(
                "mapping does not carry the first edge set onto the second".into(),
            ));
        }
        Ok(w)
    }

    pub fn identity(n: usize) -> Self {
        IsomorphismWitness {
            mapping: (0..n).collect(),
        }
    }

    pub fn mapping(&self) -> &[usize] {
        &self.mapping
    }

    pub fn into_mapping(self) -> Vec<usize> {
        self.mapping
    }

    /// True iff this bijection maps `g1` onto `g2` exactly.
    pub fn maps(&self, g1: &Graph, g2: &Graph) -> bool {
        g1.node_count() == g2.node_count()
            && self.mapping.len() == g1.node_count()
            && g1.edge_count() == g2.edge_count()
            && g1
                .edges()
                .iter()
                .all(|&(u, v)| g2.has_edge(self.mapping[u], self.mapping[v]))
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.mapping.len()];
        for (i, &j) in self.mapping.iter().enumerate() {
            inv[j] = i;
        }
        IsomorphismWitness { mapping: inv }
    }
}

pub fn are_isomorphic(g1: &Graph, g2: &Graph) -> Result<Option<IsomorphismWitness>> {
    are_isomorphic_within(g1, g2, DEFAULT_ISO_MAX_NODES)
}

/// Decides `g1 ≅ g2` and returns the lexicographically least witness.
///
/// Nodes are first partitioned by iterated color refinement (loop flag, then
/// the multiset of neighbor colors until stable), computed jointly for both
/// graphs so colors are comparable. Nodes of `g1` are then mapped in index
/// order, trying same-colored targets in ascending order.
pub fn are_isomorphic_within(
    g1: &Graph,
    g2: &Graph,
    max_nodes: usize,
) -> Result<Option<IsomorphismWitness>> {
    if g1.node_count() == 0 || g2.node_count() == 0 {
        return Err(GraphError::Argument(
            "isomorphism test needs nonempty graphs".into(),
        ));
    }
    let n = g1.node_count().max(g2.node_count());
    GraphError::check_size("isomorphism", n, max_nodes)?;
    if g1.node_count() != g2.node_count()
        || g1.edge_count() != g2.edge_count()
        || g1.loop_count() != g2.loop_count()
    {
        return Ok(None);
    }
    let Some((c1, c2)) = refine(g1, g2) else {
        return Ok(None);
    };

    let n = g1.node_count();
    let classes = c1.iter().chain(&c2).max().map_or(0, |&c| c + 1);
    let mut cells: Vec<Vec<usize>> = vec![Vec::new(); classes];
    for (j, &c) in c2.iter().enumerate() {
        cells[c].push(j);
    }

    let mut search = IsoSearch {
        g1,
        g2,
        c1: &c1,
        cells: &cells,
        mapping: vec![usize::MAX; n],
        used: vec![false; n],
    };
    Ok(search.extend(0).then_some(IsomorphismWitness {
        mapping: search.mapping,
    }))
}

struct IsoSearch<'a> {
    g1: &'a Graph,
    g2: &'a Graph,
    c1: &'a [usize],
    cells: &'a [Vec<usize>],
    mapping: Vec<usize>,
    used: Vec<bool>,
}

impl IsoSearch<'_> {
    fn extend(&mut self, i: usize) -> bool {
        if i == self.mapping.len() {
            return true;
        }
        for &j in &self.cells[self.c1[i]] {
            if self.used[j] || !self.consistent(i, j) {
                continue;
            }
            self.mapping[i] = j;
            self.used[j] = true;
            if self.extend(i + 1) {
                return true;
            }
            self.used[j] = false;
        }
        self.mapping[i] = usize::MAX;
        false
    }

    fn consistent(&self, i: usize, j: usize) -> bool {
        self.g1.has_loop(i) == self.g2.has_loop(j)
            && (0..i).all(|k| self.g1.has_edge(i, k) == self.g2.has_edge(j, self.mapping[k]))
    }
}

/// Joint stable coloring of both graphs, or `None` when the color histograms
/// diverge (which already rules out isomorphism).
fn refine(g1: &Graph, g2: &Graph) -> Option<(Vec<usize>, Vec<usize>)> {
    let mut c1: Vec<usize> = (0..g1.node_count())
        .map(|v| g1.has_loop(v) as usize)
        .collect();
    let mut c2: Vec<usize> = (0..g2.node_count())
        .map(|v| g2.has_loop(v) as usize)
        .collect();
    let mut classes = 0;
    loop {
        if histogram(&c1) != histogram(&c2) {
            return None;
        }
        let s1 = signatures(g1, &c1);
        let s2 = signatures(g2, &c2);
        let mut ids: BTreeMap<&(usize, Vec<usize>), usize> = BTreeMap::new();
        for s in s1.iter().chain(&s2) {
            ids.insert(s, 0);
        }
        for (k, id) in ids.values_mut().enumerate() {
            *id = k;
        }
        let next1: Vec<usize> = s1.iter().map(|s| ids[s]).collect();
        let next2: Vec<usize> = s2.iter().map(|s| ids[s]).collect();
        let count = ids.len();
        c1 = next1;
        c2 = next2;
        if count == classes {
            break;
        }
        classes = count;
    }
    (histogram(&c1) == histogram(&c2)).then_some((c1, c2))
}

fn signatures(g: &Graph, colors: &[usize]) -> Vec<(usize, Vec<usize>)> {
    (0..g.node_count())
        .map(|u| {
            let mut around: Vec<usize> = g
                .neighbors(u)
                .filter(|&v| v != u)
                .map(|v| colors[v])
                .collect();
            around.sort_unstable();
            (colors[u], around)
        })
        .collect()
}

fn histogram(colors: &[usize]) -> BTreeMap<usize, usize> {
    let mut h = BTreeMap::new();
    for &c in colors {
        *h.entry(c).or_insert(0) += 1;
    }
    h
}
