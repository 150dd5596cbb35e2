//! Direct-product factorization by constraint-propagating label search.
//!
//! Deciding whether `G ≅ A ⨯ B` for factor orders `a, b` is phrased as
//! labeling every node of `G` with a distinct cell `(row, col)` of an `a x b`
//! grid so that
//!
//! ```text
//! adj(u, v) = A[row(u)][row(v)] * B[col(u)][col(v)]
//! ```
//!
//! holds for every pair, loops included. The entries of `A` and `B` are
//! tri-state cells (unknown, 0, 1) fixed lazily by the labels chosen so far:
//! an edge forces both entries to 1, a non-edge forbids both being 1 at once.
//! Nodes are visited component by component, each component in a
//! connectivity-first order, and rows and columns are opened in order of first
//! use, which removes the relabeling symmetry of both factors.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{GraphError, Result};
use crate::graph::{AdjacencyMatrix, Graph, GraphJson};
use crate::iso::{are_isomorphic_within, IsomorphismWitness, DEFAULT_ISO_MAX_NODES};
use crate::products::{direct_unbounded, VertexPairIndexing};
use crate::reduction::class_g_check;

pub const DEFAULT_FACTOR_MAX_NODES: usize = 20;

/// The search works on 64-bit adjacency rows, so this is a hard ceiling no
/// configured bound can lift.
const ENGINE_MAX_NODES: usize = 64;

/// Proof that `G ≅ factor_a ⨯ factor_b`: node `v` of `G` corresponds to the
/// product node `(labeling[v].0, labeling[v].1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorizationWitness {
    factor_a: Graph,
    factor_b: Graph,
    labeling: Vec<(usize, usize)>,
}

impl FactorizationWitness {
    /// Checks every invariant against `g` and returns the witness if it holds.
    pub fn new(
        factor_a: Graph,
        factor_b: Graph,
        labeling: Vec<(usize, usize)>,
        g: &Graph,
    ) -> Result<Self> {
        let w = FactorizationWitness {
            factor_a,
            factor_b,
            labeling,
        };
        if w.verifies(g) {
            Ok(w)
        } else {
            Err(GraphError::Argument(
                "labeling does not carry the graph onto the factor product".into(),
            ))
        }
    }

    pub fn factor_a(&self) -> &Graph {
        &self.factor_a
    }

    pub fn factor_b(&self) -> &Graph {
        &self.factor_b
    }

    pub fn labeling(&self) -> &[(usize, usize)] {
        &self.labeling
    }

    /// Node permutation sending `v` to its row-major product index.
    pub fn product_permutation(&self) -> Vec<usize> {
        let idx = VertexPairIndexing::new(self.factor_b.node_count().max(1));
        self.labeling
            .iter()
            .map(|&(r, c)| idx.index(r, c))
            .collect()
    }

    /// Both factors nontrivial and the labeling reproduces `g` exactly.
    pub fn verifies(&self, g: &Graph) -> bool {
        self.factor_a.node_count() >= 2 && self.factor_b.node_count() >= 2 && self.reproduces(g)
    }

    /// Recomputes `factor_a ⨯ factor_b` and compares it with `g` relabeled.
    fn reproduces(&self, g: &Graph) -> bool {
        let (a, b) = (self.factor_a.node_count(), self.factor_b.node_count());
        if a * b != g.node_count() || self.labeling.len() != g.node_count() {
            return false;
        }
        if self.labeling.iter().any(|&(r, c)| r >= a || c >= b) {
            return false;
        }
        match g.relabel(&self.product_permutation()) {
            Ok(relabeled) => relabeled == direct_unbounded(&self.factor_a, &self.factor_b),
            Err(_) => false,
        }
    }

    pub fn to_json(&self) -> WitnessJson {
        WitnessJson {
            a: self.factor_a.node_count(),
            b: self.factor_b.node_count(),
            factor_a: (&self.factor_a).into(),
            factor_b: (&self.factor_b).into(),
            labeling: self.labeling.iter().map(|&(r, c)| [r, c]).collect(),
        }
    }
}

/// JSON form of a [`FactorizationWitness`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessJson {
    pub a: usize,
    pub b: usize,
    pub factor_a: GraphJson,
    pub factor_b: GraphJson,
    pub labeling: Vec<[usize; 2]>,
}

/// Finds `A` (order `a`) and `B` (order `b`) with `g ≅ A ⨯ B`, if any exist.
pub fn factor_search(g: &Graph, a: usize, b: usize) -> Result<Option<FactorizationWitness>> {
    factor_search_within(g, a, b, DEFAULT_FACTOR_MAX_NODES)
}

pub fn factor_search_within(
    g: &Graph,
    a: usize,
    b: usize,
    max_nodes: usize,
) -> Result<Option<FactorizationWitness>> {
    check_bound(g, max_nodes)?;
    if a.checked_mul(b) != Some(g.node_count()) {
        return Err(GraphError::Argument(format!(
            "{a} x {b} does not match {} nodes",
            g.node_count()
        )));
    }
    if a < 2 || a > b {
        return Err(GraphError::Argument(format!(
            "factor orders must satisfy 2 <= a <= b, got a = {a}, b = {b}"
        )));
    }
    Ok(Search::new(g, a, b, None).run())
}

/// Finds `B` with `g ≅ left ⨯ B`, keeping the left factor fixed.
pub fn factor_search_with_left(
    g: &Graph,
    left: &Graph,
    max_nodes: usize,
) -> Result<Option<FactorizationWitness>> {
    check_bound(g, max_nodes)?;
    let a = left.node_count();
    if a < 2 || !g.node_count().is_multiple_of(a) {
        return Err(GraphError::Argument(format!(
            "a {a}-node left factor cannot divide {} nodes",
            g.node_count()
        )));
    }
    let b = g.node_count() / a;
    Ok(Search::new(g, a, b, Some(&left.adjacency_matrix())).run())
}

fn check_bound(g: &Graph, max_nodes: usize) -> Result<()> {
    GraphError::check_size(
        "factor search",
        g.node_count(),
        max_nodes.min(ENGINE_MAX_NODES),
    )
}

pub fn is_prime_direct(g: &Graph) -> Result<bool> {
    is_prime_direct_within(g, DEFAULT_FACTOR_MAX_NODES)
}

/// Prime means nontrivial with no factorization into two nontrivial factors.
/// The trivial one-node graph is reported as not prime.
pub fn is_prime_direct_within(g: &Graph, max_nodes: usize) -> Result<bool> {
    Ok(matches!(
        decompose_within(g, max_nodes)?,
        Decomposition::Prime
    ))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Decomposition {
    Trivial,
    Prime,
    Composite(FactorizationWitness),
}

/// Tries divisor pairs `2 <= a <= b` in increasing `a` and returns the first
/// witness found.
pub fn decompose_within(g: &Graph, max_nodes: usize) -> Result<Decomposition> {
    let n = g.node_count();
    if n == 0 {
        return Err(GraphError::Argument(
            "primality is undefined for the empty graph".into(),
        ));
    }
    check_bound(g, max_nodes)?;
    if n == 1 {
        return Ok(Decomposition::Trivial);
    }
    for a in (2..)
        .take_while(|a| a * a <= n)
        .filter(|a| n.is_multiple_of(*a))
    {
        if let Some(w) = Search::new(g, a, n / a, None).run() {
            return Ok(Decomposition::Composite(w));
        }
    }
    Ok(Decomposition::Prime)
}

/// Builds the explicit `D2 ⨯ g1` witness for `g1 ∪ g2` from an isomorphism
/// `g1 -> g2`: node `i` of `g1` is labeled `(0, i)` and node `n + iso(i)` is
/// labeled `(1, i)`.
pub fn lemma1_forward(
    g1: &Graph,
    g2: &Graph,
    iso: &IsomorphismWitness,
) -> Result<FactorizationWitness> {
    let n = g1.node_count();
    if n != g2.node_count() {
        return Err(GraphError::Precondition(
            "graphs have different orders".into(),
        ));
    }
    if !g1.is_connected()? || !g2.is_connected()? {
        return Err(GraphError::Precondition(
            "both graphs must be connected".into(),
        ));
    }
    if !iso.maps(g1, g2) {
        return Err(GraphError::Argument(
            "not an isomorphism between the graphs".into(),
        ));
    }
    let mut labeling = vec![(0, 0); 2 * n];
    for (i, &j) in iso.mapping().iter().enumerate() {
        labeling[i] = (0, i);
        labeling[n + j] = (1, i);
    }
    let witness = FactorizationWitness {
        factor_a: Graph::d2(),
        factor_b: g1.clone(),
        labeling,
    };
    debug_assert!(witness.reproduces(&g1.disjoint_union(g2)));
    Ok(witness)
}

/// Looks for a factorization `g1 ∪ g2 ≅ D2 ⨯ B` and, when one exists, reads
/// off the isomorphism `g1 -> g2` it implies: each graph fills one row of the
/// label grid, and nodes sharing a column correspond.
pub fn lemma1_reverse(g1: &Graph, g2: &Graph) -> Result<Option<IsomorphismWitness>> {
    lemma1_reverse_within(g1, g2, DEFAULT_FACTOR_MAX_NODES)
}

pub fn lemma1_reverse_within(
    g1: &Graph,
    g2: &Graph,
    max_nodes: usize,
) -> Result<Option<IsomorphismWitness>> {
    let n = g1.node_count();
    if n != g2.node_count() {
        return Err(GraphError::Precondition(
            "graphs have different orders".into(),
        ));
    }
    if !g1.is_connected()? || !g2.is_connected()? {
        return Err(GraphError::Precondition(
            "both graphs must be connected".into(),
        ));
    }
    let union = g1.disjoint_union(g2);
    check_bound(&union, max_nodes)?;
    let Some(w) = Search::new(&union, 2, n, Some(&AdjacencyMatrix::identity(2))).run() else {
        return Ok(None);
    };

    let labels = w.labeling();
    let (row1, row2) = (labels[0].0, labels[n].0);
    if row1 == row2
        || labels[..n].iter().any(|l| l.0 != row1)
        || labels[n..].iter().any(|l| l.0 != row2)
    {
        return Err(GraphError::Precondition(
            "factorization does not split the two graphs into separate rows".into(),
        ));
    }
    let mut by_column = vec![usize::MAX; n];
    for (j, l) in labels[n..].iter().enumerate() {
        by_column[l.1] = j;
    }
    let mapping = labels[..n].iter().map(|l| by_column[l.1]).collect();
    IsomorphismWitness::new(mapping, g1, g2).map(Some)
}

/// One of the sixteen 2x2 0/1 matrices a two-node left factor could have.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct TwoBlockCandidate {
    pub a_matrix: [[u8; 2]; 2],
}

impl TwoBlockCandidate {
    /// All sixteen, in the order `a00, a01, a10, a11` read as binary digits.
    pub fn all() -> impl Iterator<Item = TwoBlockCandidate> {
        (0u8..16).map(|k| TwoBlockCandidate {
            a_matrix: [[k >> 3 & 1, k >> 2 & 1], [k >> 1 & 1, k & 1]],
        })
    }

    pub fn identity() -> Self {
        TwoBlockCandidate {
            a_matrix: [[1, 0], [0, 1]],
        }
    }

    pub fn antidiagonal() -> Self {
        TwoBlockCandidate {
            a_matrix: [[0, 1], [1, 0]],
        }
    }

    pub fn is_symmetric(&self) -> bool {
        self.a_matrix[0][1] == self.a_matrix[1][0]
    }

    /// As a two-node graph: the nodes are joined and at least one is looped.
    pub fn is_connected_nonbipartite(&self) -> bool {
        self.a_matrix[0][1] == 1 && (self.a_matrix[0][0] == 1 || self.a_matrix[1][1] == 1)
    }

    pub fn nonzeros(&self) -> usize {
        self.a_matrix.iter().flatten().map(|&x| x as usize).sum()
    }
}

impl fmt::Debug for TwoBlockCandidate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [[a, b], [c, d]] = self.a_matrix;
        write!(f, "[{a}{b};{c}{d}]")
    }
}

/// Why a candidate left factor cannot occur for a union of two class-G graphs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Elimination {
    /// `M` is symmetric and `B` is nonzero, so `A` must be symmetric.
    NotSymmetric,
    /// Fewer than two ones leave at least `n` isolated nodes.
    TooFewNonzeros,
    /// `3b = 2(2m - s)` but `2m - s` is not divisible by 3.
    ThreeNonzeros,
    /// `4b = 2(2m - s)` but `2m - s` is odd.
    FourNonzeros,
    /// `A = [0 1; 1 0]` would make the union bipartite.
    ForcesBipartite,
    /// `A` is connected and nonbipartite, so every component of `A ⨯ B` has
    /// an even number of nodes, but the two graphs have odd order. Only
    /// reached when the graphs have different loop counts, where the two
    /// counting steps above do not apply.
    EvenComponents,
}

/// Runs the sixteen-matrix elimination for `g1 ∪ g2`, checking each step's
/// arithmetic against the actual graphs. Entries with `None` survive.
pub fn two_block_elimination(
    g1: &Graph,
    g2: &Graph,
) -> Vec<(TwoBlockCandidate, Option<Elimination>)> {
    let nonzeros_union = g1.nonzero_count() + g2.nonzero_count();
    let is_connected = |g: &Graph| g.is_connected().unwrap_or(false);
    let both_connected = is_connected(g1) && is_connected(g2);
    let union_bipartite = g1.is_bipartite() && g2.is_bipartite();
    let odd_components = both_connected && g1.node_count() % 2 == 1 && g2.node_count() % 2 == 1;
    TwoBlockCandidate::all()
        .map(|cand| {
            let reason = if !cand.is_symmetric() {
                Some(Elimination::NotSymmetric)
            } else if cand.nonzeros() < 2 && both_connected {
                Some(Elimination::TooFewNonzeros)
            } else if cand.nonzeros() == 3 && !nonzeros_union.is_multiple_of(3) {
                Some(Elimination::ThreeNonzeros)
            } else if cand.nonzeros() == 4 && !nonzeros_union.is_multiple_of(4) {
                Some(Elimination::FourNonzeros)
            } else if cand == TwoBlockCandidate::antidiagonal() && !union_bipartite {
                Some(Elimination::ForcesBipartite)
            } else if cand.is_connected_nonbipartite() && odd_components {
                Some(Elimination::EvenComponents)
            } else {
                None
            };
            (cand, reason)
        })
        .collect()
}

/// Decides compositeness of `g1 ∪ g2` for class-G graphs with equal node and
/// edge counts: after elimination only `A = I2` survives, and an `I2` factor
/// exists exactly when the graphs are isomorphic.
#[allow(non_snake_case)]
pub fn classG_union_compositeness(g1: &Graph, g2: &Graph) -> Result<bool> {
    class_g_union_compositeness_within(g1, g2, DEFAULT_ISO_MAX_NODES)
}

pub fn class_g_union_compositeness_within(
    g1: &Graph,
    g2: &Graph,
    iso_max_nodes: usize,
) -> Result<bool> {
    for g in [g1, g2] {
        let report = class_g_check(g);
        if !report.member {
            return Err(GraphError::NotClassG(report));
        }
    }
    if g1.node_count() != g2.node_count() || g1.edge_count() != g2.edge_count() {
        return Err(GraphError::Precondition(
            "graphs must have equal node and edge counts".into(),
        ));
    }
    let survivors: Vec<TwoBlockCandidate> = two_block_elimination(g1, g2)
        .into_iter()
        .filter_map(|(c, reason)| reason.is_none().then_some(c))
        .collect();
    assert_eq!(
        survivors,
        [TwoBlockCandidate::identity()],
        "elimination must leave only I2"
    );
    Ok(are_isomorphic_within(g1, g2, iso_max_nodes)?.is_some())
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Tri {
    Unknown,
    Zero,
    One,
}

#[derive(Clone, Copy)]
enum Undo {
    A(usize),
    B(usize),
    Forbid(usize),
}

/// Backtracking state. `A` and `B` cells are stored by upper-triangular id;
/// `forbid[ia * tb + ib]` records "not both `A[ia]` and `B[ib]` are 1".
struct Search<'g> {
    g: &'g Graph,
    rows: Vec<u64>,
    a: usize,
    b: usize,
    a_fixed: bool,
    a_cells: Vec<Tri>,
    b_cells: Vec<Tri>,
    forbid: Vec<bool>,
    trail: Vec<Undo>,
    order: Vec<usize>,
    label: Vec<(usize, usize)>,
    cell_used: Vec<bool>,
    rows_open: usize,
    cols_open: usize,
    degree: Vec<usize>,
}

#[inline]
fn tri_id(i: usize, j: usize, size: usize) -> usize {
    let (lo, hi) = if i <= j { (i, j) } else { (j, i) };
    lo * size - lo * (lo + 1) / 2 + hi
}

impl<'g> Search<'g> {
    fn new(g: &'g Graph, a: usize, b: usize, fixed_a: Option<&AdjacencyMatrix>) -> Self {
        let n = g.node_count();
        debug_assert_eq!(a * b, n);
        let ta = a * (a + 1) / 2;
        let tb = b * (b + 1) / 2;
        let mut a_cells = vec![Tri::Unknown; ta];
        if let Some(m) = fixed_a {
            for i in 0..a {
                for j in i..a {
                    a_cells[tri_id(i, j, a)] = if m.get(i, j) { Tri::One } else { Tri::Zero };
                }
            }
        }
        Search {
            g,
            rows: (0..n).map(|u| g.row_mask(u)).collect(),
            a,
            b,
            a_fixed: fixed_a.is_some(),
            a_cells,
            b_cells: vec![Tri::Unknown; tb],
            forbid: vec![false; ta * tb],
            trail: Vec::new(),
            order: search_order(g),
            label: vec![(usize::MAX, usize::MAX); n],
            cell_used: vec![false; n],
            rows_open: 0,
            cols_open: 0,
            degree: (0..n).map(|u| g.degree(u)).collect(),
        }
    }

    fn run(mut self) -> Option<FactorizationWitness> {
        if !self.assign(0) {
            return None;
        }
        let matrix = |cells: &[Tri], size: usize| {
            Graph::from_fn(size, |i, j| cells[tri_id(i, j, size)] == Tri::One)
        };
        let witness = FactorizationWitness {
            factor_a: matrix(&self.a_cells, self.a),
            factor_b: matrix(&self.b_cells, self.b),
            labeling: self.label,
        };
        assert!(
            witness.reproduces(self.g),
            "factor search produced an invalid witness"
        );
        Some(witness)
    }

    fn assign(&mut self, depth: usize) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let u = self.order[depth];
        let row_limit = if self.a_fixed {
            self.a
        } else {
            (self.rows_open + 1).min(self.a)
        };
        let col_limit = (self.cols_open + 1).min(self.b);
        for r in 0..row_limit {
            for c in 0..col_limit {
                if self.cell_used[r * self.b + c] {
                    continue;
                }
                let mark = self.trail.len();
                let (rows_open, cols_open) = (self.rows_open, self.cols_open);
                self.label[u] = (r, c);
                self.cell_used[r * self.b + c] = true;
                self.rows_open = self.rows_open.max(r + 1);
                self.cols_open = self.cols_open.max(c + 1);

                if self.propagate(depth) && self.degrees_feasible(depth) && self.assign(depth + 1) {
                    return true;
                }

                self.undo_to(mark);
                self.rows_open = rows_open;
                self.cols_open = cols_open;
                self.cell_used[r * self.b + c] = false;
                self.label[u] = (usize::MAX, usize::MAX);
            }
        }
        false
    }

    /// Applies the constraints between `order[depth]` and every node labeled
    /// so far (itself included).
    fn propagate(&mut self, depth: usize) -> bool {
        let u = self.order[depth];
        let (r, c) = self.label[u];
        for k in 0..=depth {
            let v = self.order[k];
            let (r2, c2) = self.label[v];
            let ia = tri_id(r, r2, self.a);
            let ib = tri_id(c, c2, self.b);
            let ok = if self.rows[u] >> v & 1 == 1 {
                self.set_a_one(ia) && self.set_b_one(ib)
            } else {
                self.forbid_pair(ia, ib)
            };
            if !ok {
                return false;
            }
        }
        true
    }

    fn set_a_one(&mut self, ia: usize) -> bool {
        match self.a_cells[ia] {
            Tri::One => true,
            Tri::Zero => false,
            Tri::Unknown => {
                self.a_cells[ia] = Tri::One;
                self.trail.push(Undo::A(ia));
                let tb = self.b_cells.len();
                (0..tb).all(|ib| !self.forbid[ia * tb + ib] || self.set_b_zero(ib))
            }
        }
    }

    fn set_b_one(&mut self, ib: usize) -> bool {
        match self.b_cells[ib] {
            Tri::One => true,
            Tri::Zero => false,
            Tri::Unknown => {
                self.b_cells[ib] = Tri::One;
                self.trail.push(Undo::B(ib));
                let tb = self.b_cells.len();
                (0..self.a_cells.len()).all(|ia| !self.forbid[ia * tb + ib] || self.set_a_zero(ia))
            }
        }
    }

    fn set_a_zero(&mut self, ia: usize) -> bool {
        match self.a_cells[ia] {
            Tri::Zero => true,
            Tri::One => false,
            Tri::Unknown => {
                self.a_cells[ia] = Tri::Zero;
                self.trail.push(Undo::A(ia));
                true
            }
        }
    }

    fn set_b_zero(&mut self, ib: usize) -> bool {
        match self.b_cells[ib] {
            Tri::Zero => true,
            Tri::One => false,
            Tri::Unknown => {
                self.b_cells[ib] = Tri::Zero;
                self.trail.push(Undo::B(ib));
                true
            }
        }
    }

    fn forbid_pair(&mut self, ia: usize, ib: usize) -> bool {
        match (self.a_cells[ia], self.b_cells[ib]) {
            (Tri::One, Tri::One) => false,
            (Tri::One, _) => self.set_b_zero(ib),
            (_, Tri::One) => self.set_a_zero(ia),
            (Tri::Zero, _) | (_, Tri::Zero) => true,
            (Tri::Unknown, Tri::Unknown) => {
                let k = ia * self.b_cells.len() + ib;
                if !self.forbid[k] {
                    self.forbid[k] = true;
                    self.trail.push(Undo::Forbid(k));
                }
                true
            }
        }
    }

    fn undo_to(&mut self, mark: usize) {
        while self.trail.len() > mark {
            match self.trail.pop().unwrap() {
                Undo::A(i) => self.a_cells[i] = Tri::Unknown,
                Undo::B(i) => self.b_cells[i] = Tri::Unknown,
                Undo::Forbid(k) => self.forbid[k] = false,
            }
        }
    }

    /// A node labeled `(r, c)` has degree `rowsum_A(r) * rowsum_B(c)`; reject
    /// when the known/unknown cell counts make that impossible for any
    /// labeled node.
    fn degrees_feasible(&self, depth: usize) -> bool {
        let bounds = |cells: &[Tri], size: usize| -> Vec<(usize, usize)> {
            (0..size)
                .map(|i| {
                    (0..size).fold((0, 0), |(lo, hi), j| match cells[tri_id(i, j, size)] {
                        Tri::One => (lo + 1, hi + 1),
                        Tri::Unknown => (lo, hi + 1),
                        Tri::Zero => (lo, hi),
                    })
                })
                .collect()
        };
        let ra = bounds(&self.a_cells, self.a);
        let rb = bounds(&self.b_cells, self.b);
        self.order[..=depth].iter().all(|&v| {
            let (r, c) = self.label[v];
            let d = self.degree[v];
            ra[r].0 * rb[c].0 <= d && d <= ra[r].1 * rb[c].1
        })
    }
}

/// Components in order of smallest node; inside each, start from a
/// highest-degree node and repeatedly take the node with the most neighbors
/// already placed (ties: higher degree, then lower index).
fn search_order(g: &Graph) -> Vec<usize> {
    let n = g.node_count();
    let deg: Vec<usize> = (0..n).map(|u| g.degree(u)).collect();
    let mut order = Vec::with_capacity(n);
    let mut placed = vec![false; n];
    for comp in g.components() {
        let mut links = vec![0usize; n];
        for _ in 0..comp.len() {
            let &next = comp
                .iter()
                .filter(|&&v| !placed[v])
                .max_by(|&&x, &&y| (links[x], deg[x]).cmp(&(links[y], deg[y])).then(y.cmp(&x)))
                .expect("component has an unplaced node");
            placed[next] = true;
            order.push(next);
            for w in g.neighbors(next) {
                links[w] += 1;
            }
        }
    }
    order
}
