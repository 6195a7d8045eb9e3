//! (s,k)-polarity of cographs.
//!
//! A polar partition splits the vertices into `A`, inducing a complete
//! multipartite graph, and `B`, inducing a disjoint union of cliques. Edges
//! between `A` and `B` are unrestricted. The signature of a cograph is the set
//! of exact part counts `(p, q)` it realises, computed bottom-up on its cotree.

mod extract;
mod oracle;
mod unipolar;

use serde::{Deserialize, Serialize};

use crate::cograph::{build_cotree, Cotree, NodeKind, NotCograph};
use crate::graph::Graph;

pub use extract::extract_partition;
pub use oracle::{
    brute_force_partition, brute_force_signature, brute_force_sk_polar, OracleError,
    MAX_ORACLE_ORDER,
};
pub use unipolar::{is_unipolar, is_unipolar_cotree, is_unipolar_either_side_cotree};

/// Part-count bound meaning "no limit"; clamped to the graph order.
pub const UNBOUNDED: usize = usize::MAX;

/// Feasible `(p, q)` pairs: `p` nonempty parts in `A`, `q` nonempty cliques in `B`.
#[derive(Clone, PartialEq, Eq)]
pub struct PolarSignature {
    s_cap: usize,
    k_cap: usize,
    grid: Vec<bool>,
}

impl PolarSignature {
    fn blank(s_cap: usize, k_cap: usize) -> Self {
        PolarSignature { s_cap, k_cap, grid: vec![false; (s_cap + 1) * (k_cap + 1)] }
    }

    fn insert(&mut self, p: usize, q: usize) {
        if p <= self.s_cap && q <= self.k_cap {
            self.grid[p * (self.k_cap + 1) + q] = true;
        }
    }

    /// Signature of the graph with no vertices.
    pub fn of_empty_graph(s_cap: usize, k_cap: usize) -> Self {
        let mut sig = PolarSignature::blank(s_cap, k_cap);
        sig.insert(0, 0);
        sig
    }

    /// A single vertex is one `A` part or one `B` clique.
    pub fn of_vertex(s_cap: usize, k_cap: usize) -> Self {
        let mut sig = PolarSignature::blank(s_cap, k_cap);
        sig.insert(1, 0);
        sig.insert(0, 1);
        sig
    }

    pub fn caps(&self) -> (usize, usize) {
        (self.s_cap, self.k_cap)
    }

    pub fn contains(&self, p: usize, q: usize) -> bool {
        p <= self.s_cap && q <= self.k_cap && self.grid[p * (self.k_cap + 1) + q]
    }

    pub fn is_empty(&self) -> bool {
        !self.grid.iter().any(|&b| b)
    }

    /// Members in lexicographic order.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        let width = self.k_cap + 1;
        (0..self.grid.len())
            .filter(|&i| self.grid[i])
            .map(|i| (i / width, i % width))
            .collect()
    }

    /// Signature of the union or join of two graphs with these signatures.
    pub fn combine(kind: NodeKind, left: &Self, right: &Self) -> Self {
        debug_assert_eq!(left.caps(), right.caps());
        let mut out = PolarSignature::blank(left.s_cap, left.k_cap);
        let rights = right.pairs();
        for a in left.pairs() {
            for &b in &rights {
                if let Some((p, q)) = combine_counts(kind, a, b) {
                    out.insert(p, q);
                }
            }
        }
        out
    }
}

impl std::fmt::Debug for PolarSignature {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_set().entries(self.pairs()).finish()
    }
}

/// Merges two counts that add up without crossing: the side of the
/// operation that joins pieces can absorb one piece from each operand.
fn merge(a: usize, b: usize) -> Option<usize> {
    match (a, b) {
        (0, x) | (x, 0) => Some(x),
        (1, 1) => Some(1),
        _ => None,
    }
}

/// Part counts of a union or join, uncapped.
///
/// Under a union the `A` parts cannot straddle components unless each side
/// has a single stable part, while cliques simply add up. Under a join the
/// roles swap.
pub(crate) fn combine_counts(
    kind: NodeKind,
    (p1, q1): (usize, usize),
    (p2, q2): (usize, usize),
) -> Option<(usize, usize)> {
    match kind {
        NodeKind::Union => Some((merge(p1, p2)?, q1 + q2)),
        NodeKind::Join => Some((p1 + p2, merge(q1, q2)?)),
    }
}

fn clamp(cap: usize, order: usize) -> usize {
    cap.min(order)
}

/// Bottom-up signature of a cotree with part caps `s_cap` and `k_cap`.
pub fn signature(t: &Cotree, s_cap: usize, k_cap: usize) -> PolarSignature {
    let n = t.order();
    signature_capped(t, clamp(s_cap, n), clamp(k_cap, n))
}

fn signature_capped(t: &Cotree, s_cap: usize, k_cap: usize) -> PolarSignature {
    match t {
        Cotree::Leaf(_) => PolarSignature::of_vertex(s_cap, k_cap),
        Cotree::Node(kind, children) => children
            .iter()
            .map(|c| signature_capped(c, s_cap, k_cap))
            .reduce(|acc, sig| PolarSignature::combine(*kind, &acc, &sig))
            .expect("internal nodes have children"),
    }
}

pub fn is_sk_polar_cotree(t: &Cotree, s: usize, k: usize) -> bool {
    !signature(t, s, k).is_empty()
}

/// Decides (s,k)-polarity of a cograph; pass [`UNBOUNDED`] for no limit.
pub fn is_sk_polar(g: &Graph, s: usize, k: usize) -> Result<bool, NotCograph> {
    if g.order() == 0 {
        return Ok(true);
    }
    Ok(is_sk_polar_cotree(&build_cotree(g)?, s, k))
}

pub fn is_polar(g: &Graph) -> Result<bool, NotCograph> {
    is_sk_polar(g, UNBOUNDED, UNBOUNDED)
}

/// A stable set plus a disjoint union of cliques: (1, unbounded)-polar.
pub fn is_monopolar(g: &Graph) -> Result<bool, NotCograph> {
    is_sk_polar(g, 1, UNBOUNDED)
}

/// The alternative reading: (1, unbounded)-polar or (unbounded, 1)-polar.
pub fn is_monopolar_either_side(g: &Graph) -> Result<bool, NotCograph> {
    Ok(is_monopolar(g)? || is_sk_polar(g, UNBOUNDED, 1)?)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Part {
    /// Index of a stable part of `A` (zero based).
    A(usize),
    /// Index of a clique of `B` (zero based).
    B(usize),
}

/// One label per vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolarPartition {
    pub labels: Vec<Part>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionBlocks {
    pub a_parts: Vec<Vec<usize>>,
    pub b_cliques: Vec<Vec<usize>>,
}

impl PolarPartition {
    fn groups(&self, pick: impl Fn(Part) -> Option<usize>) -> Vec<Vec<usize>> {
        let mut groups: Vec<Vec<usize>> = Vec::new();
        for (v, &label) in self.labels.iter().enumerate() {
            if let Some(i) = pick(label) {
                if groups.len() <= i {
                    groups.resize(i + 1, Vec::new());
                }
                groups[i].push(v);
            }
        }
        groups.retain(|g| !g.is_empty());
        groups
    }

    pub fn a_parts(&self) -> Vec<Vec<usize>> {
        self.groups(|p| match p {
            Part::A(i) => Some(i),
            Part::B(_) => None,
        })
    }

    pub fn b_cliques(&self) -> Vec<Vec<usize>> {
        self.groups(|p| match p {
            Part::B(i) => Some(i),
            Part::A(_) => None,
        })
    }

    /// Nonempty `A` parts and `B` cliques.
    pub fn counts(&self) -> (usize, usize) {
        (self.a_parts().len(), self.b_cliques().len())
    }

    pub fn blocks(&self) -> PartitionBlocks {
        PartitionBlocks { a_parts: self.a_parts(), b_cliques: self.b_cliques() }
    }
}

/// Checks a labelling against the definition, ignoring `A`-`B` edges.
pub fn validate_partition(g: &Graph, part: &PolarPartition, s: usize, k: usize) -> bool {
    if part.labels.len() != g.order() {
        return false;
    }
    let (p, q) = part.counts();
    if p > s || q > k {
        return false;
    }
    for u in 0..g.order() {
        for v in u + 1..g.order() {
            let ok = match (part.labels[u], part.labels[v]) {
                (Part::A(i), Part::A(j)) => g.has_edge(u, v) == (i != j),
                (Part::B(i), Part::B(j)) => g.has_edge(u, v) == (i == j),
                _ => true,
            };
            if !ok {
                return false;
            }
        }
    }
    true
}
