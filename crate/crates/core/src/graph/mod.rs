//! Simple undirected graphs stored as adjacency bitrows.
//!
//! Every operation returns a fresh [`Graph`]; values are never mutated once
//! built. Vertex numbering is deterministic: under [`Graph::disjoint_union`]
//! and [`Graph::join`] the left operand keeps its ids and the right operand is
//! shifted by the left operand's order.

mod embed;
mod io;
mod iso;

use std::fmt;

use fixedbitset::FixedBitSet;
use thiserror::Error;

pub use embed::find_induced_embedding;
pub use io::{from_edge_list, from_graph6, to_edge_list, to_graph6, FormatError};
pub use iso::{canonical_form, graphs_up_to_iso, is_isomorphic, CanonicalForm, MAX_ISO_ORDER};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for graph on {order} vertices")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),
    #[error("cycle needs at least 3 vertices, got {0}")]
    CycleTooShort(usize),
    #[error("{kind} takes {expected} size argument(s), got {got}")]
    Arity { kind: &'static str, expected: &'static str, got: usize },
    #[error("component index {index} out of range ({count} components)")]
    ComponentOutOfRange { index: usize, count: usize },
    #[error("graph on {order} vertices exceeds the supported bound of {max}")]
    TooLarge { order: usize, max: usize },
}

/// A subset of the vertices of some host graph.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet(FixedBitSet);

impl VertexSet {
    pub fn new(universe: usize) -> Self {
        VertexSet(FixedBitSet::with_capacity(universe))
    }

    pub fn full(universe: usize) -> Self {
        let mut bits = FixedBitSet::with_capacity(universe);
        bits.insert_range(..);
        VertexSet(bits)
    }

    pub fn from_vertices(universe: usize, vertices: impl IntoIterator<Item = usize>) -> Self {
        let mut set = VertexSet::new(universe);
        for v in vertices {
            set.insert(v);
        }
        set
    }

    /// Size of the host vertex range, not the number of members.
    pub fn universe(&self) -> usize {
        self.0.len()
    }

    pub fn insert(&mut self, v: usize) {
        self.0.insert(v);
    }

    pub fn remove(&mut self, v: usize) {
        self.0.set(v, false);
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.contains(v)
    }

    pub fn len(&self) -> usize {
        self.0.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_clear()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.ones()
    }

    pub fn first(&self) -> Option<usize> {
        self.0.ones().next()
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub(crate) fn bits(&self) -> &FixedBitSet {
        &self.0
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// The basic graph shapes used as atoms throughout the crate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BasicKind {
    Complete,
    Path,
    Cycle,
    CompleteMultipartite,
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<FixedBitSet>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph { adj: vec![FixedBitSet::with_capacity(n); n] }
    }

    pub fn from_edges(
        n: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, order: n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    pub(crate) fn add_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v);
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for u in 0..n {
            g.adj[u].insert_range(..);
            g.adj[u].set(u, false);
        }
        g
    }

    pub fn path(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for v in 1..n {
            g.add_edge(v - 1, v);
        }
        g
    }

    pub fn cycle(n: usize) -> Result<Self, GraphError> {
        if n < 3 {
            return Err(GraphError::CycleTooShort(n));
        }
        let mut g = Graph::path(n);
        g.add_edge(n - 1, 0);
        Ok(g)
    }

    /// `K_{a,b,...}`: parts are contiguous id ranges in the given order.
    pub fn complete_multipartite(parts: &[usize]) -> Self {
        parts
            .iter()
            .map(|&p| Graph::empty(p))
            .reduce(|acc, part| acc.join(&part))
            .unwrap_or_else(|| Graph::empty(0))
    }

    pub fn make_basic(kind: BasicKind, sizes: &[usize]) -> Result<Self, GraphError> {
        let single = |name| match sizes {
            [n] => Ok(*n),
            _ => Err(GraphError::Arity { kind: name, expected: "exactly one", got: sizes.len() }),
        };
        match kind {
            BasicKind::Complete => Ok(Graph::complete(single("complete")?)),
            BasicKind::Path => Ok(Graph::path(single("path")?)),
            BasicKind::Cycle => Graph::cycle(single("cycle")?),
            BasicKind::CompleteMultipartite => {
                if sizes.is_empty() {
                    return Err(GraphError::Arity {
                        kind: "complete multipartite",
                        expected: "at least one",
                        got: 0,
                    });
                }
                Ok(Graph::complete_multipartite(sizes))
            }
        }
    }

    /// Number of vertices.
    pub fn order(&self) -> usize {
        self.adj.len()
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.adj.iter().map(|row| row.count_ones(..)).sum::<usize>() / 2
    }

    pub fn is_empty(&self) -> bool {
        self.adj.is_empty()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones(..)
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].ones()
    }

    /// Edges `(u, v)` with `u < v`, ordered by `u` then `v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, row)| row.ones().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut degrees: Vec<usize> = (0..self.order()).map(|v| self.degree(v)).collect();
        degrees.sort_unstable();
        degrees
    }

    fn with_order(&self, n: usize) -> Self {
        let mut g = Graph::empty(n);
        for (u, row) in self.adj.iter().enumerate() {
            for v in row.ones() {
                g.adj[u].insert(v);
            }
        }
        g
    }

    /// `self + other`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.order();
        let mut g = self.with_order(shift + other.order());
        for (u, v) in other.edges() {
            g.add_edge(u + shift, v + shift);
        }
        g
    }

    /// `self ⊕ other`: the disjoint union plus every cross edge.
    pub fn join(&self, other: &Graph) -> Graph {
        let shift = self.order();
        let n = shift + other.order();
        let mut g = self.disjoint_union(other);
        for u in 0..shift {
            g.adj[u].insert_range(shift..n);
        }
        for v in shift..n {
            g.adj[v].insert_range(..shift);
        }
        g
    }

    pub fn complement(&self) -> Graph {
        let mut g = self.clone();
        for (u, row) in g.adj.iter_mut().enumerate() {
            row.toggle_range(..);
            row.set(u, false);
        }
        g
    }

    /// Complements the neighbourhood of `v`, leaving every other adjacency alone.
    pub fn switch_vertex(&self, v: usize) -> Result<Graph, GraphError> {
        self.check_vertex(v)?;
        let mut g = self.clone();
        for u in 0..self.order() {
            if u != v {
                g.adj[u].toggle(v);
                g.adj[v].toggle(u);
            }
        }
        Ok(g)
    }

    /// Complements the components indexed by `side` and the remaining
    /// components separately, returning `co(H') + co(H'')`.
    ///
    /// Component indices refer to [`Graph::components`]. An empty or full side
    /// yields the complement of the whole graph.
    pub fn partial_complement(&self, side: &[usize]) -> Result<Graph, GraphError> {
        let comps = self.components();
        let mut in_side = vec![false; comps.len()];
        for &i in side {
            if i >= comps.len() {
                return Err(GraphError::ComponentOutOfRange { index: i, count: comps.len() });
            }
            in_side[i] = true;
        }
        let mut g = self.clone();
        for (i, ci) in comps.iter().enumerate() {
            for (j, cj) in comps.iter().enumerate() {
                if in_side[i] != in_side[j] {
                    continue;
                }
                for u in ci.iter() {
                    for v in cj.iter() {
                        if u != v {
                            g.adj[u].toggle(v);
                        }
                    }
                }
            }
        }
        Ok(g)
    }

    /// Connected components in ascending order of least vertex id.
    pub fn components(&self) -> Vec<VertexSet> {
        self.components_within(&VertexSet::full(self.order()))
    }

    pub(crate) fn components_within(&self, within: &VertexSet) -> Vec<VertexSet> {
        self.grow_components(within, |v, frontier| {
            frontier.union_with(&self.adj[v]);
        })
    }

    /// Components of the complement restricted to `within`.
    pub(crate) fn co_components_within(&self, within: &VertexSet) -> Vec<VertexSet> {
        self.grow_components(within, |v, frontier| {
            let mut non = self.adj[v].clone();
            non.toggle_range(..);
            non.set(v, false);
            frontier.union_with(&non);
        })
    }

    fn grow_components(
        &self,
        within: &VertexSet,
        mut expand: impl FnMut(usize, &mut FixedBitSet),
    ) -> Vec<VertexSet> {
        let n = self.order();
        let mut unseen = within.bits().clone();
        let mut out = Vec::new();
        while let Some(start) = unseen.ones().next() {
            let mut comp = FixedBitSet::with_capacity(n);
            let mut stack = vec![start];
            unseen.set(start, false);
            comp.insert(start);
            while let Some(v) = stack.pop() {
                let mut reach = FixedBitSet::with_capacity(n);
                expand(v, &mut reach);
                reach.intersect_with(&unseen);
                for w in reach.ones() {
                    unseen.set(w, false);
                    comp.insert(w);
                    stack.push(w);
                }
            }
            out.push(VertexSet(comp));
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Subgraph induced by `set`, renumbered by ascending original id.
    pub fn induced_subgraph(&self, set: &VertexSet) -> Graph {
        let ids = set.to_vec();
        self.induced_by(&ids)
    }

    /// Subgraph induced by `ids`, vertex `i` of the result being `ids[i]`.
    pub fn induced_by(&self, ids: &[usize]) -> Graph {
        let mut g = Graph::empty(ids.len());
        for (i, &u) in ids.iter().enumerate() {
            for (j, &v) in ids.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    pub fn remove_vertex(&self, v: usize) -> Graph {
        let ids: Vec<usize> = (0..self.order()).filter(|&u| u != v).collect();
        self.induced_by(&ids)
    }

    /// The graph with vertex `v` renamed to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.order(), "permutation length must match order");
        let mut g = Graph::empty(self.order());
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v]);
        }
        g
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v >= self.order() {
            Err(GraphError::VertexOutOfRange { vertex: v, order: self.order() })
        } else {
            Ok(())
        }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({}; {:?})", self.order(), self.edges().collect::<Vec<_>>())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k(n: usize) -> Graph {
        Graph::complete(n)
    }

    #[test]
    fn basic_shapes() {
        assert_eq!(Graph::make_basic(BasicKind::Complete, &[3]).unwrap().size(), 3);
        let k222 = Graph::make_basic(BasicKind::CompleteMultipartite, &[2, 2, 2]).unwrap();
        assert_eq!((k222.order(), k222.size()), (6, 12));
        let p4 = Graph::make_basic(BasicKind::Path, &[4]).unwrap();
        assert_eq!(p4.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2), (2, 3)]);
        assert_eq!(Graph::make_basic(BasicKind::Cycle, &[2]), Err(GraphError::CycleTooShort(2)));
        assert!(matches!(
            Graph::make_basic(BasicKind::Path, &[2, 3]),
            Err(GraphError::Arity { .. })
        ));
        assert!(Graph::make_basic(BasicKind::CompleteMultipartite, &[]).is_err());
    }

    #[test]
    fn union_and_join() {
        let two_k2 = k(2).disjoint_union(&k(2));
        assert_eq!((two_k2.order(), two_k2.size()), (4, 2));
        assert_eq!(two_k2.edges().collect::<Vec<_>>(), vec![(0, 1), (2, 3)]);
        assert_eq!(k(3).disjoint_union(&Graph::empty(0)), k(3));
        assert_eq!(Graph::empty(0).join(&k(3)), k(3));

        let f1 = k(2).disjoint_union(&k(2)).disjoint_union(&k(2)).disjoint_union(&k(1));
        assert_eq!((f1.order(), f1.size()), (7, 3));

        assert_eq!(k(1).join(&k(1)), k(2));
        let c4 = Graph::empty(2).join(&Graph::empty(2));
        assert!(is_isomorphic(&c4, &Graph::cycle(4).unwrap()).unwrap());

        let block = k(3).disjoint_union(&k(3)).join(&k(1));
        assert_eq!((block.order(), block.size()), (7, 12));
    }

    #[test]
    fn complement_examples() {
        let three_k2 = k(2).disjoint_union(&k(2)).disjoint_union(&k(2));
        let k222 = Graph::complete_multipartite(&[2, 2, 2]);
        assert!(is_isomorphic(&three_k2.complement(), &k222).unwrap());

        let g = k(2).disjoint_union(&k(2)).disjoint_union(&k(1)).complement();
        assert_eq!(g.order(), 5);
        assert!(g.is_connected());
        assert_eq!(g.size(), 10 - 2);
    }

    #[test]
    fn switching() {
        let g = k(1).disjoint_union(&k(2));
        assert_eq!(g.switch_vertex(0).unwrap(), k(3));
        assert_eq!(g.switch_vertex(1).unwrap().switch_vertex(1).unwrap(), g);
        assert_eq!(
            g.switch_vertex(3),
            Err(GraphError::VertexOutOfRange { vertex: 3, order: 3 })
        );
    }

    #[test]
    fn partial_complements() {
        let two_k2 = k(2).disjoint_union(&k(2));
        assert_eq!(two_k2.partial_complement(&[0]).unwrap(), Graph::empty(4));

        let f1 = k(2).disjoint_union(&k(2)).disjoint_union(&k(2)).disjoint_union(&k(1));
        let f5 = f1.partial_complement(&[0, 1, 2]).unwrap();
        let expected = k(2).disjoint_union(&k(2)).disjoint_union(&k(2)).complement().disjoint_union(&k(1));
        assert!(is_isomorphic(&f5, &expected).unwrap());

        assert_eq!(f1.partial_complement(&[0, 1, 2, 3]).unwrap(), f1.complement());
        assert_eq!(f1.partial_complement(&[]).unwrap(), f1.complement());
        assert!(matches!(
            f1.partial_complement(&[4]),
            Err(GraphError::ComponentOutOfRange { index: 4, count: 4 })
        ));
    }

    #[test]
    fn components_and_induced() {
        let f1 = k(2).disjoint_union(&k(2)).disjoint_union(&k(2)).disjoint_union(&k(1));
        let sizes: Vec<usize> = f1.components().iter().map(VertexSet::len).collect();
        assert_eq!(sizes, vec![2, 2, 2, 1]);
        assert_eq!(Graph::complete_multipartite(&[3, 3]).components().len(), 1);
        assert!(Graph::empty(0).components().is_empty());

        let c4 = Graph::cycle(4).unwrap();
        assert_eq!(c4.induced_subgraph(&VertexSet::full(4)), c4);
        assert_eq!(c4.induced_subgraph(&VertexSet::from_vertices(4, [0, 2])), Graph::empty(2));
        let without_isolated = f1.induced_subgraph(&VertexSet::from_vertices(7, 0..6));
        assert_eq!(without_isolated, k(2).disjoint_union(&k(2)).disjoint_union(&k(2)));
    }

    #[test]
    fn from_edges_rejects_bad_input() {
        assert_eq!(Graph::from_edges(3, [(0, 3)]), Err(GraphError::VertexOutOfRange { vertex: 3, order: 3 }));
        assert_eq!(Graph::from_edges(3, [(1, 1)]), Err(GraphError::SelfLoop(1)));
    }
}
