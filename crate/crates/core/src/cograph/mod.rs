//! Cograph recognition, cotrees and canonical cotree codes.

mod enumerate;

use std::fmt;

use rand::Rng;
use thiserror::Error;

use crate::graph::{Graph, VertexSet};

pub use enumerate::{enumerate_cographs, CographEnumerator, MAX_ENUMERATION_ORDER};

/// Four vertices `[a, b, c, d]` inducing the path `a - b - c - d`.
pub type P4 = [usize; 4];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("not a cograph: vertices {p4:?} induce P4")]
pub struct NotCograph {
    pub p4: P4,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NodeKind {
    Union,
    Join,
}

impl NodeKind {
    pub fn dual(self) -> NodeKind {
        match self {
            NodeKind::Union => NodeKind::Join,
            NodeKind::Join => NodeKind::Union,
        }
    }
}

/// Union/join decomposition of a cograph. Internal nodes have at least two
/// children and never share a kind with their parent.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Cotree {
    Leaf(usize),
    Node(NodeKind, Vec<Cotree>),
}

/// Prefix-free shape code of a cotree; equal codes mean isomorphic cographs.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CotreeCode(Vec<u8>);

impl CotreeCode {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }
}

impl fmt::Display for CotreeCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(std::str::from_utf8(&self.0).expect("codes are ASCII"))
    }
}

impl Cotree {
    /// Builds a node of the given kind, absorbing children of the same kind
    /// and collapsing single-child nodes.
    pub fn node(kind: NodeKind, children: impl IntoIterator<Item = Cotree>) -> Cotree {
        let mut flat = Vec::new();
        for child in children {
            match child {
                Cotree::Node(k, grand) if k == kind => flat.extend(grand),
                other => flat.push(other),
            }
        }
        match flat.len() {
            0 => panic!("cotree node needs at least one child"),
            1 => flat.pop().unwrap(),
            _ => Cotree::Node(kind, flat),
        }
    }

    pub fn kind(&self) -> Option<NodeKind> {
        match self {
            Cotree::Leaf(_) => None,
            Cotree::Node(kind, _) => Some(*kind),
        }
    }

    pub fn children(&self) -> &[Cotree] {
        match self {
            Cotree::Leaf(_) => &[],
            Cotree::Node(_, children) => children,
        }
    }

    /// Number of leaves.
    pub fn order(&self) -> usize {
        match self {
            Cotree::Leaf(_) => 1,
            Cotree::Node(_, children) => children.iter().map(Cotree::order).sum(),
        }
    }

    pub fn leaves(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.order());
        self.collect_leaves(&mut out);
        out
    }

    fn collect_leaves(&self, out: &mut Vec<usize>) {
        match self {
            Cotree::Leaf(v) => out.push(*v),
            Cotree::Node(_, children) => children.iter().for_each(|c| c.collect_leaves(out)),
        }
    }

    /// Checks alternation, arity and that leaves are exactly `0..order`.
    pub fn is_valid(&self) -> bool {
        fn shape_ok(t: &Cotree, parent: Option<NodeKind>) -> bool {
            match t {
                Cotree::Leaf(_) => true,
                Cotree::Node(kind, children) => {
                    children.len() >= 2
                        && parent != Some(*kind)
                        && children.iter().all(|c| shape_ok(c, Some(*kind)))
                }
            }
        }
        let mut leaves = self.leaves();
        leaves.sort_unstable();
        shape_ok(self, None) && leaves.iter().enumerate().all(|(i, &v)| i == v)
    }

    /// The represented graph, on vertex set `0..=max leaf id`.
    pub fn to_graph(&self) -> Graph {
        let n = self.leaves().into_iter().max().map_or(0, |m| m + 1);
        let mut g = Graph::empty(n);
        self.add_join_edges(&mut g);
        g
    }

    fn add_join_edges(&self, g: &mut Graph) {
        if let Cotree::Node(kind, children) = self {
            if *kind == NodeKind::Join {
                let sets: Vec<Vec<usize>> = children.iter().map(Cotree::leaves).collect();
                for (i, a) in sets.iter().enumerate() {
                    for b in &sets[i + 1..] {
                        for &u in a {
                            for &v in b {
                                g.add_edge(u, v);
                            }
                        }
                    }
                }
            }
            children.iter().for_each(|c| c.add_join_edges(g));
        }
    }

    pub fn canonical_code(&self) -> CotreeCode {
        let mut out = Vec::new();
        self.write_code(&mut out);
        CotreeCode(out)
    }

    fn write_code(&self, out: &mut Vec<u8>) {
        match self {
            Cotree::Leaf(_) => out.push(b'v'),
            Cotree::Node(kind, children) => {
                let mut codes: Vec<Vec<u8>> = children
                    .iter()
                    .map(|c| {
                        let mut code = Vec::new();
                        c.write_code(&mut code);
                        code
                    })
                    .collect();
                codes.sort_unstable();
                out.push(match kind {
                    NodeKind::Union => b'u',
                    NodeKind::Join => b'j',
                });
                codes.iter().for_each(|c| out.extend_from_slice(c));
                out.push(b')');
            }
        }
    }

    /// The cotree of the complement: every internal node flips kind.
    pub fn complement(&self) -> Cotree {
        match self {
            Cotree::Leaf(v) => Cotree::Leaf(*v),
            Cotree::Node(kind, children) => {
                Cotree::Node(kind.dual(), children.iter().map(Cotree::complement).collect())
            }
        }
    }

    /// The cotree of the graph with leaf `v` deleted, or `None` if the tree
    /// was that single leaf. Leaf ids are kept as they are.
    pub fn without_leaf(&self, v: usize) -> Option<Cotree> {
        match self {
            Cotree::Leaf(u) => (*u != v).then(|| self.clone()),
            Cotree::Node(kind, children) => {
                let rest: Vec<Cotree> = children.iter().filter_map(|c| c.without_leaf(v)).collect();
                Some(Cotree::node(*kind, rest))
            }
        }
    }

    /// Renumbers leaves `0..order` in depth-first order.
    pub fn relabeled(&self) -> Cotree {
        fn go(t: &Cotree, next: &mut usize) -> Cotree {
            match t {
                Cotree::Leaf(_) => {
                    *next += 1;
                    Cotree::Leaf(*next - 1)
                }
                Cotree::Node(kind, children) => {
                    Cotree::Node(*kind, children.iter().map(|c| go(c, next)).collect())
                }
            }
        }
        go(self, &mut 0)
    }
}

impl fmt::Debug for Cotree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Cotree::Leaf(v) => write!(f, "{v}"),
            Cotree::Node(kind, children) => {
                let name = match kind {
                    NodeKind::Union => "Union",
                    NodeKind::Join => "Join",
                };
                f.debug_tuple(name).field(children).finish()
            }
        }
    }
}

/// Finds an induced P4, scanning middle edges in ascending order.
pub fn find_p4(g: &Graph) -> Option<P4> {
    for (b, c) in g.edges() {
        for (b, c) in [(b, c), (c, b)] {
            let ends_b = g.neighbors(b).filter(|&a| a != c && !g.has_edge(a, c));
            for a in ends_b {
                let d = g
                    .neighbors(c)
                    .find(|&d| d != b && d != a && !g.has_edge(d, b) && !g.has_edge(d, a));
                if let Some(d) = d {
                    return Some([a, b, c, d]);
                }
            }
        }
    }
    None
}

pub fn is_cograph(g: &Graph) -> bool {
    g.order() == 0 || build_cotree(g).is_ok()
}

/// Decomposes a cograph on at least one vertex.
///
/// Children are listed in ascending order of least vertex id, so rebuilding
/// the graph from the tree gives back `g` itself.
pub fn build_cotree(g: &Graph) -> Result<Cotree, NotCograph> {
    assert!(g.order() > 0, "the empty graph has no cotree");
    decompose(g, &VertexSet::full(g.order())).ok_or_else(|| NotCograph {
        p4: find_p4(g).expect("a graph with no cotree has an induced P4"),
    })
}

fn decompose(g: &Graph, within: &VertexSet) -> Option<Cotree> {
    if within.len() == 1 {
        return Some(Cotree::Leaf(within.first().unwrap()));
    }
    let comps = g.components_within(within);
    if comps.len() > 1 {
        let children = comps.iter().map(|c| decompose(g, c)).collect::<Option<Vec<_>>>()?;
        return Some(Cotree::Node(NodeKind::Union, children));
    }
    let co_comps = g.co_components_within(within);
    if co_comps.len() > 1 {
        let children = co_comps.iter().map(|c| decompose(g, c)).collect::<Option<Vec<_>>>()?;
        return Some(Cotree::Node(NodeKind::Join, children));
    }
    None
}

/// Canonical code of a cograph's cotree, or the P4 that rules it out.
pub fn cograph_code(g: &Graph) -> Result<CotreeCode, NotCograph> {
    if g.order() == 0 {
        return Ok(CotreeCode(Vec::new()));
    }
    build_cotree(g).map(|t| t.canonical_code())
}

/// A random cotree on `n >= 1` leaves, built by recursive random splits.
pub fn random_cotree<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Cotree {
    fn grow<R: Rng + ?Sized>(n: usize, kind: NodeKind, next: &mut usize, rng: &mut R) -> Cotree {
        if n == 1 {
            *next += 1;
            return Cotree::Leaf(*next - 1);
        }
        let arity = rng.gen_range(2..=n.min(4));
        let mut sizes = vec![1; arity];
        for _ in arity..n {
            let i = rng.gen_range(0..arity);
            sizes[i] += 1;
        }
        let children = sizes.into_iter().map(|s| grow(s, kind.dual(), next, rng));
        Cotree::node(kind, children.collect::<Vec<_>>())
    }
    let kind = if rng.gen_bool(0.5) { NodeKind::Union } else { NodeKind::Join };
    grow(n, kind, &mut 0, rng)
}
