//! Polar partitions with every part of one side a single vertex: a clique
//! plus a disjoint union of cliques (unipolar), or, dually, a stable set
//! plus a complete multipartite graph.

use crate::cograph::{build_cotree, Cotree, NodeKind, NotCograph};
use crate::graph::Graph;

/// `(clique nonempty, cluster component count capped at 2)`.
type State = (bool, u8);

fn states(t: &Cotree) -> Vec<State> {
    match t {
        Cotree::Leaf(_) => vec![(true, 0), (false, 1)],
        Cotree::Node(kind, children) => children
            .iter()
            .map(states)
            .reduce(|left, right| {
                let mut out = Vec::new();
                for &(a1, b1) in &left {
                    for &(a2, b2) in &right {
                        let combined = match kind {
                            // The clique lives on one side; clusters just add up.
                            NodeKind::Union => (!(a1 && a2)).then(|| (a1 || a2, (b1 + b2).min(2))),
                            // Cliques join into a clique; clusters only if each is one clique.
                            NodeKind::Join => match (b1, b2) {
                                (0, b) | (b, 0) => Some((a1 || a2, b)),
                                (1, 1) => Some((a1 || a2, 1)),
                                _ => None,
                            },
                        };
                        if let Some(s) = combined {
                            if !out.contains(&s) {
                                out.push(s);
                            }
                        }
                    }
                }
                out
            })
            .expect("internal nodes have children"),
    }
}

/// Clique plus disjoint union of cliques.
pub fn is_unipolar_cotree(t: &Cotree) -> bool {
    !states(t).is_empty()
}

/// Unipolar or the complement of a unipolar graph.
pub fn is_unipolar_either_side_cotree(t: &Cotree) -> bool {
    is_unipolar_cotree(t) || is_unipolar_cotree(&t.complement())
}

pub fn is_unipolar(g: &Graph) -> Result<bool, NotCograph> {
    if g.order() == 0 {
        return Ok(true);
    }
    Ok(is_unipolar_cotree(&build_cotree(g)?))
}
