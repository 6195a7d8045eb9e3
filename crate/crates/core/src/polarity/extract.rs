use super::{combine_counts, signature, Part, PolarPartition, PolarSignature};
use crate::cograph::{Cotree, NodeKind};

/// Signatures of a subtree and of every prefix of its children.
struct Annotated {
    sig: PolarSignature,
    children: Vec<Annotated>,
    /// `prefixes[i]` folds children `0..=i`.
    prefixes: Vec<PolarSignature>,
}

fn annotate(t: &Cotree, s_cap: usize, k_cap: usize) -> Annotated {
    match t {
        Cotree::Leaf(_) => Annotated {
            sig: PolarSignature::of_vertex(s_cap, k_cap),
            children: Vec::new(),
            prefixes: Vec::new(),
        },
        Cotree::Node(kind, children) => {
            let children: Vec<Annotated> =
                children.iter().map(|c| annotate(c, s_cap, k_cap)).collect();
            let mut prefixes: Vec<PolarSignature> = Vec::with_capacity(children.len());
            for c in &children {
                let next = match prefixes.last() {
                    None => c.sig.clone(),
                    Some(acc) => PolarSignature::combine(*kind, acc, &c.sig),
                };
                prefixes.push(next);
            }
            Annotated { sig: prefixes.last().unwrap().clone(), children, prefixes }
        }
    }
}

type Labels = Vec<(usize, Part)>;

fn replay(t: &Cotree, ann: &Annotated, target: (usize, usize)) -> Labels {
    match t {
        Cotree::Leaf(v) => match target {
            (1, 0) => vec![(*v, Part::A(0))],
            (0, 1) => vec![(*v, Part::B(0))],
            _ => unreachable!("leaf signature holds only (1,0) and (0,1)"),
        },
        Cotree::Node(kind, children) => replay_prefix(*kind, children, ann, children.len() - 1, target),
    }
}

/// Rebuilds a partition of children `0..=last` realising `target`.
fn replay_prefix(
    kind: NodeKind,
    children: &[Cotree],
    ann: &Annotated,
    last: usize,
    target: (usize, usize),
) -> Labels {
    if last == 0 {
        return replay(&children[0], &ann.children[0], target);
    }
    let rights = ann.children[last].sig.pairs();
    let (left, right) = ann.prefixes[last - 1]
        .pairs()
        .into_iter()
        .find_map(|a| {
            rights
                .iter()
                .find(|&&b| combine_counts(kind, a, b) == Some(target))
                .map(|&b| (a, b))
        })
        .expect("target is realisable from some pair of member counts");

    let mut labels = replay_prefix(kind, children, ann, last - 1, left);
    let shifted = replay(&children[last], &ann.children[last], right)
        .into_iter()
        .map(|(v, part)| {
            // A single stable part (union) or single clique (join) on each
            // side merges into index 0; everything else is offset.
            let part = match (kind, part) {
                (NodeKind::Union, Part::B(i)) => Part::B(i + left.1),
                (NodeKind::Join, Part::A(i)) => Part::A(i + left.0),
                (_, same) => same,
            };
            (v, part)
        });
    labels.extend(shifted);
    labels
}

/// A partition of the cograph with at most `s` stable parts and `k`
/// cliques, or `None` if there is none.
///
/// Among feasible part counts the one with fewest cliques, then fewest
/// stable parts, is chosen; ties inside the tree go to the lexicographically
/// least split of counts between children. Labels are indexed by leaf id.
pub fn extract_partition(t: &Cotree, s: usize, k: usize) -> Option<PolarPartition> {
    let sig = signature(t, s, k);
    let (s_cap, k_cap) = sig.caps();
    let target = sig.pairs().into_iter().min_by_key(|&(p, q)| (q, p))?;
    let ann = annotate(t, s_cap, k_cap);
    debug_assert_eq!(ann.sig, sig);
    let labels = replay(t, &ann, target);
    let n = labels.iter().map(|&(v, _)| v + 1).max().unwrap_or(0);
    let mut out = vec![Part::A(usize::MAX); n];
    for (v, part) in labels {
        out[v] = part;
    }
    Some(PolarPartition { labels: out })
}
