//! Orderly generation of unlabelled cographs.
//!
//! A union-rooted cotree on `n` leaves is a multiset of at least two items,
//! each a leaf or a join-rooted cotree on fewer leaves; join-rooted trees are
//! the complements of union-rooted ones. Choosing multisets of pairwise
//! non-isomorphic items yields each isomorphism class exactly once.

use super::{Cotree, NodeKind};

pub const MAX_ENUMERATION_ORDER: usize = 13;

/// Caches union-rooted shapes by order so successive orders reuse the work.
#[derive(Debug, Default)]
pub struct CographEnumerator {
    unions: Vec<Vec<Cotree>>,
}

impl CographEnumerator {
    pub fn new() -> Self {
        CographEnumerator { unions: vec![Vec::new(), Vec::new()] }
    }

    fn fill(&mut self, n: usize) {
        while self.unions.len() <= n {
            let m = self.unions.len();
            let shapes = self.build_unions(m);
            self.unions.push(shapes);
        }
    }

    fn build_unions(&self, n: usize) -> Vec<Cotree> {
        let mut items: Vec<(usize, Cotree)> = Vec::new();
        for size in (1..n).rev() {
            if size == 1 {
                items.push((1, Cotree::Leaf(0)));
            } else {
                items.extend(self.unions[size].iter().map(|t| (size, t.complement())));
            }
        }
        let mut out = Vec::new();
        let mut picked = Vec::new();
        pick(&items, 0, n, &mut picked, &mut out);
        out
    }

    /// One cotree per isomorphism class of cographs on `n` vertices, leaves
    /// numbered `0..n` in depth-first order. Union-rooted trees come first.
    pub fn cographs(&mut self, n: usize) -> Vec<Cotree> {
        assert!(
            n <= MAX_ENUMERATION_ORDER,
            "cograph enumeration is limited to {MAX_ENUMERATION_ORDER} vertices"
        );
        match n {
            0 => Vec::new(),
            1 => vec![Cotree::Leaf(0)],
            _ => {
                self.fill(n);
                let unions = &self.unions[n];
                unions
                    .iter()
                    .map(Cotree::relabeled)
                    .chain(unions.iter().map(|t| t.complement().relabeled()))
                    .collect()
            }
        }
    }
}

fn pick(
    items: &[(usize, Cotree)],
    from: usize,
    remaining: usize,
    picked: &mut Vec<usize>,
    out: &mut Vec<Cotree>,
) {
    if remaining == 0 {
        let children = picked.iter().map(|&i| items[i].1.clone()).collect();
        out.push(Cotree::Node(NodeKind::Union, children));
        return;
    }
    for i in from..items.len() {
        if items[i].0 <= remaining {
            picked.push(i);
            pick(items, i, remaining - items[i].0, picked, out);
            picked.pop();
        }
    }
}

/// All cographs on `n` vertices up to isomorphism; see [`CographEnumerator`].
pub fn enumerate_cographs(n: usize) -> Vec<Cotree> {
    CographEnumerator::new().cographs(n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cograph::{build_cotree, is_cograph, CotreeCode};
    use crate::graph::{canonical_form, graphs_up_to_iso, Graph};
    use std::collections::BTreeSet;

    #[test]
    fn small_counts() {
        let counts: Vec<usize> = (1..=4).map(|n| enumerate_cographs(n).len()).collect();
        assert_eq!(counts, vec![1, 2, 4, 10]);
    }

    #[test]
    fn enumerated_trees_are_valid_cographs() {
        let mut en = CographEnumerator::new();
        for n in 1..=8 {
            let trees = en.cographs(n);
            let codes: BTreeSet<CotreeCode> = trees.iter().map(Cotree::canonical_code).collect();
            assert_eq!(codes.len(), trees.len());
            for t in &trees {
                assert!(t.is_valid());
                let g = t.to_graph();
                assert!(is_cograph(&g));
                assert_eq!(build_cotree(&g).unwrap().canonical_code(), t.canonical_code());
            }
        }
    }

    /// Independent census: close the single vertex under union and join,
    /// deduplicating with the general-purpose canonical form.
    fn census_by_operations(max_n: usize) -> Vec<usize> {
        let mut classes: Vec<Vec<Graph>> = vec![Vec::new(), vec![Graph::empty(1)]];
        for n in 2..=max_n {
            let mut seen = BTreeSet::new();
            let mut level = Vec::new();
            for a in 1..n {
                for g in &classes[a] {
                    for h in &classes[n - a] {
                        for candidate in [g.disjoint_union(h), g.join(h)] {
                            if seen.insert(canonical_form(&candidate).unwrap()) {
                                level.push(candidate);
                            }
                        }
                    }
                }
            }
            classes.push(level);
        }
        classes.iter().skip(1).map(Vec::len).collect()
    }

    #[test]
    fn counts_match_brute_force_census() {
        let mut en = CographEnumerator::new();
        let enumerated: Vec<usize> = (1..=9).map(|n| en.cographs(n).len()).collect();
        assert_eq!(enumerated, census_by_operations(9));
        for n in 1..=6 {
            let p4_free = graphs_up_to_iso(n).unwrap().iter().filter(|g| is_cograph(g)).count();
            assert_eq!(enumerated[n - 1], p4_free);
        }
    }
}
