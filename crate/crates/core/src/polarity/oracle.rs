//! Exhaustive search over labellings. Works for any graph, cograph or not,
//! and shares no code with the cotree dynamic program.

use std::collections::BTreeSet;

use thiserror::Error;

use super::{Part, PolarPartition};
use crate::graph::Graph;

pub const MAX_ORACLE_ORDER: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("brute-force oracle supports at most {MAX_ORACLE_ORDER} vertices, got {0}")]
pub struct OracleError(pub usize);

struct Search<'a> {
    rows: Vec<u64>,
    s: usize,
    k: usize,
    a: Vec<u64>,
    b: Vec<u64>,
    labels: Vec<Part>,
    /// Called at every complete labelling; returning `true` stops the search.
    visit: &'a mut dyn FnMut(&[Part], usize, usize) -> bool,
}

impl Search<'_> {
    fn run(&mut self, v: usize) -> bool {
        if v == self.rows.len() {
            return (self.visit)(&self.labels, self.a.len(), self.b.len());
        }
        let row = self.rows[v];
        let bit = 1u64 << v;
        // Stable parts: independent inside, completely joined across.
        for i in 0..=self.a.len() {
            let new = i == self.a.len();
            if new && self.a.len() == self.s {
                break;
            }
            let fits = self.a.iter().enumerate().all(|(j, &m)| {
                if j == i { m & row == 0 } else { m & !row == 0 }
            });
            if !fits {
                continue;
            }
            if new {
                self.a.push(0);
            }
            self.a[i] |= bit;
            self.labels[v] = Part::A(i);
            if self.run(v + 1) {
                return true;
            }
            self.a[i] &= !bit;
            if new {
                self.a.pop();
            }
        }
        // Cliques: complete inside, no edges across.
        for i in 0..=self.b.len() {
            let new = i == self.b.len();
            if new && self.b.len() == self.k {
                break;
            }
            let fits = self.b.iter().enumerate().all(|(j, &m)| {
                if j == i { m & !row == 0 } else { m & row == 0 }
            });
            if !fits {
                continue;
            }
            if new {
                self.b.push(0);
            }
            self.b[i] |= bit;
            self.labels[v] = Part::B(i);
            if self.run(v + 1) {
                return true;
            }
            self.b[i] &= !bit;
            if new {
                self.b.pop();
            }
        }
        false
    }
}

fn search(
    g: &Graph,
    s: usize,
    k: usize,
    visit: &mut dyn FnMut(&[Part], usize, usize) -> bool,
) -> Result<bool, OracleError> {
    let n = g.order();
    if n > MAX_ORACLE_ORDER {
        return Err(OracleError(n));
    }
    let rows = (0..n).map(|v| g.neighbors(v).fold(0u64, |m, w| m | 1 << w)).collect();
    let mut state = Search {
        rows,
        s: s.min(n),
        k: k.min(n),
        a: Vec::new(),
        b: Vec::new(),
        labels: vec![Part::A(0); n],
        visit,
    };
    Ok(state.run(0))
}

pub fn brute_force_partition(
    g: &Graph,
    s: usize,
    k: usize,
) -> Result<Option<PolarPartition>, OracleError> {
    let mut found = None;
    search(g, s, k, &mut |labels, _, _| {
        found = Some(PolarPartition { labels: labels.to_vec() });
        true
    })?;
    Ok(found)
}

pub fn brute_force_sk_polar(g: &Graph, s: usize, k: usize) -> Result<bool, OracleError> {
    Ok(brute_force_partition(g, s, k)?.is_some())
}

/// Every `(p, q)` realised by some labelling within the caps.
pub fn brute_force_signature(
    g: &Graph,
    s: usize,
    k: usize,
) -> Result<BTreeSet<(usize, usize)>, OracleError> {
    let mut seen = BTreeSet::new();
    search(g, s, k, &mut |_, p, q| {
        seen.insert((p, q));
        false
    })?;
    Ok(seen)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polarity::validate_partition;

    #[test]
    fn five_cycle() {
        let c5 = Graph::cycle(5).unwrap();
        assert!(!brute_force_sk_polar(&c5, 1, 1).unwrap());
        let part = brute_force_partition(&c5, 2, 2).unwrap().unwrap();
        assert!(validate_partition(&c5, &part, 2, 2));
    }

    #[test]
    fn empty_graph_is_always_polar() {
        for s in 0..3 {
            for k in 0..3 {
                assert!(brute_force_sk_polar(&Graph::empty(0), s, k).unwrap());
            }
        }
    }

    #[test]
    fn exact_signatures() {
        let sig: Vec<_> = brute_force_signature(&Graph::complete(2), 2, 2).unwrap().into_iter().collect();
        assert_eq!(sig, vec![(0, 1), (1, 1), (2, 0)]);
        let sig: Vec<_> = brute_force_signature(&Graph::empty(2), 2, 2).unwrap().into_iter().collect();
        assert_eq!(sig, vec![(0, 2), (1, 0), (1, 1)]);
    }

    #[test]
    fn size_limit() {
        assert_eq!(brute_force_sk_polar(&Graph::empty(13), 1, 1), Err(OracleError(13)));
    }
}
