//! Isomorphism testing and canonical forms for small graphs.
//!
//! Both routines work on `u64` adjacency masks and are limited to
//! [`MAX_ISO_ORDER`] vertices. The canonical form explores an
//! individualisation-refinement tree, skipping branches on vertices that are
//! twins of an already explored sibling. `is_isomorphic` is a separate route:
//! joint colour refinement of both graphs followed by a direct backtracking
//! search for a mapping.

use std::collections::BTreeMap;

use super::{Graph, GraphError};

pub const MAX_ISO_ORDER: usize = 16;

/// Byte string equal for two graphs exactly when they are isomorphic.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm(Vec<u8>);

impl CanonicalForm {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }
}

fn masks(g: &Graph) -> Result<Vec<u64>, GraphError> {
    if g.order() > MAX_ISO_ORDER {
        return Err(GraphError::TooLarge { order: g.order(), max: MAX_ISO_ORDER });
    }
    Ok((0..g.order())
        .map(|v| g.neighbors(v).fold(0u64, |m, w| m | 1 << w))
        .collect())
}

fn cell_mask(cell: &[usize]) -> u64 {
    cell.iter().fold(0, |m, &v| m | 1 << v)
}

/// Splits cells by neighbour counts into each cell until the ordered
/// partition is equitable. Sub-cells are ordered by ascending count.
fn refine(rows: &[u64], cells: &mut Vec<Vec<usize>>) {
    loop {
        let mut changed = false;
        let mut s = 0;
        while s < cells.len() {
            let splitter = cell_mask(&cells[s]);
            let mut next = Vec::with_capacity(cells.len());
            for cell in cells.iter() {
                if cell.len() == 1 {
                    next.push(cell.clone());
                    continue;
                }
                let mut keyed: Vec<(u32, usize)> =
                    cell.iter().map(|&v| ((rows[v] & splitter).count_ones(), v)).collect();
                keyed.sort_by_key(|&(c, _)| c);
                let mut start = 0;
                for i in 1..=keyed.len() {
                    if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                        next.push(keyed[start..i].iter().map(|&(_, v)| v).collect());
                        start = i;
                    }
                }
                if keyed[0].0 != keyed[keyed.len() - 1].0 {
                    changed = true;
                }
            }
            *cells = next;
            s += 1;
        }
        if !changed {
            return;
        }
    }
}

fn leaf_code(rows: &[u64], order: &[usize]) -> Vec<u8> {
    let n = order.len();
    let mut out = Vec::with_capacity(1 + n * n / 16 + 1);
    out.push(n as u8);
    let (mut byte, mut filled) = (0u8, 0);
    for j in 1..n {
        for i in 0..j {
            byte = byte << 1 | ((rows[order[i]] >> order[j]) & 1) as u8;
            filled += 1;
            if filled == 8 {
                out.push(byte);
                byte = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(byte << (8 - filled));
    }
    out
}

fn twins(rows: &[u64], u: usize, v: usize) -> bool {
    rows[u] & !(1 << v) == rows[v] & !(1 << u)
}

fn search(rows: &[u64], mut cells: Vec<Vec<usize>>, best: &mut Option<Vec<u8>>) {
    refine(rows, &mut cells);
    let target = cells
        .iter()
        .enumerate()
        .filter(|(_, c)| c.len() > 1)
        .min_by_key(|(i, c)| (c.len(), *i))
        .map(|(i, _)| i);
    let Some(t) = target else {
        let order: Vec<usize> = cells.into_iter().flatten().collect();
        let code = leaf_code(rows, &order);
        if best.as_ref().is_none_or(|b| code > *b) {
            *best = Some(code);
        }
        return;
    };
    let mut tried: Vec<usize> = Vec::new();
    for &v in &cells[t] {
        if tried.iter().any(|&u| twins(rows, u, v)) {
            continue;
        }
        tried.push(v);
        let mut branch = Vec::with_capacity(cells.len() + 1);
        branch.extend_from_slice(&cells[..t]);
        branch.push(vec![v]);
        branch.push(cells[t].iter().copied().filter(|&u| u != v).collect());
        branch.extend_from_slice(&cells[t + 1..]);
        search(rows, branch, best);
    }
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalForm, GraphError> {
    let rows = masks(g)?;
    if rows.is_empty() {
        return Ok(CanonicalForm(vec![0]));
    }
    let mut best = None;
    search(&rows, vec![(0..rows.len()).collect()], &mut best);
    Ok(CanonicalForm(best.expect("search reaches at least one leaf")))
}

/// Stable colouring of both graphs at once, so colour ids are comparable.
fn joint_colours(a: &[u64], b: &[u64]) -> (Vec<u32>, Vec<u32>) {
    let n = a.len();
    let mut colours = vec![0u32; 2 * n];
    let mut classes = 1;
    loop {
        let sig = |side: &[u64], offset: usize, v: usize, colours: &[u32]| {
            let mut nb: Vec<u32> = (0..n)
                .filter(|&w| side[v] >> w & 1 == 1)
                .map(|w| colours[offset + w])
                .collect();
            nb.sort_unstable();
            (colours[offset + v], nb)
        };
        let sigs: Vec<(u32, Vec<u32>)> = (0..n)
            .map(|v| sig(a, 0, v, &colours))
            .chain((0..n).map(|v| sig(b, n, v, &colours)))
            .collect();
        let mut distinct: Vec<&(u32, Vec<u32>)> = sigs.iter().collect();
        distinct.sort();
        distinct.dedup();
        let next: Vec<u32> = sigs
            .iter()
            .map(|s| distinct.binary_search(&s).expect("signature present") as u32)
            .collect();
        let count = distinct.len();
        colours = next;
        if count == classes {
            break;
        }
        classes = count;
    }
    let right = colours.split_off(n);
    (colours, right)
}

pub fn is_isomorphic(g1: &Graph, g2: &Graph) -> Result<bool, GraphError> {
    let (a, b) = (masks(g1)?, masks(g2)?);
    if a.len() != b.len() || g1.size() != g2.size() {
        return Ok(false);
    }
    let n = a.len();
    let (ca, cb) = joint_colours(&a, &b);
    let mut ha = ca.clone();
    let mut hb = cb.clone();
    ha.sort_unstable();
    hb.sort_unstable();
    if ha != hb {
        return Ok(false);
    }

    // Place vertices of g1 so each one has as many placed neighbours as possible.
    let mut order = Vec::with_capacity(n);
    let mut placed = 0u64;
    while order.len() < n {
        let v = (0..n)
            .filter(|&v| placed >> v & 1 == 0)
            .max_by_key(|&v| ((a[v] & placed).count_ones(), std::cmp::Reverse(v)))
            .expect("unplaced vertex");
        placed |= 1 << v;
        order.push(v);
    }

    #[allow(clippy::too_many_arguments)]
    fn extend(
        depth: usize,
        order: &[usize],
        a: &[u64],
        b: &[u64],
        ca: &[u32],
        cb: &[u32],
        map: &mut Vec<usize>,
        used: &mut u64,
    ) -> bool {
        if depth == order.len() {
            return true;
        }
        let v = order[depth];
        for w in 0..b.len() {
            if *used >> w & 1 == 1 || ca[v] != cb[w] {
                continue;
            }
            let consistent = order[..depth]
                .iter()
                .all(|&u| (a[v] >> u & 1) == (b[w] >> map[u] & 1));
            if !consistent {
                continue;
            }
            map[v] = w;
            *used |= 1 << w;
            if extend(depth + 1, order, a, b, ca, cb, map, used) {
                return true;
            }
            *used &= !(1 << w);
        }
        false
    }

    let mut map = vec![usize::MAX; n];
    let mut used = 0u64;
    Ok(extend(0, &order, &a, &b, &ca, &cb, &mut map, &mut used))
}

/// One representative per isomorphism class of graphs on `n` vertices,
/// built by vertex augmentation and deduplicated by canonical form.
/// Practical up to about eight vertices.
pub fn graphs_up_to_iso(n: usize) -> Result<Vec<Graph>, GraphError> {
    if n > MAX_ISO_ORDER {
        return Err(GraphError::TooLarge { order: n, max: MAX_ISO_ORDER });
    }
    let mut level = vec![Graph::empty(0)];
    for m in 1..=n {
        let mut next: BTreeMap<CanonicalForm, Graph> = BTreeMap::new();
        for g in &level {
            for nbhd in 0u32..(1 << (m - 1)) {
                let mut h = g.disjoint_union(&Graph::empty(1));
                for u in (0..m - 1).filter(|&u| nbhd >> u & 1 == 1) {
                    h.add_edge(u, m - 1);
                }
                next.entry(canonical_form(&h)?).or_insert(h);
            }
        }
        level = next.into_values().collect();
    }
    Ok(level)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_force_iso(g1: &Graph, g2: &Graph) -> bool {
        fn permute(k: usize, perm: &mut Vec<usize>, g1: &Graph, g2: &Graph) -> bool {
            if k == perm.len() {
                return g1.edges().all(|(u, v)| g2.has_edge(perm[u], perm[v]))
                    && g1.size() == g2.size();
            }
            for i in k..perm.len() {
                perm.swap(k, i);
                if permute(k + 1, perm, g1, g2) {
                    return true;
                }
                perm.swap(k, i);
            }
            false
        }
        g1.order() == g2.order() && permute(0, &mut (0..g1.order()).collect(), g1, g2)
    }

    #[test]
    fn small_examples() {
        let c4 = Graph::cycle(4).unwrap();
        let k22 = Graph::complete_multipartite(&[2, 2]);
        assert!(brute_force_iso(&c4, &k22));
        assert!(is_isomorphic(&c4, &k22).unwrap());
        assert_eq!(canonical_form(&c4).unwrap(), canonical_form(&k22).unwrap());

        let two_k2 = Graph::complete(2).disjoint_union(&Graph::complete(2));
        assert!(!is_isomorphic(&two_k2, &Graph::path(4)).unwrap());

        let three_k2 = two_k2.disjoint_union(&Graph::complete(2));
        let k222 = Graph::complete_multipartite(&[2, 2, 2]);
        assert!(brute_force_iso(&three_k2.complement(), &k222));
        assert!(is_isomorphic(&three_k2.complement(), &k222).unwrap());
    }

    #[test]
    fn regular_graphs_colour_refinement_cannot_separate() {
        let c6 = Graph::cycle(6).unwrap();
        let two_k3 = Graph::complete(3).disjoint_union(&Graph::complete(3));
        assert!(!is_isomorphic(&c6, &two_k3).unwrap());
        assert_ne!(canonical_form(&c6).unwrap(), canonical_form(&two_k3).unwrap());
    }

    #[test]
    fn rejects_large_graphs() {
        let g = Graph::empty(MAX_ISO_ORDER + 1);
        assert!(matches!(canonical_form(&g), Err(GraphError::TooLarge { .. })));
        assert!(is_isomorphic(&g, &g).is_err());
    }

    #[test]
    fn class_counts_match_known_census() {
        let counts: Vec<usize> =
            (0..=6).map(|n| graphs_up_to_iso(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 4, 11, 34, 156]);
    }

    #[test]
    fn canonical_form_agrees_with_isomorphism_up_to_six_vertices() {
        // Every labelled graph on <= 5 vertices, plus classes on 6 compared pairwise.
        for n in 0..=5usize {
            let pairs: Vec<(usize, usize)> =
                (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
            let graphs: Vec<Graph> = (0u32..1 << pairs.len())
                .map(|mask| {
                    Graph::from_edges(
                        n,
                        pairs.iter().enumerate().filter(|(b, _)| mask >> b & 1 == 1).map(|(_, &e)| e),
                    )
                    .unwrap()
                })
                .collect();
            let step = if n == 5 { 37 } else { 1 };
            for (i, g) in graphs.iter().enumerate().step_by(step) {
                for h in graphs.iter().skip(i).step_by(step) {
                    let by_form = canonical_form(g).unwrap() == canonical_form(h).unwrap();
                    assert_eq!(by_form, is_isomorphic(g, h).unwrap());
                    if n <= 4 {
                        assert_eq!(by_form, brute_force_iso(g, h));
                    }
                }
            }
        }
        let six = graphs_up_to_iso(6).unwrap();
        for (i, g) in six.iter().enumerate() {
            for (j, h) in six.iter().enumerate() {
                assert_eq!(is_isomorphic(g, h).unwrap(), i == j);
            }
        }
    }
}
