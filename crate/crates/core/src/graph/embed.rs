use super::Graph;

/// Searches for an induced copy of `pattern` in `host`.
///
/// Returns `map` with `map[u]` the host vertex playing pattern vertex `u`, so
/// that `host.has_edge(map[u], map[v]) == pattern.has_edge(u, v)` for all
/// `u != v`.
pub fn find_induced_embedding(pattern: &Graph, host: &Graph) -> Option<Vec<usize>> {
    let (p, h) = (pattern.order(), host.order());
    if p > h {
        return None;
    }
    let mut order = Vec::with_capacity(p);
    let mut placed = vec![false; p];
    while order.len() < p {
        let v = (0..p)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| {
                let linked = order.iter().filter(|&&u| pattern.has_edge(u, v)).count();
                (linked, pattern.degree(v), std::cmp::Reverse(v))
            })
            .expect("unplaced vertex");
        placed[v] = true;
        order.push(v);
    }

    let mut map = vec![usize::MAX; p];
    let mut used = vec![false; h];
    extend(0, &order, pattern, host, &mut map, &mut used).then_some(map)
}

fn extend(
    depth: usize,
    order: &[usize],
    pattern: &Graph,
    host: &Graph,
    map: &mut [usize],
    used: &mut [bool],
) -> bool {
    let Some(&v) = order.get(depth) else {
        return true;
    };
    for w in 0..host.order() {
        if used[w] {
            continue;
        }
        let fits = order[..depth]
            .iter()
            .all(|&u| pattern.has_edge(u, v) == host.has_edge(map[u], w));
        if !fits {
            continue;
        }
        map[v] = w;
        used[w] = true;
        if extend(depth + 1, order, pattern, host, map, used) {
            return true;
        }
        used[w] = false;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check(pattern: &Graph, host: &Graph, map: &[usize]) {
        for u in 0..pattern.order() {
            for v in 0..u {
                assert_eq!(pattern.has_edge(u, v), host.has_edge(map[u], map[v]));
            }
        }
    }

    #[test]
    fn no_induced_2k2_in_c4() {
        let two_k2 = Graph::complete(2).disjoint_union(&Graph::complete(2));
        assert_eq!(find_induced_embedding(&two_k2, &Graph::cycle(4).unwrap()), None);
    }

    #[test]
    fn finds_f1_inside_a_larger_host() {
        let k2 = Graph::complete(2);
        let f1 = Graph::complete(1).disjoint_union(&k2).disjoint_union(&k2).disjoint_union(&k2);
        let host = f1.disjoint_union(&Graph::complete(3));
        let map = find_induced_embedding(&f1, &host).expect("F1 is a subgraph of its extension");
        check(&f1, &host, &map);
    }

    #[test]
    fn finds_p4_in_c5() {
        let c5 = Graph::cycle(5).unwrap();
        let map = find_induced_embedding(&Graph::path(4), &c5).unwrap();
        check(&Graph::path(4), &c5, &map);
        assert_eq!(find_induced_embedding(&Graph::path(4), &Graph::complete(5)), None);
    }

    #[test]
    fn pattern_larger_than_host() {
        assert_eq!(find_induced_embedding(&Graph::complete(3), &Graph::complete(2)), None);
        assert_eq!(find_induced_embedding(&Graph::empty(0), &Graph::complete(2)), Some(vec![]));
    }
}
