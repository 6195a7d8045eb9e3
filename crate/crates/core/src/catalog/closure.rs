//! Closure under partial complementation.

use std::collections::{BTreeMap, HashSet, VecDeque};

use crate::cograph::{cograph_code, CotreeCode, NotCograph};
use crate::graph::Graph;

/// Every partial complement of `g`, one per distinct way of splitting its
/// components up to isomorphism. Includes the full complement.
pub fn partial_complements(g: &Graph) -> Result<Vec<Graph>, NotCograph> {
    let comps = g.components();
    // Group isomorphic components: only how many of each type go to the
    // first side matters.
    let mut groups: BTreeMap<CotreeCode, Vec<usize>> = BTreeMap::new();
    for (i, c) in comps.iter().enumerate() {
        groups.entry(cograph_code(&g.induced_subgraph(c))?).or_default().push(i);
    }
    let groups: Vec<Vec<usize>> = groups.into_values().collect();
    let mut choice = vec![0usize; groups.len()];
    let mut out = Vec::new();
    loop {
        let side: Vec<usize> = groups
            .iter()
            .zip(&choice)
            .flat_map(|(members, &take)| members[..take].iter().copied())
            .collect();
        out.push(g.partial_complement(&side).expect("indices come from components()"));
        // Odometer over how many of each group are taken.
        let mut i = 0;
        loop {
            if i == groups.len() {
                return Ok(out);
            }
            choice[i] += 1;
            if choice[i] <= groups[i].len() {
                break;
            }
            choice[i] = 0;
            i += 1;
        }
    }
}

/// A class of graphs reachable from `seed` by partial complementations.
#[derive(Debug, Clone)]
pub struct ClosureClass {
    /// Index into the seed list.
    pub seed: usize,
    pub members: Vec<Graph>,
}

fn explore(seed: &Graph, seen: &mut HashSet<CotreeCode>) -> Result<Vec<Graph>, NotCograph> {
    let mut members = Vec::new();
    let mut queue = VecDeque::from([seed.clone()]);
    seen.insert(cograph_code(seed)?);
    while let Some(g) = queue.pop_front() {
        for h in partial_complements(&g)? {
            if seen.insert(cograph_code(&h)?) {
                queue.push_back(h);
            }
        }
        members.push(g);
    }
    Ok(members)
}

/// Breadth-first closure of each seed. A seed already reached from an
/// earlier seed adds no class of its own.
pub fn pc_classes(seeds: &[Graph]) -> Result<Vec<ClosureClass>, NotCograph> {
    let mut seen = HashSet::new();
    let mut classes = Vec::new();
    for (i, seed) in seeds.iter().enumerate() {
        if seen.contains(&cograph_code(seed)?) {
            continue;
        }
        classes.push(ClosureClass { seed: i, members: explore(seed, &mut seen)? });
    }
    Ok(classes)
}

/// All graphs reachable from the seeds, one per isomorphism class.
pub fn pc_closure(seeds: &[Graph]) -> Result<Vec<Graph>, NotCograph> {
    Ok(pc_classes(seeds)?.into_iter().flat_map(|c| c.members).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::{eval_expr, parse_expr};

    fn g(text: &str) -> Graph {
        eval_expr(&parse_expr(text).unwrap(), 2).unwrap()
    }

    fn code(h: &Graph) -> CotreeCode {
        cograph_code(h).unwrap()
    }

    #[test]
    fn connected_graph_only_complements() {
        let c4 = Graph::cycle(4).unwrap();
        let pcs = partial_complements(&c4).unwrap();
        assert_eq!(pcs.len(), 2);
        assert!(pcs.iter().all(|h| code(h) == code(&c4.complement())));
    }

    #[test]
    fn two_k2_class() {
        let closure = pc_closure(&[g("2K_2")]).unwrap();
        let codes: HashSet<CotreeCode> = closure.iter().map(code).collect();
        assert!(codes.contains(&code(&Graph::cycle(4).unwrap())));
        assert!(codes.contains(&code(&Graph::empty(4))));
        assert!(codes.contains(&code(&Graph::complete(4))));
    }

    #[test]
    fn first_class_has_ten_members() {
        let closure = pc_closure(&[g("K_1 + 3K_2")]).unwrap();
        assert_eq!(closure.len(), 10);
        let disconnected = closure.iter().filter(|h| !h.is_connected()).count();
        assert_eq!(disconnected, 5);
    }

    #[test]
    fn many_isolated_vertices_stay_cheap() {
        let pcs = partial_complements(&Graph::empty(30)).unwrap();
        assert_eq!(pcs.len(), 31);
    }

    #[test]
    fn repeated_seed_adds_no_class() {
        let f1 = g("K_1 + 3K_2");
        let classes = pc_classes(&[f1.clone(), f1.complement()]).unwrap();
        assert_eq!(classes.len(), 1);
        assert_eq!(classes[0].seed, 0);
    }
}
