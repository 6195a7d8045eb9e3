//! Minimal obstructions: testing, extraction and exhaustive derivation.
//!
//! Polarity is hereditary, so a graph that fails it is a minimal obstruction
//! as soon as every one-vertex deletion has it.

use rayon::prelude::*;

use super::CatalogError;
use crate::cograph::{build_cotree, CographEnumerator, Cotree, MAX_ENUMERATION_ORDER};
use crate::graph::{Graph, VertexSet};
use crate::polarity::{brute_force_sk_polar, is_sk_polar_cotree, OracleError};

/// Minimality for any hereditary property given as a cotree predicate.
pub fn is_minimal_failure(t: &Cotree, holds: impl Fn(&Cotree) -> bool) -> bool {
    !holds(t) && t.leaves().into_iter().all(|v| t.without_leaf(v).is_none_or(|u| holds(&u)))
}

pub fn is_minimal_obstruction_cotree(t: &Cotree, s: usize, k: usize) -> bool {
    is_minimal_failure(t, |u| is_sk_polar_cotree(u, s, k))
}

pub fn is_minimal_obstruction(g: &Graph, s: usize, k: usize) -> Result<bool, CatalogError> {
    if g.order() == 0 {
        return Ok(false);
    }
    Ok(is_minimal_obstruction_cotree(&build_cotree(g)?, s, k))
}

/// Same question answered by the labelling oracle; any graph up to the
/// oracle's size limit.
pub fn is_minimal_obstruction_oracle(g: &Graph, s: usize, k: usize) -> Result<bool, OracleError> {
    if brute_force_sk_polar(g, s, k)? {
        return Ok(false);
    }
    for v in 0..g.order() {
        if !brute_force_sk_polar(&g.remove_vertex(v), s, k)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Shrinks a non-(s,k)-polar cograph to a minimal obstruction by deleting,
/// in ascending id order, every vertex whose removal keeps it non-polar.
pub fn extract_minimal_obstruction(g: &Graph, s: usize, k: usize) -> Result<VertexSet, CatalogError> {
    if g.order() == 0 {
        return Err(CatalogError::AlreadyPolar);
    }
    let mut current = build_cotree(g)?;
    if is_sk_polar_cotree(&current, s, k) {
        return Err(CatalogError::AlreadyPolar);
    }
    let mut keep = VertexSet::full(g.order());
    for v in 0..g.order() {
        if let Some(smaller) = current.without_leaf(v) {
            if !is_sk_polar_cotree(&smaller, s, k) {
                current = smaller;
                keep.remove(v);
            }
        }
    }
    Ok(keep)
}

/// Minimal failures of a hereditary property among all cographs with
/// `min_n..=max_n` vertices, one cotree per isomorphism class.
pub fn derive_minimal(
    min_n: usize,
    max_n: usize,
    holds: impl Fn(&Cotree) -> bool + Sync,
) -> Result<Vec<Cotree>, CatalogError> {
    if max_n > MAX_ENUMERATION_ORDER {
        return Err(CatalogError::EnumerationBound(max_n));
    }
    let mut enumerator = CographEnumerator::new();
    let mut out = Vec::new();
    for n in min_n.max(1)..=max_n {
        let found: Vec<Cotree> = enumerator
            .cographs(n)
            .into_par_iter()
            .filter(|t| is_minimal_failure(t, &holds))
            .collect();
        out.extend(found);
    }
    Ok(out)
}

/// Every cograph minimal (s,k)-polar obstruction on at most `max_n` vertices.
pub fn derive_obstructions(s: usize, k: usize, max_n: usize) -> Result<Vec<Graph>, CatalogError> {
    Ok(derive_minimal(1, max_n, |t| is_sk_polar_cotree(t, s, k))?
        .iter()
        .map(Cotree::to_graph)
        .collect())
}
