//! Certificates for (s,k)-polarity and their independent validation.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::catalog::{extract_minimal_obstruction, Catalog};
use crate::cograph::{build_cotree, P4};
use crate::graph::{find_induced_embedding, is_isomorphic, Graph, VertexSet};
use crate::polarity::{
    brute_force_partition, brute_force_sk_polar, extract_partition, validate_partition, OracleError,
    Part, PartitionBlocks, PolarPartition,
};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum Certificate {
    Polar { partition: PartitionBlocks },
    /// `vertices` induce a minimal obstruction; `id` names it when the
    /// catalog covers the requested `(s, k)`.
    Obstruction { id: Option<String>, vertices: Vec<usize> },
    NotCograph { p4: P4 },
}

impl Certificate {
    /// Process exit code: 0 polar, 1 obstruction, 2 not a cograph.
    pub fn exit_code(&self) -> i32 {
        match self {
            Certificate::Polar { .. } => 0,
            Certificate::Obstruction { .. } => 1,
            Certificate::NotCograph { .. } => 2,
        }
    }

    pub fn outcome(&self) -> &'static str {
        match self {
            Certificate::Polar { .. } => "polar",
            Certificate::Obstruction { .. } => "obstruction",
            Certificate::NotCograph { .. } => "not_cograph",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InvalidCertificate {
    #[error("partition does not cover the graph or breaks the part limits")]
    BadPartition,
    #[error("vertex {0} is out of range or repeated")]
    BadVertex(usize),
    #[error("vertices do not induce catalog entry {0}")]
    NotEntry(String),
    #[error("unknown catalog id {0}")]
    UnknownId(String),
    #[error("vertices do not induce a minimal obstruction")]
    NotMinimal,
    #[error("vertices do not induce P4 in path order")]
    NotP4,
}

fn identify(catalog: &Catalog, g: &Graph, s: usize, k: usize) -> Option<String> {
    ((s, k) == (2, 2)).then(|| catalog.identify(g).map(str::to_string)).flatten()
}

/// Decides (s,k)-polarity of a cograph by the cotree dynamic program and
/// returns the witness either way. Non-cographs get a P4.
pub fn certify(g: &Graph, s: usize, k: usize, catalog: &Catalog) -> Certificate {
    if g.order() == 0 {
        return Certificate::Polar { partition: PartitionBlocks { a_parts: vec![], b_cliques: vec![] } };
    }
    let tree = match build_cotree(g) {
        Ok(t) => t,
        Err(e) => return Certificate::NotCograph { p4: e.p4 },
    };
    if let Some(partition) = extract_partition(&tree, s, k) {
        return Certificate::Polar { partition: partition.blocks() };
    }
    let kept = extract_minimal_obstruction(g, s, k).expect("non-polar cograph has an obstruction");
    Certificate::Obstruction { id: identify(catalog, &g.induced_subgraph(&kept), s, k), vertices: kept.to_vec() }
}

/// Same outcome computed by exhaustive search, for any graph the oracle
/// accepts; non-cographs are answered too.
pub fn certify_with_oracle(
    g: &Graph,
    s: usize,
    k: usize,
    catalog: &Catalog,
) -> Result<Certificate, OracleError> {
    if let Some(partition) = brute_force_partition(g, s, k)? {
        return Ok(Certificate::Polar { partition: partition.blocks() });
    }
    let mut keep = VertexSet::full(g.order());
    for v in 0..g.order() {
        keep.remove(v);
        if brute_force_sk_polar(&g.induced_subgraph(&keep), s, k)? {
            keep.insert(v);
        }
    }
    let vertices = keep.to_vec();
    Ok(Certificate::Obstruction { id: identify(catalog, &g.induced_by(&vertices), s, k), vertices })
}

fn labels_from_blocks(n: usize, blocks: &PartitionBlocks) -> Option<PolarPartition> {
    let mut labels = vec![None; n];
    let tagged = blocks
        .a_parts
        .iter()
        .enumerate()
        .flat_map(|(i, part)| part.iter().map(move |&v| (v, Part::A(i))))
        .chain(
            blocks
                .b_cliques
                .iter()
                .enumerate()
                .flat_map(|(i, clique)| clique.iter().map(move |&v| (v, Part::B(i)))),
        );
    for (v, label) in tagged {
        if v >= n || labels[v].replace(label).is_some() {
            return None;
        }
    }
    Some(PolarPartition { labels: labels.into_iter().collect::<Option<Vec<_>>>()? })
}

fn distinct_in_range(n: usize, vertices: &[usize]) -> Result<(), InvalidCertificate> {
    let mut seen = vec![false; n];
    for &v in vertices {
        if v >= n || std::mem::replace(&mut seen[v], true) {
            return Err(InvalidCertificate::BadVertex(v));
        }
    }
    Ok(())
}

/// Checks a certificate without the dynamic program: partitions against the
/// definition, named obstructions by isomorphism and embedding against the
/// catalog graph, unnamed ones by exhaustive search.
pub fn validate_certificate(
    g: &Graph,
    s: usize,
    k: usize,
    cert: &Certificate,
    catalog: &Catalog,
) -> Result<(), InvalidCertificate> {
    match cert {
        Certificate::Polar { partition } => {
            let labels = labels_from_blocks(g.order(), partition).ok_or(InvalidCertificate::BadPartition)?;
            validate_partition(g, &labels, s, k).then_some(()).ok_or(InvalidCertificate::BadPartition)
        }
        Certificate::Obstruction { id, vertices } => {
            distinct_in_range(g.order(), vertices)?;
            let sub = g.induced_by(vertices);
            match id {
                Some(id) => {
                    let entry = catalog.get(id).ok_or_else(|| InvalidCertificate::UnknownId(id.clone()))?;
                    let same = is_isomorphic(&sub, &entry.graph).unwrap_or(false)
                        && find_induced_embedding(&entry.graph, &sub).is_some();
                    same.then_some(()).ok_or_else(|| InvalidCertificate::NotEntry(id.clone()))
                }
                None => {
                    let minimal = crate::catalog::is_minimal_obstruction_oracle(&sub, s, k)
                        .unwrap_or_else(|_| crate::catalog::is_minimal_obstruction(&sub, s, k).unwrap_or(false));
                    minimal.then_some(()).ok_or(InvalidCertificate::NotMinimal)
                }
            }
        }
        Certificate::NotCograph { p4 } => {
            distinct_in_range(g.order(), p4)?;
            let [a, b, c, d] = *p4;
            let path = g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(c, d);
            let chordless = !g.has_edge(a, c) && !g.has_edge(a, d) && !g.has_edge(b, d);
            (path && chordless).then_some(()).ok_or(InvalidCertificate::NotP4)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::family_member;
    use crate::cograph::random_cotree;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn catalog() -> Catalog {
        Catalog::load().unwrap()
    }

    #[test]
    fn c4_is_polar_with_antipodal_parts() {
        let c = catalog();
        let c4 = Graph::cycle(4).unwrap();
        let cert = certify(&c4, 2, 2, &c);
        let Certificate::Polar { partition } = &cert else { panic!("{cert:?}") };
        assert_eq!(partition.a_parts, vec![vec![0, 2], vec![1, 3]]);
        assert!(partition.b_cliques.is_empty());
        validate_certificate(&c4, 2, 2, &cert, &c).unwrap();
        assert_eq!(cert.exit_code(), 0);
    }

    #[test]
    fn f1_names_itself() {
        let c = catalog();
        let f1 = family_member(1, 2).unwrap();
        let cert = certify(&f1, 2, 2, &c);
        assert_eq!(cert, Certificate::Obstruction { id: Some("F1".into()), vertices: (0..7).collect() });
        validate_certificate(&f1, 2, 2, &cert, &c).unwrap();
        assert_eq!(cert.exit_code(), 1);
    }

    #[test]
    fn p4_is_rejected() {
        let c = catalog();
        let p4 = Graph::path(4);
        let cert = certify(&p4, 2, 2, &c);
        assert_eq!(cert, Certificate::NotCograph { p4: [0, 1, 2, 3] });
        validate_certificate(&p4, 2, 2, &cert, &c).unwrap();
        assert_eq!(cert.exit_code(), 2);
    }

    #[test]
    fn json_schema() {
        let c = catalog();
        let f1 = family_member(1, 2).unwrap();
        let json = serde_json::to_string(&certify(&f1, 2, 2, &c)).unwrap();
        assert_eq!(json, r#"{"outcome":"obstruction","id":"F1","vertices":[0,1,2,3,4,5,6]}"#);
        let json = serde_json::to_string(&certify(&Graph::path(4), 2, 2, &c)).unwrap();
        assert_eq!(json, r#"{"outcome":"not_cograph","p4":[0,1,2,3]}"#);
        let json = serde_json::to_string(&certify(&Graph::complete(2), 2, 2, &c)).unwrap();
        let back: Certificate = serde_json::from_str(&json).unwrap();
        assert_eq!(back.outcome(), "polar");
    }

    #[test]
    fn tampered_certificates_fail() {
        let c = catalog();
        let f1 = family_member(1, 2).unwrap();
        let wrong_id = Certificate::Obstruction { id: Some("F2".into()), vertices: (0..7).collect() };
        assert!(validate_certificate(&f1, 2, 2, &wrong_id, &c).is_err());
        let partial = Certificate::Obstruction { id: None, vertices: vec![0, 1, 2] };
        assert_eq!(validate_certificate(&f1, 2, 2, &partial, &c), Err(InvalidCertificate::NotMinimal));
        let bad = Certificate::Polar {
            partition: PartitionBlocks { a_parts: vec![vec![0, 1]], b_cliques: vec![] },
        };
        assert!(validate_certificate(&Graph::complete(2), 2, 2, &bad, &c).is_err());
        let c4 = Graph::cycle(4).unwrap();
        assert!(validate_certificate(&c4, 2, 2, &Certificate::NotCograph { p4: [0, 1, 2, 3] }, &c).is_err());
    }

    #[test]
    fn oracle_path_agrees_on_outcome() {
        let c = catalog();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for n in 1..=10 {
            let g = random_cotree(n, &mut rng).to_graph();
            let (dp, oracle) = (certify(&g, 2, 2, &c), certify_with_oracle(&g, 2, 2, &c).unwrap());
            assert_eq!(dp.outcome(), oracle.outcome());
            validate_certificate(&g, 2, 2, &oracle, &c).unwrap();
        }
        let c5 = Graph::cycle(5).unwrap();
        assert!(crate::cograph::find_p4(&c5).is_some());
        assert_eq!(certify_with_oracle(&c5, 2, 2, &c).unwrap().outcome(), "polar");
        let c5_split = certify_with_oracle(&c5, 1, 1, &c).unwrap();
        assert_eq!(c5_split, Certificate::Obstruction { id: None, vertices: (0..5).collect() });
    }

    #[test]
    fn random_large_cographs_validate() {
        let c = catalog();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..40 {
            let n = 10 + (rand::Rng::gen_range(&mut rng, 0..30));
            let g = random_cotree(n, &mut rng).to_graph();
            let cert = certify(&g, 2, 2, &c);
            validate_certificate(&g, 2, 2, &cert, &c).unwrap();
            if let Certificate::Obstruction { id, .. } = &cert {
                assert!(id.is_some());
            }
        }
    }
}
