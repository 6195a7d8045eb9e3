//! The cograph minimal 2-polar obstructions and the machinery around them:
//! family definitions, partial-complementation classes, minimality checks
//! and exhaustive re-derivation.
//!
//! Entries `F1`..`F24` are the family members at `k = 2` and `X1` is the one
//! disconnected obstruction outside every family; a trailing `c` marks the
//! complement. Every entry is keyed by its canonical cotree code.

mod closure;
mod derive;
mod families;
mod lemmas;

use std::collections::{BTreeMap, HashMap};
use std::path::Path;

use serde::Serialize;
use thiserror::Error;

use crate::cograph::{cograph_code, CotreeCode, NotCograph};
use crate::expr::{eval_expr, parse_expr, EvalError};
use crate::graph::{from_graph6, is_isomorphic, to_graph6, FormatError, Graph};

pub use closure::{partial_complements, pc_classes, pc_closure, ClosureClass};
pub use derive::{
    derive_minimal, derive_obstructions, extract_minimal_obstruction, is_minimal_failure,
    is_minimal_obstruction, is_minimal_obstruction_cotree, is_minimal_obstruction_oracle,
};
pub use families::{family_member, families, parse_families, Family, Provenance, FAMILIES_TSV, FAMILY_COUNT};
pub use lemmas::{full_component_template, verify_structure_lemmas, LemmaReport, Statement, Violation};

/// Environment variable naming a catalog file to use instead of the shipped one.
pub const CATALOG_ENV: &str = "POLAR_CATALOG";

pub const CATALOG_TSV: &str = include_str!("../../data/catalog_k2.tsv");

/// Disconnected minimal 2-polar obstructions that no family produces, found
/// by exhaustive enumeration.
pub const EXTRA_OBSTRUCTIONS: [(&str, &str); 1] = [("X1", "((co(K_2 + 2K_1) + K_2) * K_1) + K_1")];

pub const CATALOG_SIZE: usize = 2 * (FAMILY_COUNT + EXTRA_OBSTRUCTIONS.len());

/// Partial-complementation class generators.
pub const GENERATORS: [&str; 4] = ["F1", "F6", "F13", "F21"];

#[derive(Debug, Error)]
pub enum CatalogError {
    #[error("line {line}: {message}")]
    Malformed { line: usize, message: String },
    #[error("catalog invariant `{invariant}` violated: {detail}")]
    Invariant { invariant: &'static str, detail: String },
    #[error("unknown family F{0}")]
    UnknownFamily(usize),
    #[error("family parameter k must be at least 2, got {0}")]
    ParameterTooSmall(i64),
    #[error("enumeration is limited to 13 vertices, asked for {0}")]
    EnumerationBound(usize),
    #[error("graph already admits the requested partition")]
    AlreadyPolar,
    #[error(transparent)]
    NotCograph(#[from] NotCograph),
    #[error(transparent)]
    Eval(#[from] EvalError),
    #[error(transparent)]
    Format(#[from] FormatError),
    #[error("reading catalog: {0}")]
    Io(#[from] std::io::Error),
}

#[derive(Debug, Clone, Serialize)]
pub struct CatalogEntry {
    pub id: String,
    /// Defining expression in `k`, or `None` for a derived base graph.
    pub expression: Option<String>,
    #[serde(skip)]
    pub graph: Graph,
    pub graph6: String,
    pub order: usize,
    #[serde(skip)]
    pub code: CotreeCode,
    /// Id of the generator of this entry's partial-complementation class.
    pub generator: String,
}

impl CatalogEntry {
    pub fn is_connected(&self) -> bool {
        self.graph.is_connected()
    }
}

#[derive(Debug, Clone)]
pub struct Catalog {
    entries: Vec<CatalogEntry>,
    by_code: HashMap<CotreeCode, usize>,
}

fn entry(id: String, expression: Option<String>, graph: Graph) -> Result<CatalogEntry, CatalogError> {
    let code = cograph_code(&graph)?;
    Ok(CatalogEntry {
        id,
        expression,
        graph6: to_graph6(&graph),
        order: graph.order(),
        graph,
        code,
        generator: String::new(),
    })
}

impl Catalog {
    fn from_entries(entries: Vec<CatalogEntry>) -> Self {
        let by_code = entries.iter().enumerate().map(|(i, e)| (e.code.clone(), i)).collect();
        Catalog { entries, by_code }
    }

    pub fn entries(&self) -> &[CatalogEntry] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, id: &str) -> Option<&CatalogEntry> {
        self.entries.iter().find(|e| e.id == id)
    }

    /// Catalog id of a graph isomorphic to `g`, if any.
    pub fn identify(&self, g: &Graph) -> Option<&str> {
        let code = cograph_code(g).ok()?;
        self.by_code.get(&code).map(|&i| self.entries[i].id.as_str())
    }

    /// Parses the tab-separated form written by [`Catalog::to_text`]. Does not
    /// check invariants; see [`Catalog::check`].
    pub fn from_text(text: &str) -> Result<Self, CatalogError> {
        let mut entries = Vec::new();
        for (line_no, line) in text.lines().enumerate() {
            let line = line.trim_end();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let bad = |message: String| CatalogError::Malformed { line: line_no + 1, message };
            let [id, expression, g6, order, generator] = line.split('\t').collect::<Vec<_>>()[..]
            else {
                return Err(bad(format!("expected 5 tab-separated fields: {line:?}")));
            };
            let graph = from_graph6(g6).map_err(|e| bad(e.to_string()))?;
            let order: usize = order.parse().map_err(|_| bad(format!("bad vertex count {order:?}")))?;
            if order != graph.order() {
                return Err(bad(format!("vertex count {order} but graph6 has {}", graph.order())));
            }
            let expression = (expression != "derived").then(|| expression.to_string());
            let mut e = entry(id.to_string(), expression, graph)
                .map_err(|e| bad(e.to_string()))?;
            e.generator = generator.to_string();
            entries.push(e);
        }
        Ok(Catalog::from_entries(entries))
    }

    pub fn to_text(&self) -> String {
        let mut out = String::from("# id\texpression\tgraph6\tn\tclass generator\n");
        for e in &self.entries {
            out.push_str(&format!(
                "{}\t{}\t{}\t{}\t{}\n",
                e.id,
                e.expression.as_deref().unwrap_or("derived"),
                e.graph6,
                e.order,
                e.generator
            ));
        }
        out
    }

    /// The shipped catalog, or the file named by `POLAR_CATALOG`; invariants
    /// are checked either way.
    pub fn load() -> Result<Self, CatalogError> {
        let catalog = match std::env::var_os(CATALOG_ENV) {
            Some(path) => Catalog::from_file(Path::new(&path))?,
            None => Catalog::from_text(CATALOG_TSV)?,
        };
        catalog.check()?;
        Ok(catalog)
    }

    pub fn from_file(path: &Path) -> Result<Self, CatalogError> {
        Catalog::from_text(&std::fs::read_to_string(path)?)
    }

    /// Verifies every catalog invariant, naming the first one that fails.
    pub fn check(&self) -> Result<(), CatalogError> {
        let fail = |invariant, detail: String| Err(CatalogError::Invariant { invariant, detail });

        if self.entries.len() != CATALOG_SIZE {
            return fail("entry count", format!("expected {CATALOG_SIZE} entries, found {}", self.entries.len()));
        }
        if self.by_code.len() != self.entries.len() {
            return fail("distinct codes", "two entries are isomorphic".into());
        }
        for e in &self.entries {
            if !is_minimal_obstruction_cotree(&crate::cograph::build_cotree(&e.graph)?, 2, 2) {
                return fail("minimal obstruction", format!("{} is not a minimal 2-polar obstruction", e.id));
            }
            if let Some(text) = &e.expression {
                let expr = parse_expr(text).map_err(|err| CatalogError::Invariant {
                    invariant: "expression matches graph",
                    detail: format!("{}: {err}", e.id),
                })?;
                let built = eval_expr(&expr, 2)?;
                if cograph_code(&built).ok().as_ref() != Some(&e.code) {
                    return fail("expression matches graph", format!("{} differs from {text}", e.id));
                }
            }
        }
        let mut orders: BTreeMap<(bool, usize), usize> = BTreeMap::new();
        for e in &self.entries {
            *orders.entry((e.is_connected(), e.order)).or_default() += 1;
        }
        let expected: BTreeMap<(bool, usize), usize> = [
            ((false, 7), 5),
            ((false, 8), 16),
            ((false, 9), 4),
            ((true, 7), 5),
            ((true, 8), 16),
            ((true, 9), 4),
        ]
        .into();
        if orders != expected {
            return fail("vertex counts", format!("(connected, n) -> count was {orders:?}"));
        }
        let base_ids = (1..=FAMILY_COUNT)
            .map(|i| format!("F{i}"))
            .chain(EXTRA_OBSTRUCTIONS.iter().map(|(id, _)| id.to_string()));
        for id in base_ids {
            let co_id = format!("{id}c");
            let (Some(base), Some(co)) = (self.get(&id), self.get(&co_id)) else {
                return fail("ids", format!("missing {id} or {co_id}"));
            };
            if base.is_connected() {
                return fail("ids", format!("{id} should be disconnected"));
            }
            if !is_isomorphic(&base.graph.complement(), &co.graph).unwrap_or(false) {
                return fail("complement pairs", format!("{co_id} is not the complement of {id}"));
            }
        }
        for e in &self.entries {
            for h in partial_complements(&e.graph)? {
                if self.identify(&h).is_none() {
                    return fail("closed under partial complementation", format!("a partial complement of {} is missing", e.id));
                }
            }
        }
        let generators = self.class_generators()?;
        for e in &self.entries {
            if generators.get(&e.code).map(String::as_str) != Some(e.generator.as_str()) {
                return fail("class generators", format!("{} lists generator {:?}", e.id, e.generator));
            }
        }
        Ok(())
    }

    /// Generator id for every code reachable from the generators.
    fn class_generators(&self) -> Result<HashMap<CotreeCode, String>, CatalogError> {
        let seeds: Vec<Graph> = GENERATORS
            .iter()
            .filter_map(|id| self.get(id).map(|e| e.graph.clone()))
            .collect();
        if seeds.len() != GENERATORS.len() {
            return Err(CatalogError::Invariant {
                invariant: "class generators",
                detail: "a generator entry is missing".into(),
            });
        }
        let mut out = HashMap::new();
        for class in pc_classes(&seeds)? {
            for g in class.members {
                out.insert(cograph_code(&g)?, GENERATORS[class.seed].to_string());
            }
        }
        Ok(out)
    }
}

/// Builds the catalog from the family definitions at `k = 2`, the extra
/// obstructions and all their complements, then checks every invariant.
pub fn build_catalog_k2() -> Result<Catalog, CatalogError> {
    let mut entries = Vec::with_capacity(CATALOG_SIZE);
    for family in families() {
        let graph = eval_expr(&family.expr, 2)?;
        let expression = match family.provenance {
            Provenance::Derived => None,
            _ => Some(family.text.clone()),
        };
        entries.push(entry(family.id.clone(), expression, graph)?);
    }
    for (id, text) in EXTRA_OBSTRUCTIONS {
        let graph = eval_expr(&parse_expr(text).expect("extra obstruction parses"), 2)?;
        entries.push(entry(id.to_string(), Some(text.to_string()), graph)?);
    }
    let complements: Vec<CatalogEntry> = entries
        .iter()
        .map(|e| {
            let expression = e.expression.as_ref().map(|t| format!("co({t})"));
            entry(format!("{}c", e.id), expression, e.graph.complement())
        })
        .collect::<Result<_, _>>()?;
    entries.extend(complements);

    let mut catalog = Catalog::from_entries(entries);
    let generators = catalog.class_generators()?;
    for e in &mut catalog.entries {
        e.generator = generators.get(&e.code).cloned().unwrap_or_default();
    }
    catalog.check()?;
    Ok(catalog)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn catalog() -> Catalog {
        build_catalog_k2().unwrap()
    }

    #[test]
    fn built_catalog_sizes() {
        let c = catalog();
        assert_eq!(c.len(), 50);
        let disconnected: Vec<usize> = c.entries().iter().filter(|e| !e.is_connected()).map(|e| e.order).collect();
        assert_eq!(disconnected.iter().filter(|&&n| n == 7).count(), 5);
        assert_eq!(disconnected.iter().filter(|&&n| n == 8).count(), 16);
        assert_eq!(disconnected.iter().filter(|&&n| n == 9).count(), 4);
    }

    #[test]
    fn shipped_file_matches_build() {
        assert_eq!(CATALOG_TSV, catalog().to_text());
        let parsed = Catalog::from_text(CATALOG_TSV).unwrap();
        parsed.check().unwrap();
    }

    #[test]
    fn identification() {
        let c = catalog();
        let f1 = family_member(1, 2).unwrap();
        assert_eq!(c.identify(&f1), Some("F1"));
        assert_eq!(c.identify(&f1.complement()), Some("F1c"));
        assert_eq!(c.identify(&Graph::cycle(4).unwrap()), None);
        assert_eq!(c.identify(&Graph::path(4)), None);
    }

    #[test]
    fn first_class_generated_by_f1() {
        let c = catalog();
        let class: Vec<&str> = c
            .entries()
            .iter()
            .filter(|e| e.generator == "F1" && !e.is_connected())
            .map(|e| e.id.as_str())
            .collect();
        assert_eq!(class, vec!["F1", "F2", "F3", "F4", "F5"]);
    }

    #[test]
    fn corruption_names_the_invariant() {
        let text = CATALOG_TSV.replacen("\tF1\n", "\tF6\n", 1);
        let err = Catalog::from_text(&text).unwrap().check().unwrap_err();
        assert!(matches!(err, CatalogError::Invariant { invariant: "class generators", .. }), "{err}");

        let truncated: String = CATALOG_TSV.lines().take(10).map(|l| format!("{l}\n")).collect();
        let err = Catalog::from_text(&truncated).unwrap().check().unwrap_err();
        assert!(matches!(err, CatalogError::Invariant { invariant: "entry count", .. }));

        assert!(Catalog::from_text("F1\tK_1\tBw\t4\tF1\n").is_err());
    }
}
