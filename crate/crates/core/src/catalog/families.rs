use std::sync::OnceLock;

use super::CatalogError;
use crate::expr::{eval_expr, parse_expr, GraphExpr};
use crate::graph::Graph;

pub const FAMILIES_TSV: &str = include_str!("../../data/families.tsv");

pub const FAMILY_COUNT: usize = 24;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Provenance {
    /// Written out directly as an expression in `k`.
    Stated,
    /// Base graph rebuilt from a partial complement of another member.
    Reconstructed,
    /// Base graph recovered by exhaustive enumeration.
    Derived,
}

impl Provenance {
    pub fn as_str(self) -> &'static str {
        match self {
            Provenance::Stated => "stated",
            Provenance::Reconstructed => "reconstructed",
            Provenance::Derived => "derived",
        }
    }
}

#[derive(Debug, Clone)]
pub struct Family {
    /// `F1` ... `F24`.
    pub id: String,
    pub index: usize,
    pub expr: GraphExpr,
    pub text: String,
    pub provenance: Provenance,
}

pub fn parse_families(text: &str) -> Result<Vec<Family>, CatalogError> {
    let mut out = Vec::new();
    for (line_no, line) in text.lines().enumerate() {
        let line = line.trim_end();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let bad = |message: String| CatalogError::Malformed { line: line_no + 1, message };
        let fields: Vec<&str> = line.split('\t').collect();
        let (id, expr_text, provenance) = match fields[..] {
            [id, e] => (id, e, Provenance::Stated),
            [id, e, "reconstructed"] => (id, e, Provenance::Reconstructed),
            [id, e, "derived"] => (id, e, Provenance::Derived),
            _ => return Err(bad(format!("expected id, expression and optional provenance: {line:?}"))),
        };
        let index: usize = id
            .strip_prefix('F')
            .and_then(|i| i.parse().ok())
            .ok_or_else(|| bad(format!("bad family id {id:?}")))?;
        if index != out.len() + 1 {
            return Err(bad(format!("expected F{}, found {id}", out.len() + 1)));
        }
        let expr = parse_expr(expr_text).map_err(|e| bad(e.to_string()))?;
        out.push(Family { id: id.to_string(), index, expr, text: expr_text.to_string(), provenance });
    }
    if out.len() != FAMILY_COUNT {
        return Err(CatalogError::Malformed {
            line: 0,
            message: format!("expected {FAMILY_COUNT} families, found {}", out.len()),
        });
    }
    Ok(out)
}

/// The shipped family definitions.
pub fn families() -> &'static [Family] {
    static FAMILIES: OnceLock<Vec<Family>> = OnceLock::new();
    FAMILIES.get_or_init(|| parse_families(FAMILIES_TSV).expect("shipped families parse"))
}

/// Member `k` of family `index` (1 to 24), for `k >= 2`.
pub fn family_member(index: usize, k: i64) -> Result<Graph, CatalogError> {
    if k < 2 {
        return Err(CatalogError::ParameterTooSmall(k));
    }
    let family = families()
        .get(index.wrapping_sub(1))
        .ok_or(CatalogError::UnknownFamily(index))?;
    Ok(eval_expr(&family.expr, k)?)
}
