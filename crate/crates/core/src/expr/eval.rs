use thiserror::Error;

use super::{AtomKind, GraphExpr, IntExpr};
use crate::graph::{BasicKind, Graph, GraphError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EvalError {
    #[error("size {size} evaluates to {value} at k = {k}")]
    NegativeSize { size: IntExpr, k: i64, value: i64 },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn size_at(size: IntExpr, k: i64) -> Result<usize, EvalError> {
    let value = size.eval(k);
    usize::try_from(value).map_err(|_| EvalError::NegativeSize { size, k, value })
}

/// Builds the graph denoted by `e` at parameter `k`.
///
/// Unions and joins number vertices left to right; `Repeat` is an iterated
/// disjoint union.
pub fn eval_expr(e: &GraphExpr, k: i64) -> Result<Graph, EvalError> {
    match e {
        GraphExpr::Atom { kind, sizes } => {
            let sizes =
                sizes.iter().map(|&s| size_at(s, k)).collect::<Result<Vec<_>, _>>()?;
            let basic = match (kind, sizes.len()) {
                (AtomKind::K, 1) => BasicKind::Complete,
                (AtomKind::K, _) => BasicKind::CompleteMultipartite,
                (AtomKind::P, _) => BasicKind::Path,
                (AtomKind::C, _) => BasicKind::Cycle,
            };
            Ok(Graph::make_basic(basic, &sizes)?)
        }
        GraphExpr::Union(children) => children.iter().try_fold(Graph::empty(0), |acc, c| {
            Ok(acc.disjoint_union(&eval_expr(c, k)?))
        }),
        GraphExpr::Join(children) => {
            children.iter().try_fold(Graph::empty(0), |acc, c| Ok(acc.join(&eval_expr(c, k)?)))
        }
        GraphExpr::Complement(child) => Ok(eval_expr(child, k)?.complement()),
        GraphExpr::Repeat { count, child } => {
            let times = size_at(*count, k)?;
            let one = eval_expr(child, k)?;
            Ok((0..times).fold(Graph::empty(0), |acc, _| acc.disjoint_union(&one)))
        }
    }
}
