//! A small language for graphs built from complete graphs, paths and cycles
//! by disjoint union (`+`), join (`*`), complement (`co(...)`) and
//! multiplicity (`3K_2`, `(k+1)K_2`). Sizes are linear in a parameter `k`.
//!
//! ```text
//! expr     := join ('+' join)*
//! join     := factor ('*' factor)*
//! factor   := count? primary
//! count    := INT 'k'? | 'k' | '(' linear ')'
//! primary  := atom | 'co' '(' expr ')' | '(' expr ')'
//! atom     := ('K' | 'P' | 'C') '_' (term | '{' linear (',' linear)* '}')
//! linear   := '-'? term (('+' | '-') term)*
//! term     := INT 'k'? | 'k'
//! ```

mod eval;
mod parse;

use std::fmt;

pub use eval::{eval_expr, EvalError};
pub use parse::{parse_expr, ParseError};

/// `coef * k + constant`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct IntExpr {
    pub coef: i64,
    pub constant: i64,
}

impl IntExpr {
    pub const fn new(coef: i64, constant: i64) -> Self {
        IntExpr { coef, constant }
    }

    pub const fn constant(value: i64) -> Self {
        IntExpr { coef: 0, constant: value }
    }

    pub fn eval(self, k: i64) -> i64 {
        self.coef * k + self.constant
    }

    pub fn mentions_k(self) -> bool {
        self.coef != 0
    }

    /// A single non-negative term (`3`, `k`, `2k`) needs no brackets.
    fn is_bare(self) -> bool {
        (self.coef == 0 && self.constant >= 0) || (self.constant == 0 && self.coef > 0)
    }
}

impl fmt::Display for IntExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let coef = match self.coef {
            0 => return write!(f, "{}", self.constant),
            1 => "k".to_string(),
            -1 => "-k".to_string(),
            c => format!("{c}k"),
        };
        match self.constant {
            0 => write!(f, "{coef}"),
            c if c > 0 => write!(f, "{coef}+{c}"),
            c => write!(f, "{coef}{c}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AtomKind {
    /// `K_n` is complete; `K_{a,b,...}` complete multipartite.
    K,
    P,
    C,
}

impl AtomKind {
    fn letter(self) -> char {
        match self {
            AtomKind::K => 'K',
            AtomKind::P => 'P',
            AtomKind::C => 'C',
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum GraphExpr {
    Atom { kind: AtomKind, sizes: Vec<IntExpr> },
    Union(Vec<GraphExpr>),
    Join(Vec<GraphExpr>),
    Complement(Box<GraphExpr>),
    Repeat { count: IntExpr, child: Box<GraphExpr> },
}

impl GraphExpr {
    pub fn atom(kind: AtomKind, sizes: impl IntoIterator<Item = IntExpr>) -> Self {
        GraphExpr::Atom { kind, sizes: sizes.into_iter().collect() }
    }

    pub fn k(n: i64) -> Self {
        GraphExpr::atom(AtomKind::K, [IntExpr::constant(n)])
    }

    pub fn repeat(count: IntExpr, child: GraphExpr) -> Self {
        GraphExpr::Repeat { count, child: Box::new(child) }
    }

    pub fn complement(child: GraphExpr) -> Self {
        GraphExpr::Complement(Box::new(child))
    }

    pub fn mentions_k(&self) -> bool {
        match self {
            GraphExpr::Atom { sizes, .. } => sizes.iter().any(|s| s.mentions_k()),
            GraphExpr::Union(cs) | GraphExpr::Join(cs) => cs.iter().any(GraphExpr::mentions_k),
            GraphExpr::Complement(c) => c.mentions_k(),
            GraphExpr::Repeat { count, child } => count.mentions_k() || child.mentions_k(),
        }
    }

    /// Vertex count as a polynomial in `k`, read off the syntax tree.
    pub fn vertex_count(&self) -> Poly {
        match self {
            GraphExpr::Atom { sizes, .. } => {
                sizes.iter().fold(Poly::zero(), |acc, s| acc.add(&Poly::linear(*s)))
            }
            GraphExpr::Union(cs) | GraphExpr::Join(cs) => {
                cs.iter().fold(Poly::zero(), |acc, c| acc.add(&c.vertex_count()))
            }
            GraphExpr::Complement(c) => c.vertex_count(),
            GraphExpr::Repeat { count, child } => Poly::linear(*count).mul(&child.vertex_count()),
        }
    }
}

/// Integer polynomial in `k`, lowest degree first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly(Vec<i64>);

impl Poly {
    pub fn zero() -> Self {
        Poly(Vec::new())
    }

    fn linear(e: IntExpr) -> Self {
        Poly(vec![e.constant, e.coef]).trimmed()
    }

    fn trimmed(mut self) -> Self {
        while self.0.last() == Some(&0) {
            self.0.pop();
        }
        self
    }

    fn add(&self, other: &Poly) -> Poly {
        let len = self.0.len().max(other.0.len());
        let coeff = |p: &Poly, i| p.0.get(i).copied().unwrap_or(0);
        Poly((0..len).map(|i| coeff(self, i) + coeff(other, i)).collect()).trimmed()
    }

    fn mul(&self, other: &Poly) -> Poly {
        if self.0.is_empty() || other.0.is_empty() {
            return Poly::zero();
        }
        let mut out = vec![0; self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in other.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly(out).trimmed()
    }

    pub fn coefficients(&self) -> &[i64] {
        &self.0
    }

    pub fn eval(&self, k: i64) -> i64 {
        self.0.iter().rev().fold(0, |acc, c| acc * k + c)
    }
}

fn write_count(f: &mut fmt::Formatter<'_>, count: IntExpr) -> fmt::Result {
    if count.is_bare() {
        write!(f, "{count}")
    } else {
        write!(f, "({count})")
    }
}

impl fmt::Display for GraphExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphExpr::Atom { kind, sizes } => {
                write!(f, "{}_", kind.letter())?;
                match sizes.as_slice() {
                    [s] if s.is_bare() => write!(f, "{s}"),
                    _ => {
                        let inner: Vec<String> = sizes.iter().map(ToString::to_string).collect();
                        write!(f, "{{{}}}", inner.join(","))
                    }
                }
            }
            GraphExpr::Union(cs) => {
                for (i, c) in cs.iter().enumerate() {
                    if i > 0 {
                        f.write_str(" + ")?;
                    }
                    match c {
                        GraphExpr::Union(_) => write!(f, "({c})")?,
                        _ => write!(f, "{c}")?,
                    }
                }
                Ok(())
            }
            GraphExpr::Join(cs) => {
                for (i, c) in cs.iter().enumerate() {
                    if i > 0 {
                        f.write_str(" * ")?;
                    }
                    match c {
                        GraphExpr::Union(_) | GraphExpr::Join(_) => write!(f, "({c})")?,
                        _ => write!(f, "{c}")?,
                    }
                }
                Ok(())
            }
            GraphExpr::Complement(c) => write!(f, "co({c})"),
            GraphExpr::Repeat { count, child } => {
                write_count(f, *count)?;
                match **child {
                    GraphExpr::Atom { .. } | GraphExpr::Complement(_) => write!(f, "{child}"),
                    _ => write!(f, "({child})"),
                }
            }
        }
    }
}

/// Canonical text for an expression; `parse_expr(&format_expr(e)) == Ok(e)`.
pub fn format_expr(e: &GraphExpr) -> String {
    e.to_string()
}
