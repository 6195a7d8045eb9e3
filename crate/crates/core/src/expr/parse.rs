use thiserror::Error;

use super::{AtomKind, GraphExpr, IntExpr};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("at byte {offset}: {message}")]
pub struct ParseError {
    pub offset: usize,
    pub message: String,
}

pub fn parse_expr(text: &str) -> Result<GraphExpr, ParseError> {
    let mut p = Parser { src: text.as_bytes(), pos: 0 };
    let e = p.expr()?;
    p.skip_ws();
    if p.pos < p.src.len() {
        return Err(p.error(format!("unexpected {:?}", p.src[p.pos] as char)));
    }
    Ok(e)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn error(&self, message: impl Into<String>) -> ParseError {
        ParseError { offset: self.pos, message: message.into() }
    }

    fn skip_ws(&mut self) {
        while self.src.get(self.pos).is_some_and(u8::is_ascii_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<(), ParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            let message = match self.peek() {
                Some(found) => format!("expected {:?}, found {:?}", c as char, found as char),
                None => format!("expected {:?}, found end of input", c as char),
            };
            Err(self.error(message))
        }
    }

    fn starts_with(&mut self, s: &str) -> bool {
        self.skip_ws();
        self.src[self.pos..].starts_with(s.as_bytes())
    }

    fn expr(&mut self) -> Result<GraphExpr, ParseError> {
        let mut parts = vec![self.join()?];
        while self.eat(b'+') {
            parts.push(self.join()?);
        }
        Ok(if parts.len() == 1 { parts.pop().unwrap() } else { GraphExpr::Union(parts) })
    }

    fn join(&mut self) -> Result<GraphExpr, ParseError> {
        let mut parts = vec![self.factor()?];
        while self.eat(b'*') {
            parts.push(self.factor()?);
        }
        Ok(if parts.len() == 1 { parts.pop().unwrap() } else { GraphExpr::Join(parts) })
    }

    fn at_primary(&mut self) -> bool {
        matches!(self.peek(), Some(b'K' | b'P' | b'C' | b'(')) || self.starts_with("co(")
    }

    fn factor(&mut self) -> Result<GraphExpr, ParseError> {
        let count = match self.peek() {
            Some(b'0'..=b'9' | b'k') => Some(self.term()?),
            Some(b'(') => self.paren_count(),
            _ => None,
        };
        match count {
            Some(count) => {
                if !self.at_primary() {
                    return Err(self.error("expected a graph after a multiplicity"));
                }
                Ok(GraphExpr::repeat(count, self.primary()?))
            }
            None => self.primary(),
        }
    }

    /// `(linear)` directly followed by a graph; rewinds if the brackets hold
    /// a graph expression instead.
    fn paren_count(&mut self) -> Option<IntExpr> {
        let start = self.pos;
        let parsed = (|| {
            self.expect(b'(')?;
            let count = self.linear()?;
            self.expect(b')')?;
            if self.at_primary() {
                Ok(count)
            } else {
                Err(self.error("not a multiplicity"))
            }
        })();
        match parsed {
            Ok(count) => Some(count),
            Err(_) => {
                self.pos = start;
                None
            }
        }
    }

    fn primary(&mut self) -> Result<GraphExpr, ParseError> {
        if self.starts_with("co(") {
            self.pos += 2;
            self.expect(b'(')?;
            let inner = self.expr()?;
            self.expect(b')')?;
            return Ok(GraphExpr::complement(inner));
        }
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                self.expect(b')')?;
                Ok(inner)
            }
            Some(c @ (b'K' | b'P' | b'C')) => {
                let kind = match c {
                    b'K' => AtomKind::K,
                    b'P' => AtomKind::P,
                    _ => AtomKind::C,
                };
                let at = self.pos;
                self.pos += 1;
                self.expect(b'_')?;
                let sizes = if self.eat(b'{') {
                    let mut sizes = vec![self.linear()?];
                    while self.eat(b',') {
                        sizes.push(self.linear()?);
                    }
                    self.expect(b'}')?;
                    sizes
                } else {
                    vec![self.term()?]
                };
                if kind != AtomKind::K && sizes.len() != 1 {
                    return Err(ParseError {
                        offset: at,
                        message: format!("{}_ takes one size, got {}", c as char, sizes.len()),
                    });
                }
                Ok(GraphExpr::Atom { kind, sizes })
            }
            Some(c) => Err(self.error(format!("expected a graph, found {:?}", c as char))),
            None => Err(self.error("expected a graph, found end of input")),
        }
    }

    fn int(&mut self) -> Option<i64> {
        self.skip_ws();
        let start = self.pos;
        while self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        std::str::from_utf8(&self.src[start..self.pos]).ok()?.parse().ok()
    }

    fn term(&mut self) -> Result<IntExpr, ParseError> {
        let digits = self.int();
        let at = self.pos;
        // `k` must follow digits immediately: `2k` is one term.
        let has_k = self.src.get(self.pos) == Some(&b'k');
        if has_k {
            self.pos += 1;
        }
        match (digits, has_k) {
            (Some(d), true) => Ok(IntExpr::new(d, 0)),
            (Some(d), false) => Ok(IntExpr::constant(d)),
            (None, true) => Ok(IntExpr::new(1, 0)),
            (None, false) => {
                self.pos = at;
                Err(self.error("expected an integer or k"))
            }
        }
    }

    fn linear(&mut self) -> Result<IntExpr, ParseError> {
        let negate = self.eat(b'-');
        let first = self.term()?;
        let mut acc = if negate { IntExpr::new(-first.coef, -first.constant) } else { first };
        loop {
            let sign = if self.eat(b'+') {
                1
            } else if self.eat(b'-') {
                -1
            } else {
                return Ok(acc);
            };
            let t = self.term()?;
            acc = IntExpr::new(acc.coef + sign * t.coef, acc.constant + sign * t.constant);
        }
    }
}
