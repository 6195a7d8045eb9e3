//! graph6 and plain edge-list text formats.

use thiserror::Error;

use super::{Graph, GraphError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("graph6: byte {byte:#04x} at offset {offset} is outside 63..=126")]
    BadByte { offset: usize, byte: u8 },
    #[error("graph6: expected {expected} bytes of edge data, found {found}")]
    Length { expected: usize, found: usize },
    #[error("graph6: empty input")]
    Empty,
    #[error("edge list line {line}: {message}")]
    EdgeList { line: usize, message: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

const HEADER: &str = ">>graph6<<";

fn encode_order(n: usize, out: &mut Vec<u8>) {
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        out.extend((0..3).rev().map(|i| ((n >> (6 * i)) & 63) as u8 + 63));
    } else {
        out.extend([126, 126]);
        out.extend((0..6).rev().map(|i| ((n >> (6 * i)) & 63) as u8 + 63));
    }
}

pub fn to_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::with_capacity(8 + n * n / 12);
    encode_order(n, &mut out);
    let (mut chunk, mut filled) = (0u8, 0);
    for j in 1..n {
        for i in 0..j {
            chunk = chunk << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(chunk + 63);
                chunk = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((chunk << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

pub fn from_graph6(text: &str) -> Result<Graph, FormatError> {
    let text = text.trim();
    let text = text.strip_prefix(HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        return Err(FormatError::Empty);
    }
    if let Some((offset, &byte)) = bytes.iter().enumerate().find(|(_, b)| !(63..=126).contains(*b)) {
        return Err(FormatError::BadByte { offset, byte });
    }
    let digits = |range: std::ops::Range<usize>| -> Result<usize, FormatError> {
        let slice = bytes.get(range.clone()).ok_or(FormatError::Length {
            expected: range.end,
            found: bytes.len(),
        })?;
        Ok(slice.iter().fold(0, |acc, &b| acc << 6 | (b - 63) as usize))
    };
    let (n, body) = match bytes {
        [126, 126, ..] => (digits(2..8)?, 8),
        [126, ..] => (digits(1..4)?, 4),
        [b, ..] => ((b - 63) as usize, 1),
        [] => unreachable!(),
    };
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    let data = &bytes[body..];
    if data.len() != expected {
        return Err(FormatError::Length { expected, found: data.len() });
    }
    let mut g = Graph::empty(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if (data[k / 6] - 63) >> (5 - k % 6) & 1 == 1 {
                g.add_edge(i, j);
            }
            k += 1;
        }
    }
    Ok(g)
}

/// Reads `n` on the first content line followed by one `u v` pair per line.
/// Blank lines and `#` comments are skipped.
pub fn from_edge_list(text: &str) -> Result<Graph, FormatError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let err = |line, message: String| FormatError::EdgeList { line, message };
    let (line, first) = lines.next().ok_or_else(|| err(1, "missing vertex count".into()))?;
    let n: usize = first
        .parse()
        .map_err(|_| err(line, format!("expected a vertex count, found {first:?}")))?;
    let mut edges = Vec::new();
    for (line, content) in lines {
        let fields: Vec<&str> = content.split_whitespace().collect();
        let [u, v] = fields[..] else {
            return Err(err(line, format!("expected two vertex ids, found {content:?}")));
        };
        let parse = |s: &str| s.parse::<usize>().map_err(|_| err(line, format!("bad vertex id {s:?}")));
        edges.push((parse(u)?, parse(v)?));
    }
    Ok(Graph::from_edges(n, edges)?)
}

pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("{}\n", g.order());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}
