//! graph6 and edge-list serialization.
//!
//! graph6: the size field is one byte `n + 63` for `n ≤ 62`, otherwise the
//! byte 126 followed by three bytes holding `n` in 18 bits. The upper
//! triangle follows column by column, `x(0,1), x(0,2), x(1,2), x(0,3), ...`,
//! packed big-endian into 6-bit groups, each offset by 63.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::{VertexSet, MAX_VERTICES};

const HEADER: &str = ">>graph6<<";

fn bad(msg: impl Into<String>) -> Error {
    Error::Graph6(msg.into())
}

/// Upper-triangle bits of `g` in graph6 order.
pub(crate) fn triangle_bits(g: &Graph) -> impl Iterator<Item = bool> + '_ {
    (1..g.n()).flat_map(move |j| (0..j).map(move |i| g.has_edge(i, j)))
}

pub fn write_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = String::new();
    if n <= 62 {
        out.push((n as u8 + 63) as char);
    } else {
        out.push(126 as char);
        for shift in [12, 6, 0] {
            out.push((((n >> shift) & 63) as u8 + 63) as char);
        }
    }
    let mut group = 0u8;
    let mut filled = 0;
    for bit in triangle_bits(g) {
        group = group << 1 | u8::from(bit);
        filled += 1;
        if filled == 6 {
            out.push((group + 63) as char);
            group = 0;
            filled = 0;
        }
    }
    if filled > 0 {
        out.push(((group << (6 - filled)) + 63) as char);
    }
    out
}

pub fn parse_graph6(line: &str) -> Result<Graph> {
    let line = line.trim();
    let line = line.strip_prefix(HEADER).unwrap_or(line);
    let bytes = line.as_bytes();
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(bad(format!("byte {b} is outside 63..=126")));
    }
    let (n, payload) = match bytes {
        [] => return Err(bad("empty graph6 string")),
        [126, 126, ..] => {
            return Err(bad(
                "graphs with more than 258047 vertices are not supported",
            ))
        }
        [126, a, b, c, rest @ ..] => {
            let n = [a, b, c]
                .iter()
                .fold(0usize, |acc, &&x| acc << 6 | (x - 63) as usize);
            (n, rest)
        }
        [126, ..] => return Err(bad("truncated size field")),
        [first, rest @ ..] => ((first - 63) as usize, rest),
    };
    if n > MAX_VERTICES {
        return Err(Error::TooManyVertices {
            n,
            max: MAX_VERTICES,
        });
    }
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    if payload.len() != expected {
        return Err(bad(format!(
            "payload has {} bytes, {expected} expected for {n} vertices",
            payload.len()
        )));
    }
    let mut rows = vec![VertexSet::empty(n); n];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = payload[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                rows[i].insert(j);
                rows[j].insert(i);
            }
            k += 1;
        }
    }
    Ok(Graph::from_rows(n, rows))
}

/// Parses every non-blank line of a graph6 file.
pub fn parse_graph6_lines(text: &str) -> Result<Vec<Graph>> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && *l != HEADER)
        .map(parse_graph6)
        .collect()
}

/// Parses "u v" lines (0-based); `#` starts a comment. An optional first
/// line holding a single integer fixes the vertex count, which otherwise is
/// one more than the largest endpoint.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut declared: Option<usize> = None;
    let mut edges = Vec::new();
    let mut seen_content = false;
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        let num = |s: &str| {
            s.parse::<usize>()
                .map_err(|_| Error::EdgeList(format!("line {}: '{s}' is not a vertex", lineno + 1)))
        };
        match fields.as_slice() {
            [n] if !seen_content => declared = Some(num(n)?),
            [u, v] => edges.push((num(u)?, num(v)?)),
            _ => {
                return Err(Error::EdgeList(format!(
                    "line {}: expected 'u v', got '{line}'",
                    lineno + 1
                )))
            }
        }
        seen_content = true;
    }
    let implied = edges.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0);
    let n = match declared {
        Some(n) if n < implied => {
            return Err(Error::EdgeList(format!(
                "declared {n} vertices but an edge uses vertex {}",
                implied - 1
            )))
        }
        Some(n) => n,
        None => implied,
    };
    Graph::new(n, &edges).map_err(|e| match e {
        Error::LoopEdge(v) => Error::EdgeList(format!("loop at vertex {v}")),
        other => other,
    })
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{}\n", g.n());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}
