//! Text encodings: plain edge lists, graph6 and DOT (write-only).
//!
//! The edge-list format is an `n m` header followed by `m` lines of `u v`.
//! Blank lines and lines starting with `#` are ignored on input. Output
//! lists edges in normalized `(u, v)` order, so writing a parsed canonical
//! file reproduces it byte for byte.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    EdgeList,
    Graph6,
}

impl Format {
    /// Guesses from a file extension: `.g6`/`.graph6` is graph6, anything
    /// else is an edge list.
    pub fn from_extension(path: &std::path::Path) -> Format {
        match path.extension().and_then(|e| e.to_str()) {
            Some("g6") | Some("graph6") => Format::Graph6,
            _ => Format::EdgeList,
        }
    }
}

pub fn parse(text: &str, format: Format) -> Result<Graph> {
    match format {
        Format::EdgeList => parse_edge_list(text),
        Format::Graph6 => {
            let line = text
                .lines()
                .map(str::trim)
                .find(|l| !l.is_empty())
                .ok_or_else(|| parse_err(1, "empty input"))?;
            parse_graph6(line)
        }
    }
}

pub fn write(g: &Graph, format: Format) -> String {
    match format {
        Format::EdgeList => to_edge_list(g),
        Format::Graph6 => {
            let mut s = to_graph6(g);
            s.push('\n');
            s
        }
    }
}

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

fn parse_pair(line_no: usize, line: &str) -> Result<(usize, usize)> {
    let mut it = line.split_whitespace();
    let mut next = || -> Result<usize> {
        it.next()
            .ok_or_else(|| parse_err(line_no, "expected two integers"))?
            .parse()
            .map_err(|_| parse_err(line_no, "not a non-negative integer"))
    };
    let a = next()?;
    let b = next()?;
    if it.next().is_some() {
        return Err(parse_err(line_no, "trailing tokens"));
    }
    Ok((a, b))
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (hline, header) = lines.next().ok_or_else(|| parse_err(1, "missing header"))?;
    let (n, m) = parse_pair(hline, header)?;
    let mut edges = Vec::with_capacity(m);
    for (line_no, line) in lines {
        edges.push(parse_pair(line_no, line)?);
    }
    if edges.len() != m {
        return Err(parse_err(
            hline,
            format!("header declares {m} edges, found {}", edges.len()),
        ));
    }
    Graph::from_edge_list(n, &edges)
}

pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.order(), g.size());
    for e in g.edges() {
        let _ = writeln!(out, "{} {}", e.u, e.v);
    }
    out
}

/// Decodes one graph6 string (optional `>>graph6<<` header allowed).
pub fn parse_graph6(s: &str) -> Result<Graph> {
    let s = s.trim();
    let s = s.strip_prefix(">>graph6<<").unwrap_or(s);
    let bytes = s.as_bytes();
    if bytes.iter().any(|&b| !(63..=126).contains(&b)) {
        return Err(parse_err(1, "byte outside the graph6 range 63..=126"));
    }
    let (n, body) = match bytes {
        [] => return Err(parse_err(1, "empty graph6 string")),
        [126, 126, rest @ ..] => {
            if rest.len() < 6 {
                return Err(parse_err(1, "truncated size field"));
            }
            (decode_size(&rest[..6]), &rest[6..])
        }
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err(parse_err(1, "truncated size field"));
            }
            (decode_size(&rest[..3]), &rest[3..])
        }
        [first, rest @ ..] => ((first - 63) as usize, rest),
    };
    let bits = n * n.saturating_sub(1) / 2;
    if body.len() != bits.div_ceil(6) {
        return Err(parse_err(
            1,
            format!(
                "expected {} data bytes for n={n}, got {}",
                bits.div_ceil(6),
                body.len()
            ),
        ));
    }
    let bit = |k: usize| (body[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    if (bits..body.len() * 6).any(bit) {
        return Err(parse_err(1, "non-zero padding bits"));
    }
    let mut g = Graph::empty(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                g.add_edge_unchecked(i, j);
            }
            k += 1;
        }
    }
    Ok(g)
}

fn decode_size(chunk: &[u8]) -> usize {
    chunk
        .iter()
        .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize)
}

/// Encodes in graph6 (no header, no newline).
pub fn to_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        out.extend((0..3).rev().map(|i| ((n >> (6 * i)) & 63) as u8 + 63));
    } else {
        out.extend([126, 126]);
        out.extend((0..6).rev().map(|i| ((n >> (6 * i)) & 63) as u8 + 63));
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 is ASCII")
}

/// DOT rendering; isolated vertices are listed so K_1 and edgeless graphs
/// render faithfully.
pub fn to_dot(g: &Graph, name: &str) -> String {
    let mut out = format!("graph {name} {{\n");
    for v in 0..g.order() {
        let _ = writeln!(out, "  {v};");
    }
    for e in g.edges() {
        let _ = writeln!(out, "  {} -- {};", e.u, e.v);
    }
    out.push_str("}\n");
    out
}
