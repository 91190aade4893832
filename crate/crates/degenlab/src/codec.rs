//! Bit-exact graph6 encoding plus the plain-text edge-list format and DOT
//! export.
//!
//! graph6 layout: byte 0 is 63+n for n <= 62, and n in {63, 64} uses the
//! 4-byte extended header (126 followed by three 6-bit groups of n). The
//! upper triangle is read column by column (x01, x02, x12, x03, ...), packed
//! big-endian into 6-bit groups, each offset by 63, zero-padded.

use std::fmt::Write as _;

use crate::error::{FormatError, Graph6Error, GraphError};
use crate::graph::Graph;

/// Decodes one graph6 record.
pub fn parse_graph6(text: &[u8]) -> Result<Graph, Graph6Error> {
    let bad = |offset: usize, reason: &str| Graph6Error {
        offset,
        reason: reason.to_string(),
    };
    if text.is_empty() {
        return Err(bad(0, "empty input"));
    }
    let (n, mut pos) = if text[0] == 126 {
        if text.len() < 4 {
            return Err(bad(text.len(), "truncated extended header"));
        }
        if text[1] == 126 {
            return Err(bad(1, "8-byte order header exceeds the order-64 cap"));
        }
        let mut n: usize = 0;
        for (i, &b) in text[1..4].iter().enumerate() {
            if !(63..=126).contains(&b) {
                return Err(bad(1 + i, "header byte outside 63..=126"));
            }
            n = (n << 6) | (b - 63) as usize;
        }
        (n, 4)
    } else {
        if !(63..=126).contains(&text[0]) {
            return Err(bad(0, "header byte outside 63..=126"));
        }
        ((text[0] - 63) as usize, 1)
    };
    if n == 0 {
        return Err(bad(0, "order 0 not representable"));
    }
    if n > crate::graph::MAX_VERTICES {
        return Err(bad(0, "order exceeds the 64-vertex cap"));
    }
    let nbits = n * (n - 1) / 2;
    let nbytes = nbits.div_ceil(6);
    if text.len() - pos < nbytes {
        return Err(bad(text.len(), "truncated adjacency data"));
    }
    if text.len() - pos > nbytes {
        return Err(bad(pos + nbytes, "trailing bytes after adjacency data"));
    }
    let mut bits = Vec::with_capacity(nbytes * 6);
    for _ in 0..nbytes {
        let b = text[pos];
        if !(63..=126).contains(&b) {
            return Err(bad(pos, "data byte outside 63..=126"));
        }
        let v = b - 63;
        for k in (0..6).rev() {
            bits.push(v >> k & 1 == 1);
        }
        pos += 1;
    }
    if bits[nbits..].iter().any(|&b| b) {
        return Err(bad(pos - 1, "nonzero padding bits"));
    }
    let mut edges = Vec::new();
    let mut idx = 0;
    for j in 1..n {
        for i in 0..j {
            if bits[idx] {
                edges.push((i, j));
            }
            idx += 1;
        }
    }
    Graph::from_edges(n, &edges).map_err(|e| bad(0, &e.to_string()))
}

/// Encodes a graph as a graph6 byte string.
pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = String::new();
    if n <= 62 {
        out.push((63 + n as u8) as char);
    } else {
        out.push(126 as char);
        for shift in [12, 6, 0] {
            out.push((63 + ((n >> shift) & 63) as u8) as char);
        }
    }
    let nbits = n * (n - 1) / 2;
    for byte_idx in 0..nbits.div_ceil(6) {
        let mut acc = 0u8;
        for k in 0..6 {
            let idx = byte_idx * 6 + k;
            let bit = idx < nbits && {
                let (i, j) = triangle_pair(idx);
                g.has_edge(i, j)
            };
            acc = (acc << 1) | bit as u8;
        }
        out.push((acc + 63) as char);
    }
    out
}

/// Column-major upper-triangle position -> (row, column) pair.
fn triangle_pair(idx: usize) -> (usize, usize) {
    // Column j holds j bits, ending at j(j+1)/2 - 1.
    let mut j = 1;
    let mut base = 0;
    while base + j <= idx {
        base += j;
        j += 1;
    }
    (idx - base, j)
}

/// Test helper: graph on `n` vertices whose column-major upper-triangle bits
/// are the low bits of `bits`.
pub fn graph_from_triangle_bits(n: usize, bits: u64) -> Graph {
    let mut edges = Vec::new();
    for idx in 0..n * (n - 1) / 2 {
        if bits >> idx & 1 == 1 {
            edges.push(triangle_pair(idx));
        }
    }
    Graph::from_edges(n, &edges).expect("valid triangle bits")
}

/// Parses the edge-list format: first line "n m", then one "u v" pair per
/// line, 1-indexed.
pub fn parse_edge_list(text: &str) -> Result<Graph, FormatError> {
    let fail = |line: usize, reason: &str| FormatError::EdgeList {
        line,
        reason: reason.to_string(),
    };
    let mut lines = text
        .lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty());
    let (line_no, header) = lines.next().ok_or_else(|| fail(1, "missing header"))?;
    let mut it = header.split_whitespace();
    let n: usize = it
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| fail(line_no + 1, "header must be \"n m\""))?;
    let m: usize = it
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| fail(line_no + 1, "header must be \"n m\""))?;
    if it.next().is_some() {
        return Err(fail(line_no + 1, "header must be \"n m\""));
    }
    let mut edges = Vec::with_capacity(m);
    for (line_no, line) in lines {
        let mut it = line.split_whitespace();
        let u: usize = it
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| fail(line_no + 1, "expected \"u v\""))?;
        let v: usize = it
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| fail(line_no + 1, "expected \"u v\""))?;
        if it.next().is_some() {
            return Err(fail(line_no + 1, "expected \"u v\""));
        }
        if u == 0 || v == 0 || u > n || v > n {
            return Err(fail(line_no + 1, "vertex out of range (vertices are 1-indexed)"));
        }
        edges.push((u - 1, v - 1));
    }
    if edges.len() != m {
        return Err(fail(
            1,
            &format!("header announced {m} edges, found {}", edges.len()),
        ));
    }
    Graph::from_edges(n, &edges).map_err(FormatError::Graph)
}

/// Emits the edge-list format, edges lexicographic and 1-indexed.
pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for (u, v) in g.edges_1indexed() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

/// DOT export for visualization.
pub fn to_dot(g: &Graph) -> String {
    let mut out = String::from("graph g {\n");
    for v in g.vertices() {
        if g.degree(v) == 0 {
            let _ = writeln!(out, "  {};", v + 1);
        }
    }
    for (u, v) in g.edges_1indexed() {
        let _ = writeln!(out, "  {u} -- {v};");
    }
    out.push_str("}\n");
    out
}

/// Checks whether `text` is structurally a graph6 record (header byte in
/// range and total length matching the order).
pub fn looks_like_graph6(text: &str) -> bool {
    let bytes = text.trim_end().as_bytes();
    if bytes.is_empty() || bytes[0] < 63 {
        return false;
    }
    parse_graph6(bytes).is_ok()
}

/// Parses either format: graph6 if the first byte is at least 63 and the
/// record length matches, otherwise the edge-list format.
pub fn parse_auto(text: &str) -> Result<Graph, FormatError> {
    let trimmed = text.trim_end();
    if looks_like_graph6(trimmed) {
        return parse_graph6(trimmed.as_bytes()).map_err(FormatError::Graph6);
    }
    parse_edge_list(text).map_err(|e| match e {
        FormatError::EdgeList { line: 1, .. } if !text.contains(char::is_whitespace) => {
            FormatError::UnknownFormat(trimmed.chars().take(40).collect())
        }
        other => other,
    })
}

/// Output formats for graphs on the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OutputFormat {
    Graph6,
    Edges,
    Dot,
}

pub fn render(g: &Graph, format: OutputFormat) -> String {
    match format {
        OutputFormat::Graph6 => {
            let mut s = to_graph6(g);
            s.push('\n');
            s
        }
        OutputFormat::Edges => to_edge_list(g),
        OutputFormat::Dot => to_dot(g),
    }
}

impl std::str::FromStr for OutputFormat {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "graph6" => Ok(OutputFormat::Graph6),
            "edges" => Ok(OutputFormat::Edges),
            "dot" => Ok(OutputFormat::Dot),
            _ => Err(GraphError::InvalidRow(0)),
        }
    }
}
