//! Text formats: graph6 and a plain edge list.
//!
//! graph6 packs the upper triangle of the adjacency matrix column by column
//! (`(0,1), (0,2), (1,2), (0,3), ...`) into 6-bit groups offset by 63. The
//! edge-list format is a header line `n m` followed by `m` lines `u v`.

use crate::error::{Error, Result};
use crate::graph::Graph;

const GRAPH6_HEADER: &str = ">>graph6<<";
const MAX_GRAPH6_VERTICES: usize = 258_047;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Graph6,
    EdgeList,
}

fn parse_err(offset: usize, message: impl Into<String>) -> Error {
    Error::Parse { offset, message: message.into() }
}

/// Decode a single graph6 line. A leading `>>graph6<<` header and trailing
/// newline are accepted.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let mut offset = 0;
    let mut line = text.trim_end_matches(['\n', '\r']);
    if let Some(rest) = line.strip_prefix(GRAPH6_HEADER) {
        line = rest;
        offset = GRAPH6_HEADER.len();
    }
    let bytes = line.as_bytes();
    if bytes.is_empty() {
        return Err(parse_err(offset, "empty graph6 string"));
    }
    for (i, &c) in bytes.iter().enumerate() {
        if !(63..=126).contains(&c) {
            return Err(parse_err(offset + i, format!("byte {c:#04x} outside graph6 range 63..=126")));
        }
    }

    let (n, header_len) = if bytes[0] < 126 {
        ((bytes[0] - 63) as usize, 1)
    } else {
        if bytes.len() >= 2 && bytes[1] == 126 {
            return Err(parse_err(offset, format!("graphs above {MAX_GRAPH6_VERTICES} vertices are not supported")));
        }
        if bytes.len() < 4 {
            return Err(parse_err(offset + bytes.len(), "truncated size header"));
        }
        let n = bytes[1..4].iter().fold(0usize, |acc, &c| (acc << 6) | (c - 63) as usize);
        (n, 4)
    };

    let pairs = n * n.saturating_sub(1) / 2;
    let expected = pairs.div_ceil(6);
    let body = &bytes[header_len..];
    if body.len() != expected {
        let at = offset + header_len + body.len().min(expected);
        return Err(parse_err(
            at,
            format!("expected {expected} adjacency bytes for {n} vertices, found {}", body.len()),
        ));
    }

    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - 63;
            if byte & (1 << (5 - k % 6)) != 0 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    if pairs % 6 != 0 {
        let last = body[expected - 1] - 63;
        let pad_bits = 6 - pairs % 6;
        if last & ((1 << pad_bits) - 1) != 0 {
            return Err(parse_err(offset + header_len + expected - 1, "nonzero padding bits"));
        }
    }
    Graph::from_edge_list(n, &edges)
}

/// Encode as one graph6 line without the trailing newline.
pub fn emit_graph6(g: &Graph) -> Result<String> {
    let n = g.vertex_count();
    if n > MAX_GRAPH6_VERTICES {
        return Err(Error::NotSupported(format!("graph6 output above {MAX_GRAPH6_VERTICES} vertices")));
    }
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + 63);
        }
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
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}

/// Parse the `n m` / `u v` edge-list format. Blank lines and lines starting
/// with `#` are skipped.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = Vec::new();
    let mut offset = 0;
    for raw in text.split_inclusive('\n') {
        let line = raw.trim();
        if !line.is_empty() && !line.starts_with('#') {
            lines.push((offset, line));
        }
        offset += raw.len();
    }
    let Some(&(header_at, header)) = lines.first() else {
        return Err(parse_err(0, "missing `n m` header"));
    };
    let (n, m) = parse_pair(header, header_at)?;
    if lines.len() - 1 != m {
        let at = lines.get(m + 1).map_or(text.len(), |l| l.0);
        return Err(parse_err(at, format!("header announces {m} edges, found {}", lines.len() - 1)));
    }
    let edges = lines[1..]
        .iter()
        .map(|&(at, line)| parse_pair(line, at))
        .collect::<Result<Vec<_>>>()?;
    Graph::from_edge_list(n, &edges)
}

fn parse_pair(line: &str, at: usize) -> Result<(usize, usize)> {
    let mut fields = line.split_whitespace();
    let mut next = || -> Result<usize> {
        let f = fields.next().ok_or_else(|| parse_err(at, format!("expected two integers in `{line}`")))?;
        f.parse().map_err(|_| parse_err(at, format!("`{f}` is not a nonnegative integer")))
    };
    let pair = (next()?, next()?);
    if fields.next().is_some() {
        return Err(parse_err(at, format!("trailing fields in `{line}`")));
    }
    Ok(pair)
}

pub fn emit_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.vertex_count(), g.edge_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Edge lists start with a digit; graph6 never does.
pub fn detect_format(text: &str) -> Format {
    match text.trim_start().bytes().next() {
        Some(b) if b.is_ascii_digit() => Format::EdgeList,
        _ => Format::Graph6,
    }
}

/// Read exactly one graph in the given (or detected) format.
pub fn read_graph(text: &str, format: Option<Format>) -> Result<Graph> {
    match format.unwrap_or_else(|| detect_format(text)) {
        Format::EdgeList => parse_edge_list(text),
        Format::Graph6 => {
            let mut nonempty = text.lines().filter(|l| !l.trim().is_empty());
            let first = nonempty.next().ok_or_else(|| parse_err(0, "no graph in input"))?;
            if nonempty.next().is_some() {
                return Err(parse_err(first.len(), "expected a single graph6 line"));
            }
            let start = text.find(first).unwrap_or(0);
            parse_graph6(first.trim()).map_err(|e| match e {
                Error::Parse { offset, message } => Error::Parse { offset: offset + start, message },
                other => other,
            })
        }
    }
}

pub fn write_graph(g: &Graph, format: Format) -> Result<String> {
    Ok(match format {
        Format::Graph6 => emit_graph6(g)? + "\n",
        Format::EdgeList => emit_edge_list(g),
    })
}
