//! graph6 encoding and decoding (short form, up to 62 nodes).
//!
//! A graph6 line is one byte `N + 63` followed by the upper triangle of the
//! adjacency matrix in column order (`(0,1), (0,2), (1,2), (0,3), …`), packed
//! six bits per byte, most significant bit first, each byte offset by 63.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest node count representable in the short form.
pub const MAX_SHORT_N: usize = 62;

const HEADER: &str = ">>graph6<<";

/// Decodes one graph6 line into a simple graph (connectivity is not checked).
pub fn parse_graph6(line: &str) -> Result<Graph> {
    let line = line.trim_end_matches(['\r', '\n']);
    let line = line.strip_prefix(HEADER).unwrap_or(line);
    let bytes = line.as_bytes();
    let (&first, body) = bytes.split_first().ok_or_else(|| Error::MalformedGraph6("empty line".into()))?;
    if !(63..=126).contains(&first) {
        return Err(Error::MalformedGraph6(format!("invalid size byte {first}")));
    }
    if first == 126 {
        return Err(Error::MalformedGraph6("long-form sizes (N > 62) are not supported".into()));
    }
    let n = (first - 63) as usize;
    let bit_count = n * n.saturating_sub(1) / 2;
    let expected = bit_count.div_ceil(6);
    if body.len() != expected {
        return Err(Error::MalformedGraph6(format!(
            "expected {expected} data bytes for {n} nodes, found {}",
            body.len()
        )));
    }
    if let Some(&bad) = body.iter().find(|b| !(63..=126).contains(*b)) {
        return Err(Error::MalformedGraph6(format!("invalid data byte {bad}")));
    }
    let bit = |k: usize| (body[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::from_edges(n, edges)
}

/// Encodes a graph (at most 62 nodes) as a graph6 line without newline.
pub fn encode(g: &Graph) -> String {
    let n = g.n();
    assert!(n <= MAX_SHORT_N, "graph6 short form holds at most 62 nodes");
    let mut out = String::with_capacity(1 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    out.push((n as u8 + 63) as char);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push((acc + 63) as char);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(((acc << (6 - filled)) + 63) as char);
    }
    out
}

/// Decodes every non-empty line of a graph6 file.
pub fn parse_graph6_lines(text: &str) -> Result<Vec<Graph>> {
    text.lines().filter(|l| !l.trim().is_empty()).map(parse_graph6).collect()
}
