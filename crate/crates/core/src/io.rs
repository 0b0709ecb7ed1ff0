//! Plain-text edge lists.
//!
//! One undirected edge per line as two whitespace-separated 0-based node
//! indices. Blank lines and lines starting with `#` are ignored. Lines with
//! any other number of fields (weights, timestamps, …) are rejected rather
//! than silently coerced.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Parses an edge list. The node count is `n` when given, otherwise one
/// more than the largest index. With an explicit `n`, a node that appears
/// in no edge is reported as [`Error::IsolatedNode`]. Connectivity is not
/// checked here.
pub fn parse_edge_list(text: &str, n: Option<usize>) -> Result<Graph> {
    let mut edges = Vec::new();
    for (number, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        let fail = |message: String| Error::EdgeList { line: number + 1, message };
        if fields.len() != 2 {
            return Err(fail(format!(
                "expected two node indices, found {} fields (weighted or annotated edges are not supported)",
                fields.len()
            )));
        }
        let parse = |s: &str| s.parse::<usize>().map_err(|_| fail(format!("'{s}' is not a node index")));
        let (a, b) = (parse(fields[0])?, parse(fields[1])?);
        edges.push((a.min(b), a.max(b)));
    }
    let inferred = edges.iter().map(|&(_, b)| b + 1).max().unwrap_or(0);
    let count = n.unwrap_or(inferred);
    let g = Graph::from_edges(count, edges)?;
    if n.is_some() {
        if let Some(i) = (0..g.n()).find(|&i| g.degree(i) == 0) {
            return Err(Error::IsolatedNode(i));
        }
    }
    Ok(g)
}

/// Writes a graph as an edge list, preceded by a comment with its size.
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("# nodes {} edges {}\n", g.n(), g.edge_count());
    for (a, b) in g.edges() {
        out.push_str(&format!("{a} {b}\n"));
    }
    out
}
