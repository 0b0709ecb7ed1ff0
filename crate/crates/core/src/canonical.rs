//! Canonical labelling of small graphs.
//!
//! Nodes are first split into cells by colour refinement (degree, then the
//! multiset of neighbour colours, iterated to a fixed point). Cells are
//! ordered by an isomorphism-invariant key, so the set of labellings that
//! place each cell in its block of positions is carried onto itself by any
//! isomorphism. Among those labellings the one with the smallest
//! upper-triangle bit string is chosen by branch-and-bound, which makes the
//! result a complete invariant. The bit order is that of graph6, so the
//! canonical form doubles as a readable graph6 identifier.

use crate::error::{Error, Result};
use crate::generators::graph6;
use crate::graph::Graph;

/// Largest node count accepted by [`canonical_form`].
pub const MAX_CANONICAL_N: usize = 10;

/// Canonical byte string: the graph6 encoding of the canonically relabelled
/// graph. Equal strings ⇔ isomorphic graphs.
pub fn canonical_form(g: &Graph) -> Result<Vec<u8>> {
    Ok(canonical_graph6(g)?.into_bytes())
}

/// Canonical form as a graph6 string.
pub fn canonical_graph6(g: &Graph) -> Result<String> {
    Ok(graph6::encode(&canonical_graph(g)?))
}

/// The canonically relabelled graph.
pub fn canonical_graph(g: &Graph) -> Result<Graph> {
    let labelling = canonical_labeling(g)?;
    Ok(g.relabel(&labelling))
}

/// Canonical position of every node: node `v` moves to `labelling[v]`.
pub fn canonical_labeling(g: &Graph) -> Result<Vec<usize>> {
    let n = g.n();
    if n > MAX_CANONICAL_N {
        return Err(Error::TooLarge { what: "canonical labelling", n, max: MAX_CANONICAL_N });
    }
    let (_, order) = canonical_order(g.bit_rows());
    let mut labelling = vec![0; n];
    for (position, &v) in order[..n].iter().enumerate() {
        labelling[v] = position;
    }
    Ok(labelling)
}

/// Canonical upper-triangle code of a graph given as adjacency bit rows
/// (at most [`MAX_CANONICAL_N`] rows). Two row sets get the same code iff
/// the graphs are isomorphic; the code is the graph6 bit string read as an
/// integer, so [`rows_from_code`] inverts it.
pub fn canonical_code(rows: &[u64]) -> u64 {
    canonical_order(rows).0
}

/// Adjacency rows of the canonical graph with `n` nodes and code `code`.
pub fn rows_from_code(n: usize, code: u64) -> Vec<u64> {
    let total = n * n.saturating_sub(1) / 2;
    let mut rows = vec![0u64; n];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if code >> (total - 1 - k) & 1 == 1 {
                rows[i] |= 1 << j;
                rows[j] |= 1 << i;
            }
            k += 1;
        }
    }
    rows
}

/// Returns the minimum code and the node placed at each position.
fn canonical_order(rows: &[u64]) -> (u64, [usize; MAX_CANONICAL_N]) {
    let n = rows.len();
    assert!(n <= MAX_CANONICAL_N, "canonical labelling supports at most {MAX_CANONICAL_N} nodes");
    let colours = refine_colours(rows);
    // Nodes sorted by colour give the cell blocks; `cell_end[p]` is the end
    // of the block containing position p.
    let mut by_colour = [0usize; MAX_CANONICAL_N];
    for (slot, v) in by_colour.iter_mut().zip(0..n) {
        *slot = v;
    }
    by_colour[..n].sort_by_key(|&v| (colours[v], v));
    let mut cell_start = [0usize; MAX_CANONICAL_N];
    let mut cell_end = [0usize; MAX_CANONICAL_N];
    let mut p = 0;
    while p < n {
        let mut q = p;
        while q < n && colours[by_colour[q]] == colours[by_colour[p]] {
            q += 1;
        }
        for r in p..q {
            cell_start[r] = p;
            cell_end[r] = q;
        }
        p = q;
    }
    let mut search = Search {
        rows,
        n,
        by_colour,
        cell_start,
        cell_end,
        total_bits: n * n.saturating_sub(1) / 2,
        best_code: u64::MAX,
        best_order: [0; MAX_CANONICAL_N],
        found: false,
        placed: [0; MAX_CANONICAL_N],
        used: 0,
    };
    search.descend(0, 0);
    debug_assert!(search.found || n == 0);
    let code = if n == 0 { 0 } else { search.best_code };
    (code, search.best_order)
}

/// Colour refinement to a stable, isomorphism-invariant colouring whose
/// colour indices are ranks of invariant signatures.
fn refine_colours(rows: &[u64]) -> [usize; MAX_CANONICAL_N] {
    let n = rows.len();
    let mut colours = [0usize; MAX_CANONICAL_N];
    for v in 0..n {
        colours[v] = rows[v].count_ones() as usize;
    }
    let mut distinct = usize::MAX;
    loop {
        // Signature: own colour, then the count of neighbours of each colour
        // (colours and counts are below 16, four bits each).
        let mut signatures = [0u64; MAX_CANONICAL_N];
        for v in 0..n {
            let mut counts = 0u64;
            let mut r = rows[v];
            while r != 0 {
                let w = r.trailing_zeros() as usize;
                r &= r - 1;
                counts += 1 << (4 * colours[w]);
            }
            signatures[v] = (colours[v] as u64) << 60 | counts;
        }
        let mut sorted = signatures;
        sorted[..n].sort_unstable();
        let mut unique = 0;
        for k in 0..n {
            if k == 0 || sorted[k] != sorted[k - 1] {
                sorted[unique] = sorted[k];
                unique += 1;
            }
        }
        for v in 0..n {
            colours[v] = sorted[..unique].binary_search(&signatures[v]).expect("signature present");
        }
        if unique == distinct {
            return colours;
        }
        distinct = unique;
    }
}

struct Search<'a> {
    rows: &'a [u64],
    n: usize,
    by_colour: [usize; MAX_CANONICAL_N],
    cell_start: [usize; MAX_CANONICAL_N],
    cell_end: [usize; MAX_CANONICAL_N],
    total_bits: usize,
    best_code: u64,
    best_order: [usize; MAX_CANONICAL_N],
    found: bool,
    placed: [usize; MAX_CANONICAL_N],
    used: u64,
}

impl Search<'_> {
    fn descend(&mut self, position: usize, code: u64) {
        if position == self.n {
            if !self.found || code < self.best_code {
                self.best_code = code;
                self.best_order = self.placed;
                self.found = true;
            }
            return;
        }
        let bits_after = (position + 1) * position / 2;
        for slot in self.cell_start[position]..self.cell_end[position] {
            let v = self.by_colour[slot];
            if self.used >> v & 1 == 1 {
                continue;
            }
            let row = self.rows[v];
            let extended = self.placed[..position].iter().fold(code, |acc, &u| acc << 1 | (row >> u & 1));
            if self.found && extended > self.best_code >> (self.total_bits - bits_after) {
                continue;
            }
            self.placed[position] = v;
            self.used |= 1 << v;
            self.descend(position + 1, extended);
            self.used &= !(1 << v);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn permutations(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in permutations(n - 1) {
            for slot in 0..n {
                let mut q = p.clone();
                q.insert(slot, n - 1);
                out.push(q);
            }
        }
        out
    }

    #[test]
    fn path_relabelings_share_one_form() {
        let path = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        let forms: std::collections::HashSet<_> =
            permutations(3).iter().map(|p| canonical_form(&path.relabel(p)).unwrap()).collect();
        assert_eq!(forms.len(), 1);
        let other = Graph::from_edges(3, [(1, 0), (0, 2)]).unwrap();
        assert!(forms.contains(&canonical_form(&other).unwrap()));
    }

    #[test]
    fn triangle_differs_from_path() {
        let path = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        let tri = Graph::from_edges(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_ne!(canonical_form(&path).unwrap(), canonical_form(&tri).unwrap());
    }

    #[test]
    fn petersen_relabelings_agree() {
        let outer = (0..5).map(|i| (i, (i + 1) % 5));
        let spokes = (0..5).map(|i| (i, i + 5));
        let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
        let g = Graph::from_edges(10, outer.chain(spokes).chain(inner)).unwrap();
        let base = canonical_form(&g).unwrap();
        let perm = [3, 7, 1, 9, 0, 4, 8, 2, 6, 5];
        assert_eq!(canonical_form(&g.relabel(&perm)).unwrap(), base);
    }

    #[test]
    fn too_large_is_rejected() {
        let g = Graph::from_edges(11, (0..10).map(|i| (i, i + 1))).unwrap();
        assert!(matches!(canonical_form(&g), Err(Error::TooLarge { .. })));
    }
}
