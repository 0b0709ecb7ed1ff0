//! Exhaustive enumeration of small graphs up to isomorphism.
//!
//! [`enumerate_connected`] walks every edge subset of the complete graph and
//! keeps one representative per canonical form; this is affordable up to
//! seven nodes (2²¹ subsets). [`atlas`] reaches further by vertex extension:
//! every graph on `n` nodes is some graph on `n − 1` nodes plus a vertex with
//! an arbitrary neighbour set, so extending one representative of each
//! smaller class in every possible way and deduplicating yields all classes.

use std::collections::BTreeSet;

use crate::canonical::{canonical_code, rows_from_code};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest node count handled by [`enumerate_connected`].
pub const MAX_ENUMERATION_N: usize = 7;

/// Largest node count handled by [`atlas`].
pub const MAX_ATLAS_N: usize = 9;

fn rows_connected(rows: &[u64]) -> bool {
    let n = rows.len();
    if n == 0 {
        return true;
    }
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut seen = 1u64;
    let mut frontier = 1u64;
    while frontier != 0 {
        let mut next = 0u64;
        let mut f = frontier;
        while f != 0 {
            let v = f.trailing_zeros() as usize;
            f &= f - 1;
            next |= rows[v];
        }
        frontier = next & !seen;
        seen |= next;
    }
    seen == all
}

/// One canonical representative of every connected graph on `n` nodes,
/// ordered by canonical code. Requires `3 ≤ n ≤ 7`.
pub fn enumerate_connected(n: usize) -> Result<Vec<Graph>> {
    if n > MAX_ENUMERATION_N {
        return Err(Error::TooLarge { what: "edge-subset enumeration", n, max: MAX_ENUMERATION_N });
    }
    if n < 3 {
        return Err(Error::InvalidParameter(format!("enumeration needs at least 3 nodes, got {n}")));
    }
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let mut codes = BTreeSet::new();
    let mut rows = vec![0u64; n];
    for mask in 0u64..1 << pairs.len() {
        if (mask.count_ones() as usize) < n - 1 {
            continue;
        }
        rows.iter_mut().for_each(|r| *r = 0);
        let mut m = mask;
        while m != 0 {
            let (i, j) = pairs[m.trailing_zeros() as usize];
            m &= m - 1;
            rows[i] |= 1 << j;
            rows[j] |= 1 << i;
        }
        if rows_connected(&rows) {
            codes.insert(canonical_code(&rows));
        }
    }
    Ok(codes.into_iter().map(|code| Graph::from_bit_rows(&rows_from_code(n, code))).collect())
}

/// Canonical codes of all graphs (connected or not) on `n` nodes.
fn all_codes(n: usize) -> BTreeSet<u64> {
    let mut codes = BTreeSet::new();
    if n <= 1 {
        codes.insert(0);
        return codes;
    }
    let smaller = all_codes(n - 1);
    let mut rows = vec![0u64; n];
    for &code in &smaller {
        let base = rows_from_code(n - 1, code);
        for subset in 0u64..1 << (n - 1) {
            rows[..n - 1].copy_from_slice(&base);
            rows[n - 1] = subset;
            let mut s = subset;
            while s != 0 {
                let v = s.trailing_zeros() as usize;
                s &= s - 1;
                rows[v] |= 1 << (n - 1);
            }
            codes.insert(canonical_code(&rows));
        }
    }
    codes
}

/// One canonical representative of every connected graph on `n` nodes,
/// generated by vertex extension and ordered by canonical code. Requires
/// `1 ≤ n ≤ 9`; for `n = 8` it produces the 11,117 connected graphs.
pub fn atlas(n: usize) -> Result<Vec<Graph>> {
    if n > MAX_ATLAS_N {
        return Err(Error::TooLarge { what: "vertex-extension atlas", n, max: MAX_ATLAS_N });
    }
    if n == 0 {
        return Err(Error::InvalidParameter("atlas needs at least one node".into()));
    }
    Ok(all_codes(n)
        .into_iter()
        .map(|code| rows_from_code(n, code))
        .filter(|rows| rows_connected(rows))
        .map(|rows| Graph::from_bit_rows(&rows))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_connected_counts() {
        let counts: Vec<usize> = (3..=6).map(|n| enumerate_connected(n).unwrap().len()).collect();
        assert_eq!(counts, vec![2, 6, 21, 112]);
    }

    #[test]
    fn atlas_agrees_with_subset_enumeration() {
        for n in 3..=6 {
            assert_eq!(atlas(n).unwrap(), enumerate_connected(n).unwrap());
        }
    }

    #[test]
    fn all_graph_counts() {
        let counts: Vec<usize> = (1..=6).map(|n| all_codes(n).len()).collect();
        assert_eq!(counts, vec![1, 2, 4, 11, 34, 156]);
    }

    #[test]
    fn bounds_are_enforced() {
        assert!(matches!(enumerate_connected(8), Err(Error::TooLarge { .. })));
        assert!(matches!(atlas(10), Err(Error::TooLarge { .. })));
        assert!(enumerate_connected(2).is_err());
    }
}
