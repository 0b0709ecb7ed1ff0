//! Deterministic graph families.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Lattice neighbourhood on the periodic square grid.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Neighborhood {
    /// Four nearest neighbours.
    VonNeumann,
    /// Eight surrounding cells.
    Moore,
}

fn invalid(message: String) -> Error {
    Error::InvalidParameter(message)
}

/// Star: hub 0 joined to leaves 1..=n.
pub fn star(n_leaves: usize) -> Result<Graph> {
    if n_leaves < 1 {
        return Err(invalid("star needs at least one leaf".into()));
    }
    Graph::from_edges(n_leaves + 1, (1..=n_leaves).map(|l| (0, l)))
}

/// `m ≥ 2` pairwise-linked hubs (nodes 0..m), hub `h` owning leaves
/// `m + h·n .. m + (h+1)·n`.
pub fn joint_star(m: usize, n_leaves: usize) -> Result<Graph> {
    if m < 2 || n_leaves < 1 {
        return Err(invalid(format!("joint star needs m >= 2 hubs and n >= 1 leaves, got m = {m}, n = {n_leaves}")));
    }
    let hubs = (0..m).flat_map(|a| (a + 1..m).map(move |b| (a, b)));
    let leaves = (0..m).flat_map(|h| (0..n_leaves).map(move |t| (h, m + h * n_leaves + t)));
    Graph::from_edges(m + m * n_leaves, hubs.chain(leaves))
}

/// Hub 0 joined to `2n` leaves; leaves `2t+1` and `2t+2` form a pair.
pub fn ceiling_fan(n_fans: usize) -> Result<Graph> {
    if n_fans < 1 {
        return Err(invalid("ceiling fan needs at least one fan".into()));
    }
    let spokes = (1..=2 * n_fans).map(|l| (0, l));
    let blades = (0..n_fans).map(|t| (2 * t + 1, 2 * t + 2));
    Graph::from_edges(2 * n_fans + 1, spokes.chain(blades))
}

/// `L × L` periodic lattice; node `(r, c)` has index `r·L + c`.
pub fn lattice(side: usize, neighborhood: Neighborhood) -> Result<Graph> {
    if side < 3 {
        return Err(invalid(format!("lattice side must be at least 3, got {side}")));
    }
    let forward: &[(usize, usize)] = match neighborhood {
        Neighborhood::VonNeumann => &[(0, 1), (1, 0)],
        // (1, side-1) is the down-left diagonal.
        Neighborhood::Moore => &[(0, 1), (1, 0), (1, 1), (1, side - 1)],
    };
    let mut edges = Vec::with_capacity(side * side * forward.len());
    for r in 0..side {
        for c in 0..side {
            for &(dr, dc) in forward {
                edges.push((r * side + c, (r + dr) % side * side + (c + dc) % side));
            }
        }
    }
    Graph::from_edges(side * side, edges)
}

/// Complete graph K_n (`n ≥ 2`).
pub fn complete(n: usize) -> Result<Graph> {
    if n < 2 {
        return Err(invalid(format!("complete graph needs n >= 2, got {n}")));
    }
    Graph::from_edges(n, (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))))
}

/// Cycle C_n (`n ≥ 3`).
pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(invalid(format!("cycle needs n >= 3, got {n}")));
    }
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
}

/// Path P_n (`n ≥ 2`).
pub fn path(n: usize) -> Result<Graph> {
    if n < 2 {
        return Err(invalid(format!("path needs n >= 2, got {n}")));
    }
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))
}
