//! Random network ensembles: Erdős–Rényi, Watts–Strogatz and Krapivsky's
//! nonlinear preferential attachment.
//!
//! Connectivity is enforced by resampling the whole graph, which keeps the
//! conditional distribution intact.

use rand::Rng;

use super::stream_rng;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Number of whole-graph draws before giving up on connectivity.
pub const DEFAULT_RETRY_BUDGET: usize = 10_000;

fn invalid(message: String) -> Error {
    Error::InvalidParameter(message)
}

/// Connected G(n, p): every pair is linked independently with probability
/// `p`; disconnected draws are discarded.
pub fn erdos_renyi(n: usize, p: f64, seed: u64) -> Result<Graph> {
    erdos_renyi_with_budget(n, p, seed, DEFAULT_RETRY_BUDGET)
}

/// [`erdos_renyi`] with an explicit retry budget.
pub fn erdos_renyi_with_budget(n: usize, p: f64, seed: u64, budget: usize) -> Result<Graph> {
    if n < 2 {
        return Err(invalid(format!("Erdős–Rényi needs n >= 2, got {n}")));
    }
    if !(p > 0.0 && p <= 1.0) {
        return Err(invalid(format!("Erdős–Rényi needs 0 < p <= 1, got {p}")));
    }
    let mut rng = stream_rng(seed, 0);
    for _ in 0..budget {
        let mut edges = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if rng.random::<f64>() < p {
                    edges.push((i, j));
                }
            }
        }
        let g = Graph::from_edges(n, edges)?;
        if g.is_connected() {
            return Ok(g);
        }
    }
    Err(Error::GenerationTimeout { attempts: budget })
}

/// Watts–Strogatz small world: a ring where every node links to its `d`
/// clockwise successors, after which each ring edge `(i, i+o)` is visited in
/// (node, offset) order and, with probability `p`, its far end is moved to a
/// uniformly chosen node that is neither `i` nor already adjacent to `i`.
/// Disconnected draws are discarded.
pub fn watts_strogatz(n: usize, d: usize, p: f64, seed: u64) -> Result<Graph> {
    watts_strogatz_with_budget(n, d, p, seed, DEFAULT_RETRY_BUDGET)
}

/// [`watts_strogatz`] with an explicit retry budget.
pub fn watts_strogatz_with_budget(n: usize, d: usize, p: f64, seed: u64, budget: usize) -> Result<Graph> {
    if d < 1 || n <= 4 * d {
        return Err(invalid(format!("Watts–Strogatz needs d >= 1 and n > 4d, got n = {n}, d = {d}")));
    }
    if !(0.0..=1.0).contains(&p) {
        return Err(invalid(format!("Watts–Strogatz needs 0 <= p <= 1, got {p}")));
    }
    let mut rng = stream_rng(seed, 0);
    for _ in 0..budget {
        let mut adjacency: Vec<Vec<bool>> = vec![vec![false; n]; n];
        let edges_of_ring = (0..n).flat_map(|i| (1..=d).map(move |o| (i, (i + o) % n)));
        let mut edges: Vec<(usize, usize)> = edges_of_ring.collect();
        for &(i, j) in &edges {
            adjacency[i][j] = true;
            adjacency[j][i] = true;
        }
        for edge in edges.iter_mut() {
            let (i, j) = *edge;
            if rng.random::<f64>() >= p {
                continue;
            }
            let free = n - 1 - adjacency[i].iter().filter(|&&a| a).count();
            if free == 0 {
                continue;
            }
            let pick = rng.random_range(0..free);
            let w = (0..n).filter(|&w| w != i && !adjacency[i][w]).nth(pick).expect("free target exists");
            adjacency[i][j] = false;
            adjacency[j][i] = false;
            adjacency[i][w] = true;
            adjacency[w][i] = true;
            *edge = (i, w);
        }
        let g = Graph::from_edges(n, edges)?;
        if g.is_connected() {
            return Ok(g);
        }
    }
    Err(Error::GenerationTimeout { attempts: budget })
}

/// Krapivsky preferential attachment: `m` isolated seeds; the first joiner
/// links to all of them, and every later node links to `m` distinct existing
/// nodes drawn without replacement with probability ∝ `k^gamma`.
pub fn krapivsky_ba(n: usize, m: usize, gamma: f64, seed: u64) -> Result<Graph> {
    if m < 1 || m >= n {
        return Err(invalid(format!("preferential attachment needs 1 <= m < n, got n = {n}, m = {m}")));
    }
    if !(gamma >= 0.0 && gamma.is_finite()) {
        return Err(invalid(format!("preferential attachment needs a finite gamma >= 0, got {gamma}")));
    }
    let mut rng = stream_rng(seed, 0);
    let mut degree = vec![0usize; n];
    let mut edges = Vec::with_capacity(m * (n - m));
    for s in 0..m {
        edges.push((s, m));
        degree[s] += 1;
        degree[m] += 1;
    }
    let mut weight = vec![0.0f64; n];
    let mut chosen = Vec::with_capacity(m);
    for t in m + 1..n {
        for (w, &k) in weight[..t].iter_mut().zip(&degree[..t]) {
            *w = (k as f64).powf(gamma);
        }
        chosen.clear();
        for _ in 0..m {
            let total: f64 = weight[..t].iter().sum();
            let mut target = rng.random::<f64>() * total;
            let mut pick = None;
            for (v, &w) in weight[..t].iter().enumerate() {
                if w > 0.0 {
                    pick = Some(v);
                    if target < w {
                        break;
                    }
                    target -= w;
                }
            }
            let v = pick.expect("positive attachment weight");
            weight[v] = 0.0;
            chosen.push(v);
        }
        for &v in &chosen {
            edges.push((v, t));
            degree[v] += 1;
            degree[t] += 1;
        }
    }
    let g = Graph::from_edges(n, edges)?;
    debug_assert!(g.is_connected());
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::metrics;

    #[test]
    fn er_with_p_one_is_complete() {
        let g = erdos_renyi(5, 1.0, 3).unwrap();
        assert_eq!(g.edge_count(), 10);
    }

    #[test]
    fn er_rejects_bad_probability() {
        assert!(erdos_renyi(10, 0.0, 1).is_err());
        assert!(erdos_renyi(10, 1.5, 1).is_err());
    }

    #[test]
    fn er_times_out_when_connectivity_is_hopeless() {
        let err = erdos_renyi_with_budget(50, 1e-6, 1, 20).unwrap_err();
        assert_eq!(err, Error::GenerationTimeout { attempts: 20 });
    }

    #[test]
    fn ws_without_rewiring_is_a_regular_ring() {
        let g = watts_strogatz(100, 2, 0.0, 9).unwrap();
        assert!(g.degrees().iter().all(|&k| k == 4));
        assert!((metrics(&g).clustering - 0.5).abs() < 1e-12);
    }

    #[test]
    fn ws_keeps_edge_count_and_simplicity() {
        let g = watts_strogatz(60, 3, 0.4, 5).unwrap();
        assert_eq!(g.edge_count(), 180);
        assert!(g.is_connected());
    }

    #[test]
    fn ws_rejects_small_rings() {
        assert!(watts_strogatz(8, 2, 0.1, 1).is_err());
    }

    #[test]
    fn ba_average_degree() {
        let g = krapivsky_ba(100, 2, 1.0, 11).unwrap();
        assert_eq!(g.edge_count(), 2 * 98);
        assert!((metrics(&g).avg_degree - 3.92).abs() < 1e-12);
        assert!(g.is_connected());
    }

    #[test]
    fn ba_with_m_three_on_four_nodes_is_a_star() {
        let g = krapivsky_ba(4, 3, 1.0, 0).unwrap();
        assert_eq!(g.degrees(), vec![1, 1, 1, 3]);
    }

    #[test]
    fn ba_rejects_bad_parameters() {
        assert!(krapivsky_ba(5, 5, 1.0, 0).is_err());
        assert!(krapivsky_ba(5, 0, 1.0, 0).is_err());
        assert!(krapivsky_ba(5, 2, -1.0, 0).is_err());
    }

    #[test]
    fn same_seed_same_graph() {
        assert_eq!(erdos_renyi(40, 0.1, 42).unwrap(), erdos_renyi(40, 0.1, 42).unwrap());
        assert_eq!(watts_strogatz(40, 2, 0.3, 42).unwrap(), watts_strogatz(40, 2, 0.3, 42).unwrap());
        assert_eq!(krapivsky_ba(40, 2, 2.0, 42).unwrap(), krapivsky_ba(40, 2, 2.0, 42).unwrap());
    }
}
