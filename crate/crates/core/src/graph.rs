//! Simple undirected graphs, random-walk kernels and structural metrics.

use crate::error::{Error, Result};

/// Largest node count for which adjacency is also kept as bit rows.
const BIT_ROWS_MAX: usize = 64;

/// Immutable simple undirected graph.
///
/// Neighbour lists are sorted. For graphs with at most 64 nodes the adjacency
/// is additionally stored as one `u64` bit row per node, which makes edge
/// queries and canonical labelling cheap at census scale.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    neighbors: Vec<Vec<usize>>,
    edge_count: usize,
    bits: Vec<u64>,
}

impl Graph {
    /// Builds a graph, checking only that it is simple (no self-loops, no
    /// duplicate edges, indices in range). Isolated nodes and multiple
    /// components are allowed; use [`build_graph`] for analysis input.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut neighbors = vec![Vec::new(); n];
        let mut edge_count = 0;
        for (a, b) in edges {
            for index in [a, b] {
                if index >= n {
                    return Err(Error::IndexOutOfRange { index, n });
                }
            }
            if a == b {
                return Err(Error::SelfLoop(a));
            }
            neighbors[a].push(b);
            neighbors[b].push(a);
            edge_count += 1;
        }
        for (i, list) in neighbors.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                return Err(Error::DuplicateEdge(i.min(w[0]), i.max(w[0])));
            }
        }
        let bits = if n <= BIT_ROWS_MAX {
            neighbors.iter().map(|list| list.iter().fold(0u64, |acc, &j| acc | (1 << j))).collect()
        } else {
            Vec::new()
        };
        Ok(Graph { neighbors, edge_count, bits })
    }

    /// Builds a graph from `u64` adjacency rows (n ≤ 64); row symmetry and a
    /// clear diagonal are the caller's responsibility and are debug-checked.
    pub fn from_bit_rows(rows: &[u64]) -> Graph {
        let n = rows.len();
        assert!(n <= BIT_ROWS_MAX, "bit rows support at most 64 nodes");
        let neighbors: Vec<Vec<usize>> = rows.iter().map(|&r| (0..n).filter(|&j| r >> j & 1 == 1).collect()).collect();
        debug_assert!((0..n).all(|i| rows[i] >> i & 1 == 0));
        debug_assert!((0..n).all(|i| neighbors[i].iter().all(|&j| rows[j] >> i & 1 == 1)));
        let edge_count = neighbors.iter().map(Vec::len).sum::<usize>() / 2;
        Graph { neighbors, edge_count, bits: rows.to_vec() }
    }

    /// Node count N.
    pub fn n(&self) -> usize {
        self.neighbors.len()
    }

    /// Number of undirected edges.
    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    /// Degree k_i.
    pub fn degree(&self, i: usize) -> usize {
        self.neighbors[i].len()
    }

    /// All degrees.
    pub fn degrees(&self) -> Vec<usize> {
        self.neighbors.iter().map(Vec::len).collect()
    }

    /// Sorted neighbours of `i`.
    pub fn neighbors(&self, i: usize) -> &[usize] {
        &self.neighbors[i]
    }

    /// Adjacency bit rows (empty for graphs with more than 64 nodes).
    pub fn bit_rows(&self) -> &[u64] {
        &self.bits
    }

    /// Whether `i` and `j` are adjacent (k_ij = 1).
    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        if !self.bits.is_empty() {
            self.bits[i] >> j & 1 == 1
        } else {
            self.neighbors[i].binary_search(&j).is_ok()
        }
    }

    /// Edges as `(i, j)` with `i < j`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count);
        for (i, list) in self.neighbors.iter().enumerate() {
            out.extend(list.iter().filter(|&&j| j > i).map(|&j| (i, j)));
        }
        out
    }

    /// Component label per node (labels are 0.. in order of first node).
    pub fn component_labels(&self) -> (Vec<usize>, usize) {
        let n = self.n();
        let mut label = vec![usize::MAX; n];
        let mut count = 0;
        let mut stack = Vec::new();
        for start in 0..n {
            if label[start] != usize::MAX {
                continue;
            }
            label[start] = count;
            stack.push(start);
            while let Some(v) = stack.pop() {
                for &w in &self.neighbors[v] {
                    if label[w] == usize::MAX {
                        label[w] = count;
                        stack.push(w);
                    }
                }
            }
            count += 1;
        }
        (label, count)
    }

    /// Whether the graph has a single component.
    pub fn is_connected(&self) -> bool {
        self.n() > 0 && self.component_labels().1 == 1
    }

    /// Checks the conditions every threshold computation needs: at least two
    /// nodes, a single component, and (hence) no isolated node.
    pub fn validate_for_analysis(&self) -> Result<()> {
        if self.n() < 2 {
            return Err(Error::InvalidParameter(format!("graph needs at least 2 nodes, got {}", self.n())));
        }
        let (_, components) = self.component_labels();
        if components > 1 {
            return Err(Error::Disconnected { components });
        }
        if let Some(i) = (0..self.n()).find(|&i| self.degree(i) == 0) {
            return Err(Error::IsolatedNode(i));
        }
        Ok(())
    }

    /// The degree if every node has the same degree.
    pub fn regular_degree(&self) -> Option<usize> {
        let k = self.degree(0);
        self.neighbors.iter().all(|l| l.len() == k).then_some(k)
    }

    /// Graph with node `v` renamed to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n());
        let edges = self.edges().into_iter().map(|(a, b)| (perm[a], perm[b]));
        Graph::from_edges(self.n(), edges).expect("relabelling preserves simplicity")
    }

    /// The largest connected component, nodes renumbered in increasing
    /// order of their original index. Ties go to the component containing
    /// the smallest node index.
    pub fn largest_component(&self) -> Graph {
        let (label, count) = self.component_labels();
        let mut sizes = vec![0usize; count];
        for &l in &label {
            sizes[l] += 1;
        }
        let best = (0..count).max_by_key(|&c| (sizes[c], std::cmp::Reverse(c))).unwrap_or(0);
        let mut new_index = vec![usize::MAX; self.n()];
        let mut next = 0;
        for v in 0..self.n() {
            if label[v] == best {
                new_index[v] = next;
                next += 1;
            }
        }
        let edges =
            self.edges().into_iter().filter(|&(a, _)| label[a] == best).map(|(a, b)| (new_index[a], new_index[b]));
        Graph::from_edges(next, edges).expect("sub-graph of a simple graph is simple")
    }
}

/// Builds a graph and validates it for analysis (simple, connected, N ≥ 2).
pub fn build_graph(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
    let g = Graph::from_edges(n, edges.iter().copied())?;
    g.validate_for_analysis()?;
    Ok(g)
}

/// Sparse row: `(column, probability)` pairs sorted by column.
pub type SparseRow = Vec<(usize, f64)>;

/// Powers of the one-step random-walk matrix p_ij = k_ij / k_i.
#[derive(Debug, Clone)]
pub struct WalkKernel {
    n: usize,
    powers: Vec<Vec<SparseRow>>,
}

/// Computes p⁽¹⁾ … p⁽ᵐᵃˣ⁾ by repeated sparse multiplication.
///
/// Every node must have at least one neighbour.
pub fn walk_kernel(g: &Graph, max_order: usize) -> WalkKernel {
    let n = g.n();
    let mut powers: Vec<Vec<SparseRow>> = Vec::with_capacity(max_order);
    if max_order == 0 {
        return WalkKernel { n, powers };
    }
    let first: Vec<SparseRow> = (0..n)
        .map(|i| {
            let w = 1.0 / g.degree(i) as f64;
            g.neighbors(i).iter().map(|&j| (j, w)).collect()
        })
        .collect();
    powers.push(first);
    let mut dense = vec![0.0f64; n];
    let mut touched = Vec::new();
    for _ in 1..max_order {
        let prev = powers.last().expect("at least one power");
        let next: Vec<SparseRow> = prev
            .iter()
            .map(|row| {
                for &(l, w) in row {
                    let step = w / g.degree(l) as f64;
                    for &m in g.neighbors(l) {
                        if dense[m] == 0.0 {
                            touched.push(m);
                        }
                        dense[m] += step;
                    }
                }
                touched.sort_unstable();
                let out: SparseRow = touched.iter().map(|&m| (m, dense[m])).collect();
                for &m in &touched {
                    dense[m] = 0.0;
                }
                touched.clear();
                out
            })
            .collect();
        powers.push(next);
    }
    WalkKernel { n, powers }
}

impl WalkKernel {
    /// Highest available power.
    pub fn max_order(&self) -> usize {
        self.powers.len()
    }

    /// Non-zero entries of row `i` of p⁽ᵒʳᵈᵉʳ⁾ (`order ≥ 1`).
    pub fn row(&self, order: usize, i: usize) -> &[(usize, f64)] {
        &self.powers[order - 1][i]
    }

    /// Entry p⁽ᵒʳᵈᵉʳ⁾_ij; order 0 is the identity.
    pub fn p(&self, order: usize, i: usize, j: usize) -> f64 {
        if order == 0 {
            return if i == j { 1.0 } else { 0.0 };
        }
        let row = self.row(order, i);
        row.binary_search_by_key(&j, |&(c, _)| c).map(|k| row[k].1).unwrap_or(0.0)
    }

    /// Node count.
    pub fn n(&self) -> usize {
        self.n
    }
}

/// Structural summary statistics.
#[derive(Debug, Clone, PartialEq)]
pub struct GraphMetrics {
    /// ⟨k⟩.
    pub avg_degree: f64,
    /// ⟨1/k⟩.
    pub avg_inverse_degree: f64,
    /// Mean local clustering coefficient (nodes of degree < 2 contribute 0).
    pub clustering: f64,
    /// Two-step return probabilities p⁽²⁾_ii.
    pub return_p2: Vec<f64>,
    /// Three-step return probabilities p⁽³⁾_ii.
    pub return_p3: Vec<f64>,
}

impl GraphMetrics {
    /// Mean three-step return probability (the single value for regular graphs).
    pub fn mean_return_p3(&self) -> f64 {
        self.return_p3.iter().sum::<f64>() / self.return_p3.len() as f64
    }
}

/// Computes [`GraphMetrics`]; the graph must have no isolated node.
pub fn metrics(g: &Graph) -> GraphMetrics {
    let n = g.n();
    let degrees = g.degrees();
    let avg_degree = degrees.iter().sum::<usize>() as f64 / n as f64;
    let avg_inverse_degree = degrees.iter().map(|&k| 1.0 / k as f64).sum::<f64>() / n as f64;
    let clustering = (0..n)
        .map(|i| {
            let nb = g.neighbors(i);
            let k = nb.len();
            if k < 2 {
                return 0.0;
            }
            let mut links = 0usize;
            for (a, &u) in nb.iter().enumerate() {
                links += nb[a + 1..].iter().filter(|&&v| g.has_edge(u, v)).count();
            }
            2.0 * links as f64 / (k * (k - 1)) as f64
        })
        .sum::<f64>()
        / n as f64;
    let kernel = walk_kernel(g, 3);
    GraphMetrics {
        avg_degree,
        avg_inverse_degree,
        clustering,
        return_p2: (0..n).map(|i| kernel.p(2, i, i)).collect(),
        return_p3: (0..n).map(|i| kernel.p(3, i, i)).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triangle() -> Graph {
        build_graph(3, &[(0, 1), (1, 2), (0, 2)]).unwrap()
    }

    #[test]
    fn build_examples() {
        let t = triangle();
        assert!(t.degrees().iter().all(|&k| k == 2));
        let s = build_graph(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(s.degrees(), vec![3, 1, 1, 1]);
        assert_eq!(build_graph(3, &[(0, 1)]), Err(Error::Disconnected { components: 2 }));
        assert_eq!(build_graph(3, &[(0, 0)]), Err(Error::SelfLoop(0)));
        assert_eq!(build_graph(3, &[(0, 1), (1, 0)]), Err(Error::DuplicateEdge(0, 1)));
        assert_eq!(build_graph(3, &[(0, 3)]), Err(Error::IndexOutOfRange { index: 3, n: 3 }));
    }

    #[test]
    fn walk_kernel_examples() {
        let k = walk_kernel(&triangle(), 2);
        for i in 0..3 {
            assert!((k.p(2, i, i) - 0.5).abs() < 1e-15);
        }
        let n = 6;
        let star = Graph::from_edges(n + 1, (1..=n).map(|l| (0, l))).unwrap();
        let k = walk_kernel(&star, 2);
        assert!((k.p(2, 0, 0) - 1.0).abs() < 1e-15);
        assert!((k.p(2, 1, 2) - 1.0 / n as f64).abs() < 1e-15);
        let cycle = Graph::from_edges(5, (0..5).map(|i| (i, (i + 1) % 5))).unwrap();
        let k = walk_kernel(&cycle, 3);
        assert!((0..5).all(|i| k.p(3, i, i) == 0.0));
    }

    #[test]
    fn metric_examples() {
        let m = metrics(&triangle());
        assert_eq!(m.clustering, 1.0);
        assert_eq!(m.avg_degree, 2.0);
        let star = Graph::from_edges(5, (1..5).map(|l| (0, l))).unwrap();
        assert_eq!(metrics(&star).clustering, 0.0);
    }

    #[test]
    fn largest_component_keeps_biggest_piece() {
        let g = Graph::from_edges(6, [(0, 1), (2, 3), (3, 4), (4, 2)]).unwrap();
        let lc = g.largest_component();
        assert_eq!(lc.n(), 3);
        assert_eq!(lc.edge_count(), 3);
    }
}
