//! The Υ pairing of coalescence times over one- and two-hop groups.
//!
//! Writing `G_i = k_i + 1` for the size of the group centred on `i`,
//!
//! `Υ_ij = (1/G_i) [ (τ_ij + Σ_{l∈N_i}(τ_jl − τ_il)) / G_i
//!          + Σ_{l∈N_i} ((τ_jl − τ_il) + Σ_{ℓ∈N_l}(τ_jℓ − τ_iℓ)) / G_l ]`.
//!
//! Since `τ_ij = τ_ji − τ_ii`, this is `(1/G_i) Σ_m c_i(m) (τ_jm − τ_im)` for
//! a sparse coefficient vector `c_i` that depends on the graph only. The
//! coefficients are computed once per graph and the `τ_im` part once per
//! node, so each entry costs one sparse dot product. Fed with τ̃ the same
//! formula yields Υ̃.

use super::Scalar;
use crate::graph::Graph;

/// Per-node payoff coefficients `c_i(m) / G_i` and their `τ_i·` baselines
/// are graph-dependent only; this holds the former.
#[derive(Debug, Clone)]
pub struct PayoffWeights<T> {
    n: usize,
    /// For each i: sorted `(m, c_i(m) / G_i)` with non-zero weight.
    rows: Vec<Vec<(usize, T)>>,
}

impl<T: Scalar> PayoffWeights<T> {
    /// Computes the coefficients for every node.
    pub fn new(g: &Graph) -> Self {
        let n = g.n();
        let inv_group: Vec<T> = (0..n).map(|i| T::recip_count(g.degree(i) + 1)).collect();
        let mut dense: Vec<Option<T>> = vec![None; n];
        let mut touched = Vec::new();
        let add = |m: usize, w: T, dense: &mut Vec<Option<T>>, touched: &mut Vec<usize>| match &mut dense[m] {
            Some(v) => *v = v.clone() + w,
            slot @ None => {
                *slot = Some(w);
                touched.push(m);
            }
        };
        let rows = (0..n)
            .map(|i| {
                add(i, inv_group[i].clone(), &mut dense, &mut touched);
                for &l in g.neighbors(i) {
                    add(l, inv_group[i].clone() + inv_group[l].clone(), &mut dense, &mut touched);
                    for &m in g.neighbors(l) {
                        add(m, inv_group[l].clone(), &mut dense, &mut touched);
                    }
                }
                touched.sort_unstable();
                let row: Vec<(usize, T)> = touched
                    .iter()
                    .map(|&m| (m, dense[m].take().expect("touched") * inv_group[i].clone()))
                    .filter(|(_, w)| !w.is_zero())
                    .collect();
                touched.clear();
                row
            })
            .collect();
        PayoffWeights { n, rows }
    }

    /// Node count.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Σ_m c_i(m) τ_jm / G_i for a row-major N×N table.
    fn weighted_row(&self, i: usize, j: usize, tau: &[T]) -> T {
        let base = j * self.n;
        self.rows[i].iter().fold(T::zero(), |acc, (m, w)| acc + w.clone() * tau[base + m].clone())
    }

    /// The baselines Σ_m c_i(m) τ_im / G_i for every i.
    pub fn baselines(&self, tau: &[T]) -> Vec<T> {
        (0..self.n).map(|i| self.weighted_row(i, i, tau)).collect()
    }

    /// Υ_ij given the precomputed baselines.
    pub fn upsilon(&self, i: usize, j: usize, tau: &[T], baselines: &[T]) -> T {
        if i == j {
            return T::zero();
        }
        self.weighted_row(i, j, tau) - baselines[i].clone()
    }
}

/// The full row-major N×N Υ table for a row-major τ (or τ̃) table.
pub fn upsilon_table<T: Scalar>(g: &Graph, tau: &[T]) -> Vec<T> {
    let n = g.n();
    let weights = PayoffWeights::<T>::new(g);
    let baselines = weights.baselines(tau);
    let mut out = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            out.push(weights.upsilon(i, j, tau, &baselines));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{ceiling_fan, star};
    use crate::theory::{solve_tau, solve_tau_exact};
    use num_rational::BigRational;

    /// Υ evaluated literally from the defining double sum.
    fn upsilon_literal(g: &Graph, tau: &[f64], i: usize, j: usize) -> f64 {
        let n = g.n();
        let t = |a: usize, b: usize| tau[a * n + b];
        let group = |a: usize| (g.degree(a) + 1) as f64;
        let first: f64 = t(i, j) + g.neighbors(i).iter().map(|&l| t(j, l) - t(i, l)).sum::<f64>();
        let second: f64 = g
            .neighbors(i)
            .iter()
            .map(|&l| {
                let inner: f64 = g.neighbors(l).iter().map(|&m| t(j, m) - t(i, m)).sum();
                (t(j, l) - t(i, l) + inner) / group(l)
            })
            .sum();
        (first / group(i) + second) / group(i)
    }

    #[test]
    fn matches_literal_definition() {
        let g = ceiling_fan(3).unwrap();
        let tau = solve_tau(&g).unwrap();
        let table = upsilon_table(&g, tau.values());
        for i in 0..g.n() {
            for j in 0..g.n() {
                let expected = if i == j { 0.0 } else { upsilon_literal(&g, tau.values(), i, j) };
                assert!((table[i * g.n() + j] - expected).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn star_entries_are_exact() {
        let g = star(3).unwrap();
        let tau = solve_tau_exact(&g).unwrap();
        let table = upsilon_table(&g, tau.values());
        let q = |a: i64, b: i64| BigRational::new(a.into(), b.into());
        assert_eq!(table[1], q(14, 16));
        assert_eq!(table[4], q(-1, 4));
        assert_eq!(table[4 + 2], q(3, 4));
        assert_eq!(table[0], q(0, 1));
    }

    #[test]
    fn ceiling_fan_pair_leaves_have_zero_upsilon() {
        let g = ceiling_fan(4).unwrap();
        let tau = solve_tau_exact(&g).unwrap();
        let table = upsilon_table(&g, tau.values());
        assert!(table[g.n() + 2] == BigRational::from_integer(0.into()));
    }
}
