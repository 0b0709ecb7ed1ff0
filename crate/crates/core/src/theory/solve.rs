//! Floating-point solvers for the coalescence-time systems.
//!
//! For `i ≠ j` the plain table satisfies
//! `τ_ij = 1 + ½ Σ_l (p_il τ_jl + p_jl τ_il)` and the birth–death table
//! `τ̃_ij (S_i + S_j) = 1 + Σ_{l∈N_i} τ̃_jl / k_l + Σ_{l∈N_j} τ̃_il / k_l` with
//! `S_i = Σ_{l∈N_i} 1/k_l`; both have a zero diagonal. Scaling the pair rows
//! by `2 k_i k_j` (plain) or `1 / (k_i k_j)` (birth–death) turns either into
//! a symmetric, irreducibly diagonally dominant — hence positive definite —
//! system over unordered pairs. Small graphs are solved densely by Cholesky
//! factorisation; large ones by Jacobi-preconditioned conjugate gradients
//! that never materialise the matrix.

use nalgebra::{DMatrix, DVector};

use super::{CoalescenceTable, TauVariant};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Node count up to which [`SolverMethod::Auto`] factorises densely.
pub const DENSE_MAX_N: usize = 40;

/// Linear-solver selection.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SolverMethod {
    /// Dense for `N ≤ DENSE_MAX_N`, iterative above.
    Auto,
    /// Dense Cholesky factorisation over all node pairs.
    Dense,
    /// Matrix-free preconditioned conjugate gradients.
    Iterative,
}

/// Solver settings.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolverConfig {
    pub method: SolverMethod,
    /// Target for the largest absolute equation defect. The iterative path
    /// never aims below `64 ε · max τ`, the level rounding allows.
    pub tolerance: f64,
    /// Iteration cap for the iterative path.
    pub max_iterations: usize,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig { method: SolverMethod::Auto, tolerance: 1e-11, max_iterations: 1_000_000 }
    }
}

/// Solves the plain system with default settings.
pub fn solve_tau(g: &Graph) -> Result<CoalescenceTable> {
    solve_tau_with(g, &SolverConfig::default())
}

/// Solves the birth–death system with default settings.
pub fn solve_tau_bd(g: &Graph) -> Result<CoalescenceTable> {
    solve_tau_bd_with(g, &SolverConfig::default())
}

/// Solves the plain system.
pub fn solve_tau_with(g: &Graph, config: &SolverConfig) -> Result<CoalescenceTable> {
    solve_variant(g, TauVariant::Plain, config)
}

/// Solves the birth–death system.
pub fn solve_tau_bd_with(g: &Graph, config: &SolverConfig) -> Result<CoalescenceTable> {
    solve_variant(g, TauVariant::BirthDeath, config)
}

fn solve_variant(g: &Graph, variant: TauVariant, config: &SolverConfig) -> Result<CoalescenceTable> {
    g.validate_for_analysis()?;
    let system = PairSystem::new(g, variant);
    let dense = match config.method {
        SolverMethod::Auto => g.n() <= DENSE_MAX_N,
        SolverMethod::Dense => true,
        SolverMethod::Iterative => false,
    };
    let values = if dense { system.solve_dense() } else { symmetrize(g.n(), system.solve_cg(config)?) };
    let residual = max_defect(g, variant, &values);
    let scale = values.iter().fold(1.0f64, |m, v| m.max(v.abs()));
    if !residual.is_finite() || (dense && residual > config.tolerance.max(1e-10) * scale) {
        return Err(Error::SolverDivergence { iterations: 0, defect: residual });
    }
    Ok(CoalescenceTable::from_parts(g.n(), variant, values, residual))
}

/// Largest defect of the defining equations over all ordered pairs `i ≠ j`
/// for a row-major N×N table, evaluated directly from the equations.
pub fn max_defect(g: &Graph, variant: TauVariant, values: &[f64]) -> f64 {
    let n = g.n();
    let t = |i: usize, j: usize| values[i * n + j];
    let mut worst = 0.0f64;
    for i in 0..n {
        worst = worst.max(t(i, i).abs());
        for j in 0..n {
            if i == j {
                continue;
            }
            let defect = match variant {
                TauVariant::Plain => {
                    let ki = g.degree(i) as f64;
                    let kj = g.degree(j) as f64;
                    let a: f64 = g.neighbors(i).iter().map(|&l| t(j, l)).sum::<f64>() / ki;
                    let b: f64 = g.neighbors(j).iter().map(|&l| t(i, l)).sum::<f64>() / kj;
                    t(i, j) - 1.0 - 0.5 * (a + b)
                }
                TauVariant::BirthDeath => {
                    let inv = |l: usize| 1.0 / g.degree(l) as f64;
                    let si: f64 = g.neighbors(i).iter().map(|&l| inv(l)).sum();
                    let sj: f64 = g.neighbors(j).iter().map(|&l| inv(l)).sum();
                    let a: f64 = g.neighbors(i).iter().map(|&l| inv(l) * t(j, l)).sum();
                    let b: f64 = g.neighbors(j).iter().map(|&l| inv(l) * t(i, l)).sum();
                    t(i, j) - (1.0 + a + b) / (si + sj)
                }
            };
            worst = worst.max(defect.abs());
        }
    }
    worst
}

/// The symmetric pair system for one variant.
struct PairSystem<'a> {
    g: &'a Graph,
    variant: TauVariant,
    degree: Vec<f64>,
    /// Σ_{l∈N_i} 1/k_l (birth–death only).
    inv_sum: Vec<f64>,
}

impl<'a> PairSystem<'a> {
    fn new(g: &'a Graph, variant: TauVariant) -> Self {
        let degree: Vec<f64> = g.degrees().iter().map(|&k| k as f64).collect();
        let inv_sum = (0..g.n()).map(|i| g.neighbors(i).iter().map(|&l| 1.0 / degree[l]).sum()).collect();
        PairSystem { g, variant, degree, inv_sum }
    }

    /// Diagonal entry and right-hand side of the scaled row for pair (i, j).
    fn diagonal_and_rhs(&self, i: usize, j: usize) -> (f64, f64) {
        let (ki, kj) = (self.degree[i], self.degree[j]);
        match self.variant {
            TauVariant::Plain => (2.0 * ki * kj, 2.0 * ki * kj),
            TauVariant::BirthDeath => {
                let s = 1.0 / (ki * kj);
                ((self.inv_sum[i] + self.inv_sum[j]) * s, s)
            }
        }
    }

    /// Coupling weight of τ_jl in the scaled row of pair (i, j), for `l ∈ N_i`
    /// (the matrix entry is its negative).
    fn coupling(&self, i: usize, j: usize, l: usize) -> f64 {
        match self.variant {
            TauVariant::Plain => self.degree[j],
            TauVariant::BirthDeath => 1.0 / (self.degree[i] * self.degree[j] * self.degree[l]),
        }
    }

    fn solve_dense(&self) -> Vec<f64> {
        let n = self.g.n();
        let index = PairIndex::new(n);
        let size = index.len();
        let mut a = DMatrix::<f64>::zeros(size, size);
        let mut b = DVector::<f64>::zeros(size);
        for j in 1..n {
            for i in 0..j {
                let row = index.get(i, j);
                let (diag, rhs) = self.diagonal_and_rhs(i, j);
                a[(row, row)] += diag;
                b[row] = rhs;
                for (x, y) in [(i, j), (j, i)] {
                    for &l in self.g.neighbors(x) {
                        if l != y {
                            a[(row, index.get(y, l))] -= self.coupling(x, y, l);
                        }
                    }
                }
            }
        }
        let solution = match a.clone().cholesky() {
            Some(chol) => chol.solve(&b),
            None => a.lu().solve(&b).unwrap_or_else(|| DVector::from_element(size, f64::NAN)),
        };
        let mut values = vec![0.0; n * n];
        for j in 1..n {
            for i in 0..j {
                let v = solution[index.get(i, j)];
                values[i * n + j] = v;
                values[j * n + i] = v;
            }
        }
        values
    }

    /// Applies the scaled operator to a symmetric zero-diagonal N×N matrix.
    fn apply(&self, x: &[f64], out: &mut [f64], y: &mut [f64]) {
        let n = self.g.n();
        // y_ij = Σ_{l∈N_i} w(i, l) x_lj, where w folds in the per-variant
        // factor that depends on l.
        y.iter_mut().for_each(|v| *v = 0.0);
        for i in 0..n {
            let yi = &mut y[i * n..(i + 1) * n];
            for &l in self.g.neighbors(i) {
                let w = match self.variant {
                    TauVariant::Plain => 1.0,
                    TauVariant::BirthDeath => 1.0 / self.degree[l],
                };
                let xl = &x[l * n..(l + 1) * n];
                for (acc, &v) in yi.iter_mut().zip(xl) {
                    *acc += w * v;
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                out[i * n + j] = if i == j {
                    0.0
                } else {
                    let (diag, _) = self.diagonal_and_rhs(i, j);
                    let (ki, kj) = (self.degree[i], self.degree[j]);
                    // y_ij = Σ_{l∈N_i} x_jl (· 1/k_l), y_ji likewise.
                    let (ci, cj) = match self.variant {
                        TauVariant::Plain => (kj, ki),
                        TauVariant::BirthDeath => (1.0 / (ki * kj), 1.0 / (ki * kj)),
                    };
                    diag * x[i * n + j] - ci * y[i * n + j] - cj * y[j * n + i]
                };
            }
        }
    }

    /// Converts a scaled-row residual entry back to an equation defect.
    fn unscale(&self, i: usize, j: usize, r: f64) -> f64 {
        let (ki, kj) = (self.degree[i], self.degree[j]);
        match self.variant {
            TauVariant::Plain => r / (2.0 * ki * kj),
            TauVariant::BirthDeath => r * ki * kj / (self.inv_sum[i] + self.inv_sum[j]),
        }
    }

    fn solve_cg(&self, config: &SolverConfig) -> Result<Vec<f64>> {
        let n = self.g.n();
        let size = n * n;
        let mut diag = vec![1.0; size];
        let mut b = vec![0.0; size];
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    let (d, rhs) = self.diagonal_and_rhs(i, j);
                    diag[i * n + j] = d;
                    b[i * n + j] = rhs;
                }
            }
        }
        let dot = |a: &[f64], b: &[f64]| a.iter().zip(b).map(|(x, y)| x * y).sum::<f64>();
        let mut x = vec![0.0; size];
        let mut r = b.clone();
        let mut z: Vec<f64> = r.iter().zip(&diag).map(|(r, d)| r / d).collect();
        let mut p = z.clone();
        let mut ap = vec![0.0; size];
        let mut scratch = vec![0.0; size];
        let mut rz = dot(&r, &z);
        let mut defect = f64::INFINITY;
        for iteration in 0..config.max_iterations {
            self.apply(&p, &mut ap, &mut scratch);
            let pap = dot(&p, &ap);
            if pap.is_nan() || pap <= 0.0 {
                return Err(Error::SolverDivergence { iterations: iteration, defect });
            }
            let alpha = rz / pap;
            for k in 0..size {
                x[k] += alpha * p[k];
                r[k] -= alpha * ap[k];
            }
            // Recompute the true residual now and then to shed drift.
            if iteration % 50 == 49 {
                self.apply(&x, &mut ap, &mut scratch);
                for k in 0..size {
                    r[k] = b[k] - ap[k];
                }
            }
            let scale = x.iter().fold(1.0f64, |m, v| m.max(v.abs()));
            let target = config.tolerance.max(64.0 * f64::EPSILON * scale);
            defect = 0.0;
            for i in 0..n {
                for j in 0..n {
                    if i != j {
                        defect = defect.max(self.unscale(i, j, r[i * n + j]).abs());
                    }
                }
            }
            if defect <= target {
                self.apply(&x, &mut ap, &mut scratch);
                let mut true_defect = 0.0f64;
                for i in 0..n {
                    for j in 0..n {
                        if i != j {
                            let k = i * n + j;
                            true_defect = true_defect.max(self.unscale(i, j, b[k] - ap[k]).abs());
                        }
                    }
                }
                if true_defect <= target {
                    return Ok(x);
                }
                for k in 0..size {
                    r[k] = b[k] - ap[k];
                }
            }
            for k in 0..size {
                z[k] = r[k] / diag[k];
            }
            let rz_next = dot(&r, &z);
            let beta = rz_next / rz;
            rz = rz_next;
            for k in 0..size {
                p[k] = z[k] + beta * p[k];
            }
        }
        Err(Error::SolverDivergence { iterations: config.max_iterations, defect })
    }
}

/// Averages the two mirrored unknowns of the full-grid iterative solve,
/// which agree only up to rounding, and clears the diagonal.
fn symmetrize(n: usize, mut values: Vec<f64>) -> Vec<f64> {
    for i in 0..n {
        values[i * n + i] = 0.0;
        for j in i + 1..n {
            let v = 0.5 * (values[i * n + j] + values[j * n + i]);
            values[i * n + j] = v;
            values[j * n + i] = v;
        }
    }
    values
}

/// Index of unordered pair {i, j} (i ≠ j) in column order: (0,1), (0,2), (1,2), …
pub(crate) struct PairIndex {
    n: usize,
}

impl PairIndex {
    pub(crate) fn new(n: usize) -> Self {
        PairIndex { n }
    }

    pub(crate) fn len(&self) -> usize {
        self.n * (self.n - 1) / 2
    }

    pub(crate) fn get(&self, i: usize, j: usize) -> usize {
        debug_assert!(i != j);
        let (a, b) = if i < j { (i, j) } else { (j, i) };
        b * (b - 1) / 2 + a
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, cycle, lattice, star, Neighborhood};

    fn close(a: f64, b: f64) -> bool {
        (a - b).abs() <= 1e-10 * b.abs().max(1.0)
    }

    #[test]
    fn triangle_is_two_everywhere() {
        let t = solve_tau(&complete(3).unwrap()).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(t.at(i, j) == 0.0, i == j);
                if i != j {
                    assert!(close(t.at(i, j), 2.0));
                }
            }
        }
    }

    #[test]
    fn star_plain_and_birth_death_tables() {
        for n in [3usize, 5, 9] {
            let g = star(n).unwrap();
            let nf = n as f64;
            let t = solve_tau(&g).unwrap();
            assert!(close(t.at(0, 1), (3.0 * nf - 1.0) / (nf + 1.0)));
            assert!(close(t.at(1, 2), 4.0 * nf / (nf + 1.0)));
            let tb = solve_tau_bd(&g).unwrap();
            assert!(close(tb.at(0, 1), nf * (nf * nf - nf + 2.0) / (2.0 * (nf + 1.0))));
            assert!(close(tb.at(1, 2), nf * (nf * nf + 3.0) / (2.0 * (nf + 1.0))));
        }
    }

    #[test]
    fn iterative_matches_dense() {
        let config_cg = SolverConfig { method: SolverMethod::Iterative, ..SolverConfig::default() };
        let config_dense = SolverConfig { method: SolverMethod::Dense, ..SolverConfig::default() };
        for g in [star(6).unwrap(), cycle(9).unwrap(), lattice(4, Neighborhood::Moore).unwrap()] {
            let a = solve_tau_with(&g, &config_cg).unwrap();
            let b = solve_tau_with(&g, &config_dense).unwrap();
            let c = solve_tau_bd_with(&g, &config_cg).unwrap();
            let d = solve_tau_bd_with(&g, &config_dense).unwrap();
            for k in 0..g.n() * g.n() {
                assert!(close(a.values()[k], b.values()[k]));
                assert!(close(c.values()[k], d.values()[k]));
            }
        }
    }

    #[test]
    fn disconnected_graph_is_rejected() {
        let g = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert!(matches!(solve_tau(&g), Err(Error::Disconnected { .. })));
    }

    #[test]
    fn pair_index_is_a_bijection() {
        let index = PairIndex::new(6);
        let mut seen = vec![false; index.len()];
        for j in 1..6 {
            for i in 0..j {
                let k = index.get(i, j);
                assert_eq!(k, index.get(j, i));
                assert!(!seen[k]);
                seen[k] = true;
            }
        }
    }
}
