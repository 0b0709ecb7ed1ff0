//! Exact rational solvers for the coalescence-time systems.
//!
//! Each pair row is multiplied by a positive integer so that all
//! coefficients become integers, and the system is reduced by Bareiss'
//! fraction-free elimination. Row scaling of a positive-definite matrix by
//! positive factors keeps every leading principal minor positive, so the
//! elimination never meets a zero pivot.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::solve::PairIndex;
use super::{CoalescenceTable, TauVariant};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest node count accepted by the exact solvers.
pub const MAX_EXACT_N: usize = 16;

/// Solves the plain system exactly.
pub fn solve_tau_exact(g: &Graph) -> Result<CoalescenceTable<BigRational>> {
    solve_exact(g, TauVariant::Plain)
}

/// Solves the birth–death system exactly.
pub fn solve_tau_bd_exact(g: &Graph) -> Result<CoalescenceTable<BigRational>> {
    solve_exact(g, TauVariant::BirthDeath)
}

fn solve_exact(g: &Graph, variant: TauVariant) -> Result<CoalescenceTable<BigRational>> {
    let n = g.n();
    if n > MAX_EXACT_N {
        return Err(Error::TooLarge { what: "exact solver", n, max: MAX_EXACT_N });
    }
    g.validate_for_analysis()?;
    let index = PairIndex::new(n);
    let size = index.len();
    let degree: Vec<i64> = g.degrees().iter().map(|&k| k as i64).collect();
    // Common multiple of all degrees, clearing the 1/k_l factors of the
    // birth–death rows.
    let lcm = degree.iter().fold(1i64, |acc, &k| acc.lcm(&k));
    let width = size + 1;
    let mut m = vec![0i64; size * width];
    for j in 1..n {
        for i in 0..j {
            let row = index.get(i, j);
            let cell = |col: usize| row * width + col;
            match variant {
                TauVariant::Plain => {
                    // 2 k_i k_j τ_ij − k_j Σ_{l∈N_i} τ_jl − k_i Σ_{l∈N_j} τ_il = 2 k_i k_j
                    let d = 2 * degree[i] * degree[j];
                    m[cell(row)] += d;
                    m[cell(size)] = d;
                    for (x, y) in [(i, j), (j, i)] {
                        for &l in g.neighbors(x) {
                            if l != y {
                                m[cell(index.get(y, l))] -= degree[y];
                            }
                        }
                    }
                }
                TauVariant::BirthDeath => {
                    // Λ(S_i + S_j) τ̃_ij − Σ_{l∈N_i} (Λ/k_l) τ̃_jl − Σ_{l∈N_j} (Λ/k_l) τ̃_il = Λ
                    let mut diag = 0;
                    for (x, y) in [(i, j), (j, i)] {
                        for &l in g.neighbors(x) {
                            let w = lcm / degree[l];
                            diag += w;
                            if l != y {
                                m[cell(index.get(y, l))] -= w;
                            }
                        }
                    }
                    m[cell(row)] += diag;
                    m[cell(size)] = lcm;
                }
            }
        }
    }
    let solution = bareiss_solve(size, m.into_iter().map(BigInt::from).collect());
    let mut values = vec![BigRational::zero(); n * n];
    for j in 1..n {
        for i in 0..j {
            let v = solution[index.get(i, j)].clone();
            values[i * n + j] = v.clone();
            values[j * n + i] = v;
        }
    }
    Ok(CoalescenceTable::from_parts(n, variant, values, 0.0))
}

/// Solves a `size × size` integer system given as a row-major augmented
/// matrix with positive leading principal minors.
fn bareiss_solve(size: usize, mut m: Vec<BigInt>) -> Vec<BigRational> {
    let width = size + 1;
    let mut previous = BigInt::one();
    for k in 0..size {
        let pivot = m[k * width + k].clone();
        assert!(!pivot.is_zero(), "positive definite system has a zero leading minor");
        for i in k + 1..size {
            let factor = m[i * width + k].clone();
            for j in k + 1..width {
                let updated = &m[i * width + j] * &pivot - &factor * &m[k * width + j];
                m[i * width + j] = if previous.is_one() { updated } else { updated / &previous };
            }
            m[i * width + k] = BigInt::zero();
        }
        previous = pivot;
    }
    let mut x = vec![BigRational::zero(); size];
    for k in (0..size).rev() {
        let mut acc = BigRational::from_integer(m[k * width + size].clone());
        for j in k + 1..size {
            if !m[k * width + j].is_zero() {
                acc -= BigRational::from_integer(m[k * width + j].clone()) * &x[j];
            }
        }
        x[k] = acc / BigRational::from_integer(m[k * width + k].clone());
    }
    x
}
