//! Assembly of the critical thresholds from coalescence tables.
//!
//! Every threshold is `Σ W_ij τ_ij / Σ W_ij D_ij` over ordered pairs. The
//! base weight `W` depends on the update rule:
//!
//! * pairwise comparison: `k_i p_ij = k_ij`;
//! * death–birth: `k_i p⁽²⁾_ij = Σ_{l∈N_i∩N_j} 1/k_l` (`j ≠ i`);
//! * birth–death: `k_ij / (k_i k_j)`, paired with the τ̃ table.
//!
//! Accumulated payoffs multiply the weight by the number of games an agent
//! plays: `G_i = k_i + 1` in the public goods game, `k_i` in the donation
//! game. `D` is `Υ_ij` for the public goods game and the one-step payoff
//! gradient `Σ_l p_il (τ_jl − τ_il)` for the donation game.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::One;

use super::upsilon::PayoffWeights;
use super::{
    solve_tau, solve_tau_bd, solve_tau_bd_exact, solve_tau_exact, CoalescenceTable, CriticalValue, GameKind,
    PayoffScheme, Scalar, TauVariant, UpdateRule,
};
use crate::error::{Error, Result};
use crate::graph::{walk_kernel, Graph};

/// One (game, payoff scheme, update rule) combination.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Condition {
    pub game: GameKind,
    pub scheme: PayoffScheme,
    pub rule: UpdateRule,
}

impl Condition {
    /// All twelve conditions: game-major, then scheme, then rule.
    pub const ALL: [Condition; 12] = {
        use GameKind::*;
        use PayoffScheme::*;
        use UpdateRule::*;
        const fn c(game: GameKind, scheme: PayoffScheme, rule: UpdateRule) -> Condition {
            Condition { game, scheme, rule }
        }
        [
            c(Pgg, Averaged, Pc),
            c(Pgg, Averaged, Db),
            c(Pgg, Averaged, Bd),
            c(Pgg, Accumulated, Pc),
            c(Pgg, Accumulated, Db),
            c(Pgg, Accumulated, Bd),
            c(Dg, Averaged, Pc),
            c(Dg, Averaged, Db),
            c(Dg, Averaged, Bd),
            c(Dg, Accumulated, Pc),
            c(Dg, Accumulated, Db),
            c(Dg, Accumulated, Bd),
        ]
    };

    pub fn new(game: GameKind, rule: UpdateRule, scheme: PayoffScheme) -> Self {
        Condition { game, scheme, rule }
    }

    /// Position in [`Condition::ALL`].
    pub fn index(self) -> usize {
        Condition::ALL.iter().position(|&c| c == self).expect("every condition is listed")
    }
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}_{}_{}", self.game, self.rule, self.scheme)
    }
}

impl FromStr for Condition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(['_', '-', ':']).collect();
        if parts.len() != 3 {
            return Err(Error::InvalidParameter(format!("condition '{s}' is not game_rule_scheme")));
        }
        Ok(Condition { game: parts[0].parse()?, rule: parts[1].parse()?, scheme: parts[2].parse()? })
    }
}

/// The pair weights `W_ij` (ordered pairs, `i ≠ j`, non-zero only) for a
/// condition, in row-major order of `(i, j)`.
pub fn pair_weights<T: Scalar>(
    g: &Graph,
    rule: UpdateRule,
    scheme: PayoffScheme,
    game: GameKind,
) -> Vec<(usize, usize, T)> {
    let n = g.n();
    let mut out = Vec::new();
    let mut dense: Vec<T> = vec![T::zero(); n];
    let mut touched: Vec<usize> = Vec::new();
    for i in 0..n {
        let ki = g.degree(i);
        let games = match (scheme, game) {
            (PayoffScheme::Averaged, _) => T::one(),
            (PayoffScheme::Accumulated, GameKind::Pgg) => T::count(ki + 1),
            (PayoffScheme::Accumulated, GameKind::Dg) => T::count(ki),
        };
        match rule {
            UpdateRule::Pc => {
                for &j in g.neighbors(i) {
                    out.push((i, j, games.clone()));
                }
            }
            UpdateRule::Bd => {
                for &j in g.neighbors(i) {
                    out.push((i, j, games.clone() / T::count(ki * g.degree(j))));
                }
            }
            UpdateRule::Db => {
                for &l in g.neighbors(i) {
                    let w = T::recip_count(g.degree(l));
                    for &j in g.neighbors(l) {
                        if j == i {
                            continue;
                        }
                        if dense[j].is_zero() {
                            touched.push(j);
                        }
                        dense[j] = dense[j].clone() + w.clone();
                    }
                }
                touched.sort_unstable();
                for &j in &touched {
                    let w = std::mem::replace(&mut dense[j], T::zero());
                    out.push((i, j, w * games.clone()));
                }
                touched.clear();
            }
        }
    }
    out
}

/// Numerator and denominator of a threshold from a solved row-major table
/// (τ for pairwise comparison and death–birth, τ̃ for birth–death).
pub fn threshold_parts<T: Scalar>(g: &Graph, condition: Condition, tau: &[T]) -> (T, T) {
    let weights = pair_weights::<T>(g, condition.rule, condition.scheme, condition.game);
    let n = g.n();
    let numerator = weights.iter().fold(T::zero(), |acc, (i, j, w)| acc + w.clone() * tau[i * n + j].clone());
    let denominator = match condition.game {
        GameKind::Pgg => {
            let payoff = PayoffWeights::<T>::new(g);
            let baselines = payoff.baselines(tau);
            weights.iter().fold(T::zero(), |acc, (i, j, w)| acc + w.clone() * payoff.upsilon(*i, *j, tau, &baselines))
        }
        GameKind::Dg => {
            // Σ_{l∈N_i} τ_jl is needed for arbitrary j, Σ_{l∈N_i} τ_il only for j = i.
            let neighbour_sum =
                |i: usize, j: usize| g.neighbors(i).iter().fold(T::zero(), |acc, &l| acc + tau[j * n + l].clone());
            let own: Vec<T> = (0..n).map(|i| neighbour_sum(i, i)).collect();
            weights.iter().fold(T::zero(), |acc, (i, j, w)| {
                let gradient = (neighbour_sum(*i, *j) - own[*i].clone()) / T::count(g.degree(*i));
                acc + w.clone() * gradient
            })
        }
    };
    (numerator, denominator)
}

fn table_for(condition: Condition) -> TauVariant {
    TauVariant::for_rule(condition.rule)
}

/// A threshold in floating point.
pub fn critical_value(g: &Graph, condition: Condition) -> Result<CriticalValue> {
    let table = match table_for(condition) {
        TauVariant::Plain => solve_tau(g)?,
        TauVariant::BirthDeath => solve_tau_bd(g)?,
    };
    let (num, den) = threshold_parts(g, condition, table.values());
    Ok(CriticalValue::from_parts(num, den))
}

/// A threshold in exact rational arithmetic.
pub fn critical_value_exact(g: &Graph, condition: Condition) -> Result<CriticalValue> {
    let table = match table_for(condition) {
        TauVariant::Plain => solve_tau_exact(g)?,
        TauVariant::BirthDeath => solve_tau_bd_exact(g)?,
    };
    let tau = integral_multiple(&table);
    let (num, den) = threshold_parts(g, condition, &tau);
    Ok(CriticalValue::from_exact(&num, &den))
}

/// Critical synergy factor r* of the public goods game.
pub fn critical_r(g: &Graph, rule: UpdateRule, scheme: PayoffScheme) -> Result<CriticalValue> {
    critical_value(g, Condition::new(GameKind::Pgg, rule, scheme))
}

/// Exact critical synergy factor r*.
pub fn critical_r_exact(g: &Graph, rule: UpdateRule, scheme: PayoffScheme) -> Result<CriticalValue> {
    critical_value_exact(g, Condition::new(GameKind::Pgg, rule, scheme))
}

/// Critical benefit-to-cost ratio (b/c)* of the donation game.
pub fn critical_bc(g: &Graph, rule: UpdateRule, scheme: PayoffScheme) -> Result<CriticalValue> {
    critical_value(g, Condition::new(GameKind::Dg, rule, scheme))
}

/// Exact critical benefit-to-cost ratio (b/c)*.
pub fn critical_bc_exact(g: &Graph, rule: UpdateRule, scheme: PayoffScheme) -> Result<CriticalValue> {
    critical_value_exact(g, Condition::new(GameKind::Dg, rule, scheme))
}

/// All twelve thresholds in [`Condition::ALL`] order, solving each
/// coalescence system once. `exact` selects rational arithmetic.
pub fn critical_values(g: &Graph, exact: bool) -> Result<Vec<CriticalValue>> {
    critical_values_for(g, &Condition::ALL, exact)
}

/// Thresholds for the given conditions, in the given order. Each
/// coalescence system is solved at most once, and only if some condition
/// needs it.
pub fn critical_values_for(g: &Graph, conditions: &[Condition], exact: bool) -> Result<Vec<CriticalValue>> {
    let needs_plain = conditions.iter().any(|c| c.rule != UpdateRule::Bd);
    let needs_bd = conditions.iter().any(|c| c.rule == UpdateRule::Bd);
    if exact {
        let plain = if needs_plain { integral_multiple(&solve_tau_exact(g)?) } else { Vec::new() };
        let bd = if needs_bd { integral_multiple(&solve_tau_bd_exact(g)?) } else { Vec::new() };
        Ok(conditions
            .iter()
            .map(|&c| {
                let tau = if c.rule == UpdateRule::Bd { &bd } else { &plain };
                let (num, den) = threshold_parts(g, c, tau);
                CriticalValue::from_exact(&num, &den)
            })
            .collect())
    } else {
        let plain = if needs_plain { solve_tau(g)?.values().to_vec() } else { Vec::new() };
        let bd = if needs_bd { solve_tau_bd(g)?.values().to_vec() } else { Vec::new() };
        Ok(conditions
            .iter()
            .map(|&c| {
                let tau = if c.rule == UpdateRule::Bd { &bd } else { &plain };
                let (num, den) = threshold_parts(g, c, tau);
                CriticalValue::from_parts(num, den)
            })
            .collect())
    }
}

/// The table multiplied by the least common denominator of its entries.
///
/// Thresholds are ratios of expressions linear in τ, so a common positive
/// factor cancels; integer entries keep the rational arithmetic cheap.
fn integral_multiple(table: &CoalescenceTable<BigRational>) -> Vec<BigRational> {
    let lcd = table.values().iter().fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
    let factor = BigRational::from_integer(lcd);
    table.values().iter().map(|v| v * &factor).collect()
}

/// τ⁽ⁿ⁾ = Σ_ij k_i p⁽ⁿ⁾_ij t_ij for a row-major N×N table (τ, Υ, …);
/// order 0 uses the identity kernel.
pub fn tau_weighted(g: &Graph, table: &[f64], order: usize) -> f64 {
    let n = g.n();
    if order == 0 {
        return (0..n).map(|i| g.degree(i) as f64 * table[i * n + i]).sum();
    }
    let kernel = walk_kernel(g, order);
    (0..n)
        .map(|i| {
            let ki = g.degree(i) as f64;
            kernel.row(order, i).iter().map(|&(j, p)| ki * p * table[i * n + j]).sum::<f64>()
        })
        .sum()
}
