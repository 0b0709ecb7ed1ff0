//! Agent-based Monte Carlo simulation of strategy evolution.
//!
//! A replicate starts from one uniformly placed cooperator among defectors
//! and performs elementary updates — N per Monte Carlo sweep — until one
//! strategy fixes or the sweep cap is reached; its result is the final
//! cooperator fraction. Selection enters through payoffs `f` as the Fermi
//! imitation probability `1 / (1 + e^{−δ(f_j − f_i)})` (pairwise comparison)
//! or as fitness `F = e^{δ f}` (death–birth, birth–death). With `δ = 0` the
//! dynamics never evaluate payoffs.
//!
//! Replicate `k` draws from its own random stream derived from the seed, and
//! results are reduced in replicate order, so an estimate does not depend on
//! how many worker threads ran it.

mod payoff;

pub use payoff::{payoff_dg, payoff_pgg};

use rand::Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::generators::stream_rng;
use crate::graph::Graph;
use crate::theory::{GameKind, PayoffScheme, UpdateRule};

/// Largest selection strength accepted (the protocol is weak selection).
pub const MAX_DELTA: f64 = 0.1;

/// Monte Carlo protocol parameters.
#[derive(Debug, Clone, PartialEq)]
pub struct SimConfig {
    /// Selection strength δ ∈ [0, 0.1].
    pub delta: f64,
    /// Cost of cooperation c.
    pub cost: f64,
    /// Game played.
    pub game: GameKind,
    /// Synergy factor r (public goods game).
    pub synergy: f64,
    /// Benefit b (donation game).
    pub benefit: f64,
    /// Payoff combination.
    pub scheme: PayoffScheme,
    /// Update rule.
    pub rule: UpdateRule,
    /// Cap on full Monte Carlo sweeps per replicate.
    pub max_mcs: u64,
    /// Number of independent replicates.
    pub replicates: u64,
    /// Root seed of all random streams.
    pub seed: u64,
}

impl SimConfig {
    /// Public goods game with synergy factor `r` and default protocol settings.
    pub fn pgg(rule: UpdateRule, scheme: PayoffScheme, r: f64) -> Self {
        SimConfig {
            delta: 0.01,
            cost: 1.0,
            game: GameKind::Pgg,
            synergy: r,
            benefit: 0.0,
            scheme,
            rule,
            max_mcs: 400_000,
            replicates: 1,
            seed: 0,
        }
    }

    /// Donation game with benefit `b` (cost 1) and default protocol settings.
    pub fn dg(rule: UpdateRule, scheme: PayoffScheme, b: f64) -> Self {
        SimConfig { game: GameKind::Dg, synergy: 0.0, benefit: b, ..SimConfig::pgg(rule, scheme, 0.0) }
    }

    /// Checks the parameter ranges.
    pub fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(Error::InvalidParameter(m));
        if !(0.0..=MAX_DELTA).contains(&self.delta) {
            return bad(format!("selection strength must lie in [0, {MAX_DELTA}], got {}", self.delta));
        }
        if self.replicates < 1 || self.max_mcs < 1 {
            return bad("replicates and max_mcs must be at least 1".into());
        }
        if !(self.cost.is_finite() && self.cost > 0.0) {
            return bad(format!("cost must be positive, got {}", self.cost));
        }
        match self.game {
            GameKind::Pgg if !(self.synergy.is_finite() && self.synergy >= 0.0) => {
                bad(format!("synergy factor must be finite and non-negative, got {}", self.synergy))
            }
            GameKind::Dg if !(self.benefit.is_finite() && self.benefit > self.cost) => {
                bad(format!("donation game needs b > c > 0, got b = {}, c = {}", self.benefit, self.cost))
            }
            _ => Ok(()),
        }
    }
}

/// How a replicate ended.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Fixation {
    Cooperators,
    Defectors,
    /// Sweep cap reached with both strategies present.
    Unresolved,
}

/// Result of one replicate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ReplicateOutcome {
    /// Final cooperator fraction.
    pub rho_c: f64,
    pub fixation: Fixation,
    /// Sweeps performed (the last one possibly partial).
    pub sweeps: u64,
}

/// Aggregate over replicates.
#[derive(Debug, Clone, PartialEq)]
pub struct SimOutcome {
    pub replicates: u64,
    /// Mean final cooperator fraction.
    pub mean_rho_c: f64,
    /// Standard error of `mean_rho_c`.
    pub std_error: f64,
    pub fixation_c: u64,
    pub fixation_d: u64,
    pub unresolved: u64,
}

impl SimOutcome {
    /// Aggregates replicate results in the given order.
    pub fn from_replicates(results: &[ReplicateOutcome]) -> Self {
        let count = results.len() as u64;
        let mean = results.iter().map(|r| r.rho_c).sum::<f64>() / count as f64;
        let std_error = if count > 1 {
            let var = results.iter().map(|r| (r.rho_c - mean).powi(2)).sum::<f64>() / (count - 1) as f64;
            (var / count as f64).sqrt()
        } else {
            0.0
        };
        let tally = |f: Fixation| results.iter().filter(|r| r.fixation == f).count() as u64;
        SimOutcome {
            replicates: count,
            mean_rho_c: mean,
            std_error,
            fixation_c: tally(Fixation::Cooperators),
            fixation_d: tally(Fixation::Defectors),
            unresolved: tally(Fixation::Unresolved),
        }
    }

    /// Standardised distance of the mean from `baseline`.
    pub fn z_score(&self, baseline: f64) -> f64 {
        (self.mean_rho_c - baseline) / self.std_error
    }
}

/// Mutable population state with incrementally maintained counts.
pub struct Population<'a> {
    g: &'a Graph,
    config: &'a SimConfig,
    x: Vec<u8>,
    /// Cooperators in each group {l} ∪ N_l.
    coop_in_group: Vec<usize>,
    cooperators: usize,
    /// e^{δ f} per node; maintained only for birth–death with δ > 0.
    fitness: Vec<f64>,
    /// Payoff evaluations performed so far.
    payoff_calls: u64,
}

impl<'a> Population<'a> {
    /// Population with the given strategies (1 = cooperate).
    pub fn new(g: &'a Graph, config: &'a SimConfig, x: Vec<u8>) -> Self {
        assert_eq!(x.len(), g.n());
        let coop_in_group =
            (0..g.n()).map(|l| x[l] as usize + g.neighbors(l).iter().map(|&m| x[m] as usize).sum::<usize>()).collect();
        let cooperators = x.iter().map(|&v| v as usize).sum();
        let mut population =
            Population { g, config, x, coop_in_group, cooperators, fitness: Vec::new(), payoff_calls: 0 };
        if population.tracks_fitness() {
            population.fitness = (0..g.n()).map(|i| population.fitness_of(i)).collect();
        }
        population
    }

    fn tracks_fitness(&self) -> bool {
        self.config.rule == UpdateRule::Bd && self.config.delta > 0.0
    }

    /// Current strategies.
    pub fn strategies(&self) -> &[u8] {
        &self.x
    }

    /// Number of cooperators.
    pub fn cooperators(&self) -> usize {
        self.cooperators
    }

    /// How many payoffs have been evaluated.
    pub fn payoff_calls(&self) -> u64 {
        self.payoff_calls
    }

    /// Payoff of node `i` in the current state.
    pub fn payoff(&mut self, i: usize) -> f64 {
        self.payoff_calls += 1;
        let c = &self.config;
        match c.game {
            GameKind::Pgg => {
                payoff::pgg_payoff_at(self.g, &self.x, &self.coop_in_group, c.scheme, &c.synergy, &c.cost, i)
            }
            GameKind::Dg => {
                let donors = self.coop_in_group[i] - self.x[i] as usize;
                payoff::dg_payoff_at(self.g.degree(i), self.x[i], donors, c.scheme, &c.benefit, &c.cost)
            }
        }
    }

    fn fitness_of(&mut self, i: usize) -> f64 {
        (self.config.delta * self.payoff(i)).exp()
    }

    /// Sets node `v` to strategy `s`, updating the counts (and fitness
    /// within reach of the change).
    fn set(&mut self, v: usize, s: u8) {
        if self.x[v] == s {
            return;
        }
        self.x[v] = s;
        let add = s == 1;
        let bump = |count: &mut usize| {
            if add {
                *count += 1
            } else {
                *count -= 1
            }
        };
        bump(&mut self.cooperators);
        bump(&mut self.coop_in_group[v]);
        for &l in self.g.neighbors(v) {
            bump(&mut self.coop_in_group[l]);
        }
        if self.tracks_fitness() {
            let g = self.g;
            // Public goods payoffs reach two hops (a neighbour's group
            // changed); donation game payoffs one hop.
            let two_hops = self.config.game == GameKind::Pgg;
            let v_fit = self.fitness_of(v);
            self.fitness[v] = v_fit;
            for &l in g.neighbors(v) {
                let f = self.fitness_of(l);
                self.fitness[l] = f;
                if two_hops {
                    for &m in g.neighbors(l) {
                        let f = self.fitness_of(m);
                        self.fitness[m] = f;
                    }
                }
            }
        }
    }

    /// One elementary update; at most one node changes strategy.
    pub fn step<R: Rng + ?Sized>(&mut self, rng: &mut R) {
        let g = self.g;
        let n = g.n();
        let delta = self.config.delta;
        match self.config.rule {
            UpdateRule::Pc => {
                let i = rng.random_range(0..n);
                let nb = g.neighbors(i);
                let j = nb[rng.random_range(0..nb.len())];
                if self.x[i] == self.x[j] {
                    return;
                }
                let p = if delta == 0.0 {
                    0.5
                } else {
                    let diff = self.payoff(j) - self.payoff(i);
                    1.0 / (1.0 + (-delta * diff).exp())
                };
                if rng.random::<f64>() < p {
                    self.set(i, self.x[j]);
                }
            }
            UpdateRule::Db => {
                let i = rng.random_range(0..n);
                let nb = g.neighbors(i);
                let donors = self.coop_in_group[i] - self.x[i] as usize;
                if donors == 0 || donors == nb.len() {
                    self.set(i, u8::from(donors > 0));
                    return;
                }
                // Probability that a cooperating neighbour wins the slot.
                let p = if delta == 0.0 {
                    donors as f64 / nb.len() as f64
                } else {
                    let (mut coop, mut total) = (0.0, 0.0);
                    for &j in nb {
                        let f = (delta * self.payoff(j)).exp();
                        total += f;
                        if self.x[j] == 1 {
                            coop += f;
                        }
                    }
                    coop / total
                };
                let s = u8::from(rng.random::<f64>() < p);
                self.set(i, s);
            }
            UpdateRule::Bd => {
                let i = if delta == 0.0 {
                    rng.random_range(0..n)
                } else {
                    let total: f64 = self.fitness.iter().sum();
                    let mut target = rng.random::<f64>() * total;
                    let mut chosen = n - 1;
                    for (k, &f) in self.fitness.iter().enumerate() {
                        if target < f {
                            chosen = k;
                            break;
                        }
                        target -= f;
                    }
                    chosen
                };
                let nb = g.neighbors(i);
                let j = nb[rng.random_range(0..nb.len())];
                self.set(j, self.x[i]);
            }
        }
    }

    fn fixed(&self) -> Option<Fixation> {
        if self.cooperators == 0 {
            Some(Fixation::Defectors)
        } else if self.cooperators == self.g.n() {
            Some(Fixation::Cooperators)
        } else {
            None
        }
    }
}

/// Runs one replicate from a single random cooperator.
pub fn run_replicate<R: Rng + ?Sized>(g: &Graph, config: &SimConfig, rng: &mut R) -> ReplicateOutcome {
    run_replicate_traced(g, config, rng, |_, _| {})
}

/// [`run_replicate`] reporting the cooperator fraction after every
/// completed sweep to `trace(sweep, rho_c)`.
pub fn run_replicate_traced<R: Rng + ?Sized>(
    g: &Graph,
    config: &SimConfig,
    rng: &mut R,
    mut trace: impl FnMut(u64, f64),
) -> ReplicateOutcome {
    let n = g.n();
    let mut x = vec![0u8; n];
    x[rng.random_range(0..n)] = 1;
    let mut population = Population::new(g, config, x);
    for sweep in 1..=config.max_mcs {
        for _ in 0..n {
            population.step(rng);
            if let Some(fixation) = population.fixed() {
                let rho_c = population.cooperators as f64 / n as f64;
                trace(sweep, rho_c);
                return ReplicateOutcome { rho_c, fixation, sweeps: sweep };
            }
        }
        trace(sweep, population.cooperators as f64 / n as f64);
    }
    ReplicateOutcome {
        rho_c: population.cooperators as f64 / n as f64,
        fixation: Fixation::Unresolved,
        sweeps: config.max_mcs,
    }
}

/// Runs all replicates in parallel and aggregates them in replicate order.
pub fn estimate(g: &Graph, config: &SimConfig) -> Result<SimOutcome> {
    g.validate_for_analysis()?;
    config.validate()?;
    let results: Vec<ReplicateOutcome> = (0..config.replicates)
        .into_par_iter()
        .map(|k| run_replicate(g, config, &mut stream_rng(config.seed, k)))
        .collect();
    Ok(SimOutcome::from_replicates(&results))
}
