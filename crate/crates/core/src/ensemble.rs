//! Threshold statistics over random-graph ensembles.
//!
//! Sample `k` of an ensemble is generated from a seed derived from the root
//! seed and `k`, samples are processed in parallel and reduced in sample
//! order, so summaries are reproducible regardless of thread count. A sample
//! counts as a failure for a condition when its graph could not be generated,
//! its coalescence system could not be solved, or its threshold is not
//! finite; failures are tallied rather than aborting the sweep.

use rayon::prelude::*;

use crate::generators::{derive_seed, Family};
use crate::graph::metrics;
use crate::theory::{solve_tau, solve_tau_bd, threshold_parts, Condition, CriticalValue, UpdateRule};

/// Per-condition summary of one ensemble.
#[derive(Debug, Clone, PartialEq)]
pub struct EnsembleSummary {
    pub family: Family,
    pub condition: Condition,
    pub samples: u64,
    pub successes: u64,
    pub failures: u64,
    /// Mean threshold over successful samples (NaN if none).
    pub mean: f64,
    /// Sample standard deviation over successful samples (NaN if fewer than two).
    pub std_dev: f64,
    /// Mean ⟨k⟩ over generated graphs.
    pub mean_degree: f64,
    /// Mean clustering coefficient over generated graphs.
    pub mean_clustering: f64,
}

struct Sample {
    values: Vec<Option<f64>>,
    degree: Option<f64>,
    clustering: Option<f64>,
}

fn run_sample(family: &Family, seed: u64, conditions: &[Condition]) -> Sample {
    let failed = || Sample { values: vec![None; conditions.len()], degree: None, clustering: None };
    let Ok(g) = family.generate(seed) else {
        return failed();
    };
    let m = metrics(&g);
    let needs_plain = conditions.iter().any(|c| c.rule != UpdateRule::Bd);
    let needs_bd = conditions.iter().any(|c| c.rule == UpdateRule::Bd);
    let plain = if needs_plain { solve_tau(&g).ok() } else { None };
    let bd = if needs_bd { solve_tau_bd(&g).ok() } else { None };
    let values = conditions
        .iter()
        .map(|&c| {
            let table = if c.rule == UpdateRule::Bd { bd.as_ref() } else { plain.as_ref() }?;
            let (num, den) = threshold_parts(&g, c, table.values());
            let v = CriticalValue::from_parts(num, den).value;
            v.is_finite().then_some(v)
        })
        .collect();
    Sample { values, degree: Some(m.avg_degree), clustering: Some(m.clustering) }
}

/// Generates `samples` graphs of `family` and summarises each condition.
pub fn run_ensemble(family: &Family, seed: u64, samples: u64, conditions: &[Condition]) -> Vec<EnsembleSummary> {
    let results: Vec<Sample> =
        (0..samples).into_par_iter().map(|k| run_sample(family, derive_seed(seed, k), conditions)).collect();
    let mean_of = |xs: &[f64]| if xs.is_empty() { f64::NAN } else { xs.iter().sum::<f64>() / xs.len() as f64 };
    let degrees: Vec<f64> = results.iter().filter_map(|s| s.degree).collect();
    let clustering: Vec<f64> = results.iter().filter_map(|s| s.clustering).collect();
    conditions
        .iter()
        .enumerate()
        .map(|(c, &condition)| {
            let ok: Vec<f64> = results.iter().filter_map(|s| s.values[c]).collect();
            let mean = mean_of(&ok);
            let std_dev = if ok.len() > 1 {
                (ok.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / (ok.len() - 1) as f64).sqrt()
            } else {
                f64::NAN
            };
            EnsembleSummary {
                family: family.clone(),
                condition,
                samples,
                successes: ok.len() as u64,
                failures: samples - ok.len() as u64,
                mean,
                std_dev,
                mean_degree: mean_of(&degrees),
                mean_clustering: mean_of(&clustering),
            }
        })
        .collect()
}
