//! `coopnet simulate`: Monte Carlo fixation estimates next to the theoretical threshold.

use anyhow::{bail, Result};
use clap::Args;
use coopnet_core::simulate::MAX_DELTA;
use coopnet_core::{critical_values_for, estimate, Condition, GameKind, PayoffScheme, SimConfig, UpdateRule};

use crate::output::{num, OutputArgs, PLOT_HEADER};
use crate::source::SourceArgs;

#[derive(Args, Debug)]
pub struct SimulateArgs {
    #[command(flatten)]
    pub source: SourceArgs,
    /// Update rule.
    #[arg(long)]
    pub rule: UpdateRule,
    /// Payoff scheme.
    #[arg(long, default_value = "avg")]
    pub scheme: PayoffScheme,
    /// Game.
    #[arg(long, default_value = "pgg")]
    pub game: GameKind,
    /// Synergy factors (public goods game), comma-separated.
    #[arg(long = "r", value_delimiter = ',')]
    pub synergy: Vec<f64>,
    /// Benefits (donation game), comma-separated.
    #[arg(long = "b", value_delimiter = ',')]
    pub benefit: Vec<f64>,
    /// Cost of cooperation.
    #[arg(long, default_value_t = 1.0)]
    pub cost: f64,
    /// Selection strength δ.
    #[arg(long, default_value_t = 0.01)]
    pub delta: f64,
    /// Independent replicates per parameter value.
    #[arg(long, default_value_t = 1000)]
    pub replicates: u64,
    /// Cap on Monte Carlo sweeps per replicate.
    #[arg(long, default_value_t = 400_000)]
    pub max_mcs: u64,
    /// Root seed; every parameter value reuses the same replicate streams.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[command(flatten)]
    pub output: OutputArgs,
}

pub const HEADER: [&str; 19] = [
    "source",
    "n",
    "condition",
    "game",
    "rule",
    "scheme",
    "param",
    "cost",
    "delta",
    "replicates",
    "seed",
    "mean_rho_c",
    "std_error",
    "fixation_c",
    "fixation_d",
    "unresolved",
    "neutral",
    "theory",
    "theory_category",
];

pub fn run(args: &SimulateArgs) -> Result<()> {
    if !(0.0..=MAX_DELTA).contains(&args.delta) {
        bail!("--delta must lie in [0, {MAX_DELTA}]");
    }
    let params = match args.game {
        GameKind::Pgg => &args.synergy,
        GameKind::Dg => &args.benefit,
    };
    if params.is_empty() {
        bail!("pass at least one value with {}", if args.game == GameKind::Pgg { "--r" } else { "--b" });
    }
    let lg = args.source.load_one(args.seed)?;
    let g = &lg.graph;
    let condition = Condition::new(args.game, args.rule, args.scheme);
    let theory = critical_values_for(g, &[condition], false)?.remove(0);
    let neutral = 1.0 / g.n() as f64;

    let mut out = args.output.open()?;
    out.write_record(if args.output.plotdata { &PLOT_HEADER[..] } else { &HEADER[..] })?;
    for &param in params {
        let mut config = match args.game {
            GameKind::Pgg => SimConfig::pgg(args.rule, args.scheme, param),
            GameKind::Dg => SimConfig::dg(args.rule, args.scheme, param),
        };
        config.cost = args.cost;
        config.delta = args.delta;
        config.replicates = args.replicates;
        config.max_mcs = args.max_mcs;
        config.seed = args.seed;
        let outcome = estimate(g, &config)?;
        eprintln!(
            "{} {condition} param {param}: mean ρ_C {:.6} ± {:.6} (neutral {:.6}, theory {})",
            lg.label,
            outcome.mean_rho_c,
            outcome.std_error,
            neutral,
            num(theory.value)
        );
        if args.output.plotdata {
            out.write_record([condition.to_string(), num(param), num(outcome.mean_rho_c), num(outcome.std_error)])?;
            continue;
        }
        out.write_record([
            lg.label.clone(),
            g.n().to_string(),
            condition.to_string(),
            args.game.to_string(),
            args.rule.to_string(),
            args.scheme.to_string(),
            num(param),
            num(args.cost),
            num(args.delta),
            outcome.replicates.to_string(),
            args.seed.to_string(),
            num(outcome.mean_rho_c),
            num(outcome.std_error),
            outcome.fixation_c.to_string(),
            outcome.fixation_d.to_string(),
            outcome.unresolved.to_string(),
            num(neutral),
            num(theory.value),
            theory.category.to_string(),
        ])?;
    }
    out.flush()?;
    Ok(())
}
