//! `coopnet critical`: thresholds of one graph (or every graph of a graph6 file).

use anyhow::Result;
use clap::Args;
use coopnet_core::critical_values_for;

use crate::output::{condition_fields, exact_field, num, ConditionArgs, OutputArgs, PLOT_HEADER};
use crate::source::SourceArgs;

#[derive(Args, Debug)]
pub struct CriticalArgs {
    #[command(flatten)]
    pub source: SourceArgs,
    #[command(flatten)]
    pub conditions: ConditionArgs,
    /// Solve in exact rational arithmetic (graphs up to 16 nodes).
    #[arg(long)]
    pub exact: bool,
    /// Seed for random generators.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[command(flatten)]
    pub output: OutputArgs,
}

pub const HEADER: [&str; 13] = [
    "source",
    "n",
    "edges",
    "avg_degree",
    "condition",
    "game",
    "rule",
    "scheme",
    "numerator",
    "denominator",
    "value",
    "category",
    "exact",
];

pub fn run(args: &CriticalArgs) -> Result<()> {
    let conditions = args.conditions.selected();
    let graphs = args.source.load(args.seed)?;
    let mut out = args.output.open()?;
    out.write_record(if args.output.plotdata { &PLOT_HEADER[..] } else { &HEADER[..] })?;
    for lg in &graphs {
        let g = &lg.graph;
        let values = critical_values_for(g, &conditions, args.exact)?;
        let avg_degree = 2.0 * g.edge_count() as f64 / g.n() as f64;
        for (&c, cv) in conditions.iter().zip(&values) {
            if args.output.plotdata {
                out.write_record([c.to_string(), g.n().to_string(), num(cv.value), "0".to_string()])?;
                continue;
            }
            let mut row = vec![lg.label.clone(), g.n().to_string(), g.edge_count().to_string(), num(avg_degree)];
            row.extend(condition_fields(c));
            row.extend([
                num(cv.numerator),
                num(cv.denominator),
                num(cv.value),
                cv.category.to_string(),
                exact_field(cv),
            ]);
            out.write_record(&row)?;
            if args.output.out.is_some() {
                println!(
                    "{} {c}: numerator {} denominator {} value {} ({})",
                    lg.label,
                    num(cv.numerator),
                    num(cv.denominator),
                    num(cv.value),
                    cv.category
                );
            }
        }
    }
    out.flush()?;
    Ok(())
}
