//! `coopnet empirical`: thresholds of an observed network, normalised by ⟨k⟩.

use anyhow::Result;
use clap::Args;
use coopnet_core::critical_values_for;

use crate::output::{condition_fields, num, ConditionArgs, OutputArgs, PLOT_HEADER};
use crate::source::SourceArgs;

#[derive(Args, Debug)]
pub struct EmpiricalArgs {
    #[command(flatten)]
    pub source: SourceArgs,
    #[command(flatten)]
    pub conditions: ConditionArgs,
    /// Solve in exact rational arithmetic (graphs up to 16 nodes).
    #[arg(long)]
    pub exact: bool,
    #[command(flatten)]
    pub output: OutputArgs,
}

pub const HEADER: [&str; 11] =
    ["source", "n", "edges", "avg_degree", "condition", "game", "rule", "scheme", "value", "normalized", "category"];

pub fn run(args: &EmpiricalArgs) -> Result<()> {
    let conditions = args.conditions.selected();
    let graphs = args.source.load(0)?;
    let mut out = args.output.open()?;
    out.write_record(if args.output.plotdata { &PLOT_HEADER[..] } else { &HEADER[..] })?;
    for lg in &graphs {
        let g = &lg.graph;
        let avg_degree = 2.0 * g.edge_count() as f64 / g.n() as f64;
        let values = critical_values_for(g, &conditions, args.exact)?;
        for (k, (&c, cv)) in conditions.iter().zip(&values).enumerate() {
            let normalized = cv.value / avg_degree;
            if args.output.plotdata {
                out.write_record([lg.label.clone(), k.to_string(), num(normalized), "0".to_string()])?;
                continue;
            }
            let mut row = vec![lg.label.clone(), g.n().to_string(), g.edge_count().to_string(), num(avg_degree)];
            row.extend(condition_fields(c));
            row.extend([num(cv.value), num(normalized), cv.category.to_string()]);
            out.write_record(&row)?;
        }
    }
    out.flush()?;
    Ok(())
}
