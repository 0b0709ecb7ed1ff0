//! `coopnet ensemble`: mean thresholds over random-graph samples, one row
//! per grid point and condition.

use anyhow::{bail, Context, Result};
use clap::Args;
use coopnet_core::ensemble::run_ensemble;
use coopnet_core::Family;

use crate::output::{condition_fields, num, ConditionArgs, OutputArgs, PLOT_HEADER};

#[derive(Args, Debug)]
pub struct EnsembleArgs {
    /// Generator spec; `{}` is replaced by each `--values` entry. Repeat for several grid points.
    #[arg(long = "gen", value_name = "FAMILY:PARAMS", required = true)]
    pub generators: Vec<String>,
    /// Values substituted for `{}` in the generator specs.
    #[arg(long, value_delimiter = ',')]
    pub values: Vec<String>,
    /// Graphs sampled per grid point.
    #[arg(long, default_value_t = 50)]
    pub samples: u64,
    /// Root seed; every grid point uses the same sample seeds.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[command(flatten)]
    pub conditions: ConditionArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

pub const HEADER: [&str; 14] = [
    "family",
    "param",
    "condition",
    "game",
    "rule",
    "scheme",
    "samples",
    "successes",
    "failures",
    "mean",
    "std_dev",
    "mean_degree",
    "mean_clustering",
    "seed",
];

/// Expands templates against the value list into `(param, family)` grid points.
fn grid(templates: &[String], values: &[String]) -> Result<Vec<(String, Family)>> {
    let mut points = Vec::new();
    for template in templates {
        if template.contains("{}") {
            if values.is_empty() {
                bail!("'{template}' has a {{}} placeholder but no --values were given");
            }
            for v in values {
                let spec = template.replace("{}", v);
                points.push((v.clone(), spec.parse().with_context(|| format!("generator '{spec}'"))?));
            }
        } else {
            points.push((String::new(), template.parse().with_context(|| format!("generator '{template}'"))?));
        }
    }
    Ok(points)
}

pub fn run(args: &EnsembleArgs) -> Result<()> {
    let conditions = args.conditions.selected();
    let points = grid(&args.generators, &args.values)?;
    let mut out = args.output.open()?;
    out.write_record(if args.output.plotdata { &PLOT_HEADER[..] } else { &HEADER[..] })?;
    for (index, (param, family)) in points.iter().enumerate() {
        let summaries = run_ensemble(family, args.seed, args.samples, &conditions);
        for s in &summaries {
            if args.output.plotdata {
                let x = param.parse::<f64>().map(num).unwrap_or_else(|_| index.to_string());
                out.write_record([s.condition.to_string(), x, num(s.mean), num(s.std_dev)])?;
                continue;
            }
            let mut row = vec![family.to_string(), param.clone()];
            row.extend(condition_fields(s.condition));
            row.extend([
                s.samples.to_string(),
                s.successes.to_string(),
                s.failures.to_string(),
                num(s.mean),
                num(s.std_dev),
                num(s.mean_degree),
                num(s.mean_clustering),
                args.seed.to_string(),
            ]);
            out.write_record(&row)?;
        }
        eprintln!("{family}: {} samples", args.samples);
    }
    out.flush()?;
    Ok(())
}
