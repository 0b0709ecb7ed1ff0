//! `coopnet census`: every threshold of every connected graph of the
//! requested sizes, plus category tallies.

use std::path::PathBuf;

use anyhow::{bail, Context, Result};
use clap::Args;
use coopnet_core::census::{census_graphs, census_records};
use coopnet_core::generators::parse_graph6_lines;
use coopnet_core::{Category, CategoryTable, Condition, Error, Graph, GraphRecord};

use crate::output::{condition_fields, exact_field, num, open, OutputArgs, PLOT_HEADER};

#[derive(Args, Debug)]
pub struct CensusArgs {
    /// Graph sizes: a single size, a range `3-8`, or a comma list.
    #[arg(long = "n", value_name = "SIZES", value_parser = parse_sizes)]
    pub sizes: Sizes,
    /// graph6 atlas supplying graphs of sizes that are not enumerated internally (n ≥ 8).
    #[arg(long, value_name = "PATH")]
    pub atlas: Option<PathBuf>,
    /// Solve in exact rational arithmetic; categories are then decided exactly.
    #[arg(long)]
    pub exact: bool,
    /// Also write the category table (per size and overall) to this file.
    #[arg(long, value_name = "PATH")]
    pub summary: Option<PathBuf>,
    #[command(flatten)]
    pub output: OutputArgs,
}

/// Parsed `--n` value.
#[derive(Debug, Clone)]
pub struct Sizes(pub Vec<usize>);

fn parse_sizes(text: &str) -> std::result::Result<Sizes, String> {
    let bad = || format!("cannot parse sizes from '{text}'");
    let mut sizes = Vec::new();
    for part in text.split(',') {
        match part.split_once('-') {
            Some((a, b)) => {
                let (a, b): (usize, usize) =
                    (a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?);
                if a > b {
                    return Err(bad());
                }
                sizes.extend(a..=b);
            }
            None => sizes.push(part.trim().parse().map_err(|_| bad())?),
        }
    }
    sizes.sort_unstable();
    sizes.dedup();
    Ok(Sizes(sizes))
}

pub const HEADER: [&str; 14] = [
    "canonical_id",
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
    "error",
];

pub const SUMMARY_HEADER: [&str; 9] =
    ["scope", "condition", "game", "rule", "scheme", "category", "count", "total", "percent"];

pub fn run(args: &CensusArgs) -> Result<()> {
    let atlas: Vec<Graph> = match &args.atlas {
        Some(path) => {
            let text =
                std::fs::read_to_string(path).map_err(|e| Error::MissingInput(format!("{}: {e}", path.display())))?;
            parse_graph6_lines(&text).with_context(|| format!("reading {}", path.display()))?
        }
        None => Vec::new(),
    };
    if args.sizes.0.is_empty() {
        bail!("no sizes requested");
    }
    let mut all = Vec::new();
    let mut per_size = Vec::new();
    for &n in &args.sizes.0 {
        let from_atlas: Vec<Graph> = atlas.iter().filter(|g| g.n() == n).cloned().collect();
        let graphs =
            match if from_atlas.is_empty() { census_graphs(n, None) } else { census_graphs(n, Some(&from_atlas)) } {
                Err(e @ Error::MissingAtlas) => {
                    bail!("{e}; create one with `coopnet gen --atlas 8 --out atlas8.g6` and pass --atlas atlas8.g6")
                }
                other => other.with_context(|| format!("census at n = {n}"))?,
            };
        let records = census_records(&graphs, args.exact)?;
        eprintln!("n = {n}: {} connected graphs", records.len());
        per_size.push((n, CategoryTable::from_records(&records)));
        all.extend(records);
    }
    let overall = CategoryTable::from_records(&all);
    print_summary(&overall);

    let mut out = args.output.open()?;
    if args.output.plotdata {
        out.write_record(PLOT_HEADER)?;
        for c in Condition::ALL {
            for (k, cat) in Category::ALL.iter().enumerate() {
                out.write_record([format!("{c}"), k.to_string(), num(overall.percent(c, *cat)), "0".to_string()])?;
            }
        }
    } else {
        out.write_record(HEADER)?;
        for record in &all {
            write_record(&mut out, record)?;
        }
    }
    out.flush()?;

    if let Some(path) = &args.summary {
        let mut summary = open(Some(path))?;
        summary.write_record(SUMMARY_HEADER)?;
        for (n, table) in &per_size {
            write_table(&mut summary, &format!("n={n}"), table)?;
        }
        write_table(&mut summary, "all", &overall)?;
        summary.flush()?;
    }
    Ok(())
}

fn write_record(out: &mut crate::output::CsvOut, record: &GraphRecord) -> Result<()> {
    let prefix = [record.canonical_id.clone(), record.n.to_string(), record.edges.to_string(), num(record.avg_degree)];
    for c in Condition::ALL {
        let mut row: Vec<String> = prefix.to_vec();
        row.extend(condition_fields(c));
        match &record.values {
            Ok(values) => {
                let cv = &values[c.index()];
                row.extend([
                    num(cv.numerator),
                    num(cv.denominator),
                    num(cv.value),
                    cv.category.to_string(),
                    exact_field(cv),
                    String::new(),
                ]);
            }
            Err(cause) => {
                row.extend([
                    String::new(),
                    String::new(),
                    String::new(),
                    "failed".into(),
                    String::new(),
                    cause.clone(),
                ]);
            }
        }
        out.write_record(&row)?;
    }
    Ok(())
}

fn write_table(out: &mut crate::output::CsvOut, scope: &str, table: &CategoryTable) -> Result<()> {
    for c in Condition::ALL {
        for cat in Category::ALL {
            let mut row = vec![scope.to_string()];
            row.extend(condition_fields(c));
            row.extend([
                cat.to_string(),
                table.count(c, cat).to_string(),
                table.total.to_string(),
                num(table.percent(c, cat)),
            ]);
            out.write_record(&row)?;
        }
    }
    Ok(())
}

fn print_summary(table: &CategoryTable) {
    eprintln!("{} graphs ({} failed)", table.total, table.failed);
    eprintln!("{:<12} {:>10} {:>10} {:>10}", "condition", "supports%", "strict%", "never%");
    for c in Condition::ALL {
        eprintln!(
            "{:<12} {:>10.2} {:>10.2} {:>10.2}",
            c.to_string(),
            table.percent(c, Category::Supports),
            table.percent(c, Category::Strict),
            table.percent(c, Category::Never)
        );
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes_accept_ranges_and_lists() {
        assert_eq!(parse_sizes("3-5").unwrap().0, vec![3, 4, 5]);
        assert_eq!(parse_sizes("8,3,3").unwrap().0, vec![3, 8]);
        assert!(parse_sizes("5-3").is_err());
        assert!(parse_sizes("x").is_err());
    }
}
