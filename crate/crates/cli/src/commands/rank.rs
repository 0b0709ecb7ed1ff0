//! `coopnet rank`: orders census graphs by threshold and looks up where a
//! named structure falls.

use std::collections::BTreeMap;
use std::path::PathBuf;

use anyhow::{bail, Context, Result};
use clap::Args;
use coopnet_core::rank::{find, rank_entries, RankedEntry};
use coopnet_core::{canonical_graph6, Condition, Error, GameKind, PayoffScheme};

use crate::output::{num, OutputArgs, PLOT_HEADER};
use crate::source::parse_graph_arg;

#[derive(Args, Debug)]
pub struct RankArgs {
    /// Census records file written by `coopnet census`.
    #[arg(long, value_name = "PATH")]
    pub input: Option<PathBuf>,
    /// Conditions to rank, e.g. `pgg_pc_avg` (default: the three averaged public goods conditions).
    #[arg(long, value_delimiter = ',')]
    pub condition: Vec<Condition>,
    /// Rank only graphs of this size (default: the size of `--graph` if given, otherwise all sizes).
    #[arg(long = "n", value_name = "N")]
    pub size: Option<usize>,
    /// Report only this graph (generator spec such as `star:7`, or graph6).
    #[arg(long, value_name = "GRAPH")]
    pub graph: Option<String>,
    /// Keep only the best K entries of each ranking.
    #[arg(long, value_name = "K", conflicts_with = "bottom")]
    pub top: Option<usize>,
    /// Keep only the worst K entries of each ranking.
    #[arg(long, value_name = "K")]
    pub bottom: Option<usize>,
    #[command(flatten)]
    pub output: OutputArgs,
}

pub const HEADER: [&str; 8] = ["condition", "rank", "total", "canonical_id", "n", "value", "percentile", "category"];

struct Row {
    id: String,
    n: usize,
    value: f64,
    category: String,
}

pub fn run(args: &RankArgs) -> Result<()> {
    let path = args.input.as_ref().ok_or_else(|| Error::MissingInput("pass the census records with --input".into()))?;
    let conditions = if args.condition.is_empty() {
        coopnet_core::UpdateRule::ALL
            .iter()
            .map(|&r| Condition::new(GameKind::Pgg, r, PayoffScheme::Averaged))
            .collect()
    } else {
        args.condition.clone()
    };
    let lookup = match &args.graph {
        Some(text) => {
            let g = parse_graph_arg(text)?;
            Some((canonical_graph6(&g)?, g.n()))
        }
        None => None,
    };
    let size = args.size.or(lookup.as_ref().map(|(_, n)| *n));
    let rows = read_records(path, &conditions, size)?;

    let mut out = args.output.open()?;
    out.write_record(if args.output.plotdata { &PLOT_HEADER[..] } else { &HEADER[..] })?;
    for c in &conditions {
        let rows = rows.get(c).map(Vec::as_slice).unwrap_or_default();
        if rows.is_empty() {
            bail!(Error::MissingInput(format!("no census rows for {c}{}", size_note(size))));
        }
        let ranking = rank_entries(rows.iter().map(|r| (r.id.clone(), r.value)));
        let meta: BTreeMap<&str, &Row> = rows.iter().map(|r| (r.id.as_str(), r)).collect();
        let selected: Vec<&RankedEntry> = match &lookup {
            Some((id, _)) => vec![find(&ranking, id)
                .ok_or_else(|| Error::MissingInput(format!("graph {id} is not in the census{}", size_note(size))))?],
            None => match (args.top, args.bottom) {
                (Some(k), _) => ranking.iter().take(k).collect(),
                (None, Some(k)) => ranking.iter().skip(ranking.len().saturating_sub(k)).collect(),
                (None, None) => ranking.iter().collect(),
            },
        };
        for e in selected {
            let row = meta[e.canonical_id.as_str()];
            if args.output.plotdata {
                out.write_record([c.to_string(), e.rank.to_string(), num(e.value), "0".to_string()])?;
            } else {
                out.write_record([
                    c.to_string(),
                    e.rank.to_string(),
                    ranking.len().to_string(),
                    e.canonical_id.clone(),
                    row.n.to_string(),
                    num(e.value),
                    num(e.percentile),
                    row.category.clone(),
                ])?;
            }
            if lookup.is_some() {
                eprintln!("{c}: rank {} of {} (top {:.2}%)", e.rank, ranking.len(), e.percentile);
            }
        }
    }
    out.flush()?;
    Ok(())
}

fn size_note(size: Option<usize>) -> String {
    size.map(|n| format!(" at n = {n}")).unwrap_or_default()
}

fn read_records(
    path: &PathBuf,
    conditions: &[Condition],
    size: Option<usize>,
) -> Result<BTreeMap<Condition, Vec<Row>>> {
    let mut reader =
        csv::Reader::from_path(path).map_err(|e| Error::MissingInput(format!("{}: {e}", path.display())))?;
    let headers = reader.headers()?.clone();
    let column = |name: &str| {
        headers.iter().position(|h| h == name).with_context(|| format!("{}: no '{name}' column", path.display()))
    };
    let (id_col, n_col, cond_col, value_col, cat_col) =
        (column("canonical_id")?, column("n")?, column("condition")?, column("value")?, column("category")?);
    let mut rows: BTreeMap<Condition, Vec<Row>> = BTreeMap::new();
    for (line, record) in reader.records().enumerate() {
        let record = record?;
        let context = || format!("{} record {}", path.display(), line + 1);
        let condition: Condition = record[cond_col].parse().with_context(context)?;
        if !conditions.contains(&condition) {
            continue;
        }
        let n: usize = record[n_col].parse().with_context(context)?;
        if size.is_some_and(|s| s != n) || record[cat_col] == *"failed" {
            continue;
        }
        let value: f64 = record[value_col].parse().with_context(context)?;
        rows.entry(condition).or_default().push(Row {
            id: record[id_col].to_string(),
            n,
            value,
            category: record[cat_col].to_string(),
        });
    }
    Ok(rows)
}
