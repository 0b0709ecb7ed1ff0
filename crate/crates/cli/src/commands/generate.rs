//! `coopnet gen`: writes generated graphs or the atlas of connected graphs.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;

use anyhow::{bail, Context, Result};
use clap::{Args, ValueEnum};
use coopnet_core::generators::{atlas, encode_graph6, MAX_ATLAS_N};
use coopnet_core::{write_edge_list, Family, GeneratorSpec};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    /// Edge list, one `a b` pair per line.
    Edges,
    /// graph6, one graph per line.
    Graph6,
}

#[derive(Args, Debug)]
pub struct GenArgs {
    /// Generator spec, e.g. `ws:100:2:0.1`.
    #[arg(long = "gen", value_name = "FAMILY:PARAMS", conflicts_with = "atlas")]
    pub generator: Option<Family>,
    /// Write every connected graph on N nodes (graph6, canonical order).
    #[arg(long, value_name = "N")]
    pub atlas: Option<usize>,
    /// Number of samples of a random family (graph6 output when more than one).
    #[arg(long, default_value_t = 1)]
    pub count: u64,
    /// Seed of random families; sample k uses a seed derived from it.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Output format (default: edge list for one graph, graph6 otherwise).
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// Output file (standard output when omitted).
    #[arg(long, value_name = "PATH")]
    pub out: Option<PathBuf>,
}

pub fn run(args: &GenArgs) -> Result<()> {
    let graphs = match (&args.generator, args.atlas) {
        (Some(family), None) => {
            let spec = GeneratorSpec::new(family.clone(), args.seed);
            if args.count == 1 {
                vec![spec.generate()?]
            } else {
                (0..args.count).map(|k| spec.sample(k)).collect::<coopnet_core::Result<_>>()?
            }
        }
        (None, Some(n)) => {
            if n > MAX_ATLAS_N {
                bail!("atlas generation supports n ≤ {MAX_ATLAS_N}");
            }
            let graphs = atlas(n)?;
            eprintln!("{} connected graphs on {n} nodes", graphs.len());
            graphs
        }
        _ => bail!("pass either --gen or --atlas"),
    };
    let format = args.format.unwrap_or(if graphs.len() == 1 { Format::Edges } else { Format::Graph6 });
    if format == Format::Edges && graphs.len() != 1 {
        bail!("edge-list output holds a single graph; use --format graph6");
    }
    let mut sink: Box<dyn Write> = match &args.out {
        Some(p) => Box::new(BufWriter::new(File::create(p).with_context(|| format!("creating {}", p.display()))?)),
        None => Box::new(BufWriter::new(io::stdout())),
    };
    for g in &graphs {
        match format {
            Format::Edges => sink.write_all(write_edge_list(g).as_bytes())?,
            Format::Graph6 => writeln!(sink, "{}", encode_graph6(g))?,
        }
    }
    sink.flush()?;
    Ok(())
}
