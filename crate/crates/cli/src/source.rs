//! Where the graphs of a command come from: a generator spec or a file.

use std::fs;
use std::path::PathBuf;

use anyhow::{bail, Context, Result};
use clap::Args;
use coopnet_core::generators::parse_graph6_lines;
use coopnet_core::{parse_edge_list, Error, Family, Graph};

/// Graph source flags shared by the analysis commands.
#[derive(Args, Debug, Clone)]
pub struct SourceArgs {
    /// Generator spec, e.g. `star:9`, `lattice:5:vn`, `er:100:0.05`.
    #[arg(long = "gen", value_name = "FAMILY:PARAMS", conflicts_with = "input")]
    pub generator: Option<Family>,
    /// Edge-list or graph6 file. Files whose first data line contains no
    /// whitespace are read as graph6 (one graph per line).
    #[arg(long, value_name = "PATH")]
    pub input: Option<PathBuf>,
    /// Declared node count of an edge-list file (nodes without edges are then an error).
    #[arg(long, value_name = "N")]
    pub nodes: Option<usize>,
    /// Analyse the largest connected component of a disconnected input.
    #[arg(long)]
    pub largest_component: bool,
}

/// A graph together with the label used for it in output rows.
pub struct LabelledGraph {
    pub label: String,
    pub graph: Graph,
}

impl SourceArgs {
    /// Loads and validates the graphs; `seed` drives random generators.
    pub fn load(&self, seed: u64) -> Result<Vec<LabelledGraph>> {
        let raw = match (&self.generator, &self.input) {
            (Some(family), None) => {
                let graph = family.generate(seed).with_context(|| format!("generating {family}"))?;
                vec![LabelledGraph { label: family.to_string(), graph }]
            }
            (None, Some(path)) => read_graph_file(path, self.nodes)?,
            _ => bail!(Error::MissingInput("pass either --gen or --input".into())),
        };
        raw.into_iter().map(|lg| self.prepare(lg)).collect()
    }

    /// Loads exactly one graph.
    pub fn load_one(&self, seed: u64) -> Result<LabelledGraph> {
        let mut graphs = self.load(seed)?;
        if graphs.len() != 1 {
            bail!("expected a single graph, the input holds {}", graphs.len());
        }
        Ok(graphs.remove(0))
    }

    fn prepare(&self, lg: LabelledGraph) -> Result<LabelledGraph> {
        let LabelledGraph { label, mut graph } = lg;
        if self.largest_component && !graph.is_connected() {
            let (_, components) = graph.component_labels();
            let kept = graph.largest_component();
            eprintln!("{label}: kept the largest of {components} components ({} of {} nodes)", kept.n(), graph.n());
            graph = kept;
        }
        if let Err(e) = graph.validate_for_analysis() {
            let hint = match e {
                Error::Disconnected { .. } => "; pass --largest-component to analyse the largest component",
                _ => "",
            };
            bail!("{label}: {e}{hint}");
        }
        Ok(LabelledGraph { label, graph })
    }
}

/// Reads an edge-list or graph6 file.
pub fn read_graph_file(path: &PathBuf, nodes: Option<usize>) -> Result<Vec<LabelledGraph>> {
    let text = fs::read_to_string(path).map_err(|e| Error::MissingInput(format!("{}: {e}", path.display())))?;
    let display = path.display().to_string();
    if looks_like_graph6(&text) {
        let graphs = parse_graph6_lines(&text).with_context(|| format!("reading {display}"))?;
        let single = graphs.len() == 1;
        Ok(graphs
            .into_iter()
            .enumerate()
            .map(|(k, graph)| {
                let label = if single { display.clone() } else { format!("{display}#{}", k + 1) };
                LabelledGraph { label, graph }
            })
            .collect())
    } else {
        let graph = parse_edge_list(&text, nodes).with_context(|| format!("reading {display}"))?;
        Ok(vec![LabelledGraph { label: display, graph }])
    }
}

fn looks_like_graph6(text: &str) -> bool {
    text.lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'))
        .is_some_and(|l| !l.contains(char::is_whitespace))
}

/// Parses a graph given either as a generator spec or as a graph6 string.
pub fn parse_graph_arg(text: &str) -> Result<Graph> {
    match text.parse::<Family>() {
        Ok(family) => Ok(family.generate(0)?),
        Err(spec_error) => coopnet_core::generators::parse_graph6(text)
            .map_err(|_| anyhow::anyhow!("'{text}' is neither a generator spec nor graph6 ({spec_error})")),
    }
}
