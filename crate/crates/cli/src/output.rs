//! CSV emission and the condition-selection flags.
//!
//! Floats are written in Rust's shortest round-trip form, so files are
//! byte-identical across runs and platforms; infinities appear as `inf`.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};

use anyhow::{Context, Result};
use clap::Args;
use coopnet_core::{Condition, CriticalValue, GameKind, PayoffScheme, UpdateRule};

/// CSV writer over a file or standard output.
pub type CsvOut = csv::Writer<Box<dyn Write>>;

/// Opens `path`, or standard output when absent.
pub fn open(path: Option<&Path>) -> Result<CsvOut> {
    let sink: Box<dyn Write> = match path {
        Some(p) => Box::new(BufWriter::new(File::create(p).with_context(|| format!("creating {}", p.display()))?)),
        None => Box::new(BufWriter::new(io::stdout())),
    };
    Ok(csv::Writer::from_writer(sink))
}

/// Output flags shared by every CSV-producing command.
#[derive(Args, Debug, Clone)]
pub struct OutputArgs {
    /// Output file (standard output when omitted).
    #[arg(long, value_name = "PATH")]
    pub out: Option<PathBuf>,
    /// Emit plot-ready `panel,x,y,err` rows instead of the full table.
    #[arg(long)]
    pub plotdata: bool,
}

impl OutputArgs {
    pub fn open(&self) -> Result<CsvOut> {
        open(self.out.as_deref())
    }
}

/// Header of plot-data files.
pub const PLOT_HEADER: [&str; 4] = ["panel", "x", "y", "err"];

/// Formats a float for CSV output.
pub fn num(v: f64) -> String {
    if v.is_nan() {
        "nan".to_string()
    } else {
        v.to_string()
    }
}

/// The exact rational of a value, or an empty field.
pub fn exact_field(cv: &CriticalValue) -> String {
    cv.exact.as_ref().map(|q| q.to_string()).unwrap_or_default()
}

/// Flags restricting the twelve conditions; an absent flag keeps every option.
#[derive(Args, Debug, Clone, Default)]
pub struct ConditionArgs {
    /// Update rules (pc, db, bd), comma-separated.
    #[arg(long, value_delimiter = ',')]
    pub rule: Vec<UpdateRule>,
    /// Payoff schemes (avg, acc), comma-separated.
    #[arg(long, value_delimiter = ',')]
    pub scheme: Vec<PayoffScheme>,
    /// Games (pgg, dg), comma-separated.
    #[arg(long, value_delimiter = ',')]
    pub game: Vec<GameKind>,
}

impl ConditionArgs {
    /// Selected conditions in canonical order.
    pub fn selected(&self) -> Vec<Condition> {
        Condition::ALL
            .iter()
            .copied()
            .filter(|c| self.rule.is_empty() || self.rule.contains(&c.rule))
            .filter(|c| self.scheme.is_empty() || self.scheme.contains(&c.scheme))
            .filter(|c| self.game.is_empty() || self.game.contains(&c.game))
            .collect()
    }
}

/// The four condition columns `condition,game,rule,scheme`.
pub fn condition_fields(c: Condition) -> [String; 4] {
    [c.to_string(), c.game.to_string(), c.rule.to_string(), c.scheme.to_string()]
}
