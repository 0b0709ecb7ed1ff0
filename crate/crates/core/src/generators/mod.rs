//! Graph generators: deterministic families, random ensembles, exhaustive
//! small-graph enumeration and graph6 ingestion.

pub mod enumerate;
pub mod families;
pub mod graph6;
pub mod random;

use std::fmt;
use std::str::FromStr;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub use enumerate::{atlas, enumerate_connected, MAX_ATLAS_N, MAX_ENUMERATION_N};
pub use families::{ceiling_fan, complete, cycle, joint_star, lattice, path, star, Neighborhood};
pub use graph6::{encode as encode_graph6, parse_graph6, parse_graph6_lines};
pub use random::{erdos_renyi, krapivsky_ba, watts_strogatz, DEFAULT_RETRY_BUDGET};

/// Random stream `index` derived from `seed`.
///
/// Every consumer of randomness (one random graph of an ensemble, one Monte
/// Carlo replicate) gets its own ChaCha8 stream keyed by `seed` and selected
/// by `index`, so results never depend on scheduling order.
pub fn stream_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

/// A graph family together with its parameters.
///
/// The text form is `family:param:param…`, for example `star:9`,
/// `joint_star:3:9`, `lattice:5:vn`, `er:100:0.04`, `ws:100:2:0.1` or
/// `ba:100:2:1.0`.
#[derive(Debug, Clone, PartialEq)]
pub enum Family {
    /// Erdős–Rényi G(n, p), conditioned on connectivity.
    ErdosRenyi { n: usize, p: f64 },
    /// Watts–Strogatz ring with `d` neighbours per side, rewired with probability `p`.
    WattsStrogatz { n: usize, d: usize, p: f64 },
    /// Krapivsky nonlinear preferential attachment with `m` links per joiner.
    Krapivsky { n: usize, m: usize, gamma: f64 },
    /// Star with `leaves` leaves.
    Star { leaves: usize },
    /// `hubs` interconnected hubs with `leaves` private leaves each.
    JointStar { hubs: usize, leaves: usize },
    /// Hub with `fans` leaf pairs.
    CeilingFan { fans: usize },
    /// `side × side` periodic lattice.
    Lattice { side: usize, neighborhood: Neighborhood },
    /// Complete graph.
    Complete { n: usize },
    /// Cycle.
    Cycle { n: usize },
    /// Path.
    Path { n: usize },
}

impl Family {
    /// Whether the family draws on randomness.
    pub fn is_random(&self) -> bool {
        matches!(self, Family::ErdosRenyi { .. } | Family::WattsStrogatz { .. } | Family::Krapivsky { .. })
    }

    /// Builds a graph; `seed` is ignored by deterministic families.
    pub fn generate(&self, seed: u64) -> Result<Graph> {
        match *self {
            Family::ErdosRenyi { n, p } => erdos_renyi(n, p, seed),
            Family::WattsStrogatz { n, d, p } => watts_strogatz(n, d, p, seed),
            Family::Krapivsky { n, m, gamma } => krapivsky_ba(n, m, gamma, seed),
            Family::Star { leaves } => star(leaves),
            Family::JointStar { hubs, leaves } => joint_star(hubs, leaves),
            Family::CeilingFan { fans } => ceiling_fan(fans),
            Family::Lattice { side, neighborhood } => lattice(side, neighborhood),
            Family::Complete { n } => complete(n),
            Family::Cycle { n } => cycle(n),
            Family::Path { n } => path(n),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::ErdosRenyi { n, p } => write!(f, "er:{n}:{p}"),
            Family::WattsStrogatz { n, d, p } => write!(f, "ws:{n}:{d}:{p}"),
            Family::Krapivsky { n, m, gamma } => write!(f, "ba:{n}:{m}:{gamma}"),
            Family::Star { leaves } => write!(f, "star:{leaves}"),
            Family::JointStar { hubs, leaves } => write!(f, "joint_star:{hubs}:{leaves}"),
            Family::CeilingFan { fans } => write!(f, "ceiling_fan:{fans}"),
            Family::Lattice { side, neighborhood } => {
                let nb = match neighborhood {
                    Neighborhood::VonNeumann => "vn",
                    Neighborhood::Moore => "moore",
                };
                write!(f, "lattice:{side}:{nb}")
            }
            Family::Complete { n } => write!(f, "complete:{n}"),
            Family::Cycle { n } => write!(f, "cycle:{n}"),
            Family::Path { n } => write!(f, "path:{n}"),
        }
    }
}

fn parse_field<T: FromStr>(spec: &str, field: &str, name: &str) -> Result<T> {
    field
        .trim()
        .parse()
        .map_err(|_| Error::InvalidParameter(format!("generator '{spec}': cannot parse {name} from '{field}'")))
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(spec: &str) -> Result<Family> {
        let parts: Vec<&str> = spec.trim().split(':').collect();
        let arity = |expected: usize| -> Result<()> {
            if parts.len() == expected + 1 {
                Ok(())
            } else {
                Err(Error::InvalidParameter(format!(
                    "generator '{spec}': '{}' takes {expected} parameter(s)",
                    parts[0]
                )))
            }
        };
        let family = match parts[0].to_ascii_lowercase().as_str() {
            "er" => {
                arity(2)?;
                Family::ErdosRenyi { n: parse_field(spec, parts[1], "n")?, p: parse_field(spec, parts[2], "p")? }
            }
            "ws" | "sw" => {
                arity(3)?;
                Family::WattsStrogatz {
                    n: parse_field(spec, parts[1], "n")?,
                    d: parse_field(spec, parts[2], "d")?,
                    p: parse_field(spec, parts[3], "p")?,
                }
            }
            "ba" => {
                arity(3)?;
                Family::Krapivsky {
                    n: parse_field(spec, parts[1], "n")?,
                    m: parse_field(spec, parts[2], "m")?,
                    gamma: parse_field(spec, parts[3], "gamma")?,
                }
            }
            "star" => {
                arity(1)?;
                Family::Star { leaves: parse_field(spec, parts[1], "leaves")? }
            }
            "joint_star" | "mhub" => {
                arity(2)?;
                Family::JointStar {
                    hubs: parse_field(spec, parts[1], "hubs")?,
                    leaves: parse_field(spec, parts[2], "leaves")?,
                }
            }
            "ceiling_fan" | "fan" => {
                arity(1)?;
                Family::CeilingFan { fans: parse_field(spec, parts[1], "fans")? }
            }
            "lattice" => {
                arity(2)?;
                let neighborhood = match parts[2].trim().to_ascii_lowercase().as_str() {
                    "vn" | "vonneumann" | "von_neumann" => Neighborhood::VonNeumann,
                    "moore" => Neighborhood::Moore,
                    other => {
                        return Err(Error::InvalidParameter(format!(
                            "generator '{spec}': unknown neighbourhood '{other}' (expected vn or moore)"
                        )))
                    }
                };
                Family::Lattice { side: parse_field(spec, parts[1], "side")?, neighborhood }
            }
            "complete" => {
                arity(1)?;
                Family::Complete { n: parse_field(spec, parts[1], "n")? }
            }
            "cycle" => {
                arity(1)?;
                Family::Cycle { n: parse_field(spec, parts[1], "n")? }
            }
            "path" => {
                arity(1)?;
                Family::Path { n: parse_field(spec, parts[1], "n")? }
            }
            other => return Err(Error::InvalidParameter(format!("unknown generator family '{other}'"))),
        };
        Ok(family)
    }
}

/// A family plus the seed its random draws derive from.
#[derive(Debug, Clone, PartialEq)]
pub struct GeneratorSpec {
    pub family: Family,
    pub seed: u64,
}

impl GeneratorSpec {
    pub fn new(family: Family, seed: u64) -> GeneratorSpec {
        GeneratorSpec { family, seed }
    }

    /// The graph for this spec.
    pub fn generate(&self) -> Result<Graph> {
        self.family.generate(self.seed)
    }

    /// Sample `index` of an ensemble: a deterministic family yields the same
    /// graph every time, a random one gets its own derived seed.
    pub fn sample(&self, index: u64) -> Result<Graph> {
        self.family.generate(derive_seed(self.seed, index))
    }
}

/// Seed for ensemble member `index`: the first output of stream `index`.
pub fn derive_seed(seed: u64, index: u64) -> u64 {
    use rand::RngCore;
    stream_rng(seed, index).next_u64()
}
