//! Weak-selection cooperation thresholds on arbitrary graphs.
//!
//! The crate computes the critical synergy factor r* of spatial public goods
//! games and the critical benefit-to-cost ratio (b/c)* of pairwise donation
//! games on simple undirected graphs, under pairwise-comparison,
//! death–birth and birth–death updating with averaged or accumulated
//! payoffs. Alongside the exact engine it provides closed-form reference
//! values for structured families, graph generators and small-graph
//! enumeration, and an agent-based Monte Carlo simulator.

pub mod canonical;
pub mod census;
pub mod ensemble;
pub mod error;
pub mod generators;
pub mod graph;
pub mod io;
pub mod oracles;
pub mod rank;
pub mod simulate;
pub mod theory;

pub use canonical::{canonical_form, canonical_graph6, MAX_CANONICAL_N};
pub use census::{CategoryTable, GraphRecord};
pub use ensemble::EnsembleSummary;
pub use error::{Error, Result};
pub use generators::{Family, GeneratorSpec};
pub use graph::{build_graph, metrics, walk_kernel, Graph, GraphMetrics, WalkKernel};
pub use io::{parse_edge_list, write_edge_list};
pub use simulate::{estimate, SimConfig, SimOutcome};
pub use theory::{
    classify, critical_bc, critical_r, critical_value, critical_values, critical_values_for, solve_tau, solve_tau_bd,
    Category, CoalescenceTable, Condition, CriticalValue, GameKind, PayoffScheme, UpdateRule,
};
