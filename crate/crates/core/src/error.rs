//! Error type shared by every module of the crate.

use thiserror::Error;

/// Errors raised while building graphs, solving coalescence systems or
/// running simulations.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An edge joins a node to itself.
    #[error("self-loop at node {0}")]
    SelfLoop(usize),
    /// The same unordered pair was listed twice.
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    /// A node index is not below the node count.
    #[error("node index {index} out of range for a graph with {n} nodes")]
    IndexOutOfRange { index: usize, n: usize },
    /// The graph has more than one connected component.
    #[error("graph is disconnected ({components} components)")]
    Disconnected { components: usize },
    /// A declared node has no incident edge.
    #[error("node {0} has no neighbours")]
    IsolatedNode(usize),
    /// A parameter lies outside its documented range.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    /// The input exceeds the size an exhaustive routine supports.
    #[error("{what} with n = {n} exceeds the supported bound of {max}")]
    TooLarge { what: &'static str, n: usize, max: usize },
    /// A random generator could not produce a connected sample.
    #[error("no connected sample after {attempts} attempts")]
    GenerationTimeout { attempts: usize },
    /// A graph6 line could not be decoded.
    #[error("malformed graph6 input: {0}")]
    MalformedGraph6(String),
    /// The iterative solver exhausted its budget.
    #[error("solver did not converge: max defect {defect:e} after {iterations} iterations")]
    SolverDivergence { iterations: usize, defect: f64 },
    /// A closed form was evaluated outside its domain.
    #[error("outside the formula's domain: {0}")]
    DomainError(String),
    /// An edge-list line could not be parsed.
    #[error("edge list line {line}: {message}")]
    EdgeList { line: usize, message: String },
    /// An eight-node census was requested without an atlas file.
    #[error("census at n = 8 needs a graph6 atlas of connected graphs")]
    MissingAtlas,
    /// A required input (file, record, graph) is absent.
    #[error("missing input: {0}")]
    MissingInput(String),
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
