//! Census of all small connected graphs: every threshold for every graph,
//! plus category tallies.

use rayon::prelude::*;

use crate::canonical::{canonical_graph, canonical_graph6};
use crate::error::{Error, Result};
use crate::generators::{encode_graph6, enumerate_connected, MAX_ENUMERATION_N};
use crate::graph::Graph;
use crate::theory::{critical_values, Category, Condition, CriticalValue};

/// One graph with its twelve thresholds in [`Condition::ALL`] order.
#[derive(Debug, Clone, PartialEq)]
pub struct GraphRecord {
    /// graph6 encoding of the canonical relabelling.
    pub canonical_id: String,
    pub n: usize,
    pub edges: usize,
    pub avg_degree: f64,
    /// The thresholds, or the reason they could not be computed.
    pub values: std::result::Result<Vec<CriticalValue>, String>,
}

impl GraphRecord {
    /// Computes all thresholds of `g`.
    pub fn compute(g: &Graph, exact: bool) -> Result<GraphRecord> {
        let canonical_id = canonical_graph6(g)?;
        let values = critical_values(g, exact).map_err(|e| e.to_string());
        Ok(GraphRecord {
            canonical_id,
            n: g.n(),
            edges: g.edge_count(),
            avg_degree: 2.0 * g.edge_count() as f64 / g.n() as f64,
            values,
        })
    }

    /// Threshold for one condition, if computed.
    pub fn value(&self, condition: Condition) -> Option<&CriticalValue> {
        self.values.as_ref().ok().map(|v| &v[condition.index()])
    }
}

/// The graphs of one census size: self-enumerated up to seven nodes,
/// otherwise taken from `atlas` (deduplicated up to isomorphism, connected
/// members only, in canonical order).
pub fn census_graphs(n: usize, atlas: Option<&[Graph]>) -> Result<Vec<Graph>> {
    match atlas {
        Some(graphs) => {
            let mut keyed: Vec<(String, Graph)> = graphs
                .iter()
                .filter(|g| g.n() == n && g.is_connected())
                .map(|g| {
                    let c = canonical_graph(g)?;
                    Ok((encode_graph6(&c), c))
                })
                .collect::<Result<_>>()?;
            keyed.sort_by(|a, b| a.0.cmp(&b.0));
            keyed.dedup_by(|a, b| a.0 == b.0);
            Ok(keyed.into_iter().map(|(_, g)| g).collect())
        }
        None if n <= MAX_ENUMERATION_N => enumerate_connected(n),
        None => Err(Error::MissingAtlas),
    }
}

/// Records for a list of graphs, computed in parallel and returned in input order.
pub fn census_records(graphs: &[Graph], exact: bool) -> Result<Vec<GraphRecord>> {
    graphs.par_iter().map(|g| GraphRecord::compute(g, exact)).collect()
}

/// Category counts per condition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CategoryTable {
    /// `counts[condition][category]` in [`Condition::ALL`] × [`Category::ALL`] order.
    pub counts: Vec<[u64; 3]>,
    /// Records that produced values.
    pub total: u64,
    /// Records that failed.
    pub failed: u64,
}

impl CategoryTable {
    /// Tallies records.
    pub fn from_records<'a>(records: impl IntoIterator<Item = &'a GraphRecord>) -> Self {
        let mut counts = vec![[0u64; 3]; Condition::ALL.len()];
        let (mut total, mut failed) = (0, 0);
        for record in records {
            match &record.values {
                Ok(values) => {
                    total += 1;
                    for (c, v) in values.iter().enumerate() {
                        counts[c][category_index(v.category)] += 1;
                    }
                }
                Err(_) => failed += 1,
            }
        }
        CategoryTable { counts, total, failed }
    }

    /// Number of graphs in a category under a condition.
    pub fn count(&self, condition: Condition, category: Category) -> u64 {
        self.counts[condition.index()][category_index(category)]
    }

    /// Percentage of graphs in a category under a condition.
    pub fn percent(&self, condition: Condition, category: Category) -> f64 {
        100.0 * self.count(condition, category) as f64 / self.total as f64
    }
}

fn category_index(category: Category) -> usize {
    Category::ALL.iter().position(|&c| c == category).expect("listed")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::theory::{GameKind, PayoffScheme, UpdateRule};

    #[test]
    fn five_node_census() {
        let graphs = census_graphs(5, None).unwrap();
        assert_eq!(graphs.len(), 21);
        let records = census_records(&graphs, true).unwrap();
        let table = CategoryTable::from_records(&records);
        assert_eq!(table.total, 21);
        let pgg = Condition::new(GameKind::Pgg, UpdateRule::Pc, PayoffScheme::Averaged);
        // Only the complete graph fails to support cooperation.
        assert_eq!(table.count(pgg, Category::Never), 1);
        let dg = Condition::new(GameKind::Dg, UpdateRule::Pc, PayoffScheme::Averaged);
        assert_eq!(table.count(dg, Category::Never), 21);
    }

    #[test]
    fn eight_nodes_need_an_atlas() {
        assert_eq!(census_graphs(8, None).unwrap_err(), Error::MissingAtlas);
    }

    #[test]
    fn atlas_input_is_deduplicated() {
        let tri = Graph::from_edges(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        let path_a = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        let path_b = Graph::from_edges(3, [(0, 2), (1, 2)]).unwrap();
        let graphs = census_graphs(3, Some(&[tri, path_a, path_b])).unwrap();
        assert_eq!(graphs.len(), 2);
    }
}
