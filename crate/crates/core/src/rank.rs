//! Ranking graphs by how easily they support cooperation.
//!
//! Smaller positive thresholds rank first. Non-positive and infinite
//! thresholds (cooperation impossible) rank after every finite positive
//! one; ties are broken by canonical id, so the order is total and
//! reproducible.

use std::cmp::Ordering;

/// A graph's position in a ranking.
#[derive(Debug, Clone, PartialEq)]
pub struct RankedEntry {
    pub canonical_id: String,
    pub value: f64,
    /// 1-based position.
    pub rank: usize,
    /// `rank / total × 100`: the share of graphs at or above this one.
    pub percentile: f64,
}

fn sort_key(value: f64) -> f64 {
    if value > 0.0 && value.is_finite() {
        value
    } else {
        f64::INFINITY
    }
}

/// Ranks `(canonical id, threshold)` pairs.
pub fn rank_entries(entries: impl IntoIterator<Item = (String, f64)>) -> Vec<RankedEntry> {
    let mut items: Vec<(String, f64)> = entries.into_iter().collect();
    items.sort_by(|a, b| {
        sort_key(a.1).partial_cmp(&sort_key(b.1)).unwrap_or(Ordering::Equal).then_with(|| a.0.cmp(&b.0))
    });
    let total = items.len();
    items
        .into_iter()
        .enumerate()
        .map(|(k, (canonical_id, value))| RankedEntry {
            canonical_id,
            value,
            rank: k + 1,
            percentile: 100.0 * (k + 1) as f64 / total as f64,
        })
        .collect()
}

/// The entry for a given canonical id.
pub fn find<'a>(ranking: &'a [RankedEntry], canonical_id: &str) -> Option<&'a RankedEntry> {
    ranking.iter().find(|e| e.canonical_id == canonical_id)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders_by_value_then_id() {
        let ranking = rank_entries(vec![
            ("c".to_string(), 5.0),
            ("b".to_string(), -2.0),
            ("a".to_string(), 5.0),
            ("d".to_string(), f64::INFINITY),
            ("e".to_string(), 1.5),
        ]);
        let ids: Vec<&str> = ranking.iter().map(|e| e.canonical_id.as_str()).collect();
        assert_eq!(ids, vec!["e", "a", "c", "b", "d"]);
        assert_eq!(ranking[0].rank, 1);
        assert!((ranking[4].percentile - 100.0).abs() < 1e-12);
        assert_eq!(find(&ranking, "c").unwrap().rank, 3);
    }
}
