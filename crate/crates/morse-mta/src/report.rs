use crate::tree::{MatchingTree, NodeKind};
use crate::MtaError;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// Summary of the surviving leaves of a run. `critical` keeps the leaf
/// `A`-sets in left-to-right tree order; the histogram counts them by cell
/// dimension `|A| - 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CriticalReport {
    pub critical: Vec<Vec<usize>>,
    pub histogram: BTreeMap<usize, u64>,
    pub d_min: Option<usize>,
    pub d_max: Option<usize>,
    pub empty_leaves: u64,
    pub strategy: String,
    pub warnings: Vec<String>,
    pub empty_face_matched: bool,
}

impl CriticalReport {
    /// Signed cell count; equals the reduced Euler characteristic of the
    /// complex whenever the empty face was paired, and exceeds it by one
    /// otherwise.
    pub fn morse_euler(&self) -> i64 {
        self.critical.iter().map(|a| if a.len() % 2 == 1 { 1 } else { -1 }).sum()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(s: &str) -> Result<Self, MtaError> {
        serde_json::from_str(s).map_err(|e| MtaError::Parse(e.to_string()))
    }
}

pub fn critical_cells(tree: &MatchingTree) -> CriticalReport {
    let mut critical = Vec::new();
    let mut histogram = BTreeMap::new();
    let mut empty_leaves = 0;
    for node in tree.nodes() {
        match node.kind {
            NodeKind::LeafCritical => {
                *histogram.entry(node.a.len() - 1).or_insert(0u64) += 1;
                critical.push(node.a.clone());
            }
            NodeKind::LeafEmpty => empty_leaves += 1,
            NodeKind::Internal => {}
        }
    }
    CriticalReport {
        critical,
        d_min: histogram.keys().next().copied(),
        d_max: histogram.keys().next_back().copied(),
        histogram,
        empty_leaves,
        strategy: tree.strategy().to_string(),
        warnings: tree.warnings().to_vec(),
        empty_face_matched: tree.empty_face_matched(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{run_mta, SplitStrategy};
    use graph_core::{generate, GeneratorSpec};

    #[test]
    fn empty_tree_report_is_all_null() {
        let g = graph_core::Graph::new(0, vec![]).unwrap();
        let report = critical_cells(&run_mta(&g, &mut SplitStrategy::Lexicographic).unwrap());
        assert!(report.critical.is_empty() && report.histogram.is_empty());
        assert_eq!((report.d_min, report.d_max), (None, None));
        assert_eq!(report.empty_leaves, 1);
        assert!(!report.empty_face_matched);
    }

    #[test]
    fn json_shape_is_stable() {
        let c6 = generate(&GeneratorSpec::Cycle { n: 6 }).unwrap();
        let report = critical_cells(&run_mta(&c6, &mut SplitStrategy::Lexicographic).unwrap());
        let value: serde_json::Value = serde_json::from_str(&report.to_json()).unwrap();
        let obj = value.as_object().unwrap();
        for key in
            ["critical", "histogram", "d_min", "d_max", "empty_leaves", "strategy", "warnings"]
        {
            assert!(obj.contains_key(key), "missing {key}");
        }
        assert_eq!(value["strategy"], "Lexicographic");
        assert_eq!(CriticalReport::from_json(&report.to_json()).unwrap(), report);
    }

    #[test]
    fn six_cycle_leaves_two_circle_cells() {
        // Ind(C6) is two circles wedged; the run must find one 1-cell per
        // circle plus nothing else.
        let c6 = generate(&GeneratorSpec::Cycle { n: 6 }).unwrap();
        let report = critical_cells(&run_mta(&c6, &mut SplitStrategy::Lexicographic).unwrap());
        assert_eq!(report.histogram, BTreeMap::from([(1, 2)]));
        assert_eq!((report.d_min, report.d_max), (Some(1), Some(1)));
        assert_eq!(report.morse_euler(), -2);
    }
}
