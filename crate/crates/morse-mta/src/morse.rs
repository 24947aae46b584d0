use crate::report::{critical_cells, CriticalReport};
use crate::strategy::SplitStrategy;
use crate::tree::{MatchingTree, NodeKind, Side, Step};
use crate::{run_mta, MtaError};
use complex_core::{independence_complex, Face, DEFAULT_FACE_BUDGET};
use graph_core::Graph;
use serde::{Deserialize, Serialize};
use std::collections::{BTreeSet, HashMap};

/// Face-poset reconstruction enumerates every face; past this many ambient
/// vertices it is no longer a verification aid.
pub const MORSE_MATCHING_VERTEX_LIMIT: usize = 20;

/// Partial matching on the faces of an independence complex. Each pair
/// differs by one vertex; `unmatched` lists the survivors (the critical
/// cells, plus the empty face when nothing ever paired it).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MorseMatching {
    pub pairs: Vec<(Face, Face)>,
    pub unmatched: Vec<Face>,
}

fn sorted_insert(face: &[usize], v: usize) -> Face {
    let mut out = face.to_vec();
    let at = out.binary_search(&v).unwrap_err();
    out.insert(at, v);
    out
}

/// Replays every face of the complex through the tree. A face descends left
/// or right at each split according to membership of the splitting vertex;
/// the first free or pivot step it does not dodge pairs it with its twin.
pub fn induced_morse_matching(g: &Graph, tree: &MatchingTree) -> Result<MorseMatching, MtaError> {
    let n = g.n_vertices();
    if n > MORSE_MATCHING_VERTEX_LIMIT {
        return Err(MtaError::TooManyVertices { n, max: MORSE_MATCHING_VERTEX_LIMIT });
    }
    if n != tree.n_vertices() {
        return Err(MtaError::TreeGraphMismatch { tree_n: tree.n_vertices(), graph_n: n });
    }
    let complex = independence_complex(g, DEFAULT_FACE_BUDGET)?;

    let mut pairs = Vec::new();
    let mut unmatched = Vec::new();
    let mut route = |face: &[usize]| {
        let mut at = tree.root();
        loop {
            let node = tree.node(at);
            match node.kind {
                NodeKind::LeafCritical | NodeKind::LeafEmpty => {
                    debug_assert!(node.kind == NodeKind::LeafEmpty || face == &node.a[..]);
                    unmatched.push(face.to_vec());
                    return;
                }
                NodeKind::Internal => {}
            }
            match node.children[..] {
                [(Step::Free { v }, _)] => {
                    if face.binary_search(&v).is_err() {
                        pairs.push((face.to_vec(), sorted_insert(face, v)));
                    }
                    return;
                }
                [(Step::Pivot { v, w }, child)] => {
                    if face.binary_search(&w).is_ok() {
                        at = child;
                    } else {
                        if face.binary_search(&v).is_err() {
                            pairs.push((face.to_vec(), sorted_insert(face, v)));
                        }
                        return;
                    }
                }
                [(Step::Split { v, side: Side::Left }, left), (Step::Split { side: Side::Right, .. }, right)] => {
                    at = if face.binary_search(&v).is_ok() { right } else { left };
                }
                _ => unreachable!("malformed tree node"),
            }
        }
    };

    route(&[]);
    if let Some(dim) = complex.dim() {
        for d in 0..=dim {
            for face in complex.faces_of_dim(d) {
                route(face);
            }
        }
    }
    Ok(MorseMatching { pairs, unmatched })
}

/// Checks the matched face poset for directed cycles. Cycles of a one-step
/// matching alternate between two consecutive dimensions, so each dimension
/// is checked on its own digraph: `a -> a'` whenever `a'` is a facet of
/// `a`'s matched coface other than `a` itself.
pub fn verify_acyclic(matching: &MorseMatching) -> bool {
    let mut by_dim: HashMap<usize, Vec<(&Face, &Face)>> = HashMap::new();
    for (a, b) in &matching.pairs {
        if !a.is_empty() {
            by_dim.entry(a.len()).or_default().push((a, b));
        }
    }
    for level in by_dim.values() {
        let index: HashMap<&[usize], usize> =
            level.iter().enumerate().map(|(i, (a, _))| (a.as_slice(), i)).collect();
        let mut succ = vec![Vec::new(); level.len()];
        for (i, (a, up)) in level.iter().enumerate() {
            for skip in 0..up.len() {
                let mut facet = up.to_vec();
                facet.remove(skip);
                if facet.as_slice() != a.as_slice() {
                    if let Some(&j) = index.get(facet.as_slice()) {
                        succ[i].push(j);
                    }
                }
            }
        }
        if has_cycle(&succ) {
            return false;
        }
    }
    true
}

fn has_cycle(succ: &[Vec<usize>]) -> bool {
    // 0 = unseen, 1 = on stack, 2 = done.
    let mut state = vec![0u8; succ.len()];
    for start in 0..succ.len() {
        if state[start] != 0 {
            continue;
        }
        let mut stack = vec![(start, 0usize)];
        state[start] = 1;
        while let Some(top) = stack.len().checked_sub(1) {
            let (v, next) = stack[top];
            if next < succ[v].len() {
                stack[top].1 += 1;
                let u = succ[v][next];
                match state[u] {
                    0 => {
                        state[u] = 1;
                        stack.push((u, 0));
                    }
                    1 => return true,
                    _ => {}
                }
            } else {
                state[v] = 2;
                stack.pop();
            }
        }
    }
    false
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LowerBoundOutcome {
    pub bound: usize,
    /// `None` when the run produced no critical cells at all.
    pub min_critical_size: Option<usize>,
    pub report: CriticalReport,
}

/// Runs the algorithm refusing to split on any seed. When the seeds' closed
/// neighborhoods are pairwise disjoint, every critical cell must pick up one
/// vertex per seed neighborhood, so `|seeds|` lower-bounds the critical cell
/// sizes; combined with vanishing below that size this pushes up the
/// connectivity of the complex.
pub fn lower_bound_check(g: &Graph, seeds: &[usize]) -> Result<LowerBoundOutcome, MtaError> {
    let hoods: Vec<BTreeSet<usize>> = seeds
        .iter()
        .map(|&s| g.closed_neighborhood(s).map(|h| h.into_iter().collect()))
        .collect::<Result<_, _>>()?;
    for i in 0..seeds.len() {
        for j in i + 1..seeds.len() {
            if !hoods[i].is_disjoint(&hoods[j]) {
                return Err(MtaError::SeedsNotDisjoint { a: seeds[i], b: seeds[j] });
            }
        }
    }
    let mut strategy = SplitStrategy::avoid(seeds.iter().copied());
    let report = critical_cells(&run_mta(g, &mut strategy)?);
    let min_critical_size = report.critical.iter().map(Vec::len).min();
    if let Some(min) = min_critical_size {
        if min < seeds.len() {
            return Err(MtaError::LowerBoundViolated { min, bound: seeds.len() });
        }
    }
    Ok(LowerBoundOutcome { bound: seeds.len(), min_critical_size, report })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_vertex_pairs_the_empty_face() {
        let g = Graph::new(1, vec![]).unwrap();
        let tree = run_mta(&g, &mut SplitStrategy::Lexicographic).unwrap();
        let m = induced_morse_matching(&g, &tree).unwrap();
        assert_eq!(m.pairs, vec![(vec![], vec![0])]);
        assert!(m.unmatched.is_empty());
    }

    #[test]
    fn empty_matching_is_acyclic() {
        assert!(verify_acyclic(&MorseMatching { pairs: vec![], unmatched: vec![] }));
    }

    #[test]
    fn circular_matching_is_caught() {
        // Ind of two disjoint edges is a square; matching each corner to the
        // next side cycles all the way around.
        let pairs = vec![
            (vec![0], vec![0, 1]),
            (vec![1], vec![1, 2]),
            (vec![2], vec![2, 3]),
            (vec![3], vec![0, 3]),
        ];
        assert!(!verify_acyclic(&MorseMatching { pairs: pairs.clone(), unmatched: vec![] }));
        // Dropping one rung breaks the cycle.
        assert!(verify_acyclic(&MorseMatching { pairs: pairs[..3].to_vec(), unmatched: vec![] }));
    }

    #[test]
    fn no_seeds_no_bound() {
        let g = Graph::new(3, vec![(0, 1), (1, 2)]).unwrap();
        let out = lower_bound_check(&g, &[]).unwrap();
        assert_eq!(out.bound, 0);
        assert_eq!(out.report.strategy, "AvoidSet");
    }

    #[test]
    fn adjacent_seeds_are_rejected() {
        let g = Graph::new(3, vec![(0, 1), (1, 2)]).unwrap();
        let err = lower_bound_check(&g, &[0, 1]).unwrap_err();
        assert_eq!(err, MtaError::SeedsNotDisjoint { a: 0, b: 1 });
    }

    #[test]
    fn oversized_graphs_are_gated() {
        let g = Graph::new(21, vec![]).unwrap();
        let tree = run_mta(&g, &mut SplitStrategy::Lexicographic).unwrap();
        assert_eq!(
            induced_morse_matching(&g, &tree).unwrap_err(),
            MtaError::TooManyVertices { n: 21, max: MORSE_MATCHING_VERTEX_LIMIT }
        );
    }
}
