use crate::strategy::SplitStrategy;
use crate::MtaError;
use graph_core::Graph;
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;

pub type NodeId = usize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Side {
    Left,
    Right,
}

/// Annotation on the edge from a node to one of its children.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Step {
    /// `v` has no live neighbor: every face pairs with its twin across `v`
    /// and the branch dies.
    Free { v: usize },
    /// `v` has the single live neighbor `w`: faces without `w` pair across
    /// `v`, faces with `w` continue into `Σ(A ∪ {w}, B ∪ N(w))`.
    Pivot { v: usize, w: usize },
    /// No forced move; faces split on membership of `v`. Left excludes it,
    /// right commits to it.
    Split { v: usize, side: Side },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum NodeKind {
    Internal,
    /// `A ∪ B = V` with `A` nonempty: the single face `A` survives as a
    /// critical cell of dimension `|A| - 1`.
    LeafCritical,
    /// Every face reaching this branch was paired away.
    LeafEmpty,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MtaNode {
    pub a: Vec<usize>,
    pub b: Vec<usize>,
    pub kind: NodeKind,
    pub children: Vec<(Step, NodeId)>,
}

/// Finished run over one graph. Nodes are stored in depth-first preorder
/// with left children first, so leaf order is the left-to-right order of
/// the drawn tree.
#[derive(Clone, Debug)]
pub struct MatchingTree {
    nodes: Vec<MtaNode>,
    strategy: String,
    warnings: Vec<String>,
    empty_face_matched: bool,
    n: usize,
}

impl MatchingTree {
    pub fn nodes(&self) -> &[MtaNode] {
        &self.nodes
    }

    pub fn node(&self, id: NodeId) -> &MtaNode {
        &self.nodes[id]
    }

    pub fn root(&self) -> NodeId {
        0
    }

    pub fn n_vertices(&self) -> usize {
        self.n
    }

    pub fn strategy(&self) -> &str {
        &self.strategy
    }

    pub fn warnings(&self) -> &[String] {
        &self.warnings
    }

    /// Whether the empty face was paired off by some free or pivot step.
    /// False only for the graph with no vertices, whose complex is `{∅}`.
    pub fn empty_face_matched(&self) -> bool {
        self.empty_face_matched
    }
}

fn live_set(g: &Graph, a: &BTreeSet<usize>, b: &BTreeSet<usize>) -> BTreeSet<usize> {
    (0..g.n_vertices()).filter(|v| !a.contains(v) && !b.contains(v)).collect()
}

fn live_neighbors(g: &Graph, live: &BTreeSet<usize>, v: usize) -> Vec<usize> {
    g.neighbors(v).expect("live vertex in range").into_iter().filter(|u| live.contains(u)).collect()
}

/// Lowest-index free vertex, else lowest-index pivot with its matching
/// vertex, else `None` (the node is split ready or exhausted).
fn forced_move(g: &Graph, live: &BTreeSet<usize>) -> Option<PrepareMove> {
    let mut pivot = None;
    for &v in live {
        let nbrs = live_neighbors(g, live, v);
        match nbrs.len() {
            0 => return Some(PrepareMove::Free { v }),
            1 if pivot.is_none() => pivot = Some(PrepareMove::Pivot { v, w: nbrs[0] }),
            _ => {}
        }
    }
    pivot
}

/// Runs the algorithm to completion. The strategy is consulted once per
/// split-ready node, in depth-first left-first order.
pub fn run_mta(g: &Graph, strategy: &mut SplitStrategy) -> Result<MatchingTree, MtaError> {
    let mut tree = MatchingTree {
        nodes: Vec::new(),
        strategy: strategy.name().to_string(),
        warnings: Vec::new(),
        empty_face_matched: false,
        n: g.n_vertices(),
    };
    build(g, strategy, &mut tree, BTreeSet::new(), BTreeSet::new(), true)?;
    Ok(tree)
}

/// `routes_empty` tracks the one root-to-leaf path the empty face follows
/// (left at every split); the first forced move on that path pairs it away.
fn build(
    g: &Graph,
    strategy: &mut SplitStrategy,
    tree: &mut MatchingTree,
    a: BTreeSet<usize>,
    b: BTreeSet<usize>,
    routes_empty: bool,
) -> Result<NodeId, MtaError> {
    let id = tree.nodes.len();
    tree.nodes.push(MtaNode {
        a: a.iter().copied().collect(),
        b: b.iter().copied().collect(),
        kind: NodeKind::Internal,
        children: Vec::new(),
    });

    let live = live_set(g, &a, &b);
    if live.is_empty() {
        tree.nodes[id].kind =
            if a.is_empty() { NodeKind::LeafEmpty } else { NodeKind::LeafCritical };
        return Ok(id);
    }

    match forced_move(g, &live) {
        Some(PrepareMove::Free { v }) => {
            if routes_empty {
                tree.empty_face_matched = true;
            }
            let child = tree.nodes.len();
            tree.nodes.push(MtaNode {
                a: tree.nodes[id].a.clone(),
                b: tree.nodes[id].b.clone(),
                kind: NodeKind::LeafEmpty,
                children: Vec::new(),
            });
            tree.nodes[id].children.push((Step::Free { v }, child));
        }
        Some(PrepareMove::Pivot { v, w }) => {
            if routes_empty {
                tree.empty_face_matched = true;
            }
            let mut ca = a.clone();
            ca.insert(w);
            let mut cb = b.clone();
            cb.extend(g.neighbors(w)?.into_iter().filter(|u| !ca.contains(u)));
            let child = build(g, strategy, tree, ca, cb, false)?;
            tree.nodes[id].children.push((Step::Pivot { v, w }, child));
        }
        None => {
            let v = strategy.choose(g, &live, &mut tree.warnings)?;
            if !live.contains(&v) {
                return Err(MtaError::StrategyContract { strategy: tree.strategy.clone(), vertex: v });
            }
            let mut lb = b.clone();
            lb.insert(v);
            let left = build(g, strategy, tree, a.clone(), lb, routes_empty)?;
            let mut ra = a.clone();
            ra.insert(v);
            let mut rb = b.clone();
            rb.extend(g.neighbors(v)?);
            let right = build(g, strategy, tree, ra, rb, false)?;
            tree.nodes[id].children.push((Step::Split { v, side: Side::Left }, left));
            tree.nodes[id].children.push((Step::Split { v, side: Side::Right }, right));
        }
    }
    Ok(id)
}

/// A forced move available at a node.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PrepareMove {
    Free { v: usize },
    Pivot { v: usize, w: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PrepareOutcome {
    /// No forced move remains and live vertices exist: a strategy must split.
    SplitReady,
    /// A free vertex paired off every face of the branch.
    Died { free_vertex: usize },
    /// `A ∪ B = V`; the node holds the single face `A`.
    Exhausted,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PreparedNode {
    pub a: BTreeSet<usize>,
    pub b: BTreeSet<usize>,
    pub outcome: PrepareOutcome,
    pub steps: Vec<Step>,
}

/// Applies forced moves (lowest free vertex first, else lowest pivot) until
/// the node is split ready, dies, or runs out of vertices.
pub fn split_prepare(
    g: &Graph,
    a: &BTreeSet<usize>,
    b: &BTreeSet<usize>,
) -> Result<PreparedNode, MtaError> {
    split_prepare_with(g, a, b, |_| 0)
}

/// As [`split_prepare`], but `pick` selects which of the currently available
/// forced moves to apply (it receives a nonempty slice, frees listed before
/// pivots, each ascending by vertex, and must return a valid index). The
/// outcome's emptiness, `|A|`, and `A ∪ B` do not depend on the choices;
/// exercising that invariance is the point of exposing the knob.
pub fn split_prepare_with(
    g: &Graph,
    a: &BTreeSet<usize>,
    b: &BTreeSet<usize>,
    mut pick: impl FnMut(&[PrepareMove]) -> usize,
) -> Result<PreparedNode, MtaError> {
    let mut a = a.clone();
    let mut b = b.clone();
    let mut steps = Vec::new();
    loop {
        let live = live_set(g, &a, &b);
        if live.is_empty() {
            return Ok(PreparedNode { a, b, outcome: PrepareOutcome::Exhausted, steps });
        }
        let mut moves = Vec::new();
        for &v in &live {
            match live_neighbors(g, &live, v).as_slice() {
                [] => moves.push(PrepareMove::Free { v }),
                &[w] => moves.push(PrepareMove::Pivot { v, w }),
                _ => {}
            }
        }
        moves.sort_by_key(|m| match *m {
            PrepareMove::Free { v } => (0, v),
            PrepareMove::Pivot { v, .. } => (1, v),
        });
        if moves.is_empty() {
            return Ok(PreparedNode { a, b, outcome: PrepareOutcome::SplitReady, steps });
        }
        match moves[pick(&moves)] {
            PrepareMove::Free { v } => {
                steps.push(Step::Free { v });
                return Ok(PreparedNode { a, b, outcome: PrepareOutcome::Died { free_vertex: v }, steps });
            }
            PrepareMove::Pivot { v, w } => {
                steps.push(Step::Pivot { v, w });
                a.insert(w);
                let nbrs: Vec<usize> =
                    g.neighbors(w)?.into_iter().filter(|u| !a.contains(u)).collect();
                b.extend(nbrs);
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use graph_core::{generate, GeneratorSpec};

    fn set(vs: &[usize]) -> BTreeSet<usize> {
        vs.iter().copied().collect()
    }

    #[test]
    fn single_vertex_dies_at_the_root() {
        let g = Graph::new(1, vec![]).unwrap();
        let tree = run_mta(&g, &mut SplitStrategy::Lexicographic).unwrap();
        assert_eq!(tree.nodes().len(), 2);
        assert_eq!(tree.node(0).kind, NodeKind::Internal);
        assert_eq!(tree.node(0).children, vec![(Step::Free { v: 0 }, 1)]);
        assert_eq!(tree.node(1).kind, NodeKind::LeafEmpty);
        assert!(tree.empty_face_matched());
    }

    #[test]
    fn void_graph_is_a_lone_empty_leaf() {
        let g = Graph::new(0, vec![]).unwrap();
        let tree = run_mta(&g, &mut SplitStrategy::Lexicographic).unwrap();
        assert_eq!(tree.nodes().len(), 1);
        assert_eq!(tree.node(0).kind, NodeKind::LeafEmpty);
        assert!(!tree.empty_face_matched());
    }

    #[test]
    fn contractible_path_complex_has_no_critical_leaves() {
        // L(P5) = P4; the matching complex of P5 is contractible.
        let p5 = generate(&GeneratorSpec::Path { n: 5 }).unwrap();
        let tree = run_mta(&p5.line_graph(), &mut SplitStrategy::Lexicographic).unwrap();
        assert!(tree.nodes().iter().all(|n| n.kind != NodeKind::LeafCritical));
        assert!(tree.empty_face_matched());
    }

    #[test]
    fn star_center_is_forced() {
        let star = Graph::new(4, vec![(0, 1), (0, 2), (0, 3)]).unwrap();
        let node = split_prepare(&star, &BTreeSet::new(), &BTreeSet::new()).unwrap();
        assert_eq!(node.a, set(&[0]));
        assert_eq!(node.b, set(&[1, 2, 3]));
        assert_eq!(node.outcome, PrepareOutcome::Exhausted);
    }

    #[test]
    fn split_ready_node_is_left_unchanged() {
        let c5 = generate(&GeneratorSpec::Cycle { n: 5 }).unwrap();
        let node = split_prepare(&c5, &BTreeSet::new(), &BTreeSet::new()).unwrap();
        assert!(node.a.is_empty() && node.b.is_empty() && node.steps.is_empty());
        assert_eq!(node.outcome, PrepareOutcome::SplitReady);
    }

    #[test]
    fn dangling_endpoint_kills_the_branch() {
        // P4: the pivot at one end frees the far endpoint.
        let p4 = generate(&GeneratorSpec::Path { n: 4 }).unwrap();
        let node = split_prepare(&p4, &BTreeSet::new(), &BTreeSet::new()).unwrap();
        assert_eq!(node.outcome, PrepareOutcome::Died { free_vertex: 3 });
        assert_eq!(node.a, set(&[1]));
    }

    #[test]
    fn fixed_order_runs_dry() {
        let c5 = generate(&GeneratorSpec::Cycle { n: 5 }).unwrap();
        let err = run_mta(&c5, &mut SplitStrategy::fixed_order(vec![])).unwrap_err();
        assert_eq!(err, MtaError::FixedOrderExhausted { consumed: 0 });
    }

    #[test]
    fn stale_fixed_order_vertex_is_rejected() {
        // Two disjoint 5-cycles force a second split; splitting at 0 removes
        // 0 from both children, so naming it again violates the contract.
        let mut edges: Vec<(usize, usize)> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
        edges.extend((0..5).map(|i| (5 + i, 5 + (i + 1) % 5)));
        let g = Graph::new(10, edges).unwrap();
        let err = run_mta(&g, &mut SplitStrategy::fixed_order(vec![0, 0])).unwrap_err();
        assert_eq!(err, MtaError::StrategyContract { strategy: "FixedOrder".into(), vertex: 0 });
    }
}
