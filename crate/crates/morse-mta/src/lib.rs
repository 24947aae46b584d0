//! Matching tree algorithm for independence complexes.
//!
//! A matching tree recursively partitions the faces of an independence
//! complex. Each node `Σ(A, B)` stands for the independent sets containing
//! all of `A` and none of `B`; forced moves (free vertices, pivots) pair
//! faces off two at a time, and when no forced move exists a strategy picks
//! a splitting vertex. The leaves that end with `A ∪ B = V` and `A ≠ ∅`
//! survive as critical cells of a discrete Morse function, so the complex is
//! homotopy equivalent to a CW complex with one cell of dimension `|A| - 1`
//! per surviving leaf.
//!
//! Callers interested in matching complexes run the tree on a line graph;
//! the crate itself only sees independence complexes.

use complex_core::ComplexError;
use graph_core::GraphError;
use thiserror::Error;

mod morse;
mod report;
mod strategy;
mod tree;

pub use morse::{
    induced_morse_matching, lower_bound_check, verify_acyclic, LowerBoundOutcome, MorseMatching,
    MORSE_MATCHING_VERTEX_LIMIT,
};
pub use report::{critical_cells, CriticalReport};
pub use strategy::{honeycomb21_strategy, snowman_split_vertex, Role, RoleClass, SplitStrategy};
pub use tree::{
    run_mta, split_prepare, split_prepare_with, MatchingTree, MtaNode, NodeId, NodeKind,
    PrepareMove, PrepareOutcome, PreparedNode, Side, Step,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MtaError {
    #[error("strategy {strategy} chose vertex {vertex}, which is not live at this node")]
    StrategyContract { strategy: String, vertex: usize },
    #[error("fixed split order ran out after {consumed} splits")]
    FixedOrderExhausted { consumed: usize },
    #[error("every live vertex at a split-ready node is avoided; seeds cannot satisfy the disjointness precondition")]
    AvoidSetExhausted,
    #[error("seeds {a} and {b} have overlapping closed neighborhoods")]
    SeedsNotDisjoint { a: usize, b: usize },
    #[error("critical cell of size {min} found, below the guaranteed bound {bound}; the avoid-set run is buggy")]
    LowerBoundViolated { min: usize, bound: usize },
    #[error("graph has {n} vertices; face-poset reconstruction is capped at {max}")]
    TooManyVertices { n: usize, max: usize },
    #[error("matching tree was built over {tree_n} vertices but the graph has {graph_n}")]
    TreeGraphMismatch { tree_n: usize, graph_n: usize },
    #[error("not a two-row honeycomb: {0}")]
    WrongFamily(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Complex(#[from] ComplexError),
}
