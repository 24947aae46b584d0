//! Finite simple graphs with a canonical edge order.
//!
//! The edge order is load-bearing: the line graph names its vertices by edge
//! index, and every downstream structure (matching complexes, Morse trees,
//! boundary matrices) inherits that numbering. Generators in [`generators`]
//! define the canonical order for each graph family; it is preserved verbatim
//! by [`Graph::edges`].

use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use thiserror::Error;

pub mod generators;
pub mod io;

pub use generators::{
    generate, hexagon_row_count, honeycomb_with_layout, polygon_line_a_vertices, GeneratorSpec,
    HoneycombLayout,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {vertex} out of range: graph has {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("edge index {index} out of range: graph has {m} edges")]
    EdgeOutOfRange { index: usize, m: usize },
    #[error("self-loop at vertex {0} is not allowed")]
    SelfLoop(usize),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("edge ({0}, {1}) already present")]
    EdgeAlreadyPresent(usize, usize),
    #[error("invalid generator parameter: {0}")]
    InvalidParameter(String),
    #[error("parse error: {0}")]
    Parse(String),
}

/// An undirected simple graph on vertices `0..n`.
///
/// Edges are stored as `(u, v)` with `u < v`, in a canonical order fixed at
/// construction. `labels`, when present, maps each vertex of a line graph
/// back to the source-graph edge it came from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawGraph", into = "RawGraph")]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    labels: Option<Vec<(usize, usize)>>,
}

#[derive(Serialize, Deserialize)]
struct RawGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    labels: Option<Vec<(usize, usize)>>,
}

impl From<Graph> for RawGraph {
    fn from(g: Graph) -> Self {
        RawGraph { n: g.n, edges: g.edges, labels: g.labels }
    }
}

impl TryFrom<RawGraph> for Graph {
    type Error = GraphError;
    fn try_from(raw: RawGraph) -> Result<Self, GraphError> {
        let mut g = Graph::new(raw.n, raw.edges)?;
        g.labels = raw.labels;
        Ok(g)
    }
}

impl Graph {
    /// Builds a graph, normalizing each edge to `(min, max)` but preserving
    /// the given edge order. Rejects self-loops, duplicates, and endpoints
    /// outside `0..n`.
    pub fn new(n: usize, edges: Vec<(usize, usize)>) -> Result<Self, GraphError> {
        let mut seen = BTreeSet::new();
        let mut normalized = Vec::with_capacity(edges.len());
        for (a, b) in edges {
            if a == b {
                return Err(GraphError::SelfLoop(a));
            }
            let e = (a.min(b), a.max(b));
            if e.1 >= n {
                return Err(GraphError::VertexOutOfRange { vertex: e.1, n });
            }
            if !seen.insert(e) {
                return Err(GraphError::DuplicateEdge(e.0, e.1));
            }
            normalized.push(e);
        }
        Ok(Graph { n, edges: normalized, labels: None })
    }

    pub fn n_vertices(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn labels(&self) -> Option<&[(usize, usize)]> {
        self.labels.as_deref()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        let e = (u.min(v), u.max(v));
        self.edges.contains(&e)
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v >= self.n {
            Err(GraphError::VertexOutOfRange { vertex: v, n: self.n })
        } else {
            Ok(())
        }
    }

    pub fn degree(&self, v: usize) -> Result<usize, GraphError> {
        self.check_vertex(v)?;
        Ok(self.edges.iter().filter(|&&(a, b)| a == v || b == v).count())
    }

    /// Neighbors of `v`, ascending.
    pub fn neighbors(&self, v: usize) -> Result<Vec<usize>, GraphError> {
        self.check_vertex(v)?;
        let mut out: Vec<usize> = self
            .edges
            .iter()
            .filter_map(|&(a, b)| {
                if a == v {
                    Some(b)
                } else if b == v {
                    Some(a)
                } else {
                    None
                }
            })
            .collect();
        out.sort_unstable();
        Ok(out)
    }

    /// `N[v] = N(v) ∪ {v}`, ascending.
    pub fn closed_neighborhood(&self, v: usize) -> Result<Vec<usize>, GraphError> {
        let mut out = self.neighbors(v)?;
        out.push(v);
        out.sort_unstable();
        Ok(out)
    }

    /// The line graph: one vertex per edge (in canonical edge order),
    /// adjacent when the source edges share an endpoint. The result carries
    /// `labels` mapping each vertex back to its source edge.
    pub fn line_graph(&self) -> Graph {
        let m = self.edges.len();
        let mut lg_edges = Vec::new();
        for i in 0..m {
            for j in (i + 1)..m {
                let (a, b) = self.edges[i];
                let (c, d) = self.edges[j];
                if a == c || a == d || b == c || b == d {
                    lg_edges.push((i, j));
                }
            }
        }
        Graph { n: m, edges: lg_edges, labels: Some(self.edges.clone()) }
    }

    /// Appends edge `(u, v)`, growing the vertex set if an endpoint is new.
    /// Line-graph labels do not survive mutation and are dropped.
    pub fn add_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        let e = (u.min(v), u.max(v));
        if self.edges.contains(&e) {
            return Err(GraphError::EdgeAlreadyPresent(e.0, e.1));
        }
        let mut edges = self.edges.clone();
        edges.push(e);
        Ok(Graph { n: self.n.max(e.1 + 1), edges, labels: None })
    }

    /// Removes the edge at canonical index `index`; vertices are kept, so the
    /// other endpoints' numbering is unchanged.
    pub fn delete_edge(&self, index: usize) -> Result<Graph, GraphError> {
        if index >= self.edges.len() {
            return Err(GraphError::EdgeOutOfRange { index, m: self.edges.len() });
        }
        let mut edges = self.edges.clone();
        edges.remove(index);
        Ok(Graph { n: self.n, edges, labels: None })
    }

    /// Equality as abstract labeled graphs: same vertex count and the same
    /// edge *set*, regardless of canonical order.
    pub fn is_same_graph(&self, other: &Graph) -> bool {
        self.n == other.n
            && self.edges.len() == other.edges.len()
            && self.edges.iter().collect::<BTreeSet<_>>() == other.edges.iter().collect::<BTreeSet<_>>()
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut deg = vec![0usize; self.n];
        for &(a, b) in &self.edges {
            deg[a] += 1;
            deg[b] += 1;
        }
        deg.sort_unstable();
        deg
    }
}

/// One-point union: identifies `x_h` in `h` with `x_g` in `g`. Vertices of
/// `g` keep their ids; the remaining vertices of `h` are appended in
/// increasing original order; edges list `g`'s first, then `h`'s remapped.
pub fn wedge_sum(g: &Graph, h: &Graph, x_g: usize, x_h: usize) -> Result<Graph, GraphError> {
    g.check_vertex(x_g)?;
    h.check_vertex(x_h)?;
    let mut map = vec![0usize; h.n];
    let mut next = g.n;
    for (v, slot) in map.iter_mut().enumerate() {
        if v == x_h {
            *slot = x_g;
        } else {
            *slot = next;
            next += 1;
        }
    }
    let mut edges = g.edges.clone();
    for &(a, b) in &h.edges {
        let (a, b) = (map[a], map[b]);
        edges.push((a.min(b), a.max(b)));
    }
    Graph::new(g.n + h.n - 1, edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn new_rejects_bad_edges() {
        assert!(matches!(Graph::new(3, vec![(0, 0)]), Err(GraphError::SelfLoop(0))));
        assert!(matches!(Graph::new(3, vec![(0, 3)]), Err(GraphError::VertexOutOfRange { .. })));
        assert!(matches!(
            Graph::new(3, vec![(0, 1), (1, 0)]),
            Err(GraphError::DuplicateEdge(0, 1))
        ));
    }

    #[test]
    fn neighborhoods() {
        let g = Graph::new(4, vec![(0, 1), (1, 2), (1, 3)]).unwrap();
        assert_eq!(g.neighbors(1).unwrap(), vec![0, 2, 3]);
        assert_eq!(g.closed_neighborhood(1).unwrap(), vec![0, 1, 2, 3]);
        assert_eq!(g.closed_neighborhood(3).unwrap(), vec![1, 3]);
        assert!(g.closed_neighborhood(4).is_err());
    }

    #[test]
    fn line_graph_of_path3_is_single_edge() {
        let p3 = Graph::new(3, vec![(0, 1), (1, 2)]).unwrap();
        let lg = p3.line_graph();
        assert_eq!(lg.n_vertices(), 2);
        assert_eq!(lg.edges(), &[(0, 1)]);
        assert_eq!(lg.labels().unwrap(), &[(0, 1), (1, 2)]);
    }

    #[test]
    fn add_then_delete_edge_round_trips() {
        let g = Graph::new(4, vec![(0, 1), (2, 3)]).unwrap();
        let bigger = g.add_edge(1, 2).unwrap();
        assert_eq!(bigger.edge_count(), 3);
        assert!(bigger.add_edge(2, 1).is_err());
        let back = bigger.delete_edge(2).unwrap();
        assert!(back.is_same_graph(&g));
    }

    #[test]
    fn wedge_of_two_edges_is_path3() {
        let e = Graph::new(2, vec![(0, 1)]).unwrap();
        let w = wedge_sum(&e, &e, 1, 0).unwrap();
        let p3 = Graph::new(3, vec![(0, 1), (1, 2)]).unwrap();
        assert!(w.is_same_graph(&p3));
    }

    #[test]
    fn wedge_vertex_count() {
        let a = Graph::new(5, vec![(0, 1), (1, 2), (3, 4)]).unwrap();
        let b = Graph::new(4, vec![(0, 3), (1, 2)]).unwrap();
        let w = wedge_sum(&a, &b, 2, 3).unwrap();
        assert_eq!(w.n_vertices(), 5 + 4 - 1);
        assert_eq!(w.edge_count(), 5);
    }
}
