//! Interchange formats.
//!
//! Text: header `n m`, then one `u v` pair per line, 0-based, ascending
//! lexicographic. Writing normalizes to that order; canonical edge order is
//! *not* preserved by the text format. JSON keeps the stored edge order and
//! the optional line-graph labels.

use crate::{Graph, GraphError};

pub fn to_text(g: &Graph) -> String {
    let mut edges: Vec<_> = g.edges().to_vec();
    edges.sort_unstable();
    let mut out = format!("{} {}\n", g.n_vertices(), edges.len());
    for (u, v) in edges {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

pub fn from_text(s: &str) -> Result<Graph, GraphError> {
    let mut nums = s
        .split_whitespace()
        .map(|tok| tok.parse::<usize>().map_err(|_| GraphError::Parse(format!("expected integer, got '{tok}'"))));
    let mut next = |what: &str| {
        nums.next()
            .unwrap_or_else(|| Err(GraphError::Parse(format!("missing {what}"))))
    };
    let n = next("vertex count")?;
    let m = next("edge count")?;
    let mut edges = Vec::with_capacity(m);
    for i in 0..m {
        let u = next(&format!("edge {i} endpoint"))?;
        let v = next(&format!("edge {i} endpoint"))?;
        edges.push((u, v));
    }
    if nums.next().is_some() {
        return Err(GraphError::Parse("trailing data after edge list".into()));
    }
    Graph::new(n, edges)
}

pub fn to_json(g: &Graph) -> String {
    serde_json::to_string(g).expect("graph serialization cannot fail")
}

pub fn from_json(s: &str) -> Result<Graph, GraphError> {
    serde_json::from_str(s).map_err(|e| GraphError::Parse(e.to_string()))
}
