//! Graph family generators with fixed canonical labelings.
//!
//! Each generator defines both the vertex numbering and the canonical edge
//! order. Downstream code identifies line-graph vertices by edge index, so
//! these orders are part of the public contract, not an implementation
//! detail.

use crate::{Graph, GraphError};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "kebab-case")]
pub enum GeneratorSpec {
    /// Path on `n >= 2` vertices `0..n`, edges `(i, i+1)`.
    Path { n: usize },
    /// Cycle on `n >= 3` vertices, edges `(i, i+1)` then `(0, n-1)`.
    Cycle { n: usize },
    /// Spine `0..legs.len()`, with `legs[i]` pendant vertices on spine vertex
    /// `i`. Spine edges first, then legs grouped by spine vertex.
    Caterpillar { legs: Vec<usize> },
    /// Caterpillar with `n` spine vertices and `m` legs each.
    PerfectCaterpillar { m: usize, n: usize },
    /// The `i`-th one-child tree (`i >= 1`): start from a path on three
    /// vertices; each step hangs a fresh path of length two on the previous
    /// step's middle vertex.
    OneChildTree { i: usize },
    /// Perfect binary tree of height `h >= 1` in heap order (children of `k`
    /// are `2k+1`, `2k+2`); edges in order of the parent index.
    PerfectBinaryTree { h: usize },
    /// Perfect binary tree of height `h >= 1` plus a pendant "antenna"
    /// attached to the root; the antenna tip is the last vertex and the
    /// antenna edge is last in the canonical order.
    AntennaTree { h: usize },
    /// Chain of `t >= 1` convex `2n`-gons (`n >= 2`), consecutive polygons
    /// sharing one edge.
    PolygonLine { n: usize, t: usize },
    /// Hexagon tiling of a convex region with side lengths `r`, `s`, `t`
    /// (all `>= 1`), laid out as a brick wall with `r+s-1` rows.
    Honeycomb { r: usize, s: usize, t: usize },
}

pub fn generate(spec: &GeneratorSpec) -> Result<Graph, GraphError> {
    match *spec {
        GeneratorSpec::Path { n } => path(n),
        GeneratorSpec::Cycle { n } => cycle(n),
        GeneratorSpec::Caterpillar { ref legs } => caterpillar(legs),
        GeneratorSpec::PerfectCaterpillar { m, n } => {
            if n == 0 {
                return Err(GraphError::InvalidParameter("perfect caterpillar needs n >= 1".into()));
            }
            caterpillar(&vec![m; n])
        }
        GeneratorSpec::OneChildTree { i } => one_child_tree(i),
        GeneratorSpec::PerfectBinaryTree { h } => perfect_binary_tree(h),
        GeneratorSpec::AntennaTree { h } => antenna_tree(h),
        GeneratorSpec::PolygonLine { n, t } => polygon_line(n, t),
        GeneratorSpec::Honeycomb { r, s, t } => honeycomb_with_layout(r, s, t).map(|(g, _)| g),
    }
}

fn path(n: usize) -> Result<Graph, GraphError> {
    if n < 2 {
        return Err(GraphError::InvalidParameter(format!("path needs n >= 2, got {n}")));
    }
    Graph::new(n, (0..n - 1).map(|i| (i, i + 1)).collect())
}

fn cycle(n: usize) -> Result<Graph, GraphError> {
    if n < 3 {
        return Err(GraphError::InvalidParameter(format!("cycle needs n >= 3, got {n}")));
    }
    let mut edges: Vec<(usize, usize)> = (0..n - 1).map(|i| (i, i + 1)).collect();
    edges.push((0, n - 1));
    Graph::new(n, edges)
}

fn caterpillar(legs: &[usize]) -> Result<Graph, GraphError> {
    let n = legs.len();
    if n == 0 {
        return Err(GraphError::InvalidParameter("caterpillar needs at least one spine vertex".into()));
    }
    let mut edges: Vec<(usize, usize)> = (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect();
    let mut next = n;
    for (i, &m) in legs.iter().enumerate() {
        for _ in 0..m {
            edges.push((i, next));
            next += 1;
        }
    }
    Graph::new(next, edges)
}

fn one_child_tree(i: usize) -> Result<Graph, GraphError> {
    if i < 1 {
        return Err(GraphError::InvalidParameter("one-child tree needs i >= 1".into()));
    }
    // T_1 is the path 0-1-2 with middle vertex 1; step k appends 2k-1, 2k.
    let mut edges = vec![(0, 1), (1, 2)];
    let mut middle = 1;
    for k in 2..=i {
        let a = 2 * k - 1;
        let b = 2 * k;
        edges.push((middle, a));
        edges.push((a, b));
        middle = a;
    }
    Graph::new(2 * i + 1, edges)
}

fn perfect_binary_tree(h: usize) -> Result<Graph, GraphError> {
    if h < 1 {
        return Err(GraphError::InvalidParameter("perfect binary tree needs h >= 1".into()));
    }
    let n = (1usize << (h + 1)) - 1;
    let internal = (1usize << h) - 1;
    let mut edges = Vec::with_capacity(n - 1);
    for k in 0..internal {
        edges.push((k, 2 * k + 1));
        edges.push((k, 2 * k + 2));
    }
    Graph::new(n, edges)
}

fn antenna_tree(h: usize) -> Result<Graph, GraphError> {
    let pbt = perfect_binary_tree(h)?;
    pbt.add_edge(0, pbt.n_vertices())
}

/// Canonical `2n`-gon chain. Polygon `j` (1-based) is bounded by the shared
/// edge `a_j`, an upper arc through `n-2` intermediate vertices, the next
/// shared edge `a_{j+1}`, and a lower arc. Edges are flattened polygon by
/// polygon as `a_j`, upper arc, lower arc, with the closing `a_{t+1}` last,
/// which puts `a_j` at edge index `(j-1)(2n-1)`.
fn polygon_line(n: usize, t: usize) -> Result<Graph, GraphError> {
    if n < 2 {
        return Err(GraphError::InvalidParameter(format!("polygon line needs n >= 2, got {n}")));
    }
    if t < 1 {
        return Err(GraphError::InvalidParameter(format!("polygon line needs t >= 1, got {t}")));
    }
    let p = |j: usize| (j - 1) * (2 * n - 2); // shared-edge top endpoint, j = 1..=t+1
    let mut edges = Vec::with_capacity((2 * n - 1) * t + 1);
    for j in 1..=t {
        let (pj, qj) = (p(j), p(j) + 1);
        edges.push((pj, qj)); // a_j
        let upper: Vec<usize> = std::iter::once(pj)
            .chain((1..=n - 2).map(|i| pj + 1 + i))
            .chain(std::iter::once(p(j + 1)))
            .collect();
        for w in upper.windows(2) {
            edges.push((w[0], w[1]));
        }
        let lower: Vec<usize> = std::iter::once(qj)
            .chain((1..=n - 2).map(|i| pj + (n - 1) + i))
            .chain(std::iter::once(p(j + 1) + 1))
            .collect();
        for w in lower.windows(2) {
            edges.push((w[0], w[1]));
        }
    }
    edges.push((p(t + 1), p(t + 1) + 1)); // a_{t+1}
    Graph::new(2 * (n - 1) * t + 2, edges)
}

/// Line-graph vertex ids of the shared edges `a_1, ..., a_{t+1}` of
/// `PolygonLine(n, t)`; these are the edges every matching must eventually
/// decide, and the preferred split points.
pub fn polygon_line_a_vertices(n: usize, t: usize) -> Result<Vec<usize>, GraphError> {
    if n < 2 || t < 1 {
        return Err(GraphError::InvalidParameter(format!("polygon line needs n >= 2, t >= 1, got ({n}, {t})")));
    }
    Ok((0..=t).map(|j| j * (2 * n - 1)).collect())
}

/// Number of hexagons in row `i` (1-based) of the `r x s x t` honeycomb.
/// Rows run `1..=r+s-1`; counts ramp up from `t` to `t + min(r,s) - 1`,
/// plateau, and ramp back down.
pub fn hexagon_row_count(r: usize, s: usize, t: usize, i: usize) -> Result<usize, GraphError> {
    if r < 1 || s < 1 || t < 1 {
        return Err(GraphError::InvalidParameter(format!("honeycomb needs r, s, t >= 1, got ({r}, {s}, {t})")));
    }
    let rows = r + s - 1;
    if i < 1 || i > rows {
        return Err(GraphError::InvalidParameter(format!("row index {i} out of range 1..={rows}")));
    }
    let lo = r.min(s);
    let hi = r.max(s);
    Ok(if i <= lo {
        t + i - 1
    } else if i <= hi {
        t + lo - 1
    } else {
        t + rows - i
    })
}

/// Geometry of a generated honeycomb: integer brick-wall coordinates for each
/// vertex and the six edge ids bounding each hexagon (rows top to bottom,
/// left to right).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HoneycombLayout {
    /// `(level, x)` per vertex id; levels run `0..=r+s-1` top to bottom.
    pub vertex_pos: Vec<(usize, i64)>,
    pub hexagons: Vec<[usize; 6]>,
}

/// Builds the honeycomb as a brick wall: row `i` holds `hexagon_row_count`
/// bricks of width 2; a row starts one unit left of its predecessor when it
/// is strictly wider, one unit right otherwise. Vertices are numbered row
/// major by `(level, x)` and edges sorted ascending.
pub fn honeycomb_with_layout(r: usize, s: usize, t: usize) -> Result<(Graph, HoneycombLayout), GraphError> {
    if r < 1 || s < 1 || t < 1 {
        return Err(GraphError::InvalidParameter(format!("honeycomb needs r, s, t >= 1, got ({r}, {s}, {t})")));
    }
    let rows = r + s - 1;
    let rho: Vec<i64> = (1..=rows)
        .map(|i| hexagon_row_count(r, s, t, i).map(|c| c as i64))
        .collect::<Result<_, _>>()?;

    let mut x_start = vec![0i64; rows];
    for i in 1..rows {
        x_start[i] = x_start[i - 1] + if rho[i] > rho[i - 1] { -1 } else { 1 };
    }
    let shift = -x_start.iter().copied().min().unwrap_or(0);

    // Collect brick corners, then number vertices row major.
    let mut vertex_ids: BTreeMap<(usize, i64), usize> = BTreeMap::new();
    let mut edge_set: std::collections::BTreeSet<((usize, i64), (usize, i64))> = Default::default();
    let mut brick_corners = Vec::new();
    for (row, (&width, &start)) in rho.iter().zip(&x_start).enumerate() {
        for b in 0..width {
            let o = start + shift + 2 * b;
            let (top, bot) = (row, row + 1);
            for dx in 0..=2 {
                vertex_ids.insert((top, o + dx), 0);
                vertex_ids.insert((bot, o + dx), 0);
            }
            for dx in 0..2 {
                edge_set.insert(((top, o + dx), (top, o + dx + 1)));
                edge_set.insert(((bot, o + dx), (bot, o + dx + 1)));
            }
            edge_set.insert(((top, o), (bot, o)));
            edge_set.insert(((top, o + 2), (bot, o + 2)));
            brick_corners.push((top, bot, o));
        }
    }
    for (i, (pos, id)) in vertex_ids.iter_mut().enumerate() {
        let _ = pos;
        *id = i;
    }

    let edges: Vec<(usize, usize)> = edge_set
        .iter()
        .map(|(a, b)| {
            let (ia, ib) = (vertex_ids[a], vertex_ids[b]);
            (ia.min(ib), ia.max(ib))
        })
        .collect();
    let mut edges = edges;
    edges.sort_unstable();

    let edge_index: BTreeMap<(usize, usize), usize> =
        edges.iter().copied().enumerate().map(|(i, e)| (e, i)).collect();
    let hexagons = brick_corners
        .iter()
        .map(|&(top, bot, o)| {
            let eid = |a: (usize, i64), b: (usize, i64)| {
                let (ia, ib) = (vertex_ids[&a], vertex_ids[&b]);
                edge_index[&(ia.min(ib), ia.max(ib))]
            };
            [
                eid((top, o), (top, o + 1)),
                eid((top, o + 1), (top, o + 2)),
                eid((bot, o), (bot, o + 1)),
                eid((bot, o + 1), (bot, o + 2)),
                eid((top, o), (bot, o)),
                eid((top, o + 2), (bot, o + 2)),
            ]
        })
        .collect();

    let mut vertex_pos = vec![(0usize, 0i64); vertex_ids.len()];
    for (&(level, x), &id) in &vertex_ids {
        vertex_pos[id] = (level, x);
    }
    let n = vertex_pos.len();
    Ok((Graph::new(n, edges)?, HoneycombLayout { vertex_pos, hexagons }))
}
