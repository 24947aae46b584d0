use crate::MtaError;
use graph_core::{Graph, HoneycombLayout};
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;

/// Where a line-graph vertex of a two-row honeycomb strip sits: horizontal
/// edges by vertex row (top, middle, bottom), vertical edges by the pair of
/// rows they join.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum RoleClass {
    Top,
    Mid,
    Bottom,
    UpperVertical,
    LowerVertical,
}

/// Role plus doubled x-coordinate of the underlying edge's midpoint. Doubling
/// keeps the coordinate integral for both horizontal and vertical edges.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Role {
    pub class: RoleClass,
    pub dx: i64,
}

/// Rule for choosing the splitting vertex at a split-ready node.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SplitStrategy {
    /// Lowest-index live vertex.
    Lexicographic,
    /// First live vertex from a preferred list; for polygon chains the list
    /// is the shared polygon-joining edges, which every critical cell must
    /// decide first.
    SmallestAj { a_vertices: Vec<usize> },
    /// Case table for the `2 x 1 x t` honeycomb strip, keyed on the shape of
    /// the leftmost undecided hexagon pair; falls back to lexicographic with
    /// a warning if the configuration is not in the table.
    Honeycomb21Cases { roles: Vec<Role> },
    /// Lowest-index live vertex outside `avoid`. With seeds whose closed
    /// neighborhoods are pairwise disjoint this forces every critical cell
    /// to contain at least one vertex per seed neighborhood.
    AvoidSet { avoid: BTreeSet<usize> },
    /// Scripted split sequence, consumed in depth-first left-first order.
    FixedOrder { order: Vec<usize>, cursor: usize },
}

impl SplitStrategy {
    pub fn name(&self) -> &'static str {
        match self {
            SplitStrategy::Lexicographic => "Lexicographic",
            SplitStrategy::SmallestAj { .. } => "SmallestAj",
            SplitStrategy::Honeycomb21Cases { .. } => "Honeycomb21Cases",
            SplitStrategy::AvoidSet { .. } => "AvoidSet",
            SplitStrategy::FixedOrder { .. } => "FixedOrder",
        }
    }

    pub fn avoid(seeds: impl IntoIterator<Item = usize>) -> Self {
        SplitStrategy::AvoidSet { avoid: seeds.into_iter().collect() }
    }

    pub fn fixed_order(order: Vec<usize>) -> Self {
        SplitStrategy::FixedOrder { order, cursor: 0 }
    }

    pub(crate) fn choose(
        &mut self,
        g: &Graph,
        live: &BTreeSet<usize>,
        warnings: &mut Vec<String>,
    ) -> Result<usize, MtaError> {
        let lowest = *live.iter().next().expect("split node has live vertices");
        match self {
            SplitStrategy::Lexicographic => Ok(lowest),
            SplitStrategy::SmallestAj { a_vertices } => {
                match a_vertices.iter().find(|v| live.contains(v)) {
                    Some(&v) => Ok(v),
                    None => {
                        warnings.push(format!(
                            "no preferred vertex is live at a split-ready node; \
                             splitting lexicographically at {lowest}"
                        ));
                        Ok(lowest)
                    }
                }
            }
            SplitStrategy::Honeycomb21Cases { roles } => {
                Ok(honeycomb21_choose(g, live, roles, warnings, lowest))
            }
            SplitStrategy::AvoidSet { avoid } => live
                .iter()
                .find(|v| !avoid.contains(v))
                .copied()
                .ok_or(MtaError::AvoidSetExhausted),
            SplitStrategy::FixedOrder { order, cursor } => {
                let v = order
                    .get(*cursor)
                    .copied()
                    .ok_or(MtaError::FixedOrderExhausted { consumed: *cursor })?;
                *cursor += 1;
                Ok(v)
            }
        }
    }
}

fn live_degree(g: &Graph, live: &BTreeSet<usize>, v: usize) -> usize {
    g.neighbors(v).expect("live vertex in range").into_iter().filter(|u| live.contains(u)).count()
}

/// Detects the "snowman" configuration: a hexagon and a triangle sharing an
/// edge, standing alone in the live subgraph. Returns the lowest-index
/// degree-2 vertex adjacent to exactly one of the two shared (degree-3)
/// vertices; splitting there collapses the configuration into exactly two
/// critical leaves, each adding two vertices to `A`.
pub fn snowman_split_vertex(g: &Graph, live: &BTreeSet<usize>) -> Option<usize> {
    if live.len() != 7 {
        return None;
    }
    let degs: Vec<(usize, usize)> = live.iter().map(|&v| (v, live_degree(g, live, v))).collect();
    let mut sorted: Vec<usize> = degs.iter().map(|&(_, d)| d).collect();
    sorted.sort_unstable();
    if sorted != [2, 2, 2, 2, 2, 3, 3] {
        return None;
    }
    let threes: Vec<usize> = degs.iter().filter(|&&(_, d)| d == 3).map(|&(v, _)| v).collect();
    if !g.has_edge(threes[0], threes[1]) {
        return None;
    }
    degs.iter()
        .filter(|&&(v, d)| {
            d == 2 && threes.iter().filter(|&&t| g.has_edge(v, t)).count() == 1
        })
        .map(|&(v, _)| v)
        .next()
}

/// Two triangles hanging off one hexagon: all four degree-3 vertices are
/// interchangeable, so take the lowest.
fn two_triangle_hex_split_vertex(g: &Graph, live: &BTreeSet<usize>) -> Option<usize> {
    if live.len() != 8 {
        return None;
    }
    let degs: Vec<(usize, usize)> = live.iter().map(|&v| (v, live_degree(g, live, v))).collect();
    let mut sorted: Vec<usize> = degs.iter().map(|&(_, d)| d).collect();
    sorted.sort_unstable();
    if sorted != [2, 2, 2, 2, 3, 3, 3, 3] {
        return None;
    }
    degs.iter().filter(|&&(_, d)| d == 3).map(|&(v, _)| v).next()
}

/// Offsets of the leftmost live top / upper-vertical / lower-vertical /
/// bottom vertices from the leftmost live middle vertex, for each case of
/// the strip analysis, with the vertex to split on.
const CASE_TABLE: [((i64, i64, i64, i64), Pick); 6] = [
    ((0, -1, 1, 2), Pick::LeftmostMid),
    ((-2, -1, 1, 2), Pick::LeftmostTop),
    ((2, 3, 1, 2), Pick::SecondMid),
    ((-2, -1, 1, 0), Pick::LeftmostBottom),
    ((-2, -1, 5, 4), Pick::LeftmostUpper),
    ((0, 1, 3, 2), Pick::LeftmostTop),
];

#[derive(Clone, Copy)]
enum Pick {
    LeftmostMid,
    SecondMid,
    LeftmostTop,
    LeftmostBottom,
    LeftmostUpper,
}

fn honeycomb21_choose(
    g: &Graph,
    live: &BTreeSet<usize>,
    roles: &[Role],
    warnings: &mut Vec<String>,
    lowest: usize,
) -> usize {
    if let Some(v) = snowman_split_vertex(g, live) {
        return v;
    }
    if let Some(v) = two_triangle_hex_split_vertex(g, live) {
        return v;
    }
    // Terminal triangle (the three edges around one base vertex): any split
    // yields the same pair of leaves, so the choice carries no information.
    if live.len() == 3 && live.iter().all(|&v| live_degree(g, live, v) == 2) {
        return lowest;
    }
    if live.iter().all(|&v| v < roles.len()) {
        // Leftmost live vertex of each class, sorted by midpoint then id.
        let leftmost = |class: RoleClass| -> Vec<(i64, usize)> {
            let mut picks: Vec<(i64, usize)> = live
                .iter()
                .filter(|&&v| roles[v].class == class)
                .map(|&v| (roles[v].dx, v))
                .collect();
            picks.sort_unstable();
            picks
        };
        let mid = leftmost(RoleClass::Mid);
        // The strip may be processed in either vertical orientation; try the
        // table as read, then with top and bottom exchanged.
        let orientations = [
            (RoleClass::Top, RoleClass::UpperVertical, RoleClass::LowerVertical, RoleClass::Bottom),
            (RoleClass::Bottom, RoleClass::LowerVertical, RoleClass::UpperVertical, RoleClass::Top),
        ];
        for (top, upper, lower, bottom) in orientations {
            let (t, u, w, b) = (leftmost(top), leftmost(upper), leftmost(lower), leftmost(bottom));
            let (Some(m0), Some(t0), Some(u0), Some(w0), Some(b0)) =
                (mid.first(), t.first(), u.first(), w.first(), b.first())
            else {
                continue;
            };
            let fp = (t0.0 - m0.0, u0.0 - m0.0, w0.0 - m0.0, b0.0 - m0.0);
            for &(key, pick) in &CASE_TABLE {
                if fp != key {
                    continue;
                }
                let chosen = match pick {
                    Pick::LeftmostMid => Some(m0.1),
                    Pick::SecondMid => mid.get(1).map(|p| p.1),
                    Pick::LeftmostTop => Some(t0.1),
                    Pick::LeftmostBottom => Some(b0.1),
                    Pick::LeftmostUpper => Some(u0.1),
                };
                if let Some(v) = chosen {
                    return v;
                }
            }
        }
    }
    warnings.push(format!(
        "live configuration {:?} is outside the honeycomb case table; \
         splitting lexicographically at {lowest}",
        live.iter().collect::<Vec<_>>()
    ));
    lowest
}

/// Builds the strip strategy from honeycomb geometry: each edge of the base
/// graph becomes a line-graph vertex, classified by row and annotated with
/// its doubled x-midpoint. Rejects honeycombs that are not two hexagon rows
/// tall.
pub fn honeycomb21_strategy(
    honeycomb: &Graph,
    layout: &HoneycombLayout,
) -> Result<SplitStrategy, MtaError> {
    if layout.vertex_pos.len() != honeycomb.n_vertices() {
        return Err(MtaError::WrongFamily(format!(
            "layout describes {} vertices, graph has {}",
            layout.vertex_pos.len(),
            honeycomb.n_vertices()
        )));
    }
    let max_level = layout.vertex_pos.iter().map(|&(level, _)| level).max().unwrap_or(0);
    if max_level != 2 {
        return Err(MtaError::WrongFamily(format!(
            "expected vertex rows 0..=2, found 0..={max_level}"
        )));
    }
    let roles = honeycomb
        .edges()
        .iter()
        .map(|&(u, v)| {
            let (lu, xu) = layout.vertex_pos[u];
            let (lv, xv) = layout.vertex_pos[v];
            if lu == lv {
                let class = match lu {
                    0 => RoleClass::Top,
                    1 => RoleClass::Mid,
                    _ => RoleClass::Bottom,
                };
                Role { class, dx: xu + xv }
            } else {
                let class =
                    if lu.min(lv) == 0 { RoleClass::UpperVertical } else { RoleClass::LowerVertical };
                Role { class, dx: 2 * xu.min(xv) }
            }
        })
        .collect();
    Ok(SplitStrategy::Honeycomb21Cases { roles })
}

#[cfg(test)]
mod tests {
    use super::*;
    use graph_core::{generate, honeycomb_with_layout, GeneratorSpec};

    fn snowman() -> Graph {
        // Hexagon 0-1-2-3-4-5 and triangle 0-1-6 sharing the edge (0, 1).
        Graph::new(7, vec![(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (0, 5), (0, 6), (1, 6)])
            .unwrap()
    }

    #[test]
    fn snowman_rule_skips_the_apex() {
        let g = snowman();
        let live: BTreeSet<usize> = (0..7).collect();
        // 2 and 5 flank the shared edge; 6 (the apex) touches both shared
        // vertices and stays out of the running.
        assert_eq!(snowman_split_vertex(&g, &live), Some(2));
    }

    #[test]
    fn snowman_rule_rejects_other_shapes() {
        let hexagon = generate(&GeneratorSpec::Cycle { n: 6 }).unwrap();
        assert_eq!(snowman_split_vertex(&hexagon, &(0..6).collect()), None);
        let c7 = generate(&GeneratorSpec::Cycle { n: 7 }).unwrap();
        assert_eq!(snowman_split_vertex(&c7, &(0..7).collect()), None);
    }

    #[test]
    fn strip_strategy_rejects_tall_honeycombs() {
        let (g, layout) = honeycomb_with_layout(3, 2, 1).unwrap();
        assert!(matches!(honeycomb21_strategy(&g, &layout), Err(MtaError::WrongFamily(_))));
    }

    #[test]
    fn strip_roles_classify_every_edge() {
        let (g, layout) = honeycomb_with_layout(2, 1, 2).unwrap();
        let SplitStrategy::Honeycomb21Cases { roles } = honeycomb21_strategy(&g, &layout).unwrap()
        else {
            panic!("wrong variant")
        };
        assert_eq!(roles.len(), g.edge_count());
        let verticals =
            roles.iter().filter(|r| matches!(r.class, RoleClass::UpperVertical | RoleClass::LowerVertical)).count();
        // t+1 verticals per hexagon row.
        assert_eq!(verticals, 6);
        // Horizontal midpoints are odd, vertical ones even.
        for r in &roles {
            let horizontal = matches!(r.class, RoleClass::Top | RoleClass::Mid | RoleClass::Bottom);
            assert_eq!(r.dx.rem_euclid(2) == 1, horizontal, "{r:?}");
        }
    }
}
