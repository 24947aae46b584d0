use graph_core::generators::{generate, GeneratorSpec};
use graph_core::Graph;
use proptest::prelude::*;

/// Random simple graph from an adjacency bitmap over vertex pairs.
fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        prop::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut k = 0;
            for u in 0..n {
                for v in (u + 1)..n {
                    if bits[k] {
                        edges.push((u, v));
                    }
                    k += 1;
                }
            }
            Graph::new(n, edges).unwrap()
        })
    })
}

proptest! {
    /// |E(L(G))| equals the number of incident edge pairs of G.
    #[test]
    fn line_graph_handshake(g in arb_graph(9)) {
        let lg = g.line_graph();
        let expected: usize = (0..g.n_vertices())
            .map(|v| { let d = g.degree(v).unwrap(); d * d.saturating_sub(1) / 2 })
            .sum();
        prop_assert_eq!(lg.edge_count(), expected);
        prop_assert_eq!(lg.n_vertices(), g.edge_count());
    }

    #[test]
    fn text_round_trip(g in arb_graph(9)) {
        let back = graph_core::io::from_text(&graph_core::io::to_text(&g)).unwrap();
        prop_assert!(back.is_same_graph(&g));
    }

    #[test]
    fn json_round_trip(g in arb_graph(9)) {
        let back = graph_core::io::from_json(&graph_core::io::to_json(&g)).unwrap();
        prop_assert_eq!(back, g);
    }

    /// Degree sum is twice the edge count.
    #[test]
    fn degree_sum(g in arb_graph(9)) {
        let total: usize = g.degree_sequence().iter().sum();
        prop_assert_eq!(total, 2 * g.edge_count());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    /// Caterpillar counts: n - 1 spine edges plus one edge per leg.
    #[test]
    fn caterpillar_counts(legs in prop::collection::vec(0usize..4, 1..6)) {
        let g = generate(&GeneratorSpec::Caterpillar { legs: legs.clone() }).unwrap();
        let total_legs: usize = legs.iter().sum();
        prop_assert_eq!(g.edge_count(), legs.len() - 1 + total_legs);
        prop_assert_eq!(g.n_vertices(), legs.len() + total_legs);
    }

    /// Honeycomb edge and hexagon counts for the 2x1xt family.
    #[test]
    fn honeycomb_21t_counts(t in 1usize..5) {
        let (g, layout) = graph_core::honeycomb_with_layout(2, 1, t).unwrap();
        prop_assert_eq!(g.edge_count(), 8 * t + 3);
        prop_assert_eq!(layout.hexagons.len(), 2 * t);
        let verticals = g
            .edges()
            .iter()
            .filter(|&&(u, v)| layout.vertex_pos[u].0 != layout.vertex_pos[v].0)
            .count();
        // one vertical per hexagon column boundary: rho(row) + 1 per row
        prop_assert_eq!(verticals, (t + 1) + (t + 1));
    }
}
