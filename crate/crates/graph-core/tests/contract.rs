use graph_core::generators::{generate, polygon_line_a_vertices, GeneratorSpec};
use graph_core::{wedge_sum, Graph};

fn cycle(n: usize) -> Graph {
    generate(&GeneratorSpec::Cycle { n }).unwrap()
}

#[test]
fn line_graph_of_cycle_is_cycle() {
    for n in 3..9 {
        let c = cycle(n);
        assert!(c.line_graph().is_same_graph(&c), "L(C_{n}) != C_{n}");
    }
}

#[test]
fn line_graph_labels_round_trip() {
    let specs = [
        GeneratorSpec::Path { n: 6 },
        GeneratorSpec::Cycle { n: 7 },
        GeneratorSpec::Caterpillar { legs: vec![2, 0, 3] },
        GeneratorSpec::PerfectBinaryTree { h: 3 },
        GeneratorSpec::PolygonLine { n: 4, t: 2 },
        GeneratorSpec::Honeycomb { r: 2, s: 1, t: 2 },
    ];
    for spec in &specs {
        let g = generate(spec).unwrap();
        let lg = g.line_graph();
        assert_eq!(lg.labels().unwrap(), g.edges(), "{spec:?}");
        assert_eq!(lg.n_vertices(), g.edge_count());
    }
}

#[test]
fn line_graph_of_honeycomb_112() {
    let g = generate(&GeneratorSpec::Honeycomb { r: 1, s: 1, t: 2 }).unwrap();
    let lg = g.line_graph();
    let expected = Graph::new(
        11,
        vec![
            (0, 1),
            (0, 2),
            (1, 7),
            (2, 3),
            (2, 4),
            (3, 4),
            (3, 5),
            (4, 8),
            (4, 9),
            (5, 6),
            (6, 10),
            (7, 8),
            (8, 9),
            (9, 10),
        ],
    )
    .unwrap();
    assert!(lg.is_same_graph(&expected));
}

#[test]
fn closed_neighborhood_of_shared_polygon_edge() {
    let g = generate(&GeneratorSpec::PolygonLine { n: 3, t: 2 }).unwrap();
    let lg = g.line_graph();
    let a = polygon_line_a_vertices(3, 2).unwrap();
    assert_eq!(a, vec![0, 5, 10]);
    // the middle shared edge touches two polygons, hence degree 4
    let nbhd = lg.closed_neighborhood(a[1]).unwrap();
    assert_eq!(nbhd.len(), 5);
    assert!(nbhd.contains(&a[1]));
}

/// Canonical form of a tree as the minimum AHU string over all roots.
fn tree_canon(g: &Graph) -> String {
    fn ahu(adj: &[Vec<usize>], v: usize, parent: Option<usize>) -> String {
        let mut subs: Vec<String> = adj[v]
            .iter()
            .filter(|&&w| Some(w) != parent)
            .map(|&w| ahu(adj, w, Some(v)))
            .collect();
        subs.sort();
        format!("({})", subs.concat())
    }
    let adj: Vec<Vec<usize>> = (0..g.n_vertices()).map(|v| g.neighbors(v).unwrap()).collect();
    (0..g.n_vertices()).map(|v| ahu(&adj, v, None)).min().unwrap()
}

#[test]
fn pbt_is_wedge_of_two_antenna_trees_at_tips() {
    for h in 2..4usize {
        let pbt = generate(&GeneratorSpec::PerfectBinaryTree { h }).unwrap();
        let ant = generate(&GeneratorSpec::AntennaTree { h: h - 1 }).unwrap();
        let tip = ant.n_vertices() - 1;
        let w = wedge_sum(&ant, &ant, tip, tip).unwrap();
        assert_eq!(w.n_vertices(), pbt.n_vertices());
        assert_eq!(tree_canon(&w), tree_canon(&pbt), "h = {h}");
    }
}

#[test]
fn wedge_with_single_edge_is_pendant() {
    let g = generate(&GeneratorSpec::Cycle { n: 5 }).unwrap();
    let p2 = generate(&GeneratorSpec::Path { n: 2 }).unwrap();
    let w = wedge_sum(&g, &p2, 3, 0).unwrap();
    assert_eq!(w.n_vertices(), 6);
    assert_eq!(w.edge_count(), 6);
    assert_eq!(w.degree(3).unwrap(), 3);
    assert_eq!(w.degree(5).unwrap(), 1);
}

#[test]
fn generators_are_deterministic() {
    let specs = [
        GeneratorSpec::OneChildTree { i: 5 },
        GeneratorSpec::PolygonLine { n: 5, t: 3 },
        GeneratorSpec::Honeycomb { r: 3, s: 2, t: 2 },
    ];
    for spec in &specs {
        assert_eq!(generate(spec).unwrap(), generate(spec).unwrap());
    }
}

#[test]
fn perfect_caterpillar_matches_uniform_legs() {
    let a = generate(&GeneratorSpec::PerfectCaterpillar { m: 2, n: 4 }).unwrap();
    let b = generate(&GeneratorSpec::Caterpillar { legs: vec![2; 4] }).unwrap();
    assert_eq!(a, b);
    assert_eq!(a.edge_count(), 3 + 8);
}
