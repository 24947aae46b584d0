//! Helpers shared by the property and acceptance suites: enumeration of
//! pairwise-disjointness relations on labeled edges, their realization as
//! edge sets, and 1-skeleton metrics of the resulting matching complexes.

use complex_core::matching_complex;
use graph_core::Graph;

/// Tries to build an edge list whose pairwise disjointness is exactly
/// `rel` (`rel[i][j]` = edges i and j share no vertex). Vertices are
/// introduced contiguously, so any realizable relation is found.
pub fn realize(rel: &[Vec<bool>]) -> Option<Vec<(usize, usize)>> {
    fn bt(i: usize, rel: &[Vec<bool>], edges: &mut Vec<(usize, usize)>, used: usize) -> bool {
        if i == rel.len() {
            return true;
        }
        let mut candidates: Vec<(usize, usize)> = Vec::new();
        for u in 0..used {
            for v in (u + 1)..used {
                candidates.push((u, v));
            }
            candidates.push((u, used));
        }
        candidates.push((used, used + 1));
        'next: for (u, v) in candidates {
            for (j, &(a, b)) in edges.iter().enumerate() {
                let shared = usize::from(a == u || a == v) + usize::from(b == u || b == v);
                let want = if rel[i][j] { 0 } else { 1 };
                if shared != want {
                    continue 'next;
                }
            }
            edges.push((u, v));
            if bt(i + 1, rel, edges, used.max(v + 1)) {
                return true;
            }
            edges.pop();
        }
        false
    }
    let mut edges = Vec::with_capacity(rel.len());
    bt(0, rel, &mut edges, 0).then_some(edges)
}

pub fn relation_from_mask(k: usize, mask: u32) -> Vec<Vec<bool>> {
    let mut rel = vec![vec![false; k]; k];
    let pairs = (0..k).flat_map(|i| (i + 1..k).map(move |j| (i, j)));
    for (bit, (i, j)) in pairs.enumerate() {
        let disjoint = mask >> bit & 1 == 1;
        rel[i][j] = disjoint;
        rel[j][i] = disjoint;
    }
    rel
}

/// Is there a nonempty proper edge subset S with every edge outside S
/// incident to every edge of S?
pub fn has_separating_set(rel: &[Vec<bool>]) -> bool {
    let k = rel.len();
    (1..(1u32 << k) - 1).any(|s| {
        (0..k).all(|i| (0..k).all(|j| s >> i & 1 == 1 || s >> j & 1 != 1 || !rel[i][j]))
    })
}

/// All-pairs BFS distances on the 1-skeleton of the matching complex.
pub fn one_skeleton_distances(g: &Graph) -> Vec<Vec<Option<usize>>> {
    let complex = matching_complex(g, 10_000).expect("tiny complex");
    let k = complex.faces_of_dim(0).len();
    let mut adj = vec![Vec::new(); k];
    for f in complex.faces_of_dim(1) {
        adj[f[0]].push(f[1]);
        adj[f[1]].push(f[0]);
    }
    (0..k)
        .map(|start| {
            let mut dist = vec![None; k];
            let mut queue = std::collections::VecDeque::from([start]);
            dist[start] = Some(0);
            while let Some(v) = queue.pop_front() {
                for &w in &adj[v] {
                    if dist[w].is_none() {
                        dist[w] = Some(dist[v].unwrap() + 1);
                        queue.push_back(w);
                    }
                }
            }
            dist
        })
        .collect()
}

/// Runs the connectivity-criterion and diameter checks over every
/// realizable disjointness relation on `1..=max_edges` edges, returning
/// `(relations realized, disconnected complexes seen)`.
pub fn sweep_connectivity_criterion(max_edges: usize) -> (u64, u64) {
    let mut realized = 0u64;
    let mut disconnected = 0u64;
    for k in 1..=max_edges {
        let pairs = k * (k - 1) / 2;
        for mask in 0..1u32 << pairs {
            let rel = relation_from_mask(k, mask);
            let Some(edges) = realize(&rel) else { continue };
            realized += 1;
            let n = edges.iter().map(|&(_, v)| v + 1).max().unwrap();
            let g = Graph::new(n, edges.clone()).unwrap();
            let dist = one_skeleton_distances(&g);
            let connected = dist[0].iter().all(|d| d.is_some());
            assert_eq!(
                connected,
                !has_separating_set(&rel),
                "connectivity criterion failed for edges {edges:?}"
            );
            if connected {
                let diameter = dist.iter().flatten().map(|d| d.unwrap()).max().unwrap();
                assert!(diameter <= 4, "diameter {diameter} for edges {edges:?}");
            } else {
                disconnected += 1;
            }
        }
    }
    (realized, disconnected)
}
