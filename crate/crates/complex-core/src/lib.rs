//! Explicit simplicial complexes.
//!
//! A complex is stored as its full face list, graded by dimension, with faces
//! as sorted vertex lists. The empty face is a member of every complex and is
//! tracked implicitly (`f_vector()[0] == 1`). Vertices of the universe
//! `0..n_vertices` need not all be faces: deleting an edge from a matching
//! complex leaves a universe slot behind.
//!
//! Enumeration is guarded by a face budget (default five million) so that a
//! carelessly large instance fails loudly instead of thrashing.

use graph_core::{Graph, GraphError};
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use thiserror::Error;

pub const DEFAULT_FACE_BUDGET: u64 = 5_000_000;

/// A face: strictly ascending vertex list. The empty list is the empty face.
pub type Face = Vec<usize>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ComplexError {
    #[error("face budget of {budget} exceeded; pass a larger budget to proceed")]
    BudgetExceeded { budget: u64 },
    #[error("universe of {n} vertices exceeds the 64-vertex enumeration limit")]
    UniverseTooLarge { n: usize },
    #[error("invalid face {0:?}: {1}")]
    InvalidFace(Face, String),
    #[error("complex has no vertices")]
    NoVertices,
    #[error("need at least two edges, got {0}")]
    NeedTwoEdges(usize),
    #[error("universe vertex {vertex} out of range (universe 0..{n})")]
    UniverseVertexOutOfRange { vertex: usize, n: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("parse error: {0}")]
    Parse(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    n_vertices: usize,
    /// `faces_by_dim[d]` holds the dimension-`d` faces in lexicographic
    /// order. The empty face is implicit.
    faces_by_dim: Vec<Vec<Face>>,
}

impl SimplicialComplex {
    /// The complex `{∅}` on a universe of `n` vertices.
    pub fn empty(n: usize) -> Self {
        SimplicialComplex { n_vertices: n, faces_by_dim: Vec::new() }
    }

    /// Downward closure of the given faces. Input faces are sorted and
    /// deduplicated; vertices must lie in `0..n`.
    pub fn from_facets(n: usize, facets: &[Face], budget: u64) -> Result<Self, ComplexError> {
        let mut all: BTreeSet<Face> = BTreeSet::new();
        let mut count: u64 = 1; // the empty face
        for f in facets {
            let mut face = f.clone();
            face.sort_unstable();
            face.dedup();
            if face.len() != f.len() {
                return Err(ComplexError::InvalidFace(f.clone(), "repeated vertex".into()));
            }
            if let Some(&v) = face.last() {
                if v >= n {
                    return Err(ComplexError::InvalidFace(f.clone(), format!("vertex {v} outside universe 0..{n}")));
                }
            }
            // every subset of the facet
            for mask in 1u64..(1 << face.len()) {
                let sub: Face = face
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &v)| v)
                    .collect();
                if all.insert(sub) {
                    count += 1;
                    if count > budget {
                        return Err(ComplexError::BudgetExceeded { budget });
                    }
                }
            }
        }
        let mut faces_by_dim: Vec<Vec<Face>> = Vec::new();
        for face in all {
            let d = face.len() - 1;
            if faces_by_dim.len() <= d {
                faces_by_dim.resize(d + 1, Vec::new());
            }
            faces_by_dim[d].push(face);
        }
        // BTreeSet iteration yields length-mixed lexicographic order; within a
        // fixed dimension that is already lexicographic.
        Ok(SimplicialComplex { n_vertices: n, faces_by_dim })
    }

    fn from_graded(n_vertices: usize, faces_by_dim: Vec<Vec<Face>>) -> Self {
        let mut c = SimplicialComplex { n_vertices, faces_by_dim };
        while c.faces_by_dim.last().is_some_and(|v| v.is_empty()) {
            c.faces_by_dim.pop();
        }
        c
    }

    pub fn n_vertices(&self) -> usize {
        self.n_vertices
    }

    /// Dimension of the complex; `None` when only the empty face is present.
    pub fn dim(&self) -> Option<usize> {
        self.faces_by_dim.len().checked_sub(1)
    }

    /// Face counts starting at dimension -1, so `f_vector()[0] == 1` always.
    pub fn f_vector(&self) -> Vec<u64> {
        std::iter::once(1)
            .chain(self.faces_by_dim.iter().map(|v| v.len() as u64))
            .collect()
    }

    /// Total number of faces including the empty face.
    pub fn total_faces(&self) -> u64 {
        self.f_vector().iter().sum()
    }

    pub fn faces_of_dim(&self, d: usize) -> &[Face] {
        self.faces_by_dim.get(d).map_or(&[], |v| v.as_slice())
    }

    pub fn contains_face(&self, face: &[usize]) -> bool {
        if face.is_empty() {
            return true;
        }
        let d = face.len() - 1;
        self.faces_by_dim
            .get(d)
            .is_some_and(|faces| faces.binary_search_by(|f| f.as_slice().cmp(face)).is_ok())
    }

    /// Unreduced Euler characteristic (empty face excluded).
    pub fn euler_characteristic(&self) -> i64 {
        self.faces_by_dim
            .iter()
            .enumerate()
            .map(|(d, faces)| {
                let sign = if d % 2 == 0 { 1 } else { -1 };
                sign * faces.len() as i64
            })
            .sum()
    }

    pub fn reduced_euler_characteristic(&self) -> i64 {
        self.euler_characteristic() - 1
    }

    /// Inclusion-maximal faces, graded then lexicographic. For `{∅}` this is
    /// empty.
    pub fn facets(&self) -> Vec<Face> {
        let mut out = Vec::new();
        for d in 0..self.faces_by_dim.len() {
            // every d-subface of a (d+1)-face is non-maximal
            let mut covered: BTreeSet<Face> = BTreeSet::new();
            for coface in self.faces_of_dim(d + 1) {
                for skip in 0..coface.len() {
                    let sub: Face = coface
                        .iter()
                        .enumerate()
                        .filter(|&(i, _)| i != skip)
                        .map(|(_, &v)| v)
                        .collect();
                    covered.insert(sub);
                }
            }
            for face in &self.faces_by_dim[d] {
                if !covered.contains(face) {
                    out.push(face.clone());
                }
            }
        }
        out
    }

    /// True when every subface of every face is present; the representation
    /// invariant, exposed for property tests.
    pub fn is_downward_closed(&self) -> bool {
        for d in 1..self.faces_by_dim.len() {
            for face in &self.faces_by_dim[d] {
                for skip in 0..face.len() {
                    let sub: Face = face
                        .iter()
                        .enumerate()
                        .filter(|&(i, _)| i != skip)
                        .map(|(_, &v)| v)
                        .collect();
                    if !self.contains_face(&sub) {
                        return false;
                    }
                }
            }
        }
        true
    }

    pub fn to_json(&self) -> String {
        let raw = RawComplex { n: self.n_vertices, facets: self.facets() };
        serde_json::to_string(&raw).expect("complex serialization cannot fail")
    }

    pub fn from_json(s: &str, budget: u64) -> Result<Self, ComplexError> {
        let raw: RawComplex = serde_json::from_str(s).map_err(|e| ComplexError::Parse(e.to_string()))?;
        SimplicialComplex::from_facets(raw.n, &raw.facets, budget)
    }
}

#[derive(Serialize, Deserialize)]
struct RawComplex {
    n: usize,
    facets: Vec<Face>,
}

/// All independent sets of `g`, graded by size. Fails loudly past the budget
/// or on universes above 64 vertices.
pub fn independence_complex(g: &Graph, budget: u64) -> Result<SimplicialComplex, ComplexError> {
    let n = g.n_vertices();
    if n > 64 {
        return Err(ComplexError::UniverseTooLarge { n });
    }
    let mut nbr = vec![0u64; n];
    for &(u, v) in g.edges() {
        nbr[u] |= 1 << v;
        nbr[v] |= 1 << u;
    }
    struct Enumeration<'a> {
        n: usize,
        nbr: &'a [u64],
        budget: u64,
        count: u64,
        stack: Vec<usize>,
        faces_by_dim: Vec<Vec<Face>>,
    }

    impl Enumeration<'_> {
        fn extend(&mut self, start: usize, blocked: u64) -> Result<(), ComplexError> {
            for v in start..self.n {
                if blocked >> v & 1 == 1 {
                    continue;
                }
                self.stack.push(v);
                let d = self.stack.len() - 1;
                if self.faces_by_dim.len() <= d {
                    self.faces_by_dim.resize(d + 1, Vec::new());
                }
                self.faces_by_dim[d].push(self.stack.clone());
                self.count += 1;
                if self.count > self.budget {
                    return Err(ComplexError::BudgetExceeded { budget: self.budget });
                }
                self.extend(v + 1, blocked | self.nbr[v] | (1 << v))?;
                self.stack.pop();
            }
            Ok(())
        }
    }

    let mut walk = Enumeration {
        n,
        nbr: &nbr,
        budget,
        count: 1,
        stack: Vec::new(),
        faces_by_dim: Vec::new(),
    };
    walk.extend(0, 0)?;
    Ok(SimplicialComplex::from_graded(n, walk.faces_by_dim))
}

/// The matching complex: independent sets of the line graph, with universe
/// vertices named by canonical edge index.
pub fn matching_complex(g: &Graph, budget: u64) -> Result<SimplicialComplex, ComplexError> {
    independence_complex(&g.line_graph(), budget)
}

/// Join of two complexes. Universe is `a`'s followed by `b`'s (shifted);
/// faces are all unions `sigma ∪ (tau + n_a)`. Face counts multiply, which is
/// checked against the budget before materializing.
pub fn join(a: &SimplicialComplex, b: &SimplicialComplex, budget: u64) -> Result<SimplicialComplex, ComplexError> {
    let product = a.total_faces().saturating_mul(b.total_faces());
    if product > budget {
        return Err(ComplexError::BudgetExceeded { budget });
    }
    let shift = a.n_vertices;
    let mut faces_by_dim: Vec<Vec<Face>> = Vec::new();
    let a_graded: Vec<(usize, &Face)> = a
        .faces_by_dim
        .iter()
        .enumerate()
        .flat_map(|(d, faces)| faces.iter().map(move |f| (d + 1, f)))
        .collect();
    let b_graded: Vec<(usize, Face)> = b
        .faces_by_dim
        .iter()
        .enumerate()
        .flat_map(|(d, faces)| {
            faces
                .iter()
                .map(move |f| (d + 1, f.iter().map(|&v| v + shift).collect::<Face>()))
        })
        .collect();

    let empty: Face = Vec::new();
    let mut push = |card: usize, face: Face| {
        if card == 0 {
            return;
        }
        if faces_by_dim.len() < card {
            faces_by_dim.resize(card, Vec::new());
        }
        faces_by_dim[card - 1].push(face);
    };
    for (ca, fa) in std::iter::once((0usize, &empty)).chain(a_graded) {
        for (cb, fb) in std::iter::once((0usize, empty.clone())).chain(b_graded.iter().cloned()) {
            let mut face = fa.clone();
            face.extend(fb);
            push(ca + cb, face);
        }
    }
    for faces in &mut faces_by_dim {
        faces.sort_unstable();
    }
    Ok(SimplicialComplex::from_graded(a.n_vertices + b.n_vertices, faces_by_dim))
}

/// Cone: join with a single new vertex (the apex, id `n`).
pub fn cone(a: &SimplicialComplex, budget: u64) -> Result<SimplicialComplex, ComplexError> {
    let point = SimplicialComplex::from_graded(1, vec![vec![vec![0]]]);
    join(a, &point, budget)
}

/// Suspension: join with two new isolated vertices (poles `n` and `n+1`).
pub fn suspension(a: &SimplicialComplex, budget: u64) -> Result<SimplicialComplex, ComplexError> {
    let poles = SimplicialComplex::from_graded(2, vec![vec![vec![0], vec![1]]]);
    join(a, &poles, budget)
}

/// Extends the matching complex of `g` by one new edge `e`, without
/// recomputing from scratch. `mc` must be `matching_complex(g)`; the new
/// edge joins the universe as vertex `g.edge_count()`, matching the canonical
/// order of `g.add_edge(e)`.
pub fn complex_add_edge(
    mc: &SimplicialComplex,
    g: &Graph,
    e: (usize, usize),
    budget: u64,
) -> Result<SimplicialComplex, ComplexError> {
    if e.0 == e.1 {
        return Err(GraphError::SelfLoop(e.0).into());
    }
    let (u, v) = (e.0.min(e.1), e.0.max(e.1));
    if g.has_edge(u, v) {
        return Err(GraphError::EdgeAlreadyPresent(u, v).into());
    }
    let incident: Vec<usize> = g
        .edges()
        .iter()
        .enumerate()
        .filter(|&(_, &(a, b))| a == u || b == u || a == v || b == v)
        .map(|(i, _)| i)
        .collect();
    let new_id = g.edge_count();

    let mut faces_by_dim = mc.faces_by_dim.clone();
    let mut count = mc.total_faces();
    let compatible = |face: &Face| face.iter().all(|x| incident.binary_search(x).is_err());

    // the empty face always extends to the bare new edge
    let mut additions: Vec<Face> = vec![vec![new_id]];
    for faces in &mc.faces_by_dim {
        for face in faces {
            if compatible(face) {
                let mut bigger = face.clone();
                bigger.push(new_id);
                additions.push(bigger);
            }
        }
    }
    for face in additions {
        count += 1;
        if count > budget {
            return Err(ComplexError::BudgetExceeded { budget });
        }
        let d = face.len() - 1;
        if faces_by_dim.len() <= d {
            faces_by_dim.resize(d + 1, Vec::new());
        }
        faces_by_dim[d].push(face);
    }
    for faces in &mut faces_by_dim {
        faces.sort_unstable();
    }
    Ok(SimplicialComplex::from_graded(mc.n_vertices + 1, faces_by_dim))
}

/// Deletes universe vertex `e` (an edge of the source graph): drops every
/// face containing it and compacts higher ids down by one, so the result is
/// exactly the matching complex of the edge-deleted graph.
pub fn complex_delete_edge(mc: &SimplicialComplex, e: usize) -> Result<SimplicialComplex, ComplexError> {
    if e >= mc.n_vertices {
        return Err(ComplexError::UniverseVertexOutOfRange { vertex: e, n: mc.n_vertices });
    }
    let faces_by_dim = mc
        .faces_by_dim
        .iter()
        .map(|faces| {
            faces
                .iter()
                .filter(|f| f.binary_search(&e).is_err())
                .map(|f| f.iter().map(|&v| if v > e { v - 1 } else { v }).collect())
                .collect()
        })
        .collect();
    Ok(SimplicialComplex::from_graded(mc.n_vertices - 1, faces_by_dim))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum SkeletonDiameter {
    Connected { diameter: usize },
    Disconnected,
}

/// Diameter of the 1-skeleton, over the vertices actually present as faces.
pub fn one_skeleton_diameter(a: &SimplicialComplex) -> Result<SkeletonDiameter, ComplexError> {
    let vertices = a.faces_of_dim(0);
    if vertices.is_empty() {
        return Err(ComplexError::NoVertices);
    }
    let ids: Vec<usize> = vertices.iter().map(|f| f[0]).collect();
    let index_of = |v: usize| ids.binary_search(&v).expect("edge endpoint must be a vertex face");
    let mut adj = vec![Vec::new(); ids.len()];
    for e in a.faces_of_dim(1) {
        let (i, j) = (index_of(e[0]), index_of(e[1]));
        adj[i].push(j);
        adj[j].push(i);
    }
    let mut diameter = 0;
    for start in 0..ids.len() {
        let mut dist = vec![usize::MAX; ids.len()];
        dist[start] = 0;
        let mut queue = std::collections::VecDeque::from([start]);
        while let Some(x) = queue.pop_front() {
            for &y in &adj[x] {
                if dist[y] == usize::MAX {
                    dist[y] = dist[x] + 1;
                    queue.push_back(y);
                }
            }
        }
        let ecc = *dist.iter().max().unwrap();
        if ecc == usize::MAX {
            return Ok(SkeletonDiameter::Disconnected);
        }
        diameter = diameter.max(ecc);
    }
    Ok(SkeletonDiameter::Connected { diameter })
}

/// A set of edges of `g` witnessing that the 1-skeleton of the matching
/// complex is disconnected: a nonempty proper edge subset `S` such that every
/// edge outside `S` is incident to every edge inside. Returns the
/// lexicographically least witness (as a sorted edge-index sequence), or
/// `None` when the skeleton is connected.
pub fn disconnection_witness(g: &Graph) -> Result<Option<Vec<usize>>, ComplexError> {
    let m = g.edge_count();
    if m < 2 {
        return Err(ComplexError::NeedTwoEdges(m));
    }
    // Components of the disjointness graph (= 1-skeleton of the matching
    // complex). Valid witnesses are exactly the nonempty proper unions of
    // these components.
    let disjoint = |i: usize, j: usize| {
        let (a, b) = g.edges()[i];
        let (c, d) = g.edges()[j];
        a != c && a != d && b != c && b != d
    };
    let mut comp = vec![usize::MAX; m];
    let mut n_comps = 0;
    for start in 0..m {
        if comp[start] != usize::MAX {
            continue;
        }
        let id = n_comps;
        n_comps += 1;
        let mut queue = std::collections::VecDeque::from([start]);
        comp[start] = id;
        while let Some(x) = queue.pop_front() {
            for (y, c) in comp.iter_mut().enumerate() {
                if *c == usize::MAX && disjoint(x, y) {
                    *c = id;
                    queue.push_back(y);
                }
            }
        }
    }
    if n_comps == 1 {
        return Ok(None);
    }
    // Components indexed by discovery order are already sorted by their
    // minimum element. The lex-least union is the shortest prefix union that
    // is "separated" (entirely below all later components), or, failing that,
    // all components but the last.
    let mut members: Vec<Vec<usize>> = vec![Vec::new(); n_comps];
    for (e, &c) in comp.iter().enumerate() {
        members[c].push(e);
    }
    let mut union: Vec<usize> = Vec::new();
    for j in 0..n_comps - 1 {
        union.extend(&members[j]);
        let next_min = members[j + 1][0];
        if union.iter().all(|&e| e < next_min) || j == n_comps - 2 {
            union.sort_unstable();
            return Ok(Some(union));
        }
    }
    unreachable!("loop always returns at j = n_comps - 2")
}
