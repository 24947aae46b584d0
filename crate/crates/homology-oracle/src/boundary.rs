//! Boundary matrices of a simplicial complex under the sorted-vertex
//! orientation convention.

use crate::OracleError;
use complex_core::SimplicialComplex;

/// Sparse matrix of the boundary map from `d`-faces (columns) to
/// `(d-1)`-faces (rows). For `d = 0` the matrix has zero rows; the
/// augmentation is accounted for separately in homology ranks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundaryMatrix {
    pub d: usize,
    pub nrows: usize,
    pub ncols: usize,
    /// (row, col, sign) with sign = (-1)^i for dropping the i-th vertex
    pub entries: Vec<(usize, usize, i64)>,
}

/// The boundary map in dimension `d`, `0 <= d <= dim(a)`.
pub fn boundary_matrix(a: &SimplicialComplex, d: usize) -> Result<BoundaryMatrix, OracleError> {
    let dim = a.dim();
    if dim.is_none() || d > dim.unwrap() {
        return Err(OracleError::DimensionOutOfRange { d, dim });
    }
    let cols = a.faces_of_dim(d);
    if d == 0 {
        return Ok(BoundaryMatrix { d, nrows: 0, ncols: cols.len(), entries: Vec::new() });
    }
    let rows = a.faces_of_dim(d - 1);
    let row_index = |face: &[usize]| -> usize {
        rows.binary_search_by(|probe| probe.as_slice().cmp(face)).expect("complex is downward closed")
    };
    let mut entries = Vec::with_capacity(cols.len() * (d + 1));
    for (c, face) in cols.iter().enumerate() {
        let mut sub = face.clone();
        for (i, &vertex) in face.iter().enumerate() {
            sub.remove(i);
            let sign = if i % 2 == 0 { 1 } else { -1 };
            entries.push((row_index(&sub), c, sign));
            sub.insert(i, vertex);
        }
    }
    Ok(BoundaryMatrix { d, nrows: rows.len(), ncols: cols.len(), entries })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeMap;

    fn hollow_triangle() -> SimplicialComplex {
        SimplicialComplex::from_facets(3, &[vec![0, 1], vec![0, 2], vec![1, 2]], 1000).unwrap()
    }

    #[test]
    fn dimension_zero_has_no_rows() {
        let b = boundary_matrix(&hollow_triangle(), 0).unwrap();
        assert_eq!((b.nrows, b.ncols), (0, 3));
        assert!(b.entries.is_empty());
    }

    #[test]
    fn hollow_triangle_edge_boundary() {
        let b = boundary_matrix(&hollow_triangle(), 1).unwrap();
        assert_eq!((b.nrows, b.ncols), (3, 3));
        // each column holds one +1 (smaller endpoint dropped) and one -1
        let mut col_sums: BTreeMap<usize, i64> = BTreeMap::new();
        for &(_, c, v) in &b.entries {
            *col_sums.entry(c).or_default() += v;
        }
        assert!(col_sums.values().all(|&s| s == 0));
        // edge [0,1] is column 0: +1 at row of [1], -1 at row of [0]
        let col0: Vec<(usize, i64)> =
            b.entries.iter().filter(|e| e.1 == 0).map(|e| (e.0, e.2)).collect();
        assert_eq!(col0, vec![(1, 1), (0, -1)]);
    }

    #[test]
    fn out_of_range_dimension() {
        assert!(matches!(
            boundary_matrix(&hollow_triangle(), 2),
            Err(OracleError::DimensionOutOfRange { d: 2, dim: Some(1) })
        ));
        let empty = SimplicialComplex::empty(3);
        assert!(boundary_matrix(&empty, 0).is_err());
    }

    #[test]
    fn composite_of_boundaries_vanishes() {
        // solid tetrahedron: includes the 3-face
        let tetra = SimplicialComplex::from_facets(4, &[vec![0, 1, 2, 3]], 1000).unwrap();
        for d in 1..=3usize {
            let hi = boundary_matrix(&tetra, d).unwrap();
            let lo = boundary_matrix(&tetra, d - 1).unwrap();
            let mut lo_by_col: BTreeMap<usize, Vec<(usize, i64)>> = BTreeMap::new();
            for &(r, c, v) in &lo.entries {
                lo_by_col.entry(c).or_default().push((r, v));
            }
            let mut product: BTreeMap<(usize, usize), i64> = BTreeMap::new();
            for &(mid, c, v) in &hi.entries {
                for &(r, w) in lo_by_col.get(&mid).into_iter().flatten() {
                    *product.entry((r, c)).or_default() += v * w;
                }
            }
            assert!(product.values().all(|&v| v == 0), "d = {d}");
        }
    }
}
