//! Smith normal form over exact integers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use std::collections::{BTreeMap, BTreeSet};

/// Row-major sparse integer matrix with a column-occupancy index kept in
/// sync, so both row and column operations stay cheap.
#[derive(Clone, Debug)]
pub struct SparseIntMatrix {
    nrows: usize,
    ncols: usize,
    rows: Vec<BTreeMap<usize, BigInt>>,
    cols: Vec<BTreeSet<usize>>,
}

impl SparseIntMatrix {
    pub fn zero(nrows: usize, ncols: usize) -> Self {
        SparseIntMatrix { nrows, ncols, rows: vec![BTreeMap::new(); nrows], cols: vec![BTreeSet::new(); ncols] }
    }

    pub fn from_triplets(nrows: usize, ncols: usize, entries: &[(usize, usize, i64)]) -> Self {
        let mut m = Self::zero(nrows, ncols);
        for &(r, c, v) in entries {
            m.set(r, c, BigInt::from(v));
        }
        m
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn get(&self, r: usize, c: usize) -> BigInt {
        self.rows[r].get(&c).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn set(&mut self, r: usize, c: usize, v: BigInt) {
        if v.is_zero() {
            if self.rows[r].remove(&c).is_some() {
                self.cols[c].remove(&r);
            }
        } else {
            self.rows[r].insert(c, v);
            self.cols[c].insert(r);
        }
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(|r| r.len()).sum()
    }

    /// row(dst) -= q * row(src)
    fn row_axpy(&mut self, dst: usize, src: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        let src_row: Vec<(usize, BigInt)> = self.rows[src].iter().map(|(c, v)| (*c, v.clone())).collect();
        for (c, v) in src_row {
            let new = self.get(dst, c) - q * v;
            self.set(dst, c, new);
        }
    }

    /// col(dst) -= q * col(src)
    fn col_axpy(&mut self, dst: usize, src: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        let src_col: Vec<(usize, BigInt)> = self.cols[src]
            .iter()
            .map(|&r| (r, self.rows[r][&src].clone()))
            .collect();
        for (r, v) in src_col {
            let new = self.get(r, dst) - q * v;
            self.set(r, dst, new);
        }
    }
}

/// Invariant factors `d_1 | d_2 | ... | d_r` (each positive) and the rank.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SnfResult {
    pub invariants: Vec<BigInt>,
    pub rank: usize,
}

/// Quotient rounded to nearest, so the remainder magnitude is at most half
/// the divisor: the Euclidean step that shrinks pivots fastest.
fn round_div(a: &BigInt, b: &BigInt) -> BigInt {
    let (mut q, r) = a.div_rem(b);
    if r.magnitude() * 2u32 > b.magnitude().clone() {
        if (r.is_negative()) == (b.is_negative()) {
            q += 1;
        } else {
            q -= 1;
        }
    }
    q
}

/// Diagonalizes by repeated pivoting: smallest-magnitude entry first, with
/// smallest row-plus-column occupancy as the tie-break, then a pairwise
/// gcd/lcm pass to restore the divisibility chain.
pub fn smith_normal_form(mut m: SparseIntMatrix) -> SnfResult {
    let mut live_rows: BTreeSet<usize> = (0..m.nrows).filter(|&r| !m.rows[r].is_empty()).collect();
    let mut invariants: Vec<BigInt> = Vec::new();

    loop {
        live_rows.retain(|&r| !m.rows[r].is_empty());
        // pivot: smallest magnitude, then sparsest row + column, then position
        let mut best: Option<(BigInt, usize, usize, usize)> = None;
        for &r in &live_rows {
            for (&c, v) in &m.rows[r] {
                let mag = v.abs();
                let fill = m.rows[r].len() + m.cols[c].len();
                let better = match &best {
                    None => true,
                    Some((bmag, bfill, br, bc)) => (&mag, fill, r, c) < (bmag, *bfill, *br, *bc),
                };
                if better {
                    best = Some((mag, fill, r, c));
                }
            }
        }
        let Some((_, _, mut pr, mut pc)) = best else { break };

        // Euclidean phase: clear the pivot column, then the pivot row. A
        // nonzero remainder has at most half the pivot's magnitude and
        // becomes the new pivot, so this terminates.
        'reduce: loop {
            let pivot = m.rows[pr][&pc].clone();
            let col_rows: Vec<usize> = m.cols[pc].iter().copied().filter(|&r| r != pr).collect();
            for r in col_rows {
                let q = round_div(&m.rows[r][&pc], &pivot);
                m.row_axpy(r, pr, &q);
                if m.rows[r].contains_key(&pc) {
                    pr = r;
                    continue 'reduce;
                }
            }
            let row_cols: Vec<usize> = m.rows[pr].keys().copied().filter(|&c| c != pc).collect();
            for c in row_cols {
                let q = round_div(&m.rows[pr][&c], &pivot);
                m.col_axpy(c, pc, &q);
                if m.rows[pr].contains_key(&c) {
                    pc = c;
                    continue 'reduce;
                }
            }
            break;
        }

        // the pivot is now alone in its row and column
        invariants.push(m.rows[pr][&pc].abs());
        m.set(pr, pc, BigInt::zero());
        live_rows.remove(&pr);
    }

    finish(invariants)
}

fn finish(mut invariants: Vec<BigInt>) -> SnfResult {
    // pairwise (gcd, lcm) restores d_i | d_j; one full pass suffices
    for i in 0..invariants.len() {
        for j in i + 1..invariants.len() {
            let a = invariants[i].clone();
            let b = invariants[j].clone();
            if (&b % &a).is_zero() {
                continue;
            }
            let g = a.gcd(&b);
            invariants[j] = &a / &g * &b;
            invariants[i] = g;
        }
    }
    let rank = invariants.len();
    SnfResult { invariants, rank }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn snf_of(nrows: usize, ncols: usize, entries: &[(usize, usize, i64)]) -> (Vec<i64>, usize) {
        let res = smith_normal_form(SparseIntMatrix::from_triplets(nrows, ncols, entries));
        let inv = res.invariants.iter().map(|v| i64::try_from(v).unwrap()).collect();
        (inv, res.rank)
    }

    #[test]
    fn zero_matrix() {
        assert_eq!(snf_of(3, 4, &[]), (vec![], 0));
    }

    #[test]
    fn identity() {
        let entries: Vec<_> = (0..4).map(|i| (i, i, 1)).collect();
        assert_eq!(snf_of(4, 4, &entries), (vec![1, 1, 1, 1], 4));
    }

    #[test]
    fn divisibility_normalization() {
        assert_eq!(snf_of(2, 2, &[(0, 0, 2), (1, 1, 3)]), (vec![1, 6], 2));
    }

    #[test]
    fn small_dense() {
        // [[1,2],[3,4]]: determinant -2
        assert_eq!(snf_of(2, 2, &[(0, 0, 1), (0, 1, 2), (1, 0, 3), (1, 1, 4)]), (vec![1, 2], 2));
        // [[2,0],[0,2]]
        assert_eq!(snf_of(2, 2, &[(0, 0, 2), (1, 1, 2)]), (vec![2, 2], 2));
        // rank-deficient: [[1,2],[2,4]]
        assert_eq!(snf_of(2, 2, &[(0, 0, 1), (0, 1, 2), (1, 0, 2), (1, 1, 4)]), (vec![1], 1));
    }

    #[test]
    fn needs_euclidean_steps() {
        // [[4,6],[6,4]]: det -20, gcd 2 -> invariants (2, 10)
        assert_eq!(snf_of(2, 2, &[(0, 0, 4), (0, 1, 6), (1, 0, 6), (1, 1, 4)]), (vec![2, 10], 2));
    }

    #[test]
    fn round_div_halves() {
        let d = |a: i64, b: i64| i64::try_from(&round_div(&a.into(), &b.into())).unwrap();
        // remainder magnitude is at most |b|/2 in every case; ties keep the
        // truncated quotient
        assert_eq!(d(7, 2), 3);
        assert_eq!(d(-7, 2), -3);
        assert_eq!(d(7, -2), -3);
        assert_eq!(d(5, 3), 2);
        assert_eq!(d(-5, 3), -2);
        assert_eq!(d(5, -3), -2);
        assert_eq!(d(-5, -3), 2);
        assert_eq!(d(4, 3), 1);
        assert_eq!(d(6, 3), 2);
    }
}
