//! Dimension windows and connectivity bounds for polygon-line and honeycomb
//! matching complexes.

use crate::wedge::WedgeDescriptor;
use crate::FormulaError;
use num_bigint::BigUint;
use num_integer::Integer;
use serde::{Deserialize, Serialize};
use std::fmt;

/// A reduced rational with positive denominator. Only needed for the upper
/// window edge `7t/3 + 1`, which is not always an integer.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Rational {
    num: i64,
    den: i64,
}

impl Rational {
    pub fn new(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        let g = num.gcd(&den);
        let sign = if den < 0 { -1 } else { 1 };
        Rational { num: sign * num / g, den: sign * den / g }
    }

    pub fn integer(n: i64) -> Self {
        Rational { num: n, den: 1 }
    }

    pub fn num(&self) -> i64 {
        self.num
    }

    pub fn den(&self) -> i64 {
        self.den
    }

    pub fn as_integer(&self) -> Option<i64> {
        (self.den == 1).then_some(self.num)
    }

    /// Compares against an integer without rounding.
    pub fn cmp_integer(&self, n: i64) -> std::cmp::Ordering {
        self.num.cmp(&(n * self.den))
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

/// Where nonvanishing homology can live. For polygon lines the window is
/// inclusive at both ends; for the honeycomb strip `d_max` is the exact
/// rational `7t/3 + 1` and admissibility is the strict `d < d_max`, matching
/// how each bound is stated. `exact_wedge` is set when the window pins the
/// homotopy type completely.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundsResult {
    pub d_min: usize,
    pub d_max: Rational,
    pub upper_exclusive: bool,
    pub connectivity: i64,
    pub exact_wedge: Option<WedgeDescriptor>,
}

impl BoundsResult {
    /// True when dimension `d` lies inside the admissible window.
    pub fn admits(&self, d: usize) -> bool {
        use std::cmp::Ordering;
        let upper = match self.d_max.cmp_integer(d as i64) {
            Ordering::Greater => true,
            Ordering::Equal => !self.upper_exclusive,
            Ordering::Less => false,
        };
        d >= self.d_min && upper
    }
}

/// Window for the matching complex of a line of `t` polygons with `n` or
/// more sides, joined by bridge edges (`n > 2`, `t > 1`). For `n = 1 mod 3`
/// the window is a single dimension and the complex is a wedge of exactly
/// `t` spheres there.
pub fn polygon_line_bounds(n: usize, t: usize) -> Result<BoundsResult, FormulaError> {
    if n <= 2 || t <= 1 {
        return Err(FormulaError::InvalidParameter(format!(
            "polygon line window needs n > 2 and t > 1, got n = {n}, t = {t}"
        )));
    }
    let (nt, t_us) = (n * t, t);
    let result = match n % 3 {
        0 => {
            let d_min = 2 * nt / 3 - t_us;
            let d_max = 2 * nt / 3 - t_us / 2 - 1;
            BoundsResult {
                d_min,
                d_max: Rational::integer(d_max as i64),
                upper_exclusive: false,
                connectivity: d_min as i64 - 1,
                exact_wedge: None,
            }
        }
        1 => {
            let d = (2 * nt + t_us) / 3 - t_us;
            BoundsResult {
                d_min: d,
                d_max: Rational::integer(d as i64),
                upper_exclusive: false,
                connectivity: d as i64 - 1,
                exact_wedge: Some(WedgeDescriptor::uniform(d, BigUint::from(t_us))),
            }
        }
        _ => {
            let d_min = (2 * nt - t_us) / 3 - t_us.div_ceil(2);
            let d_max = (2 * nt - t_us) / 3 - 1;
            BoundsResult {
                d_min,
                d_max: Rational::integer(d_max as i64),
                upper_exclusive: false,
                connectivity: d_min as i64 - 1,
                exact_wedge: None,
            }
        }
    };
    Ok(result)
}

/// Window for the matching complex of the 2 x 1 x t honeycomb strip:
/// homology vanishes below `2t` and at or above `7t/3 + 1`.
pub fn honeycomb21_bounds(t: usize) -> Result<BoundsResult, FormulaError> {
    if t < 1 {
        return Err(FormulaError::InvalidParameter("honeycomb strip needs t >= 1".into()));
    }
    Ok(BoundsResult {
        d_min: 2 * t,
        d_max: Rational::new(7 * t as i64 + 3, 3),
        upper_exclusive: true,
        connectivity: 2 * t as i64 - 1,
        exact_wedge: None,
    })
}

/// Number of vertical edges in the odd-numbered hexagon rows of the
/// `r x s x t` honeycomb: the seed set certifying its connectivity bound.
pub fn honeycomb_seed_count(r: usize, s: usize, t: usize) -> Result<usize, FormulaError> {
    if r < 1 || s < 1 || t < 1 {
        return Err(FormulaError::InvalidParameter(format!(
            "honeycomb needs r, s, t >= 1, got ({r}, {s}, {t})"
        )));
    }
    let rows = r + s - 1;
    let mut count = 0;
    for i in (1..=rows).step_by(2) {
        count += graph_core::hexagon_row_count(r, s, t, i)
            .map_err(|e| FormulaError::InvalidParameter(e.to_string()))?
            + 1;
    }
    Ok(count)
}

/// The matching complex of the `r x s x t` honeycomb is at least
/// `(seed count) - 2` connected.
pub fn honeycomb_connectivity_bound(r: usize, s: usize, t: usize) -> Result<i64, FormulaError> {
    Ok(honeycomb_seed_count(r, s, t)? as i64 - 2)
}

/// Connectivity bound for the matching complex of the perfect binary tree of
/// height `h >= 3`: `sum of 2^(h - 3i - 1) for 0 <= i <= ceil(h/3) - 1`,
/// minus 2.
pub fn binary_tree_connectivity_bound(h: u32) -> Result<BigUint, FormulaError> {
    if h < 3 {
        return Err(FormulaError::InvalidParameter(format!("binary tree bound needs h >= 3, got {h}")));
    }
    let levels = h.div_ceil(3);
    let mut sum = BigUint::from(0u32);
    for i in 0..levels {
        sum += BigUint::from(2u32).pow(h - 3 * i - 1);
    }
    Ok(sum - 2u32)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_basics() {
        assert_eq!(Rational::new(14, 6), Rational::new(7, 3));
        assert_eq!(Rational::new(-4, -2).to_string(), "2");
        assert_eq!(Rational::new(7, 3).to_string(), "7/3");
        assert_eq!(Rational::new(7, 3).cmp_integer(2), std::cmp::Ordering::Greater);
        assert_eq!(Rational::new(7, 3).cmp_integer(3), std::cmp::Ordering::Less);
        assert_eq!(Rational::integer(4).as_integer(), Some(4));
        assert_eq!(Rational::new(7, 3).as_integer(), None);
    }

    #[test]
    fn polygon_windows() {
        let b = polygon_line_bounds(3, 2).unwrap();
        assert_eq!((b.d_min, b.d_max), (2, Rational::integer(2)));
        assert_eq!(b.connectivity, 1);
        assert!(b.exact_wedge.is_none());
        assert!(b.admits(2) && !b.admits(1) && !b.admits(3));

        let b = polygon_line_bounds(4, 2).unwrap();
        assert_eq!((b.d_min, b.d_max), (4, Rational::integer(4)));
        assert_eq!(
            b.exact_wedge,
            Some(WedgeDescriptor::uniform(4, 2u32.into()))
        );
        assert!(b.admits(4));

        let b = polygon_line_bounds(5, 3).unwrap();
        assert_eq!((b.d_min, b.d_max), (7, Rational::integer(8)));
        assert_eq!(b.connectivity, 6);
        assert!(b.admits(7) && b.admits(8) && !b.admits(9));

        assert!(polygon_line_bounds(2, 3).is_err());
        assert!(polygon_line_bounds(4, 1).is_err());
    }

    #[test]
    fn honeycomb_strip_windows() {
        let b = honeycomb21_bounds(1).unwrap();
        assert_eq!(b.d_min, 2);
        assert_eq!(b.d_max, Rational::new(10, 3));
        assert_eq!(b.connectivity, 1);
        assert!(b.admits(2) && b.admits(3) && !b.admits(4));

        let b = honeycomb21_bounds(3).unwrap();
        assert_eq!(b.d_min, 6);
        assert_eq!(b.d_max, Rational::integer(8));
        assert!(b.admits(7) && !b.admits(8));
    }

    #[test]
    fn honeycomb_connectivity() {
        // (1, 1, t): single row, t + 1 verticals
        for t in 1..=5 {
            assert_eq!(honeycomb_connectivity_bound(1, 1, t).unwrap(), t as i64 - 1);
        }
        assert_eq!(honeycomb_seed_count(3, 3, 3).unwrap(), 14);
        assert_eq!(honeycomb_connectivity_bound(3, 3, 3).unwrap(), 12);
        assert_eq!(honeycomb_connectivity_bound(2, 1, 1).unwrap(), 0);
        assert!(honeycomb_connectivity_bound(0, 1, 1).is_err());
    }

    #[test]
    fn seed_count_matches_layout() {
        // count actual vertical edges in odd hexagon rows off the layout
        for (r, s, t) in [(1, 1, 2), (2, 1, 3), (3, 3, 3), (4, 3, 2)] {
            let (graph, layout) = graph_core::honeycomb_with_layout(r, s, t).unwrap();
            let verticals = graph
                .edges()
                .iter()
                .filter(|&&(u, v)| {
                    let (lu, xu) = layout.vertex_pos[u];
                    let (lv, xv) = layout.vertex_pos[v];
                    // vertical edge between levels lu < lv sits in hexagon row lv
                    xu == xv && lv == lu + 1 && lv % 2 == 1
                })
                .count();
            assert_eq!(honeycomb_seed_count(r, s, t).unwrap(), verticals, "({r}, {s}, {t})");
        }
    }

    #[test]
    fn binary_tree_bounds() {
        assert_eq!(binary_tree_connectivity_bound(3).unwrap(), 2u32.into());
        assert_eq!(binary_tree_connectivity_bound(4).unwrap(), 7u32.into());
        assert_eq!(binary_tree_connectivity_bound(5).unwrap(), 16u32.into());
        assert_eq!(binary_tree_connectivity_bound(6).unwrap(), 34u32.into());
        assert!(binary_tree_connectivity_bound(2).is_err());
    }
}
