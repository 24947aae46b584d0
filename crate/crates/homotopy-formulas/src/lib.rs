//! Closed-form homotopy types of matching complexes.
//!
//! Everything here is exact arithmetic: sphere counts are big integers,
//! window endpoints are rationals. The sphere-count polynomials print in the
//! colex monomial order used by the reference tables (compare largest index
//! first; a proper subset precedes its superset).

use thiserror::Error;

mod bounds;
mod caterpillar;
mod poly;
mod wedge;

pub use bounds::{
    binary_tree_connectivity_bound, honeycomb21_bounds, honeycomb_connectivity_bound, honeycomb_seed_count,
    polygon_line_bounds, BoundsResult, Rational,
};
pub use caterpillar::{
    a_count, alternating_caterpillar_wedge, arbitrary_caterpillar_polys, arbitrary_caterpillar_wedge,
    enumerate_a_sets, general_caterpillar_wedge, l_poly, m_eval, m_poly, perfect_caterpillar_wedge, SymLeg,
};
pub use poly::MultilinearPoly;
pub use wedge::WedgeDescriptor;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FormulaError {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("expected {expected} values, got {got}")]
    WrongLength { expected: usize, got: usize },
    #[error("caterpillar with bare spine vertices at both ends has no normal form; trim it first")]
    BothEndsZero,
    #[error("parse error: {0}")]
    Parse(String),
}

/// Homotopy type of the matching complex of a path (`n >= 2` vertices) or a
/// cycle (`n >= 3`): contractible or a small wedge of spheres of dimension
/// `ceil((n-4)/3)`.
pub fn path_cycle_homotopy(n: usize, cycle: bool) -> Result<WedgeDescriptor, FormulaError> {
    let dim = |n: usize| (n as i64 - 4).div_euclid(3) + if (n as i64 - 4).rem_euclid(3) > 0 { 1 } else { 0 };
    if cycle {
        if n < 3 {
            return Err(FormulaError::InvalidParameter(format!("cycle needs n >= 3, got {n}")));
        }
        let copies = if n.is_multiple_of(3) { 2u32 } else { 1 };
        Ok(WedgeDescriptor::uniform(dim(n) as usize, copies.into()))
    } else {
        if n < 2 {
            return Err(FormulaError::InvalidParameter(format!("path needs n >= 2, got {n}")));
        }
        if n % 3 == 2 {
            Ok(WedgeDescriptor::contractible())
        } else {
            Ok(WedgeDescriptor::uniform(dim(n) as usize, 1u32.into()))
        }
    }
}

/// Matching complex of the `i`-th one-child tree: a single sphere of
/// dimension `floor((i-1)/2)`.
pub fn one_child_tree_homotopy(i: usize) -> Result<WedgeDescriptor, FormulaError> {
    if i < 1 {
        return Err(FormulaError::InvalidParameter(format!("one-child tree needs i >= 1, got {i}")));
    }
    Ok(WedgeDescriptor::uniform((i - 1) / 2, 1u32.into()))
}
