//! Sphere-count formulas for caterpillar matching complexes.
//!
//! A caterpillar has spine vertices `1..=n` with `m_i` pendant legs on
//! vertex `i`. Throughout, `t_i = m_i - 1`. Sphere counts in each dimension
//! are values of multilinear polynomials in the `t_i`; the generating sets
//! behind them are the "paired-complement" index sets enumerated by
//! [`enumerate_a_sets`].

use crate::poly::MultilinearPoly;
use crate::wedge::WedgeDescriptor;
use crate::FormulaError;
use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use std::collections::BTreeMap;

fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let mut out = BigUint::one();
    for i in 0..k.min(n - k) {
        out = out * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    out
}

/// All `x`-subsets `S` of `{1..n}` whose complement splits into consecutive
/// disjoint pairs, ascending within each set, generated in colex order.
/// Empty when `n - x` is odd.
pub fn enumerate_a_sets(n: usize, x: usize) -> Vec<Vec<usize>> {
    if x > n || !(n - x).is_multiple_of(2) {
        return Vec::new();
    }
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    if n >= 2 {
        // n unmarked: it must pair with n-1
        out.extend(enumerate_a_sets(n - 2, x));
    }
    if x >= 1 {
        // n marked
        for mut s in enumerate_a_sets(n - 1, x - 1) {
            s.push(n);
            out.push(s);
        }
    }
    out
}

/// `|enumerate_a_sets(n, x)|` in closed form: `C((n+x)/2, (n-x)/2)`.
pub fn a_count(n: usize, x: usize) -> BigUint {
    if x > n || !(n - x).is_multiple_of(2) {
        return BigUint::zero();
    }
    binomial((n + x) / 2, (n - x) / 2)
}

/// The degree-`x` sphere-count polynomial `sum over A-sets of prod t_i`.
pub fn m_poly(n: usize, x: usize) -> MultilinearPoly {
    let mut p = MultilinearPoly::zero();
    for s in enumerate_a_sets(n, x) {
        p.add_term(&s, BigInt::one());
    }
    p
}

/// Evaluates `m_poly(n, x)` at `t[i-1]` for variable `i`.
pub fn m_eval(n: usize, x: usize, t: &[BigInt]) -> Result<BigInt, FormulaError> {
    if t.len() != n {
        return Err(FormulaError::WrongLength { expected: n, got: t.len() });
    }
    Ok(m_poly(n, x).eval(|i| t[i - 1].clone()))
}

fn t_values(m: &[u64]) -> Vec<BigInt> {
    m.iter().map(|&v| BigInt::from(v) - 1).collect()
}

fn counts_to_wedge(counts: impl IntoIterator<Item = (usize, BigInt)>) -> WedgeDescriptor {
    WedgeDescriptor::from_counts(counts.into_iter().map(|(d, c)| {
        let (sign, mag) = c.into_parts();
        assert!(sign != num_bigint::Sign::Minus, "sphere count went negative");
        (d, mag)
    }))
}

/// Homotopy type for caterpillars with at least one leg on every spine
/// vertex: a wedge of spheres with counts `M` evaluated at `t_i = m_i - 1`.
/// For `n = 2k` the dimensions are `k-1+l`; for `n = 2k+1` they are `k+l`.
pub fn general_caterpillar_wedge(m: &[u64]) -> Result<WedgeDescriptor, FormulaError> {
    let n = m.len();
    if n == 0 {
        return Err(FormulaError::InvalidParameter("caterpillar needs a nonempty spine".into()));
    }
    if let Some(i) = m.iter().position(|&v| v == 0) {
        return Err(FormulaError::InvalidParameter(format!(
            "spine vertex {} has no legs; use arbitrary_caterpillar_wedge",
            i + 1
        )));
    }
    let t = t_values(m);
    let k = n / 2;
    let mut counts = Vec::new();
    for l in 0..=k {
        let (dim, x) = if n.is_multiple_of(2) { (k - 1 + l, 2 * l) } else { (k + l, 2 * l + 1) };
        counts.push((dim, m_eval(n, x, &t)?));
    }
    Ok(counts_to_wedge(counts))
}

/// Closed forms for the uniform caterpillar (`m >= 2` legs on each of `n`
/// spine vertices): binomial coefficients times powers of `m - 1`.
pub fn perfect_caterpillar_wedge(m: u64, n: usize) -> Result<WedgeDescriptor, FormulaError> {
    if m < 2 {
        return Err(FormulaError::InvalidParameter(format!("perfect caterpillar closed form needs m >= 2, got {m}")));
    }
    if n == 0 {
        return Err(FormulaError::InvalidParameter("caterpillar needs a nonempty spine".into()));
    }
    let t = BigUint::from(m - 1);
    let k = n / 2;
    let mut counts = Vec::new();
    for l in 0..=k {
        let (dim, count) = if n.is_multiple_of(2) {
            (k - 1 + l, binomial(k + l, k - l) * t.pow(2 * l as u32))
        } else {
            (k + l, binomial(k + l + 1, k - l) * t.pow(2 * l as u32 + 1))
        };
        counts.push((dim, count));
    }
    Ok(WedgeDescriptor::from_counts(counts))
}

/// A spine position holding either `m_i >= 1` symbolic legs (variable `t_i`)
/// or none.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SymLeg {
    Zero,
    Leg(usize),
}

/// Symbolic sphere-count table for an arbitrary caterpillar: dimension to
/// polynomial in the `t_i` of the legged positions. The first position must
/// be legged; zero polynomials are omitted.
///
/// Built by the append recursion: with `A_k` the table for the length-`k`
/// prefix,
///   legged position:                `A_k[d] = t_k * A_{k-1}[d-1] + A_{k-2}[d-1]`
///   bare after a legged position:   `A_k[d] = A_{k-1}[d] + A_{k-2}[d-1]`
///   bare after a bare position:     `A_k[d] = A_{k-3}[d-1]` (for `k >= 4`),
/// seeded with the one- and two-vertex tables; a double-bare tail at `k = 3`
/// collapses to the two-vertex caterpillar with one extra leg, which is a
/// single 0-sphere.
pub fn arbitrary_caterpillar_polys(legs: &[SymLeg]) -> Result<BTreeMap<usize, MultilinearPoly>, FormulaError> {
    let n = legs.len();
    if n == 0 {
        return Err(FormulaError::InvalidParameter("caterpillar needs a nonempty spine".into()));
    }
    let first = match legs[0] {
        SymLeg::Leg(i) => i,
        SymLeg::Zero => return Err(FormulaError::BothEndsZero),
    };

    let one = MultilinearPoly::constant(1);
    let mut tables: Vec<BTreeMap<usize, MultilinearPoly>> = Vec::with_capacity(n);

    let mut t1: BTreeMap<usize, MultilinearPoly> = BTreeMap::new();
    t1.insert(0, MultilinearPoly::var(first));
    tables.push(t1);

    if n >= 2 {
        let mut t2: BTreeMap<usize, MultilinearPoly> = BTreeMap::new();
        match legs[1] {
            SymLeg::Zero => {
                t2.insert(0, one.add(&MultilinearPoly::var(first)));
            }
            SymLeg::Leg(i) => {
                t2.insert(0, one.clone());
                t2.insert(1, MultilinearPoly::var(first).mul_var(i));
            }
        }
        tables.push(t2);
    }

    for k in 3..=n {
        let shift_add = |a: &BTreeMap<usize, MultilinearPoly>,
                         b: Option<&BTreeMap<usize, MultilinearPoly>>|
         -> BTreeMap<usize, MultilinearPoly> {
            // a shifted up one dimension, plus b shifted up one dimension
            let mut out: BTreeMap<usize, MultilinearPoly> = BTreeMap::new();
            for (d, p) in a {
                out.insert(d + 1, p.clone());
            }
            if let Some(b) = b {
                for (d, p) in b {
                    let entry = out.entry(d + 1).or_insert_with(MultilinearPoly::zero);
                    *entry = entry.add(p);
                }
            }
            out
        };
        let table = match (legs[k - 1], legs[k - 2]) {
            (SymLeg::Leg(i), _) => {
                // t_i * A_{k-1}[d-1] + A_{k-2}[d-1]
                let scaled: BTreeMap<usize, MultilinearPoly> =
                    tables[k - 2].iter().map(|(d, p)| (*d, p.mul_var(i))).collect();
                shift_add(&scaled, Some(&tables[k - 3]))
            }
            (SymLeg::Zero, SymLeg::Leg(_)) => {
                // A_{k-1}[d] + A_{k-2}[d-1]
                let mut out = tables[k - 2].clone();
                for (d, p) in &tables[k - 3] {
                    let entry = out.entry(d + 1).or_insert_with(MultilinearPoly::zero);
                    *entry = entry.add(p);
                }
                out
            }
            (SymLeg::Zero, SymLeg::Zero) => {
                if k == 3 {
                    // two bare vertices after the head: one 0-sphere
                    BTreeMap::from([(0, one.clone())])
                } else {
                    shift_add(&tables[k - 4], None)
                }
            }
        };
        tables.push(table);
    }

    let mut last = tables.pop().expect("at least one table");
    last.retain(|_, p| !p.is_zero());
    Ok(last)
}

/// Homotopy type for any caterpillar, legged or not. A caterpillar whose
/// first spine vertex is bare is reversed first; bare vertices at both ends
/// are rejected (trim the spine instead).
pub fn arbitrary_caterpillar_wedge(m: &[u64]) -> Result<WedgeDescriptor, FormulaError> {
    let n = m.len();
    if n == 0 {
        return Err(FormulaError::InvalidParameter("caterpillar needs a nonempty spine".into()));
    }
    let mut m = m.to_vec();
    if m[0] == 0 {
        if m[n - 1] == 0 {
            return Err(FormulaError::BothEndsZero);
        }
        m.reverse();
    }
    let legs: Vec<SymLeg> = m
        .iter()
        .enumerate()
        .map(|(i, &v)| if v == 0 { SymLeg::Zero } else { SymLeg::Leg(i + 1) })
        .collect();
    let polys = arbitrary_caterpillar_polys(&legs)?;
    let counts = polys
        .into_iter()
        .map(|(d, p)| (d, p.eval(|i| BigInt::from(m[i - 1]) - 1)));
    Ok(counts_to_wedge(counts))
}

/// The chain-gap polynomial: over nonempty ascending index tuples from
/// `{1..k}`, the product of consecutive index gaps times the corresponding
/// variables.
pub fn l_poly(k: usize) -> MultilinearPoly {
    let mut p = MultilinearPoly::zero();
    let mut chain: Vec<usize> = Vec::new();
    fn rec(next: usize, k: usize, chain: &mut Vec<usize>, p: &mut MultilinearPoly) {
        for i in next..=k {
            chain.push(i);
            let coeff: i64 = chain.windows(2).map(|w| (w[1] - w[0]) as i64).product();
            p.add_term(&chain.clone(), coeff.into());
            rec(i + 1, k, chain, p);
            chain.pop();
        }
    }
    rec(1, k, &mut chain, &mut p);
    p
}

/// Homotopy type for the alternating caterpillar: `2k-1` spine vertices with
/// `m_i >= 1` legs on the odd positions and none on the even ones. A single
/// dimension `k-1`, with `l_poly(k)` copies at `a_i = m_i - 1`.
pub fn alternating_caterpillar_wedge(m: &[u64]) -> Result<WedgeDescriptor, FormulaError> {
    let k = m.len();
    if k == 0 {
        return Err(FormulaError::InvalidParameter("need at least one legged vertex".into()));
    }
    if let Some(i) = m.iter().position(|&v| v == 0) {
        return Err(FormulaError::InvalidParameter(format!("position {} needs at least one leg", i + 1)));
    }
    let count = l_poly(k).eval(|i| BigInt::from(m[i - 1]) - 1);
    let mut counts = BTreeMap::new();
    counts.insert(k - 1, count);
    Ok(counts_to_wedge(counts))
}
