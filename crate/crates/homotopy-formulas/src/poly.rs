//! Integer multilinear polynomials in indexed variables.

use crate::FormulaError;
use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::fmt;

/// A squarefree monomial: strictly ascending variable indices, ordered by
/// colex (largest index decides; a proper subset precedes its superset).
/// This is the order the reference tables list monomials in.
#[derive(Clone, Debug, PartialEq, Eq)]
struct Monomial(Vec<usize>);

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.0.iter().rev().cmp(other.0.iter().rev())
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Multilinear polynomial with integer coefficients; zero coefficients are
/// never stored.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct MultilinearPoly {
    terms: BTreeMap<Monomial, BigInt>,
}

impl MultilinearPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        let mut p = Self::default();
        p.add_term(&[], c.into());
        p
    }

    pub fn var(i: usize) -> Self {
        let mut p = Self::default();
        p.add_term(&[i], BigInt::one());
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Adds `coeff * prod(vars)`; `vars` must be strictly ascending.
    pub fn add_term(&mut self, vars: &[usize], coeff: BigInt) {
        assert!(vars.windows(2).all(|w| w[0] < w[1]), "monomial must be strictly ascending");
        if coeff.is_zero() {
            return;
        }
        let key = Monomial(vars.to_vec());
        let entry = self.terms.entry(key).or_insert_with(BigInt::zero);
        *entry += coeff;
        if entry.is_zero() {
            let key = Monomial(vars.to_vec());
            self.terms.remove(&key);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(&m.0, c.clone());
        }
        out
    }

    /// Product. The factors must use disjoint variable sets, which keeps the
    /// result multilinear; this is an internal invariant of every recursion
    /// in this crate.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::default();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let mut vars = ma.0.clone();
                vars.extend(&mb.0);
                vars.sort_unstable();
                assert!(
                    vars.windows(2).all(|w| w[0] < w[1]),
                    "product of overlapping variable sets is not multilinear"
                );
                out.add_term(&vars, ca * cb);
            }
        }
        out
    }

    pub fn mul_var(&self, i: usize) -> Self {
        self.mul(&Self::var(i))
    }

    /// Substitutes `x_i -> x_i + 1`.
    pub fn subst_var_plus_one(&self, i: usize) -> Self {
        let mut out = Self::default();
        for (m, c) in &self.terms {
            out.add_term(&m.0, c.clone());
            if let Ok(pos) = m.0.binary_search(&i) {
                let mut without = m.0.clone();
                without.remove(pos);
                out.add_term(&without, c.clone());
            }
        }
        out
    }

    /// Evaluates with `assign(i)` as the value of variable `i`.
    pub fn eval(&self, assign: impl Fn(usize) -> BigInt) -> BigInt {
        let mut total = BigInt::zero();
        for (m, c) in &self.terms {
            let mut prod = c.clone();
            for &v in &m.0 {
                prod *= assign(v);
            }
            total += prod;
        }
        total
    }

    /// Variable indices actually present.
    pub fn variables(&self) -> Vec<usize> {
        let mut vars: Vec<usize> = self.terms.keys().flat_map(|m| m.0.iter().copied()).collect();
        vars.sort_unstable();
        vars.dedup();
        vars
    }

    /// Monomials in colex order as `(variables, coefficient)`.
    pub fn terms(&self) -> impl Iterator<Item = (&[usize], &BigInt)> {
        self.terms.iter().map(|(m, c)| (m.0.as_slice(), c))
    }

    /// Renders with the given variable prefix: `1 + 2t1 + t3 + t1t3`.
    pub fn display_with(&self, prefix: &str) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let negative = c < &BigInt::zero();
            let mag = if negative { -c.clone() } else { c.clone() };
            if i == 0 {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let vars: String = m.0.iter().map(|v| format!("{prefix}{v}")).collect();
            if m.0.is_empty() {
                out.push_str(&mag.to_string());
            } else {
                if !mag.is_one() {
                    out.push_str(&mag.to_string());
                }
                out.push_str(&vars);
            }
        }
        out
    }

    /// Parses the `display_with` format back. Accepts optional whitespace
    /// around `+`/`-`.
    pub fn parse(s: &str, prefix: &str) -> Result<Self, FormulaError> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(FormulaError::Parse("empty polynomial".into()));
        }
        if compact == "0" {
            return Ok(Self::zero());
        }
        let mut out = Self::zero();
        let mut rest = compact.as_str();
        let mut sign = BigInt::one();
        if let Some(r) = rest.strip_prefix('-') {
            sign = -sign;
            rest = r;
        }
        loop {
            let end = rest.find(['+', '-']).unwrap_or(rest.len());
            let (term, tail) = rest.split_at(end);
            let (coeff, vars) = Self::parse_term(term, prefix)?;
            out.add_term(&vars, sign * coeff);
            if tail.is_empty() {
                return Ok(out);
            }
            sign = if tail.starts_with('+') { BigInt::one() } else { -BigInt::one() };
            rest = &tail[1..];
        }
    }

    fn parse_term(term: &str, prefix: &str) -> Result<(BigInt, Vec<usize>), FormulaError> {
        let bad = || FormulaError::Parse(format!("bad term '{term}'"));
        let digits_end = term.find(|c: char| !c.is_ascii_digit()).unwrap_or(term.len());
        let coeff = if digits_end == 0 {
            BigInt::one()
        } else {
            term[..digits_end].parse::<BigInt>().map_err(|_| bad())?
        };
        let mut vars = Vec::new();
        let mut rest = &term[digits_end..];
        while !rest.is_empty() {
            rest = rest.strip_prefix(prefix).ok_or_else(bad)?;
            let d_end = rest.find(|c: char| !c.is_ascii_digit()).unwrap_or(rest.len());
            if d_end == 0 {
                return Err(bad());
            }
            vars.push(rest[..d_end].parse::<usize>().map_err(|_| bad())?);
            rest = &rest[d_end..];
        }
        if !vars.windows(2).all(|w| w[0] < w[1]) {
            return Err(bad());
        }
        Ok((coeff, vars))
    }
}

impl fmt::Display for MultilinearPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_with("t"))
    }
}
