//! Wedge-of-spheres descriptors.

use num_bigint::BigUint;
use num_traits::Zero;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::collections::BTreeMap;
use std::fmt;

/// A homotopy type that is either contractible or a finite wedge of spheres,
/// recorded as `dimension -> number of copies` with all counts positive.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct WedgeDescriptor {
    spheres: BTreeMap<usize, BigUint>,
}

impl WedgeDescriptor {
    pub fn contractible() -> Self {
        Self::default()
    }

    /// `count` spheres in a single dimension; zero count is contractible.
    pub fn uniform(dim: usize, count: BigUint) -> Self {
        let mut w = Self::default();
        w.add_spheres(dim, count);
        w
    }

    pub fn from_counts(counts: impl IntoIterator<Item = (usize, BigUint)>) -> Self {
        let mut w = Self::default();
        for (dim, count) in counts {
            w.add_spheres(dim, count);
        }
        w
    }

    pub fn add_spheres(&mut self, dim: usize, count: BigUint) {
        if !count.is_zero() {
            *self.spheres.entry(dim).or_default() += count;
        }
    }

    pub fn is_contractible(&self) -> bool {
        self.spheres.is_empty()
    }

    pub fn spheres(&self) -> &BTreeMap<usize, BigUint> {
        &self.spheres
    }

    pub fn count(&self, dim: usize) -> BigUint {
        self.spheres.get(&dim).cloned().unwrap_or_default()
    }

    pub fn total(&self) -> BigUint {
        self.spheres.values().sum()
    }

    pub fn min_dim(&self) -> Option<usize> {
        self.spheres.keys().next().copied()
    }

    pub fn max_dim(&self) -> Option<usize> {
        self.spheres.keys().next_back().copied()
    }

    /// Suspension shifts every sphere up one dimension.
    pub fn suspended(&self) -> Self {
        WedgeDescriptor { spheres: self.spheres.iter().map(|(&d, c)| (d + 1, c.clone())).collect() }
    }

    pub fn wedge(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&d, c) in &other.spheres {
            out.add_spheres(d, c.clone());
        }
        out
    }

    pub fn scaled(&self, k: &BigUint) -> Self {
        let mut out = Self::default();
        for (&d, c) in &self.spheres {
            out.add_spheres(d, c * k);
        }
        out
    }
}

impl fmt::Display for WedgeDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_contractible() {
            return write!(f, "contractible");
        }
        let parts: Vec<String> = self
            .spheres
            .iter()
            .map(|(d, c)| {
                if c == &BigUint::from(1u32) {
                    format!("S^{d}")
                } else {
                    format!("{c} S^{d}")
                }
            })
            .collect();
        write!(f, "{}", parts.join(" v "))
    }
}

#[derive(Serialize, Deserialize)]
struct RawWedge {
    contractible: bool,
    /// dimension (decimal string) -> count (decimal string); counts may
    /// exceed machine integers
    spheres: BTreeMap<String, String>,
}

impl Serialize for WedgeDescriptor {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let raw = RawWedge {
            contractible: self.is_contractible(),
            spheres: self.spheres.iter().map(|(d, c)| (d.to_string(), c.to_string())).collect(),
        };
        raw.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for WedgeDescriptor {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = RawWedge::deserialize(deserializer)?;
        let mut w = WedgeDescriptor::default();
        for (d, c) in raw.spheres {
            let dim: usize = d.parse().map_err(|_| D::Error::custom(format!("bad dimension '{d}'")))?;
            let count: BigUint = c.parse().map_err(|_| D::Error::custom(format!("bad count '{c}'")))?;
            w.add_spheres(dim, count);
        }
        if raw.contractible != w.is_contractible() {
            return Err(D::Error::custom("contractible flag inconsistent with sphere counts"));
        }
        Ok(w)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn algebra() {
        let a = WedgeDescriptor::from_counts([(0, 1u32.into()), (1, 2u32.into())]);
        assert_eq!(a.suspended(), WedgeDescriptor::from_counts([(1, 1u32.into()), (2, 2u32.into())]));
        assert_eq!(a.wedge(&a).count(1), 4u32.into());
        assert_eq!(a.scaled(&0u32.into()), WedgeDescriptor::contractible());
        assert_eq!(a.total(), 3u32.into());
        assert_eq!((a.min_dim(), a.max_dim()), (Some(0), Some(1)));
    }

    #[test]
    fn display() {
        assert_eq!(WedgeDescriptor::contractible().to_string(), "contractible");
        let a = WedgeDescriptor::from_counts([(0, 1u32.into()), (3, 4u32.into())]);
        assert_eq!(a.to_string(), "S^0 v 4 S^3");
    }

    #[test]
    fn json_round_trip() {
        let a = WedgeDescriptor::from_counts([(2, 56u32.into())]);
        let s = serde_json::to_string(&a).unwrap();
        assert_eq!(s, r#"{"contractible":false,"spheres":{"2":"56"}}"#);
        assert_eq!(serde_json::from_str::<WedgeDescriptor>(&s).unwrap(), a);

        let c = serde_json::to_string(&WedgeDescriptor::contractible()).unwrap();
        assert_eq!(c, r#"{"contractible":true,"spheres":{}}"#);
    }
}
