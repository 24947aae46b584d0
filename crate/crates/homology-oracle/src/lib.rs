//! Ground-truth reduced integer homology for simplicial complexes: boundary
//! matrices, Smith normal form, and Betti/torsion profiles. Everything is
//! exact; no floating point, no field coefficients.

mod boundary;
mod snf;

pub use boundary::{boundary_matrix, BoundaryMatrix};
pub use snf::{smith_normal_form, SnfResult, SparseIntMatrix};

use complex_core::SimplicialComplex;
use homotopy_formulas::WedgeDescriptor;
use num_bigint::{BigInt, BigUint};
use num_traits::One;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

#[derive(Debug, thiserror::Error)]
pub enum OracleError {
    #[error("dimension {d} out of range for complex of dimension {dim:?}")]
    DimensionOutOfRange { d: usize, dim: Option<usize> },
    #[error("profile has torsion in dimensions {dims:?}, so it is not a wedge of spheres (forest certified: {forest_certified}; torsion in a forest profile is an internal inconsistency)")]
    TorsionPresent { dims: Vec<usize>, forest_certified: bool },
    #[error("the complex {{∅}} has its reduced homology in dimension -1; no wedge of spheres describes it")]
    EmptyComplex,
    #[error("parse: {0}")]
    Parse(String),
}

/// Reduced Betti numbers and torsion coefficients per dimension, nonzero
/// entries only. `empty_complex` marks the complex whose only face is ∅,
/// whose reduced homology sits in dimension -1 and is otherwise invisible
/// in this table.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawProfile", into = "RawProfile")]
pub struct HomologyProfile {
    pub betti: BTreeMap<usize, u64>,
    pub torsion: BTreeMap<usize, Vec<BigUint>>,
    pub empty_complex: bool,
}

impl HomologyProfile {
    pub fn betti(&self, d: usize) -> u64 {
        self.betti.get(&d).copied().unwrap_or(0)
    }

    pub fn is_torsion_free(&self) -> bool {
        self.torsion.is_empty()
    }

    pub fn is_trivial(&self) -> bool {
        self.betti.is_empty() && self.torsion.is_empty()
    }

    /// Reduced Euler characteristic implied by the profile (torsion does not
    /// contribute).
    pub fn euler_characteristic(&self) -> i64 {
        self.betti
            .iter()
            .map(|(&d, &b)| if d % 2 == 0 { b as i64 } else { -(b as i64) })
            .sum()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("profile serializes")
    }

    pub fn from_json(s: &str) -> Result<Self, OracleError> {
        serde_json::from_str(s).map_err(|e| OracleError::Parse(e.to_string()))
    }
}

#[derive(Serialize, Deserialize)]
struct RawProfile {
    betti: BTreeMap<String, u64>,
    torsion: BTreeMap<String, Vec<String>>,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    empty_complex: bool,
}

impl From<HomologyProfile> for RawProfile {
    fn from(p: HomologyProfile) -> Self {
        RawProfile {
            betti: p.betti.into_iter().map(|(d, b)| (d.to_string(), b)).collect(),
            torsion: p
                .torsion
                .into_iter()
                .map(|(d, c)| (d.to_string(), c.iter().map(BigUint::to_string).collect()))
                .collect(),
            empty_complex: p.empty_complex,
        }
    }
}

impl TryFrom<RawProfile> for HomologyProfile {
    type Error = String;

    fn try_from(raw: RawProfile) -> Result<Self, String> {
        let parse_dim = |s: &String| s.parse::<usize>().map_err(|e| format!("bad dimension {s:?}: {e}"));
        let mut betti = BTreeMap::new();
        for (d, b) in &raw.betti {
            if *b > 0 {
                betti.insert(parse_dim(d)?, *b);
            }
        }
        let mut torsion = BTreeMap::new();
        for (d, coeffs) in &raw.torsion {
            let parsed: Result<Vec<BigUint>, String> = coeffs
                .iter()
                .map(|c| c.parse::<BigUint>().map_err(|e| format!("bad torsion coefficient {c:?}: {e}")))
                .collect();
            let parsed = parsed?;
            if parsed.iter().any(|c| *c < BigUint::from(2u32)) {
                return Err(format!("torsion coefficients must exceed 1, got {coeffs:?}"));
            }
            if !parsed.is_empty() {
                torsion.insert(parse_dim(d)?, parsed);
            }
        }
        Ok(HomologyProfile { betti, torsion, empty_complex: raw.empty_complex })
    }
}

/// Reduced integer homology of the complex, dimension by dimension:
/// `betti_d = f_d - rank ∂_d - rank ∂_{d+1}` with the augmentation counted
/// as rank 1 in dimension 0, and torsion read off the invariant factors of
/// `∂_{d+1}`.
pub fn reduced_homology(a: &SimplicialComplex) -> HomologyProfile {
    let Some(dim) = a.dim() else {
        // only the empty face: reduced homology lives in dimension -1
        return HomologyProfile { empty_complex: true, ..Default::default() };
    };
    // snf[d] for the boundary map leaving dimension d
    let mut snfs: Vec<SnfResult> = Vec::with_capacity(dim + 1);
    for d in 0..=dim {
        if d == 0 {
            // augmentation: one relation as long as any vertex exists
            let rank = usize::from(!a.faces_of_dim(0).is_empty());
            snfs.push(SnfResult { invariants: vec![BigInt::one(); rank], rank });
            continue;
        }
        let b = boundary_matrix(a, d).expect("d <= dim");
        let m = SparseIntMatrix::from_triplets(b.nrows, b.ncols, &b.entries);
        snfs.push(smith_normal_form(m));
    }

    let mut profile = HomologyProfile::default();
    for d in 0..=dim {
        let faces = a.faces_of_dim(d).len();
        let rank_out = snfs[d].rank;
        let rank_in = if d < dim { snfs[d + 1].rank } else { 0 };
        let betti = faces - rank_out - rank_in;
        if betti > 0 {
            profile.betti.insert(d, betti as u64);
        }
        if d < dim {
            let coeffs: Vec<BigUint> = snfs[d + 1]
                .invariants
                .iter()
                .filter(|v| !v.is_one())
                .map(|v| v.magnitude().clone())
                .collect();
            if !coeffs.is_empty() {
                profile.torsion.insert(d, coeffs);
            }
        }
    }
    profile
}

/// Reads a wedge-of-spheres homotopy type off a homology profile. Only valid
/// when the profile is known to determine the homotopy type, as certified
/// for matching complexes of forests; torsion or an empty complex mean no
/// such description exists.
pub fn wedge_from_homology(
    p: &HomologyProfile,
    forest_certified: bool,
) -> Result<WedgeDescriptor, OracleError> {
    if p.empty_complex {
        return Err(OracleError::EmptyComplex);
    }
    if !p.is_torsion_free() {
        return Err(OracleError::TorsionPresent {
            dims: p.torsion.keys().copied().collect(),
            forest_certified,
        });
    }
    Ok(WedgeDescriptor::from_counts(
        p.betti.iter().map(|(&d, &b)| (d, BigUint::from(b))),
    ))
}
