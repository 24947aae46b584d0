//! The verify pipeline's report: per-stage outputs, named consistency
//! checks, and an overall verdict.

use std::collections::BTreeMap;

use homology_oracle::HomologyProfile;
use morse_mta::CriticalReport;
use serde::{Deserialize, Serialize};

/// One named cross-check. `lhs` and `rhs` spell out the two sides being
/// compared so a failure is readable without rerunning anything.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub lhs: String,
    pub rhs: String,
    pub comparison: String,
}

impl Check {
    pub fn new(
        name: &str,
        pass: bool,
        lhs: impl Into<String>,
        rhs: impl Into<String>,
        comparison: &str,
    ) -> Self {
        Check { name: name.into(), pass, lhs: lhs.into(), rhs: rhs.into(), comparison: comparison.into() }
    }
}

/// Graph-stage echo: the base graph and its line graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphStats {
    pub n_vertices: usize,
    pub n_edges: usize,
    pub line_graph_vertices: usize,
}

/// Complex-stage echo: size and shape of the matching complex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexStats {
    pub total_faces: u64,
    pub dim: Option<usize>,
    pub f_vector: Vec<u64>,
    pub reduced_euler: i64,
}

/// Closed-form output for the instance's family, when one exists.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum FormulaDescriptor {
    /// Wedge of spheres: dimension to sphere count (decimal strings, the
    /// counts can be large).
    Wedge { spheres: BTreeMap<usize, String> },
    /// Critical-cell window plus connectivity for the tiling families.
    Bounds {
        d_min: usize,
        d_max: String,
        upper_exclusive: bool,
        connectivity: i64,
    },
    /// Connectivity floor only.
    Connectivity { at_least: String },
}

/// Everything `verify` learned about one instance.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunReport {
    pub input: InputEcho,
    pub graph: GraphStats,
    pub complex: ComplexStats,
    pub mta: CriticalReport,
    pub homology: Option<HomologyProfileEcho>,
    pub formula: Option<FormulaDescriptor>,
    pub checks: Vec<Check>,
    pub pass: bool,
    /// Wall-clock stage timings; omitted from serialized reports unless
    /// requested, so identical invocations stay byte-identical.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timings_ms: Option<BTreeMap<String, u64>>,
}

/// The instance as understood by the tool.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InputEcho {
    pub instance: String,
    pub strategy: String,
    pub face_budget: u64,
    pub big: bool,
}

/// Serializable image of a homology profile: Betti numbers and torsion
/// coefficients (decimal strings) per dimension, nonzero entries only.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomologyProfileEcho {
    pub betti: BTreeMap<usize, u64>,
    pub torsion: BTreeMap<usize, Vec<String>>,
    pub empty_complex: bool,
}

impl From<&HomologyProfile> for HomologyProfileEcho {
    fn from(p: &HomologyProfile) -> Self {
        HomologyProfileEcho {
            betti: p.betti.clone(),
            torsion: p
                .torsion
                .iter()
                .map(|(&d, cs)| (d, cs.iter().map(|c| c.to_string()).collect()))
                .collect(),
            empty_complex: p.empty_complex,
        }
    }
}

impl RunReport {
    pub fn failing_checks(&self) -> Vec<&str> {
        self.checks.iter().filter(|c| !c.pass).map(|c| c.name.as_str()).collect()
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    /// Human-oriented rendering; unlike the JSON it always includes
    /// timings when present.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("instance   {}\n", self.input.instance));
        out.push_str(&format!(
            "graph      {} vertices, {} edges ({} line-graph vertices)\n",
            self.graph.n_vertices, self.graph.n_edges, self.graph.line_graph_vertices
        ));
        out.push_str(&format!(
            "complex    {} faces, dim {}, f = {:?}, reduced Euler {}\n",
            self.complex.total_faces,
            match self.complex.dim {
                Some(d) => d.to_string(),
                None => "-".into(),
            },
            self.complex.f_vector,
            self.complex.reduced_euler
        ));
        let hist: Vec<String> =
            self.mta.histogram.iter().map(|(d, c)| format!("{d}:{c}")).collect();
        out.push_str(&format!(
            "mta        strategy {}, {} critical cells {{{}}}, {} empty leaves\n",
            self.mta.strategy,
            self.mta.critical.len(),
            hist.join(", "),
            self.mta.empty_leaves
        ));
        for w in &self.mta.warnings {
            out.push_str(&format!("           warning: {w}\n"));
        }
        if let Some(h) = &self.homology {
            let betti: Vec<String> = h.betti.iter().map(|(d, b)| format!("{d}:{b}")).collect();
            let torsion = if h.torsion.is_empty() { String::new() } else { format!(", torsion {:?}", h.torsion) };
            out.push_str(&format!("homology   betti {{{}}}{}\n", betti.join(", "), torsion));
        }
        match &self.formula {
            Some(FormulaDescriptor::Wedge { spheres }) => {
                let parts: Vec<String> =
                    spheres.iter().map(|(d, c)| format!("{c}xS^{d}")).collect();
                let desc = if parts.is_empty() { "contractible".into() } else { parts.join(" v ") };
                out.push_str(&format!("formula    wedge: {desc}\n"));
            }
            Some(FormulaDescriptor::Bounds { d_min, d_max, upper_exclusive, connectivity }) => {
                let top = if *upper_exclusive { format!("{d_max})") } else { format!("{d_max}]") };
                out.push_str(&format!(
                    "formula    cell window [{d_min}, {top}, connectivity >= {connectivity}\n"
                ));
            }
            Some(FormulaDescriptor::Connectivity { at_least }) => {
                out.push_str(&format!("formula    connectivity >= {at_least}\n"));
            }
            None => {}
        }
        for c in &self.checks {
            out.push_str(&format!(
                "check      {:<18} {}  [{} {} {}]\n",
                c.name,
                if c.pass { "pass" } else { "FAIL" },
                c.lhs,
                c.comparison,
                c.rhs
            ));
        }
        if let Some(t) = &self.timings_ms {
            let parts: Vec<String> = t.iter().map(|(k, v)| format!("{k} {v}ms")).collect();
            out.push_str(&format!("timings    {}\n", parts.join(", ")));
        }
        out.push_str(&format!("verdict    {}\n", if self.pass { "pass" } else { "FAIL" }));
        out
    }
}
