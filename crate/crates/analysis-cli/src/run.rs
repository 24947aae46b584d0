//! The verification pipeline and the cross-validation sweeps.
//!
//! A verify run walks one instance through matching complex, MTA, oracle
//! homology, and any closed-form formulas, then records named consistency
//! checks comparing the stages pairwise.

use std::collections::BTreeMap;
use std::time::Instant;

use complex_core::{matching_complex, SimplicialComplex, DEFAULT_FACE_BUDGET};
use graph_core::Graph;
use homology_oracle::{reduced_homology, wedge_from_homology, HomologyProfile, OracleError};
use homotopy_formulas::{
    binary_tree_connectivity_bound, honeycomb21_bounds, honeycomb_connectivity_bound,
    one_child_tree_homotopy, path_cycle_homotopy, perfect_caterpillar_wedge,
    polygon_line_bounds, arbitrary_caterpillar_wedge, BoundsResult, FormulaError,
    WedgeDescriptor,
};
use morse_mta::{
    critical_cells, induced_morse_matching, run_mta, verify_acyclic, CriticalReport,
    SplitStrategy, MORSE_MATCHING_VERTEX_LIMIT,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::report::{
    Check, ComplexStats, FormulaDescriptor, GraphStats, HomologyProfileEcho, InputEcho,
    RunReport,
};
use crate::spec::FamilySpec;
use crate::CliError;

/// Something the pipeline can run on: a known family instance or a graph
/// read from a file.
#[derive(Clone, Debug)]
pub enum Instance {
    Family(FamilySpec),
    File { label: String, graph: Graph },
}

impl Instance {
    pub fn label(&self) -> String {
        match self {
            Instance::Family(f) => f.label(),
            Instance::File { label, .. } => label.clone(),
        }
    }

    pub fn build(&self) -> Result<Graph, CliError> {
        match self {
            Instance::Family(f) => f.build(),
            Instance::File { graph, .. } => Ok(graph.clone()),
        }
    }

    fn family(&self) -> Option<&FamilySpec> {
        match self {
            Instance::Family(f) => Some(f),
            Instance::File { .. } => None,
        }
    }
}

/// Knobs shared by every pipeline entry point.
#[derive(Clone, Debug)]
pub struct InstanceOptions {
    /// `None` picks the family default (lexicographic for file inputs).
    pub strategy: Option<SplitStrategy>,
    pub face_budget: u64,
    /// Lifts the face budget entirely; large runs are the caller's choice.
    pub big: bool,
    /// Include wall-clock stage timings in the report.
    pub timings: bool,
}

impl Default for InstanceOptions {
    fn default() -> Self {
        InstanceOptions {
            strategy: None,
            face_budget: DEFAULT_FACE_BUDGET,
            big: false,
            timings: false,
        }
    }
}

impl InstanceOptions {
    pub fn effective_budget(&self) -> u64 {
        if self.big {
            u64::MAX
        } else {
            self.face_budget
        }
    }
}

fn complex_stats(c: &SimplicialComplex) -> ComplexStats {
    ComplexStats {
        total_faces: c.total_faces(),
        dim: c.dim(),
        f_vector: c.f_vector(),
        reduced_euler: c.reduced_euler_characteristic(),
    }
}

/// Closed-form output for a family, when the tool knows one: sphere-count
/// wedges for paths, cycles, caterpillars, and one-child trees; cell
/// windows for polygon lines and two-row honeycombs; connectivity floors
/// for the remaining honeycombs and for perfect binary trees.
pub fn formula_for(spec: &FamilySpec) -> Result<Option<FormulaDescriptor>, CliError> {
    match *spec {
        FamilySpec::Path { n } => Ok(Some(wedge_descriptor(&path_cycle_homotopy(n, false)?))),
        FamilySpec::Cycle { n } => Ok(Some(wedge_descriptor(&path_cycle_homotopy(n, true)?))),
        FamilySpec::Caterpillar { .. } | FamilySpec::PerfectCaterpillar { .. } => {
            caterpillar_formula(spec)
        }
        FamilySpec::OneChildTree { i } => Ok(Some(wedge_descriptor(&one_child_tree_homotopy(i)?))),
        FamilySpec::PerfectBinaryTree { h } => match binary_tree_connectivity_bound(h as u32) {
            Ok(bound) => Ok(Some(FormulaDescriptor::Connectivity { at_least: bound.to_string() })),
            // below the bound's domain there is nothing to claim
            Err(FormulaError::InvalidParameter(_)) => Ok(None),
            Err(e) => Err(e.into()),
        },
        FamilySpec::AntennaTree { .. } => Ok(None),
        FamilySpec::PolygonLine { n, t } => {
            if t == 1 {
                // a single polygon is the cycle on 2n vertices
                return Ok(Some(wedge_descriptor(&path_cycle_homotopy(2 * n, true)?)));
            }
            match polygon_line_bounds(n, t) {
                Ok(b) => Ok(Some(bounds_descriptor(&b))),
                Err(FormulaError::InvalidParameter(_)) => Ok(None),
                Err(e) => Err(e.into()),
            }
        }
        FamilySpec::Honeycomb { r, s, t } => {
            let (lo, hi) = (r.min(s), r.max(s));
            if (lo, hi) == (1, 1) {
                // one row of hexagons is the polygon line of hexagons
                if t == 1 {
                    return Ok(Some(wedge_descriptor(&path_cycle_homotopy(6, true)?)));
                }
                return Ok(Some(bounds_descriptor(&polygon_line_bounds(3, t)?)));
            }
            if (lo, hi) == (1, 2) {
                return Ok(Some(bounds_descriptor(&honeycomb21_bounds(t)?)));
            }
            let bound = honeycomb_connectivity_bound(r, s, t)?;
            Ok(Some(FormulaDescriptor::Connectivity { at_least: bound.to_string() }))
        }
    }
}

fn caterpillar_formula(spec: &FamilySpec) -> Result<Option<FormulaDescriptor>, CliError> {
    if let FamilySpec::PerfectCaterpillar { m, n } = *spec {
        if m >= 2 {
            return Ok(Some(wedge_descriptor(&perfect_caterpillar_wedge(m as u64, n)?)));
        }
    }
    let mut legs = spec.caterpillar_legs().expect("caller checked the family");
    // the graph is symmetric in its spine, the formula wants a legged start
    if legs.first() == Some(&0) {
        legs.reverse();
    }
    match arbitrary_caterpillar_wedge(&legs) {
        Ok(w) => Ok(Some(wedge_descriptor(&w))),
        Err(FormulaError::BothEndsZero) => Ok(None),
        Err(e) => Err(e.into()),
    }
}

fn wedge_descriptor(w: &WedgeDescriptor) -> FormulaDescriptor {
    FormulaDescriptor::Wedge {
        spheres: w.spheres().iter().map(|(&d, c)| (d, c.to_string())).collect(),
    }
}

fn bounds_descriptor(b: &BoundsResult) -> FormulaDescriptor {
    FormulaDescriptor::Bounds {
        d_min: b.d_min,
        d_max: b.d_max.to_string(),
        upper_exclusive: b.upper_exclusive,
        connectivity: b.connectivity,
    }
}

/// Runs the MTA on the line graph of `g` and summarizes the leaves.
pub fn run_mta_stage(g: &Graph, mut strategy: SplitStrategy) -> Result<CriticalReport, CliError> {
    let lg = g.line_graph();
    let tree = run_mta(&lg, &mut strategy)?;
    Ok(critical_cells(&tree))
}

/// Output of the standalone homology stage.
#[derive(Clone, Debug, serde::Serialize, serde::Deserialize)]
pub struct HomologyOutput {
    pub complex: ComplexStats,
    pub profile: HomologyProfileEcho,
}

/// Builds the matching or independence complex of `g` and computes its
/// reduced integer homology.
pub fn run_homology(g: &Graph, matching: bool, budget: u64) -> Result<HomologyOutput, CliError> {
    let complex = if matching {
        matching_complex(g, budget)?
    } else {
        complex_core::independence_complex(g, budget)?
    };
    let profile = reduced_homology(&complex);
    Ok(HomologyOutput { complex: complex_stats(&complex), profile: (&profile).into() })
}

/// Runs the full pipeline on one instance and cross-checks the stages.
pub fn verify_instance(instance: &Instance, opts: &InstanceOptions) -> Result<RunReport, CliError> {
    let mut timings: BTreeMap<String, u64> = BTreeMap::new();
    let clock = Instant::now();
    let g = instance.build()?;
    let lg = g.line_graph();
    timings.insert("1-graph".into(), clock.elapsed().as_millis() as u64);

    let clock = Instant::now();
    let complex = matching_complex(&g, opts.effective_budget())?;
    timings.insert("2-complex".into(), clock.elapsed().as_millis() as u64);

    let clock = Instant::now();
    let mut strategy = match &opts.strategy {
        Some(s) => s.clone(),
        None => match instance.family() {
            Some(f) => f.default_strategy()?,
            None => SplitStrategy::Lexicographic,
        },
    };
    let tree = run_mta(&lg, &mut strategy)?;
    let mta = critical_cells(&tree);
    timings.insert("3-mta".into(), clock.elapsed().as_millis() as u64);

    let clock = Instant::now();
    let profile = reduced_homology(&complex);
    timings.insert("4-homology".into(), clock.elapsed().as_millis() as u64);

    let clock = Instant::now();
    let formula = match instance.family() {
        Some(f) => formula_for(f)?,
        None => None,
    };
    timings.insert("5-formulas".into(), clock.elapsed().as_millis() as u64);

    let mut checks = Vec::new();
    checks.push(euler_morse_check(&mta, &complex));
    checks.push(morse_inequality_check(&mta, &profile));
    if let Some(f) = &formula {
        checks.extend(formula_check(f, instance, &profile, &mta));
    }
    if lg.n_vertices() <= MORSE_MATCHING_VERTEX_LIMIT {
        checks.push(acyclicity_check(&lg, &tree)?);
    }
    let pass = checks.iter().all(|c| c.pass);

    Ok(RunReport {
        input: InputEcho {
            instance: instance.label(),
            strategy: mta.strategy.clone(),
            face_budget: opts.face_budget,
            big: opts.big,
        },
        graph: GraphStats {
            n_vertices: g.n_vertices(),
            n_edges: g.edge_count(),
            line_graph_vertices: lg.n_vertices(),
        },
        complex: complex_stats(&complex),
        mta,
        homology: Some((&profile).into()),
        formula,
        checks,
        pass,
        timings_ms: if opts.timings { Some(timings) } else { None },
    })
}

/// Signed critical-cell count against the reduced Euler characteristic,
/// corrected by whether the empty face stayed unmatched.
fn euler_morse_check(mta: &CriticalReport, complex: &SimplicialComplex) -> Check {
    let lhs = mta.morse_euler();
    let adjustment = if mta.empty_face_matched { 0 } else { 1 };
    let rhs = complex.reduced_euler_characteristic() + adjustment;
    Check::new(
        "euler-morse",
        lhs == rhs,
        format!("signed critical-cell count {lhs}"),
        format!(
            "reduced Euler characteristic {} + unmatched-empty-face {adjustment}",
            complex.reduced_euler_characteristic()
        ),
        "==",
    )
}

/// Per-dimension critical cells must dominate the oracle Betti numbers.
fn morse_inequality_check(mta: &CriticalReport, profile: &HomologyProfile) -> Check {
    let pass = profile
        .betti
        .iter()
        .all(|(&d, &b)| mta.histogram.get(&d).copied().unwrap_or(0) >= b);
    Check::new(
        "morse-inequality",
        pass,
        format!("critical-cell histogram {:?}", mta.histogram),
        format!("oracle Betti numbers {:?}", profile.betti),
        ">= in every dimension",
    )
}

fn formula_check(
    formula: &FormulaDescriptor,
    instance: &Instance,
    profile: &HomologyProfile,
    mta: &CriticalReport,
) -> Vec<Check> {
    match formula {
        FormulaDescriptor::Wedge { spheres } => {
            let forest = matches!(
                instance.family(),
                Some(
                    FamilySpec::Path { .. }
                        | FamilySpec::Caterpillar { .. }
                        | FamilySpec::PerfectCaterpillar { .. }
                        | FamilySpec::OneChildTree { .. }
                        | FamilySpec::PerfectBinaryTree { .. }
                        | FamilySpec::AntennaTree { .. }
                )
            );
            let check = match wedge_from_homology(profile, forest) {
                Ok(oracle_wedge) => {
                    let oracle: BTreeMap<usize, String> = oracle_wedge
                        .spheres()
                        .iter()
                        .map(|(&d, c)| (d, c.to_string()))
                        .collect();
                    Check::new(
                        "formula-vs-oracle",
                        *spheres == oracle,
                        format!("formula wedge {spheres:?}"),
                        format!("oracle wedge {oracle:?}"),
                        "==",
                    )
                }
                Err(e @ OracleError::TorsionPresent { .. })
                | Err(e @ OracleError::EmptyComplex) => Check::new(
                    "formula-vs-oracle",
                    false,
                    format!("formula wedge {spheres:?}"),
                    format!("oracle profile is not a wedge of spheres: {e}"),
                    "==",
                ),
                Err(e) => Check::new(
                    "formula-vs-oracle",
                    false,
                    format!("formula wedge {spheres:?}"),
                    format!("oracle error: {e}"),
                    "==",
                ),
            };
            vec![check]
        }
        FormulaDescriptor::Bounds { d_min, d_max, upper_exclusive, .. } => {
            let admits = |d: usize| -> bool {
                // reconstruct the window test from the serialized pieces
                let top = match d_max.split_once('/') {
                    Some((p, q)) => {
                        let (p, q): (i64, i64) = (p.parse().unwrap(), q.parse().unwrap());
                        let lhs = (d as i64) * q;
                        if *upper_exclusive { lhs < p } else { lhs <= p }
                    }
                    None => {
                        let m: i64 = d_max.parse().unwrap();
                        if *upper_exclusive { (d as i64) < m } else { (d as i64) <= m }
                    }
                };
                d >= *d_min && top
            };
            // the window constrains homology under any strategy, but
            // critical-cell dimensions only under the construction the
            // theorem describes
            let constructing =
                matches!(mta.strategy.as_str(), "SmallestAj" | "Honeycomb21Cases");
            let bad_cells: Vec<usize> = if constructing {
                mta.histogram.keys().copied().filter(|&d| !admits(d)).collect()
            } else {
                Vec::new()
            };
            let bad_homology: Vec<usize> =
                profile.betti.keys().copied().filter(|&d| !admits(d)).collect();
            let window = if *upper_exclusive {
                format!("[{d_min}, {d_max})")
            } else {
                format!("[{d_min}, {d_max}]")
            };
            let lhs = if constructing {
                format!(
                    "critical dimensions {:?} and Betti dimensions {:?}",
                    mta.histogram.keys().collect::<Vec<_>>(),
                    profile.betti.keys().collect::<Vec<_>>()
                )
            } else {
                format!(
                    "Betti dimensions {:?} (cell claim skipped: strategy {} is not the theorem's)",
                    profile.betti.keys().collect::<Vec<_>>(),
                    mta.strategy
                )
            };
            vec![Check::new(
                "bounds-window",
                bad_cells.is_empty() && bad_homology.is_empty(),
                lhs,
                format!("window {window} (cells outside: {bad_cells:?}, homology outside: {bad_homology:?})"),
                "within",
            )]
        }
        FormulaDescriptor::Connectivity { at_least } => {
            // a k-connected complex has trivial reduced homology through k
            let bound: i64 = match at_least.parse() {
                Ok(b) => b,
                Err(_) => return Vec::new(), // too large to matter at desk scale
            };
            let bad: Vec<usize> = profile
                .betti
                .keys()
                .copied()
                .filter(|&d| (d as i64) <= bound)
                .collect();
            vec![Check::new(
                "bounds-window",
                bad.is_empty(),
                format!("Betti dimensions {:?}", profile.betti.keys().collect::<Vec<_>>()),
                format!("connectivity floor {bound} (violations: {bad:?})"),
                "above",
            )]
        }
    }
}

fn acyclicity_check(lg: &Graph, tree: &morse_mta::MatchingTree) -> Result<Check, CliError> {
    let matching = induced_morse_matching(lg, tree)?;
    let acyclic = verify_acyclic(&matching);
    Ok(Check::new(
        "acyclicity",
        acyclic,
        format!("induced matching on {} face pairs is acyclic: {acyclic}", matching.pairs.len()),
        "required: true".to_string(),
        "==",
    ))
}

/// One sweep instance's outcome.
#[derive(Clone, Debug, serde::Serialize, serde::Deserialize)]
pub struct SweepOutcome {
    pub label: String,
    pub pass: bool,
    pub details: String,
}

/// Runs `jobs` across `threads` workers, preserving input order in the
/// output. Parallelism is across instances only; each job is sequential.
fn run_jobs<T, F>(jobs: Vec<T>, threads: usize, f: F) -> Vec<SweepOutcome>
where
    T: Sync,
    F: Fn(&T) -> SweepOutcome + Sync,
{
    let threads = threads.max(1);
    let mut indexed: Vec<(usize, SweepOutcome)> = Vec::with_capacity(jobs.len());
    std::thread::scope(|scope| {
        let chunk = jobs.len().div_ceil(threads);
        let mut handles = Vec::new();
        for (c, slice) in jobs.chunks(chunk.max(1)).enumerate() {
            let f = &f;
            handles.push(scope.spawn(move || {
                slice
                    .iter()
                    .enumerate()
                    .map(|(i, job)| (c * chunk + i, f(job)))
                    .collect::<Vec<_>>()
            }));
        }
        for h in handles {
            indexed.extend(h.join().expect("sweep worker panicked"));
        }
    });
    indexed.sort_by_key(|(i, _)| *i);
    indexed.into_iter().map(|(_, o)| o).collect()
}

/// Every caterpillar with up to `max_spine` spine vertices and up to
/// `max_leg` legs per vertex (first vertex legged), checked formula
/// against oracle.
pub fn caterpillar_sweep(
    max_spine: usize,
    max_leg: u64,
    budget: u64,
    threads: usize,
) -> Vec<SweepOutcome> {
    let mut grids: Vec<Vec<u64>> = Vec::new();
    for n in 1..=max_spine {
        let mut stack = vec![Vec::with_capacity(n)];
        while let Some(prefix) = stack.pop() {
            if prefix.len() == n {
                if prefix.first().is_some_and(|&m| m >= 1) {
                    grids.push(prefix);
                }
                continue;
            }
            // descending push order keeps the popped enumeration ascending
            for m in (0..=max_leg).rev() {
                let mut next = prefix.clone();
                next.push(m);
                stack.push(next);
            }
        }
    }
    run_jobs(grids, threads, |legs| {
        let label = format!(
            "caterpillar({})",
            legs.iter().map(|m| m.to_string()).collect::<Vec<_>>().join(",")
        );
        match caterpillar_case(legs, budget) {
            Ok(None) => SweepOutcome { label, pass: true, details: "formula == oracle".into() },
            Ok(Some(mismatch)) => SweepOutcome { label, pass: false, details: mismatch },
            Err(e) => SweepOutcome { label, pass: false, details: e.to_string() },
        }
    })
}

fn caterpillar_case(legs: &[u64], budget: u64) -> Result<Option<String>, CliError> {
    let formula = arbitrary_caterpillar_wedge(legs)?;
    let spec = FamilySpec::Caterpillar { legs: legs.iter().map(|&m| m as usize).collect() };
    let g = spec.build()?;
    let complex = matching_complex(&g, budget)?;
    let profile = reduced_homology(&complex);
    let oracle = wedge_from_homology(&profile, true)?;
    if formula == oracle {
        Ok(None)
    } else {
        Ok(Some(format!(
            "formula {:?} != oracle {:?}",
            formula.spheres(),
            oracle.spheres()
        )))
    }
}

/// Random base graphs pushed through the full pipeline; exercises the
/// Euler identity, the Morse inequalities, and acyclicity on every run.
pub fn random_sweep(instances: usize, seed: u64, budget: u64, threads: usize) -> Vec<SweepOutcome> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut jobs = Vec::with_capacity(instances);
    for k in 0..instances {
        let n = rng.gen_range(4..=8);
        let mut edges = Vec::new();
        for u in 0..n {
            for v in (u + 1)..n {
                if rng.gen_bool(0.4) {
                    edges.push((u, v));
                }
            }
        }
        let graph = Graph::new(n, edges).expect("random graph is well formed");
        jobs.push((k, graph));
    }
    let opts = InstanceOptions { face_budget: budget, ..Default::default() };
    run_jobs(jobs, threads, |(k, graph)| {
        let instance = Instance::File { label: format!("random-{k}"), graph: graph.clone() };
        match verify_instance(&instance, &opts) {
            Ok(report) => SweepOutcome {
                label: instance.label(),
                pass: report.pass,
                details: if report.pass {
                    "all checks pass".into()
                } else {
                    format!("failing checks: {:?}", report.failing_checks())
                },
            },
            Err(e) => SweepOutcome { label: instance.label(), pass: false, details: e.to_string() },
        }
    })
}
