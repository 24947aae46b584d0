use std::fs;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use morse_mta::{CriticalReport, SplitStrategy};
use serde::Serialize;

use analysis_cli::{
    caterpillar_sweep, check_table, evaluate_table, evaluate_table1, formula_for,
    parse_assignment, parse_strategy, random_sweep, read_graph, render_graph, render_table,
    run_homology, run_mta_stage, table_rows, verify_instance, CliError, FamilyParams, FamilySpec,
    FormulaDescriptor, Instance, InstanceOptions, SweepOutcome, TableRow,
};

#[derive(Parser)]
#[command(
    name = "analysis-cli",
    version,
    about = "Matching-complex toolkit: graph generators, the matching tree algorithm, \
             integer homology, closed-form homotopy types, and cross-validation sweeps"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Seed for randomized sweeps
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Cap on enumerated faces (exit 4 when exceeded)
    #[arg(long, global = true)]
    face_budget: Option<u64>,

    /// Lift the face budget entirely; large runs are deliberate
    #[arg(long, global = true)]
    big: bool,

    /// Include per-stage wall-clock timings (off keeps JSON reproducible)
    #[arg(long, global = true)]
    timings: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

/// Instance selection shared by the pipeline subcommands: either a named
/// family with its parameters, or a graph file.
#[derive(Args)]
struct InstanceArgs {
    /// Family: path, cycle, caterpillar, perfect-caterpillar, one-child-tree,
    /// perfect-binary-tree, antenna-tree, polygon-line, honeycomb
    #[arg(long, conflicts_with = "input")]
    family: Option<String>,

    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    t: Option<usize>,
    #[arg(long)]
    r: Option<usize>,
    #[arg(long)]
    s: Option<usize>,
    #[arg(long)]
    m: Option<usize>,
    #[arg(long)]
    h: Option<usize>,
    #[arg(long)]
    i: Option<usize>,

    /// Comma-separated leg counts, e.g. 2,0,3
    #[arg(long, value_delimiter = ',')]
    legs: Option<Vec<usize>>,

    /// Read the graph from a file (text edge list or JSON)
    #[arg(long)]
    input: Option<PathBuf>,
}

impl InstanceArgs {
    fn resolve(&self) -> Result<Instance, CliError> {
        if let Some(path) = &self.input {
            let graph = read_graph(path)?;
            let label = path
                .file_stem()
                .map_or_else(|| "file".to_string(), |s| s.to_string_lossy().into_owned());
            return Ok(Instance::File { label, graph });
        }
        let family = self
            .family
            .as_deref()
            .ok_or_else(|| CliError::Spec("pass --family <name> or --input <file>".into()))?;
        let params = FamilyParams {
            n: self.n,
            t: self.t,
            r: self.r,
            s: self.s,
            m: self.m,
            h: self.h,
            i: self.i,
            legs: self.legs.clone(),
        };
        Ok(Instance::Family(FamilySpec::from_params(family, &params)?))
    }
}

#[derive(Subcommand)]
enum Command {
    /// Write a generated graph to a file or stdout
    Generate {
        #[command(flatten)]
        instance: InstanceArgs,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Run the matching tree algorithm and report critical cells
    Mta {
        #[command(flatten)]
        instance: InstanceArgs,
        /// lexicographic | smallest-aj | honeycomb-21 | avoid=.. | fixed=..
        #[arg(long)]
        strategy: Option<String>,
    },
    /// Reduced integer homology of the matching (or independence) complex
    Homology {
        #[command(flatten)]
        instance: InstanceArgs,
        #[arg(long, value_enum, default_value_t = WhichComplex::Matching)]
        complex: WhichComplex,
    },
    /// Closed-form homotopy type or cell-window bounds, where one applies
    Homotopy {
        #[command(flatten)]
        instance: InstanceArgs,
    },
    /// Full pipeline with named consistency checks
    Verify {
        #[command(flatten)]
        instance: InstanceArgs,
        #[arg(long)]
        strategy: Option<String>,
    },
    /// Regenerate the appendix sphere-count tables
    Tables {
        /// Table number: 1, 2, or 3
        #[arg(long)]
        id: u8,
        /// Evaluate at t-assignments, e.g. t1=1,t3=2 (tables 2 and 3)
        #[arg(long)]
        assign: Option<String>,
        /// Evaluate table 1 at this m
        #[arg(long)]
        m: Option<i64>,
        /// Cross-check evaluated counts against the homology oracle
        #[arg(long)]
        check: bool,
    },
    /// Batch cross-validation over many instances
    Sweep {
        #[arg(long, value_enum, default_value_t = SweepKind::Caterpillar)]
        what: SweepKind,
        /// Longest caterpillar spine (caterpillar sweep)
        #[arg(long, default_value_t = 5)]
        max_spine: usize,
        /// Largest per-vertex leg count (caterpillar sweep)
        #[arg(long, default_value_t = 3)]
        max_leg: u64,
        /// Number of random graphs (random sweep)
        #[arg(long, default_value_t = 25)]
        instances: usize,
        #[arg(long, default_value_t = 4)]
        threads: usize,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum WhichComplex {
    Matching,
    Independence,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SweepKind {
    Caterpillar,
    Random,
}

fn main() {
    let cli = Cli::parse();
    if let Err(e) = run(cli) {
        eprintln!("error: {e}");
        std::process::exit(e.exit_code());
    }
}

fn choose_strategy(flag: Option<&str>, instance: &Instance) -> Result<SplitStrategy, CliError> {
    let family = match instance {
        Instance::Family(f) => Some(f),
        Instance::File { .. } => None,
    };
    match flag {
        Some(text) => parse_strategy(text, family),
        None => match family {
            Some(f) => f.default_strategy(),
            None => Ok(SplitStrategy::Lexicographic),
        },
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    let json = cli.format == Format::Json;
    let mut opts = InstanceOptions::default();
    if let Some(b) = cli.face_budget {
        opts.face_budget = b;
    }
    opts.big = cli.big;
    opts.timings = cli.timings;

    match cli.command {
        Command::Generate { instance, output } => {
            let g = instance.resolve()?.build()?;
            let rendered = render_graph(&g, json);
            match output {
                Some(path) => fs::write(path, rendered)?,
                None => print!("{rendered}"),
            }
        }
        Command::Mta { instance, strategy } => {
            let inst = instance.resolve()?;
            let g = inst.build()?;
            let strategy = choose_strategy(strategy.as_deref(), &inst)?;
            let report = run_mta_stage(&g, strategy)?;
            if json {
                println!("{}", serde_json::to_string_pretty(&report)?);
            } else {
                print!("{}", mta_text(&inst.label(), &report));
            }
        }
        Command::Homology { instance, complex } => {
            let inst = instance.resolve()?;
            let g = inst.build()?;
            let out = run_homology(&g, complex == WhichComplex::Matching, opts.effective_budget())?;
            if json {
                println!("{}", serde_json::to_string_pretty(&out)?);
            } else {
                let betti: Vec<String> =
                    out.profile.betti.iter().map(|(d, b)| format!("{d}:{b}")).collect();
                let torsion = if out.profile.torsion.is_empty() {
                    String::new()
                } else {
                    format!(", torsion {:?}", out.profile.torsion)
                };
                println!(
                    "complex    {} faces, dim {}, f = {:?}, reduced Euler {}",
                    out.complex.total_faces,
                    out.complex.dim.map_or("-".to_string(), |d| d.to_string()),
                    out.complex.f_vector,
                    out.complex.reduced_euler
                );
                println!("homology   betti {{{}}}{}", betti.join(", "), torsion);
            }
        }
        Command::Homotopy { instance } => {
            let inst = instance.resolve()?;
            let spec = match &inst {
                Instance::Family(f) => f,
                Instance::File { .. } => {
                    return Err(CliError::Spec(
                        "closed forms are keyed to graph families; pass --family".into(),
                    ))
                }
            };
            let formula = formula_for(spec)?;
            if json {
                println!("{}", serde_json::to_string_pretty(&formula)?);
            } else {
                println!("{}", formula_text(formula.as_ref()));
            }
        }
        Command::Verify { instance, strategy } => {
            let inst = instance.resolve()?;
            if let Some(text) = strategy.as_deref() {
                let family = match &inst {
                    Instance::Family(f) => Some(f),
                    Instance::File { .. } => None,
                };
                opts.strategy = Some(parse_strategy(text, family)?);
            }
            let report = verify_instance(&inst, &opts)?;
            print!("{}", if json { report.to_json() } else { report.to_text() });
            if !report.pass {
                return Err(CliError::Inconsistent(format!(
                    "failing checks: {}",
                    report.failing_checks().join(", ")
                )));
            }
        }
        Command::Tables { id, assign, m, check } => {
            let assign = assign.as_deref().map(parse_assignment).transpose()?;
            let rows = match (&assign, m) {
                (Some(a), _) => evaluate_table(id, a)?,
                (None, Some(m)) if id == 1 => evaluate_table1(m),
                (None, Some(_)) => {
                    return Err(CliError::Spec(
                        "--m applies to table 1; use --assign for tables 2 and 3".into(),
                    ))
                }
                (None, None) => table_rows(id)?,
            };
            let checks = if check {
                Some(check_table(id, assign.as_ref(), m, opts.effective_budget())?)
            } else {
                None
            };
            if json {
                #[derive(Serialize)]
                struct TablesOut<'a> {
                    table: u8,
                    rows: &'a [TableRow],
                    #[serde(skip_serializing_if = "Option::is_none")]
                    checks: Option<&'a [SweepOutcome]>,
                }
                let out = TablesOut { table: id, rows: &rows, checks: checks.as_deref() };
                println!("{}", serde_json::to_string_pretty(&out)?);
            } else {
                print!("{}", render_table(&rows));
                if let Some(checks) = &checks {
                    print!("{}", outcomes_text(checks));
                }
            }
            if let Some(checks) = checks {
                fail_on_bad_outcomes(&checks)?;
            }
        }
        Command::Sweep { what, max_spine, max_leg, instances, threads } => {
            let budget = opts.effective_budget();
            let outcomes = match what {
                SweepKind::Caterpillar => caterpillar_sweep(max_spine, max_leg, budget, threads),
                SweepKind::Random => random_sweep(instances, cli.seed, budget, threads),
            };
            if json {
                println!("{}", serde_json::to_string_pretty(&outcomes)?);
            } else {
                print!("{}", outcomes_text(&outcomes));
            }
            fail_on_bad_outcomes(&outcomes)?;
        }
    }
    Ok(())
}

fn fail_on_bad_outcomes(outcomes: &[SweepOutcome]) -> Result<(), CliError> {
    let failures: Vec<&str> =
        outcomes.iter().filter(|o| !o.pass).map(|o| o.label.as_str()).collect();
    if failures.is_empty() {
        Ok(())
    } else {
        Err(CliError::Inconsistent(format!("failing instances: {}", failures.join(", "))))
    }
}

fn outcomes_text(outcomes: &[SweepOutcome]) -> String {
    let mut out = String::new();
    for o in outcomes {
        if o.pass {
            out.push_str(&format!("pass  {}\n", o.label));
        } else {
            out.push_str(&format!("FAIL  {}  {}\n", o.label, o.details));
        }
    }
    let failures = outcomes.iter().filter(|o| !o.pass).count();
    out.push_str(&format!("total {}, failures {}\n", outcomes.len(), failures));
    out
}

fn mta_text(label: &str, report: &CriticalReport) -> String {
    let mut out = String::new();
    out.push_str(&format!("instance   {label}\n"));
    out.push_str(&format!("strategy   {}\n", report.strategy));
    let hist: Vec<String> = report.histogram.iter().map(|(d, c)| format!("{d}:{c}")).collect();
    out.push_str(&format!(
        "critical   {} cells {{{}}}, {} empty leaves, signed count {}\n",
        report.critical.len(),
        hist.join(", "),
        report.empty_leaves,
        report.morse_euler()
    ));
    for a in &report.critical {
        let members: Vec<String> = a.iter().map(|v| v.to_string()).collect();
        out.push_str(&format!("  A = {{{}}}\n", members.join(", ")));
    }
    for w in &report.warnings {
        out.push_str(&format!("warning    {w}\n"));
    }
    out
}

fn formula_text(formula: Option<&FormulaDescriptor>) -> String {
    match formula {
        Some(FormulaDescriptor::Wedge { spheres }) => {
            if spheres.is_empty() {
                "wedge: contractible".to_string()
            } else {
                let parts: Vec<String> =
                    spheres.iter().map(|(d, c)| format!("{c}xS^{d}")).collect();
                format!("wedge: {}", parts.join(" v "))
            }
        }
        Some(FormulaDescriptor::Bounds { d_min, d_max, upper_exclusive, connectivity }) => {
            let top = if *upper_exclusive { format!("{d_max})") } else { format!("{d_max}]") };
            format!("cell window [{d_min}, {top}, connectivity >= {connectivity}")
        }
        Some(FormulaDescriptor::Connectivity { at_least }) => {
            format!("connectivity >= {at_least}")
        }
        None => "no closed form for this family".to_string(),
    }
}
