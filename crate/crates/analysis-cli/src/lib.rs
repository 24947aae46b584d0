//! Library backing the `analysis-cli` binary: instance specs, the
//! verify pipeline with its named consistency checks, cross-validation
//! sweeps, and the appendix sphere-count tables.
//!
//! Everything here is deterministic for a fixed invocation: maps are
//! ordered, lists are sorted where the producer does not already fix an
//! order, and stage timings are kept out of serialized reports unless
//! explicitly requested.

pub mod report;
pub mod run;
pub mod spec;
pub mod tables;

pub use report::{Check, FormulaDescriptor, RunReport};
pub use run::{
    caterpillar_sweep, formula_for, random_sweep, run_homology, run_mta_stage, verify_instance,
    HomologyOutput, Instance, InstanceOptions, SweepOutcome,
};
pub use spec::{parse_graph, parse_strategy, read_graph, render_graph, FamilyParams, FamilySpec};
pub use tables::{
    check_table, evaluate_table, evaluate_table1, parse_assignment, render_table, table_rows,
    TableRow,
};

use thiserror::Error;

/// Error classes aligned with the exit-code contract: 1 inconsistency,
/// 2 parse, 3 invalid spec, 4 budget. Flag parsing itself is handled by
/// clap, which also exits with 2.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("inconsistency: {0}")]
    Inconsistent(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid spec: {0}")]
    Spec(String),
    #[error("budget: {0}")]
    Budget(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Inconsistent(_) => 1,
            CliError::Parse(_) => 2,
            CliError::Spec(_) => 3,
            CliError::Budget(_) => 4,
        }
    }
}

impl From<graph_core::GraphError> for CliError {
    fn from(e: graph_core::GraphError) -> Self {
        CliError::Spec(e.to_string())
    }
}

impl From<complex_core::ComplexError> for CliError {
    fn from(e: complex_core::ComplexError) -> Self {
        match e {
            complex_core::ComplexError::BudgetExceeded { .. } => CliError::Budget(e.to_string()),
            other => CliError::Spec(other.to_string()),
        }
    }
}

impl From<homotopy_formulas::FormulaError> for CliError {
    fn from(e: homotopy_formulas::FormulaError) -> Self {
        match e {
            homotopy_formulas::FormulaError::Parse(p) => CliError::Parse(p),
            other => CliError::Spec(other.to_string()),
        }
    }
}

impl From<morse_mta::MtaError> for CliError {
    fn from(e: morse_mta::MtaError) -> Self {
        match e {
            morse_mta::MtaError::Complex(c) => c.into(),
            morse_mta::MtaError::Graph(g) => g.into(),
            morse_mta::MtaError::Parse(p) => CliError::Parse(p),
            morse_mta::MtaError::LowerBoundViolated { .. } => CliError::Inconsistent(e.to_string()),
            other => CliError::Spec(other.to_string()),
        }
    }
}

impl From<homology_oracle::OracleError> for CliError {
    fn from(e: homology_oracle::OracleError) -> Self {
        match e {
            homology_oracle::OracleError::Parse(p) => CliError::Parse(p),
            other => CliError::Spec(other.to_string()),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Spec(format!("io: {e}"))
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Parse(e.to_string())
    }
}
