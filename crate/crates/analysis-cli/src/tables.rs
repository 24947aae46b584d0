//! The three appendix sphere-count tables, regenerated from the closed
//! forms. Rendered rows are tab-separated: label, then one cell per
//! dimension starting at 0; trailing empty cells are omitted, interior
//! zero counts print as `0`.

use std::collections::BTreeMap;

use complex_core::matching_complex;
use homology_oracle::reduced_homology;
use homotopy_formulas::{arbitrary_caterpillar_polys, m_poly, MultilinearPoly, SymLeg};
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::run::SweepOutcome;
use crate::spec::FamilySpec;
use crate::CliError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    pub label: String,
    pub cells: Vec<String>,
}

/// The leg layout of each alternating-caterpillar row in table 3.
const TABLE3_PATTERNS: [&[SymLeg]; 7] = {
    use SymLeg::{Leg, Zero};
    [
        &[Leg(1)],
        &[Leg(1), Zero],
        &[Leg(1), Zero, Leg(3)],
        &[Leg(1), Zero, Leg(3), Zero],
        &[Leg(1), Zero, Leg(3), Zero, Zero],
        &[Leg(1), Zero, Leg(3), Zero, Zero, Leg(6)],
        &[Leg(1), Zero, Leg(3), Zero, Zero, Leg(6), Leg(7)],
    ]
};

/// Symbolic rows of table `id`.
///
/// Table 1: perfect `m`-caterpillars, entries `C(a,b)(m-1)^p`.
/// Table 2: fully legged caterpillars, entries are polynomials in the
/// `t_i = m_i - 1`.
/// Table 3: the alternating examples `G_n(m_1, 0, m_3, ...)`, four
/// dimension columns.
pub fn table_rows(id: u8) -> Result<Vec<TableRow>, CliError> {
    match id {
        1 => Ok((1..=7).map(table1_row).collect()),
        2 => Ok((1..=7).map(table2_row).collect()),
        3 => TABLE3_PATTERNS.iter().map(|legs| table3_row(legs)).collect(),
        other => Err(CliError::Spec(format!("unknown table {other}; expected 1, 2, or 3"))),
    }
}

/// `(dimension, binomial upper, binomial lower, power of m-1)` for each
/// sphere class of the perfect caterpillar on `n` spine vertices.
fn table1_terms(n: usize) -> Vec<(usize, usize, usize, usize)> {
    let k = n / 2;
    (0..=k)
        .map(|l| {
            if n.is_multiple_of(2) {
                (k - 1 + l, k + l, k - l, 2 * l)
            } else {
                (k + l, k + l + 1, k - l, 2 * l + 1)
            }
        })
        .collect()
}

fn table1_row(n: usize) -> TableRow {
    let terms = table1_terms(n);
    let first = terms[0].0;
    let mut cells = vec!["0".to_string(); first];
    for (_, a, b, p) in terms {
        let power = match p {
            1 => String::new(),
            p => format!("^{p}"),
        };
        cells.push(format!("C({a},{b})(m-1){power}"));
    }
    TableRow { label: format!("G{n}p"), cells }
}

fn table2_row(n: usize) -> TableRow {
    let vars: Vec<String> = (1..=n).map(|i| format!("m{i}")).collect();
    let label = format!("G{n}({})", vars.join(","));
    let first = n.div_ceil(2) - 1;
    let mut cells = vec!["0".to_string(); first];
    for dim in first..n {
        // a critical set of size dim + 1 pins down the parity class
        let x = 2 * (dim + 1) - n;
        cells.push(m_poly(n, x).to_string());
    }
    TableRow { label, cells }
}

fn table3_row(legs: &[SymLeg]) -> Result<TableRow, CliError> {
    let vars: Vec<String> = legs
        .iter()
        .map(|l| match l {
            SymLeg::Leg(i) => format!("m{i}"),
            SymLeg::Zero => "0".to_string(),
        })
        .collect();
    let label = format!("G{}({})", legs.len(), vars.join(","));
    let polys = arbitrary_caterpillar_polys(legs)?;
    let cells = (0..4)
        .map(|d| polys.get(&d).map_or_else(|| "0".to_string(), |p| p.to_string()))
        .collect();
    Ok(TableRow { label, cells })
}

pub fn render_table(rows: &[TableRow]) -> String {
    let mut out = String::new();
    for row in rows {
        out.push_str(&row.label);
        for cell in &row.cells {
            out.push('\t');
            out.push_str(cell);
        }
        out.push('\n');
    }
    out
}

/// Table 1 with `m` substituted: exact sphere counts per dimension.
pub fn evaluate_table1(m: i64) -> Vec<TableRow> {
    (1..=7)
        .map(|n| {
            let terms = table1_terms(n);
            let first = terms[0].0;
            let mut cells = vec!["0".to_string(); first];
            for (_, a, b, p) in terms {
                let count = binomial(a, b) * BigInt::from(m - 1).pow(p as u32);
                cells.push(count.to_string());
            }
            TableRow { label: format!("G{n}p"), cells }
        })
        .collect()
}

fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    let mut acc = BigInt::from(1);
    for j in 0..k {
        acc = acc * BigInt::from(n - j) / BigInt::from(j + 1);
    }
    acc
}

/// Tables 2 and 3 with every `t_i` substituted from `assign`
/// (1-indexed); missing variables are spec errors.
pub fn evaluate_table(id: u8, assign: &BTreeMap<usize, i64>) -> Result<Vec<TableRow>, CliError> {
    if id == 1 {
        return Err(CliError::Spec(
            "table 1 is symbolic in m; pass --m instead of --assign".into(),
        ));
    }
    let rows = table_rows(id)?;
    rows.into_iter()
        .map(|row| {
            let cells = row
                .cells
                .iter()
                .map(|cell| evaluate_cell(cell, assign))
                .collect::<Result<_, _>>()?;
            Ok(TableRow { label: row.label, cells })
        })
        .collect()
}

fn evaluate_cell(cell: &str, assign: &BTreeMap<usize, i64>) -> Result<String, CliError> {
    let poly = MultilinearPoly::parse(cell, "t")?;
    if let Some(missing) = poly.variables().iter().find(|v| !assign.contains_key(v)) {
        return Err(CliError::Spec(format!("assignment is missing t{missing}")));
    }
    Ok(poly.eval(|i| BigInt::from(assign[&i])).to_string())
}

/// Parses `t1=2,t3=0` style assignment lists.
pub fn parse_assignment(text: &str) -> Result<BTreeMap<usize, i64>, CliError> {
    let mut assign = BTreeMap::new();
    for part in text.split(',') {
        let part = part.trim();
        let (name, value) = part
            .split_once('=')
            .ok_or_else(|| CliError::Parse(format!("expected t<i>=<value>, got {part:?}")))?;
        let index = name
            .trim()
            .strip_prefix('t')
            .and_then(|i| i.parse::<usize>().ok())
            .ok_or_else(|| CliError::Parse(format!("bad variable name {name:?}")))?;
        let value = value
            .trim()
            .parse::<i64>()
            .map_err(|_| CliError::Parse(format!("bad value {value:?} for {name}")))?;
        assign.insert(index, value);
    }
    Ok(assign)
}

/// Cross-checks an evaluated table against oracle homology: builds the
/// row's caterpillar with `m_i = t_i + 1` (or `m` for table 1) and
/// compares Betti numbers to the evaluated sphere counts.
pub fn check_table(
    id: u8,
    assign: Option<&BTreeMap<usize, i64>>,
    m: Option<i64>,
    budget: u64,
) -> Result<Vec<SweepOutcome>, CliError> {
    let instances: Vec<(TableRow, Vec<usize>)> = match id {
        1 => {
            let m = m.ok_or_else(|| CliError::Spec("table 1 check needs --m".into()))?;
            if m < 1 {
                return Err(CliError::Spec(format!("--m must be at least 1, got {m}")));
            }
            evaluate_table1(m)
                .into_iter()
                .zip((1..=7).map(|n| vec![m as usize; n]))
                .collect()
        }
        2 | 3 => {
            let assign =
                assign.ok_or_else(|| CliError::Spec("table check needs --assign".into()))?;
            if let Some((i, &v)) = assign.iter().find(|&(_, &v)| v < 0) {
                return Err(CliError::Spec(format!(
                    "t{i} = {v} does not describe a caterpillar; legs m_i = t_i + 1 need t_i >= 0"
                )));
            }
            let patterns: Vec<Vec<usize>> = if id == 2 {
                (1..=7).map(|n| (1..=n).collect()).collect()
            } else {
                TABLE3_PATTERNS
                    .iter()
                    .map(|legs| {
                        legs.iter()
                            .map(|l| match l {
                                SymLeg::Leg(i) => *i,
                                SymLeg::Zero => 0,
                            })
                            .collect()
                    })
                    .collect()
            };
            let legs_of = |pattern: &[usize]| -> Result<Vec<usize>, CliError> {
                pattern
                    .iter()
                    .map(|&i| {
                        if i == 0 {
                            Ok(0)
                        } else {
                            let t = assign.get(&i).copied().ok_or_else(|| {
                                CliError::Spec(format!("assignment is missing t{i}"))
                            })?;
                            Ok(t as usize + 1)
                        }
                    })
                    .collect()
            };
            evaluate_table(id, assign)?
                .into_iter()
                .zip(patterns.iter().map(|p| legs_of(p)).collect::<Result<Vec<_>, _>>()?)
                .collect()
        }
        other => return Err(CliError::Spec(format!("unknown table {other}"))),
    };

    let mut outcomes = Vec::new();
    for (row, legs) in instances {
        let g = FamilySpec::Caterpillar { legs }.build()?;
        let profile = reduced_homology(&matching_complex(&g, budget)?);
        let oracle: Vec<String> = (0..row.cells.len())
            .map(|d| profile.betti.get(&d).copied().unwrap_or(0).to_string())
            .collect();
        let extra: Vec<usize> =
            profile.betti.keys().copied().filter(|&d| d >= row.cells.len()).collect();
        let pass = oracle == row.cells && extra.is_empty() && profile.torsion.is_empty();
        outcomes.push(SweepOutcome {
            label: row.label,
            pass,
            details: format!("evaluated {:?} vs oracle {:?}", row.cells, oracle),
        });
    }
    Ok(outcomes)
}
