//! Graph family instances: flag parsing, construction, per-family default
//! split strategies, and graph files on disk.

use std::path::Path;

use graph_core::{
    generate, honeycomb_with_layout, polygon_line_a_vertices, GeneratorSpec, Graph,
};
use morse_mta::{honeycomb21_strategy, SplitStrategy};
use serde::{Deserialize, Serialize};

use crate::CliError;

/// One instance of a graph family the tool knows how to build.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "kebab-case")]
pub enum FamilySpec {
    Path { n: usize },
    Cycle { n: usize },
    Caterpillar { legs: Vec<usize> },
    PerfectCaterpillar { m: usize, n: usize },
    OneChildTree { i: usize },
    PerfectBinaryTree { h: usize },
    AntennaTree { h: usize },
    PolygonLine { n: usize, t: usize },
    Honeycomb { r: usize, s: usize, t: usize },
}

/// Raw numeric flags as they come off the command line; which ones are
/// required depends on the family name.
#[derive(Clone, Debug, Default)]
pub struct FamilyParams {
    pub n: Option<usize>,
    pub t: Option<usize>,
    pub r: Option<usize>,
    pub s: Option<usize>,
    pub m: Option<usize>,
    pub h: Option<usize>,
    pub i: Option<usize>,
    pub legs: Option<Vec<usize>>,
}

fn need(v: Option<usize>, flag: &str, family: &str) -> Result<usize, CliError> {
    v.ok_or_else(|| CliError::Spec(format!("family {family} requires {flag}")))
}

impl FamilySpec {
    pub fn from_params(family: &str, p: &FamilyParams) -> Result<Self, CliError> {
        let spec = match family {
            "path" => FamilySpec::Path { n: need(p.n, "--n", family)? },
            "cycle" => FamilySpec::Cycle { n: need(p.n, "--n", family)? },
            "caterpillar" => {
                let legs = p
                    .legs
                    .clone()
                    .ok_or_else(|| CliError::Spec("family caterpillar requires --legs".into()))?;
                FamilySpec::Caterpillar { legs }
            }
            "perfect-caterpillar" => FamilySpec::PerfectCaterpillar {
                m: need(p.m, "--m", family)?,
                n: need(p.n, "--n", family)?,
            },
            "one-child-tree" => FamilySpec::OneChildTree { i: need(p.i, "--i", family)? },
            "perfect-binary-tree" => {
                FamilySpec::PerfectBinaryTree { h: need(p.h, "--h", family)? }
            }
            "antenna-tree" => FamilySpec::AntennaTree { h: need(p.h, "--h", family)? },
            "polygon-line" => FamilySpec::PolygonLine {
                n: need(p.n, "--n", family)?,
                t: need(p.t, "--t", family)?,
            },
            "honeycomb" => FamilySpec::Honeycomb {
                r: need(p.r, "--r", family)?,
                s: need(p.s, "--s", family)?,
                t: need(p.t, "--t", family)?,
            },
            other => return Err(CliError::Spec(format!("unknown family {other:?}"))),
        };
        Ok(spec)
    }

    pub fn generator(&self) -> GeneratorSpec {
        match *self {
            FamilySpec::Path { n } => GeneratorSpec::Path { n },
            FamilySpec::Cycle { n } => GeneratorSpec::Cycle { n },
            FamilySpec::Caterpillar { ref legs } => {
                GeneratorSpec::Caterpillar { legs: legs.clone() }
            }
            FamilySpec::PerfectCaterpillar { m, n } => GeneratorSpec::PerfectCaterpillar { m, n },
            FamilySpec::OneChildTree { i } => GeneratorSpec::OneChildTree { i },
            FamilySpec::PerfectBinaryTree { h } => GeneratorSpec::PerfectBinaryTree { h },
            FamilySpec::AntennaTree { h } => GeneratorSpec::AntennaTree { h },
            FamilySpec::PolygonLine { n, t } => GeneratorSpec::PolygonLine { n, t },
            FamilySpec::Honeycomb { r, s, t } => GeneratorSpec::Honeycomb { r, s, t },
        }
    }

    pub fn build(&self) -> Result<Graph, CliError> {
        Ok(generate(&self.generator())?)
    }

    /// Split strategy used when the caller does not pick one: junction
    /// vertices for polygon lines, the strip case table for two-row
    /// honeycombs, lexicographic everywhere else.
    pub fn default_strategy(&self) -> Result<SplitStrategy, CliError> {
        match *self {
            FamilySpec::PolygonLine { n, t } => {
                Ok(SplitStrategy::SmallestAj { a_vertices: polygon_line_a_vertices(n, t)? })
            }
            FamilySpec::Honeycomb { r, s, t } if r.min(s) == 1 && r.max(s) == 2 => {
                let (g, layout) = honeycomb_with_layout(r, s, t)?;
                Ok(honeycomb21_strategy(&g, &layout)?)
            }
            _ => Ok(SplitStrategy::Lexicographic),
        }
    }

    pub fn label(&self) -> String {
        match *self {
            FamilySpec::Path { n } => format!("path({n})"),
            FamilySpec::Cycle { n } => format!("cycle({n})"),
            FamilySpec::Caterpillar { ref legs } => {
                let legs: Vec<String> = legs.iter().map(|m| m.to_string()).collect();
                format!("caterpillar({})", legs.join(","))
            }
            FamilySpec::PerfectCaterpillar { m, n } => format!("perfect-caterpillar(m={m},n={n})"),
            FamilySpec::OneChildTree { i } => format!("one-child-tree({i})"),
            FamilySpec::PerfectBinaryTree { h } => format!("perfect-binary-tree({h})"),
            FamilySpec::AntennaTree { h } => format!("antenna-tree({h})"),
            FamilySpec::PolygonLine { n, t } => format!("polygon-line(n={n},t={t})"),
            FamilySpec::Honeycomb { r, s, t } => format!("honeycomb({r},{s},{t})"),
        }
    }

    /// Leg counts when the instance is a caterpillar of either flavor.
    pub fn caterpillar_legs(&self) -> Option<Vec<u64>> {
        match *self {
            FamilySpec::Caterpillar { ref legs } => {
                Some(legs.iter().map(|&m| m as u64).collect())
            }
            FamilySpec::PerfectCaterpillar { m, n } => Some(vec![m as u64; n]),
            _ => None,
        }
    }
}

/// Parses a `--strategy` flag. Plain names: `lexicographic`, `smallest-aj`,
/// `honeycomb-21` (the latter two need a compatible `--family`); with
/// arguments: `avoid=3,7,11` and `fixed=1,6`.
pub fn parse_strategy(
    text: &str,
    family: Option<&FamilySpec>,
) -> Result<SplitStrategy, CliError> {
    if let Some(list) = text.strip_prefix("avoid=") {
        return Ok(SplitStrategy::avoid(parse_id_list(list)?));
    }
    if let Some(list) = text.strip_prefix("fixed=") {
        return Ok(SplitStrategy::fixed_order(parse_id_list(list)?));
    }
    match text {
        "lexicographic" => Ok(SplitStrategy::Lexicographic),
        "smallest-aj" => match family {
            Some(&FamilySpec::PolygonLine { n, t }) => {
                Ok(SplitStrategy::SmallestAj { a_vertices: polygon_line_a_vertices(n, t)? })
            }
            _ => Err(CliError::Spec(
                "strategy smallest-aj needs --family polygon-line (its junction vertices come from the chain layout)".into(),
            )),
        },
        "honeycomb-21" => match family {
            Some(&FamilySpec::Honeycomb { r, s, t }) => {
                let (g, layout) = honeycomb_with_layout(r, s, t)?;
                Ok(honeycomb21_strategy(&g, &layout)?)
            }
            _ => Err(CliError::Spec(
                "strategy honeycomb-21 needs --family honeycomb (its edge roles come from the layout)".into(),
            )),
        },
        other => Err(CliError::Parse(format!(
            "unknown strategy {other:?}; expected lexicographic, smallest-aj, honeycomb-21, avoid=<ids>, or fixed=<ids>"
        ))),
    }
}

fn parse_id_list(list: &str) -> Result<Vec<usize>, CliError> {
    list.split(',')
        .map(|tok| {
            tok.trim()
                .parse::<usize>()
                .map_err(|_| CliError::Parse(format!("bad vertex id {tok:?} in strategy list")))
        })
        .collect()
}

#[derive(Serialize, Deserialize)]
struct GraphFile {
    n_vertices: usize,
    edges: Vec<(usize, usize)>,
}

/// Serializes a graph as either a JSON object or a plain edge list headed
/// by an `n <count>` line.
pub fn render_graph(g: &Graph, json: bool) -> String {
    if json {
        let file = GraphFile { n_vertices: g.n_vertices(), edges: g.edges().to_vec() };
        let mut s = serde_json::to_string_pretty(&file).expect("graph serializes");
        s.push('\n');
        s
    } else {
        let mut s = format!("n {}\n", g.n_vertices());
        for &(u, v) in g.edges() {
            s.push_str(&format!("{u} {v}\n"));
        }
        s
    }
}

/// Reads a graph file in either format produced by [`render_graph`],
/// sniffing JSON by its leading brace.
pub fn read_graph(path: &Path) -> Result<Graph, CliError> {
    let text = std::fs::read_to_string(path)?;
    parse_graph(&text)
}

pub fn parse_graph(text: &str) -> Result<Graph, CliError> {
    if text.trim_start().starts_with('{') {
        let file: GraphFile = serde_json::from_str(text)?;
        return Ok(Graph::new(file.n_vertices, file.edges)?);
    }
    let mut n = None;
    let mut edges = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut tok = line.split_whitespace();
        match (tok.next(), tok.next(), tok.next()) {
            (Some("n"), Some(count), None) if n.is_none() => {
                n = Some(count.parse::<usize>().map_err(|_| {
                    CliError::Parse(format!("line {}: bad vertex count {count:?}", lineno + 1))
                })?);
            }
            (Some(u), Some(v), None) => {
                let parse = |t: &str| {
                    t.parse::<usize>().map_err(|_| {
                        CliError::Parse(format!("line {}: bad vertex id {t:?}", lineno + 1))
                    })
                };
                edges.push((parse(u)?, parse(v)?));
            }
            _ => {
                return Err(CliError::Parse(format!(
                    "line {}: expected `n <count>` or `<u> <v>`, got {line:?}",
                    lineno + 1
                )))
            }
        }
    }
    let n = n.ok_or_else(|| CliError::Parse("missing `n <count>` header line".into()))?;
    Ok(Graph::new(n, edges)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn flag_combinations_build_the_right_graphs() {
        let p = FamilyParams { r: Some(1), s: Some(1), t: Some(2), ..Default::default() };
        let g = FamilySpec::from_params("honeycomb", &p).unwrap().build().unwrap();
        assert_eq!(g.edge_count(), 11);

        let p = FamilyParams { legs: Some(vec![2, 0, 3]), ..Default::default() };
        let g = FamilySpec::from_params("caterpillar", &p).unwrap().build().unwrap();
        assert_eq!(g.n_vertices(), 8);

        let p = FamilyParams { n: Some(4), t: Some(2), ..Default::default() };
        let g = FamilySpec::from_params("polygon-line", &p).unwrap().build().unwrap();
        assert_eq!((g.n_vertices(), g.edge_count()), (14, 15));
    }

    #[test]
    fn missing_and_unknown_parameters_are_spec_errors() {
        let p = FamilyParams::default();
        assert!(matches!(FamilySpec::from_params("path", &p), Err(CliError::Spec(_))));
        assert!(matches!(FamilySpec::from_params("moebius", &p), Err(CliError::Spec(_))));
    }

    #[test]
    fn graph_files_round_trip_in_both_formats() {
        let g = generate(&GeneratorSpec::Cycle { n: 5 }).unwrap();
        for json in [false, true] {
            let text = render_graph(&g, json);
            let back = parse_graph(&text).unwrap();
            assert!(back.is_same_graph(&g), "json = {json}");
        }
    }

    #[test]
    fn strategy_flags_parse() {
        assert_eq!(
            parse_strategy("lexicographic", None).unwrap().name(),
            "Lexicographic"
        );
        let poly = FamilySpec::PolygonLine { n: 4, t: 2 };
        match parse_strategy("smallest-aj", Some(&poly)).unwrap() {
            SplitStrategy::SmallestAj { a_vertices } => assert_eq!(a_vertices, vec![0, 7, 14]),
            other => panic!("unexpected strategy {other:?}"),
        }
        assert!(matches!(parse_strategy("smallest-aj", None), Err(CliError::Spec(_))));
        match parse_strategy("fixed=1,6", None).unwrap() {
            SplitStrategy::FixedOrder { order, .. } => assert_eq!(order, vec![1, 6]),
            other => panic!("unexpected strategy {other:?}"),
        }
        assert!(matches!(parse_strategy("fixed=1,x", None), Err(CliError::Parse(_))));
        assert!(matches!(parse_strategy("mystery", None), Err(CliError::Parse(_))));
    }
}
