use std::io::Read;

use serde_json::{json, Value};

use csf_core::error::CsfError;
use csf_core::graphs::{enumerate_unit_interval_graphs, family, graph_from_json, graph_to_json, LabelledGraph, FAMILY_NAMES};
use csf_core::json::{sym_to_json, ubcsym_to_json};
use csf_core::limits::{self, HARD_MAX_VERTICES};
use csf_core::sym::x_of;
use csf_core::ubcsym::y_centred;
use csf_core::verify::{run_suite, SuiteConfig, SUITES};

use crate::args::{Cli, Command, Format, GraphArgs};
use crate::CliError;

const DEFAULT_SCAN_N: usize = 6;

pub fn run(cli: &Cli) -> Result<u8, CliError> {
    apply_env()?;
    if let Some(t) = cli.global.threads {
        if t == 0 {
            return Err(CliError::Usage("--threads must be at least 1".into()));
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build_global()
            .map_err(|e| CliError::Usage(e.to_string()))?;
    }
    let format = cli.global.format;
    match &cli.command {
        Command::ComputeY { graph, vertex, basis } => {
            let g = load_graph(graph)?;
            let v = parse_vertex(vertex, g.n())?;
            let y = y_centred(&g, v)?.to_basis((*basis).into())?;
            emit(format, &ubcsym_to_json(&y), &y.to_string());
            Ok(0)
        }
        Command::ComputeX { graph, basis } => {
            let g = load_graph(graph)?;
            let x = x_of(&g)?.to_basis((*basis).into())?;
            emit(format, &sym_to_json(&x), &x.to_string());
            Ok(0)
        }
        Command::Verify { suite, graph, samples, seed } => {
            if suite == "list" {
                list(format, SUITES);
                return Ok(0);
            }
            if graph.graph.is_some() {
                return Err(CliError::Usage("verify takes --family and parameters, not --graph".into()));
            }
            let cfg = SuiteConfig {
                max_n: cli.global.max_n,
                samples: *samples,
                seed: *seed,
                fail_fast: cli.global.fail_fast,
                family: graph.family.clone(),
                params: graph.params.to_map(),
            };
            let report = run_suite(suite, &cfg)?;
            match format {
                Format::Json => {
                    let mut v = serde_json::to_value(&report).expect("report serializes");
                    v["summary"] = json!(report.summary());
                    println!("{v}");
                }
                Format::Text => {
                    for f in &report.failures {
                        println!("FAIL {} {}", f.instance, f.detail);
                    }
                    println!("{}", report.summary());
                }
            }
            Ok(if report.passed() { 0 } else { 1 })
        }
        Command::Family { name, params } => {
            if name == "list" {
                list(format, FAMILY_NAMES);
                return Ok(0);
            }
            let g = family(name, &params.to_map())?;
            let text = g
                .edges()
                .iter()
                .map(|(i, j)| format!("{i}-{j}"))
                .collect::<Vec<_>>()
                .join(" ");
            emit(format, &graph_to_json(&g), &format!("n={} edges: {text}", g.n()));
            Ok(0)
        }
        Command::ScanEPositivity { graph } => {
            let (rows, scanned) = if graph.graph.is_some() || graph.family.is_some() {
                let g = load_graph(graph)?;
                let rows = (1..=g.n()).map(|v| scan_row(&g, v)).collect::<Result<Vec<_>, _>>()?;
                (rows, g.n())
            } else {
                scan_unit_interval(cli.global.max_n.unwrap_or(DEFAULT_SCAN_N))?
            };
            let negative = rows.iter().filter(|r| r["e_positive"] == json!(false)).count();
            let summary = format!("scanned={scanned} e_positive={} not_e_positive={negative}", scanned - negative);
            match format {
                Format::Json => println!("{}", json!({ "results": rows, "summary": summary })),
                Format::Text => {
                    for r in &rows {
                        let status = if r["e_positive"].as_bool() == Some(true) { "positive" } else { "not-positive" };
                        let witness = match &r["witness"] {
                            Value::Null => String::new(),
                            w => format!(" witness={w}"),
                        };
                        println!("{status} vertex={} graph={}{witness}", r["vertex"], r["graph"]);
                    }
                    println!("{summary}");
                }
            }
            Ok(0)
        }
    }
}

fn scan_row(g: &LabelledGraph, v: usize) -> Result<Value, CliError> {
    let (pos, witness) = y_centred(g, v)?.is_e_positive()?;
    let witness = witness.map(|(t, c)| json!({ "key": t.to_string(), "coeff": c.to_string() }));
    Ok(json!({ "graph": graph_to_json(g), "vertex": v, "e_positive": pos, "witness": witness }))
}

/// Centres every unit interval graph on at most `max_n` vertices at its last
/// vertex. Returns the rows that are not (e)-positive and the number scanned.
fn scan_unit_interval(max_n: usize) -> Result<(Vec<Value>, usize), CliError> {
    use rayon::prelude::*;
    let mut graphs = Vec::new();
    for n in 1..=max_n {
        graphs.extend(enumerate_unit_interval_graphs(n)?);
    }
    let rows: Vec<Value> = graphs
        .par_iter()
        .map(|g| scan_row(g, g.n()))
        .collect::<Result<_, _>>()?;
    let scanned = rows.len();
    let negative = rows.into_iter().filter(|r| r["e_positive"] == json!(false)).collect();
    Ok((negative, scanned))
}

fn list(format: Format, items: &[(&str, &str)]) {
    match format {
        Format::Json => {
            let v: Vec<Value> = items.iter().map(|(n, d)| json!({ "name": n, "info": d })).collect();
            println!("{}", Value::Array(v));
        }
        Format::Text => {
            for (n, d) in items {
                println!("{n:<20} {d}");
            }
        }
    }
}

fn emit(format: Format, value: &Value, text: &str) {
    match format {
        Format::Json => println!("{value}"),
        Format::Text => println!("{text}"),
    }
}

fn load_graph(args: &GraphArgs) -> Result<LabelledGraph, CliError> {
    match (&args.graph, &args.family) {
        (Some(_), Some(_)) => Err(CliError::Usage("give either --graph or --family, not both".into())),
        (None, None) => Err(CliError::Usage("a graph is required: --graph PATH or --family NAME".into())),
        (None, Some(name)) => Ok(family(name, &args.params.to_map())?),
        (Some(path), None) => {
            let text = if path.as_os_str() == "-" {
                let mut s = String::new();
                std::io::stdin()
                    .read_to_string(&mut s)
                    .map_err(|e| CliError::Usage(format!("reading stdin: {e}")))?;
                s
            } else {
                std::fs::read_to_string(path)
                    .map_err(|e| CliError::Usage(format!("reading {}: {e}", path.display())))?
            };
            Ok(graph_from_json(&text)?)
        }
    }
}

fn parse_vertex(s: &str, n: usize) -> Result<usize, CliError> {
    if s == "last" {
        return Ok(n);
    }
    let v: usize = s
        .parse()
        .map_err(|_| CliError::Usage(format!("--vertex expects an index or `last`, got `{s}`")))?;
    if v == 0 || v > n {
        return Err(CsfError::VertexOutOfRange { vertex: v, n }.into());
    }
    Ok(v)
}

fn env_cap(name: &str, hard_max: Option<usize>) -> Result<Option<usize>, CliError> {
    let Ok(raw) = std::env::var(name) else {
        return Ok(None);
    };
    let v: usize = raw
        .trim()
        .parse()
        .map_err(|_| CliError::Usage(format!("{name} must be a non-negative integer, got `{raw}`")))?;
    if let Some(max) = hard_max {
        if v > max {
            return Err(CliError::Usage(format!("{name} = {v} exceeds the hard limit {max}")));
        }
    }
    Ok(Some(v))
}

fn apply_env() -> Result<(), CliError> {
    if let Some(d) = env_cap("CSF_MAX_DEGREE", Some(HARD_MAX_VERTICES))? {
        limits::set_set_partition_degree(d);
        limits::set_ncsym_degree(d);
        limits::set_poset_size(d);
        limits::set_unit_interval_n(d);
    }
    if let Some(e) = env_cap("CSF_MAX_EDGES", None)? {
        limits::set_max_edges(e);
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn vertex_parsing() {
        assert_eq!(parse_vertex("last", 4).unwrap(), 4);
        assert_eq!(parse_vertex("2", 4).unwrap(), 2);
        assert!(parse_vertex("0", 4).is_err());
        assert!(parse_vertex("5", 4).is_err());
        assert!(parse_vertex("x", 4).is_err());
    }
}
