//! Command-line front end: generate family graphs, run the constructive
//! labelers, verify labelings, search exact values, dump label blocks, and
//! re-derive the reference tables.
//!
//! Exit codes: 0 success/valid, 1 invalid or FAIL, 2 usage or input error,
//! 3 search budget exhausted.

mod repro;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use ldag::construct::{ConstructionRequest, ParamValue, TheoremId};
use ldag::io::{parse_graph, parse_labeling, serialize_graph};
use ldag::oracle::{chi_ld_exact, OracleValue, SearchBudget};
use ldag::{Certificate, Error, FamilySpec, Graph};

#[derive(Parser)]
#[command(
    name = "ldag",
    version,
    about = "Local distance antimagic labelings: generate, construct, verify, search"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a family graph and write its edge list
    Gen {
        /// Descriptor tokens, e.g. `cycle 6`, `lexi cycle 5 empty 3`
        #[arg(required = true)]
        spec: Vec<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run a constructive labeler and emit its certificate
    Label {
        /// Theorem identifier, e.g. `path`, `regular-bipartite`
        #[arg(long)]
        theorem: String,
        /// Repeated `key=value` pairs; graph values take a family descriptor
        /// or `@file`, labeling values take `@file`
        #[arg(long = "params")]
        params: Vec<String>,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        /// Order cap for ingredient searches
        #[arg(long, default_value_t = 10)]
        cap: usize,
        #[arg(long, default_value_t = 1)]
        threads: usize,
    },
    /// Verify a labeling file against a graph file and emit a certificate
    Verify {
        graph: PathBuf,
        labeling: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Exact minimum color count of a small graph
    #[command(name = "chi-ld")]
    ChiLd {
        graph: PathBuf,
        /// Refuse graphs larger than this
        #[arg(long, default_value_t = 10)]
        cap: usize,
        #[arg(long, default_value_t = 1)]
        threads: usize,
        /// Node budget before bracketing
        #[arg(long)]
        max_nodes: Option<u64>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Print a label block (kinds: a, b, c, magic)
    Rect {
        kind: String,
        n: usize,
        m: usize,
        #[arg(long, default_value_t = 0)]
        offset: usize,
    },
    /// Re-derive reference values and report PASS/FAIL per row
    /// (tables: cycles, paths, cliques, constructions)
    Repro {
        table: String,
        /// Skip rows whose graph order exceeds this
        #[arg(long, default_value_t = 14)]
        cap: usize,
        #[arg(long, default_value_t = 1)]
        threads: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(exit_code_for(&err))
        }
    }
}

fn exit_code_for(err: &Error) -> u8 {
    match err {
        Error::OrderCap { .. } => 3,
        Error::SelfCheck(_) => 1,
        _ => 2,
    }
}

fn read_file(path: &PathBuf) -> Result<String, Error> {
    fs::read_to_string(path).map_err(|e| Error::Parse {
        line: 0,
        msg: format!("{}: {e}", path.display()),
    })
}

fn emit(text: &str, out: &Option<PathBuf>) -> Result<(), Error> {
    match out {
        Some(path) => fs::write(path, text).map_err(|e| Error::Parse {
            line: 0,
            msg: format!("{}: {e}", path.display()),
        }),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<u8, Error> {
    match cli.command {
        Command::Gen { spec, out } => {
            let tokens: Vec<&str> = spec.iter().map(String::as_str).collect();
            let g = ldag::gen_family(&FamilySpec::parse_tokens(&tokens)?)?;
            emit(&serialize_graph(&g), &out)?;
            Ok(0)
        }
        Command::Label {
            theorem,
            params,
            out,
            format,
            cap,
            threads,
        } => {
            let request = build_request(theorem.parse()?, &params)?;
            let budget = SearchBudget::default()
                .with_max_order(cap)
                .with_threads(threads);
            let cert = request.run(&budget)?;
            emit(&render_certificate(&cert, format), &out)?;
            Ok(0)
        }
        Command::Verify {
            graph,
            labeling,
            format,
            out,
        } => {
            let g = parse_graph(&read_file(&graph)?)?;
            let f = parse_labeling(&read_file(&labeling)?, g.order())?;
            let cert = Certificate::build(&g, &f, "verify")?;
            let valid = cert.valid;
            emit(&render_certificate(&cert, format), &out)?;
            Ok(if valid { 0 } else { 1 })
        }
        Command::ChiLd {
            graph,
            cap,
            threads,
            max_nodes,
            format,
        } => {
            let g = parse_graph(&read_file(&graph)?)?;
            let mut budget = SearchBudget::default()
                .with_max_order(cap)
                .with_threads(threads);
            if let Some(nodes) = max_nodes {
                budget = budget.with_max_nodes(nodes);
            }
            let result = chi_ld_exact(&g, &budget)?;
            let code = match result.value {
                OracleValue::Exact(_) | OracleValue::NoValidLabeling => 0,
                OracleValue::Bracket { .. } => 3,
            };
            print!("{}", render_oracle(&g, &result, format));
            Ok(code)
        }
        Command::Rect { kind, n, m, offset } => {
            let block = match kind.as_str() {
                "a" => ldag::rect::build_matrix_a(n, m)?,
                "b" => ldag::rect::build_matrix_b(n, m)?,
                "c" => ldag::rect::build_matrix_c(n, m)?,
                "magic" => ldag::rect::build_magic_rectangle(n, m)?,
                other => {
                    return Err(Error::NotCovered(format!(
                        "unknown block kind `{other}`; use a, b, c, or magic"
                    )))
                }
            };
            print!("{}", block.shifted(offset).dump());
            Ok(0)
        }
        Command::Repro { table, cap, threads } => repro::run(&table, cap, threads),
    }
}

fn build_request(theorem: TheoremId, pairs: &[String]) -> Result<ConstructionRequest, Error> {
    let mut request = ConstructionRequest::new(theorem);
    for pair in pairs {
        let (key, value) = pair.split_once('=').ok_or_else(|| Error::Parse {
            line: 0,
            msg: format!("parameter `{pair}` is not of the form key=value"),
        })?;
        let parsed = match key {
            "g" | "h" => ParamValue::Graph(load_graph_value(value)?),
            "f" | "fg" | "fh" => ParamValue::Labels(load_labels_value(value)?),
            "sizes" => ParamValue::Sizes(
                value
                    .split(',')
                    .map(|s| {
                        s.trim().parse().map_err(|_| Error::Parse {
                            line: 0,
                            msg: format!("`{s}` is not an integer"),
                        })
                    })
                    .collect::<Result<Vec<usize>, Error>>()?,
            ),
            _ => ParamValue::Int(value.parse().map_err(|_| Error::Parse {
                line: 0,
                msg: format!("parameter `{key}` expects an integer, got `{value}`"),
            })?),
        };
        request = request.with(key, parsed);
    }
    Ok(request)
}

fn load_graph_value(value: &str) -> Result<Graph, Error> {
    if let Some(path) = value.strip_prefix('@') {
        parse_graph(&read_file(&PathBuf::from(path))?)
    } else {
        ldag::gen_family(&FamilySpec::parse(value)?)
    }
}

fn load_labels_value(value: &str) -> Result<Vec<usize>, Error> {
    let path = value.strip_prefix('@').ok_or_else(|| Error::Parse {
        line: 0,
        msg: format!("labeling parameters take `@file`, got `{value}`"),
    })?;
    let text = read_file(&PathBuf::from(path))?;
    let rows = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .count();
    Ok(parse_labeling(&text, rows)?.labels().to_vec())
}

fn render_certificate(cert: &Certificate, format: Format) -> String {
    match format {
        Format::Json => {
            let mut json = cert.to_json();
            json.push('\n');
            json
        }
        Format::Text => {
            let weights: Vec<String> = cert.weights.iter().map(ToString::to_string).collect();
            let labels: Vec<String> = cert.labeling.iter().map(ToString::to_string).collect();
            format!(
                "provenance: {}\nvalid: {}\ncolors: {}\nlabeling: {}\nweights: {}\n",
                cert.provenance,
                cert.valid,
                cert.colors,
                labels.join(" "),
                weights.join(" ")
            )
        }
    }
}

fn render_oracle(g: &Graph, result: &ldag::OracleResult, format: Format) -> String {
    let value_text = match &result.value {
        OracleValue::Exact(k) => format!("exact {k}"),
        OracleValue::Bracket {
            lower,
            upper: Some(u),
        } => format!("bracket {lower}..={u}"),
        OracleValue::Bracket { lower, upper: None } => format!("bracket {lower}.."),
        OracleValue::NoValidLabeling => "no-valid-labeling".to_string(),
    };
    let witness: Option<Vec<usize>> = result.witness.as_ref().map(|w| w.labels().to_vec());
    match format {
        Format::Text => {
            let witness_text = witness
                .as_ref()
                .map(|w| {
                    w.iter()
                        .map(ToString::to_string)
                        .collect::<Vec<_>>()
                        .join(" ")
                })
                .unwrap_or_else(|| "-".to_string());
            format!(
                "order: {}\nedges: {}\nvalue: {}\nlower-bound: {}\nwitness: {}\nnodes: {}\ncompleted: {}\n",
                g.order(),
                g.size(),
                value_text,
                result.stats.lower_bound,
                witness_text,
                result.stats.nodes,
                result.stats.completed
            )
        }
        Format::Json => {
            let value = match &result.value {
                OracleValue::Exact(k) => serde_json::json!({"kind": "exact", "value": k}),
                OracleValue::Bracket { lower, upper } => {
                    serde_json::json!({"kind": "bracket", "lower": lower, "upper": upper})
                }
                OracleValue::NoValidLabeling => serde_json::json!({"kind": "no-valid-labeling"}),
            };
            let mut json = serde_json::to_string_pretty(&serde_json::json!({
                "order": g.order(),
                "edges": g.size(),
                "value": value,
                "lower_bound": result.stats.lower_bound,
                "witness": witness,
                "nodes": result.stats.nodes,
                "completed": result.stats.completed,
            }))
            .expect("oracle result serializes");
            json.push('\n');
            json
        }
    }
}
