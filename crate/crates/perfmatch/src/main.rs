use std::collections::BTreeSet;
use std::fs;
use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use perfmatch::io::{self, DecompositionFile, FormatError, GraphFile};
use perfmatch_core::boundary::GenTable;
use perfmatch_core::decomposition::{
    apex_planar_decomposition, count_perfect_matchings, exact_matching, genpm_decomposed_traced, trivial_decomposition,
    validate_decomposition, TorsoRotation,
};
use perfmatch_core::generators as gen;
use perfmatch_core::graph::genpm_bruteforce;
use perfmatch_core::pfaffian::{genpm_planar, genpm_planar_with};
use perfmatch_core::planar::RotationSystem;
use perfmatch_core::{Error, Graph, Limits, PolyFrac};
use serde_json::{json, Value};

/// Exact generating functions of weighted perfect matchings.
#[derive(Parser)]
#[command(name = "perfmatch", version)]
struct Cli {
    /// Machine-readable JSON output.
    #[arg(long, global = true)]
    json: bool,
    /// Worker threads for the parallel loops (default: all cores).
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    threads: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Budget {
    /// Size budget for adhesions and apex sets; bags up to this size are small.
    #[arg(long, default_value_t = 4, value_parser = clap::value_parser!(u64).range(1..))]
    k: u64,
    /// Largest graph the brute-force enumeration accepts.
    #[arg(long = "oracle-cap", default_value_t = 20, value_parser = clap::value_parser!(u64).range(1..))]
    oracle_cap: u64,
    /// Largest number of candidate matchings per enumeration.
    #[arg(long = "work-limit", default_value_t = 2_000_000, value_parser = clap::value_parser!(u64).range(1..))]
    work_limit: u64,
}

impl Budget {
    fn limits(&self) -> Limits {
        Limits::default()
            .with_k(self.k as usize)
            .with_oracle_cap(self.oracle_cap as usize)
            .with_work_limit(self.work_limit)
    }
}

#[derive(Args)]
struct Source {
    /// Graph file; `-` or nothing reads standard input.
    graph: Option<PathBuf>,
    /// Decomposition file.
    #[arg(long, conflicts_with = "auto")]
    decomp: Option<PathBuf>,
    /// Build a single-bag decomposition from `--apex` (the default when no
    /// decomposition file is given).
    #[arg(long)]
    auto: bool,
    /// Apex vertices, comma separated; a leading `v` is accepted.
    #[arg(long, value_delimiter = ',')]
    apex: Vec<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Print the generating function of all perfect matchings.
    Genpm {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        budget: Budget,
        /// Also print the table computed at every decomposition node.
        #[arg(long = "dump-tables")]
        dump_tables: bool,
    },
    /// Print the number of perfect matchings.
    Count {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        budget: Budget,
    },
    /// Decide whether a perfect matching of total weight `--target` exists.
    Exact {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        budget: Budget,
        #[arg(long, allow_negative_numbers = true)]
        target: i64,
    },
    /// Generating function by exhaustive enumeration.
    Oracle {
        graph: Option<PathBuf>,
        #[arg(long = "oracle-cap", default_value_t = 20, value_parser = clap::value_parser!(u64).range(1..))]
        oracle_cap: u64,
    },
    /// Check a decomposition and report the first violated condition.
    Validate {
        #[command(flatten)]
        source: Source,
        #[arg(long, default_value_t = 4, value_parser = clap::value_parser!(u64).range(1..))]
        k: u64,
    },
    /// Emit a graph from one of the built-in families.
    Gen {
        #[arg(value_enum)]
        family: Family,
        params: Vec<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Include the canonical rotation system.
        #[arg(long = "with-embedding")]
        with_embedding: bool,
        /// Replace the weights by uniform draws from `LO:HI`.
        #[arg(long, allow_hyphen_values = true)]
        weights: Option<String>,
    },
    /// Generating function of a planar graph by the Pfaffian method.
    Fkt { graph: Option<PathBuf> },
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Grid,
    Complete,
    CompleteBipartite,
    CylindricalGrid,
    ShallowVortexGrid,
    SegregatedShallowVortexGrid,
    K4Disk,
    RingBlowupK4,
    CylindricalGridRingBlowup,
    QGraph,
    RandomPlanar,
    RandomApexPlanar,
}

struct Failure {
    code: u8,
    message: String,
    /// Report printed on standard output despite the failure.
    report: Option<(String, Value)>,
}

impl Failure {
    fn new(code: u8, message: impl Into<String>) -> Self {
        Failure { code, message: message.into(), report: None }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::PolyParse(_) => 1,
            Error::ValidationFailed(_)
            | Error::InvalidDecomposition(_)
            | Error::NotPlanar
            | Error::NotPlanarAfterApex
            | Error::NotPlanarEmbedding
            | Error::MalformedRotation(_)
            | Error::GlueNotClique(_)
            | Error::VertexOutOfRange { .. } => 2,
            Error::WorkLimitExceeded(_) | Error::TooLarge { .. } | Error::TooLargeForFallback { .. } => 3,
            _ => 4,
        };
        Failure::new(code, e.to_string())
    }
}

impl From<FormatError> for Failure {
    fn from(e: FormatError) -> Self {
        Failure::new(1, e.to_string())
    }
}

type Outcome = Result<Value, Failure>;

fn read_input(path: Option<&PathBuf>) -> Result<String, Failure> {
    match path {
        Some(p) if p.as_os_str() != "-" => {
            fs::read_to_string(p).map_err(|e| Failure::new(1, format!("cannot read {}: {e}", p.display())))
        }
        _ => {
            let mut s = String::new();
            std::io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| Failure::new(1, format!("cannot read standard input: {e}")))?;
            Ok(s)
        }
    }
}

fn load_graph(path: Option<&PathBuf>) -> Result<GraphFile, Failure> {
    let file = io::parse_graph(&read_input(path)?)?;
    let n = file.graph.n() as i64;
    if let Some(((u, v), w)) = file.graph.edges().find(|(_, w)| w.abs() > n * n) {
        eprintln!("warning: weight {w} on edge ({u}, {v}) exceeds |V|^2 = {}", n * n);
    }
    Ok(file)
}

fn parse_apex(list: &[String], n: usize) -> Result<BTreeSet<usize>, Failure> {
    list.iter()
        .map(|s| {
            let t = s.trim();
            let v: usize = t
                .strip_prefix('v')
                .unwrap_or(t)
                .parse()
                .map_err(|_| Failure::new(1, format!("bad apex vertex {s:?}")))?;
            if v >= n {
                return Err(Failure::new(2, format!("apex vertex {v} out of range for {n} vertices")));
            }
            Ok(v)
        })
        .collect()
}

/// The decomposition from `--decomp`, or a single bag over `--apex`.
fn decomposition(source: &Source, file: &GraphFile, k: usize) -> Result<DecompositionFile, Failure> {
    if let Some(path) = &source.decomp {
        return Ok(io::parse_decomposition(&read_input(Some(path))?)?);
    }
    let g = &file.graph;
    let apex = parse_apex(&source.apex, g.n())?;
    let d = if apex.is_empty() && g.n() <= k {
        trivial_decomposition(g, k)
    } else {
        let mut d = apex_planar_decomposition(g, &apex)?;
        if let (true, Some(r)) = (apex.is_empty(), &file.rotation) {
            d.set_rotation(0, rotation_map(r))?;
        }
        d
    };
    Ok(DecompositionFile::with_sequential_ids(d))
}

fn rotation_map(r: &RotationSystem) -> TorsoRotation {
    (0..r.n()).map(|v| (v, r.rotation(v).to_vec())).collect()
}

/// Validation with violations reported by file node id.
fn check(g: &Graph, d: &DecompositionFile, k: usize) -> Result<(), Failure> {
    let report = validate_decomposition(g, &d.decomposition, k);
    match report.violation {
        None => Ok(()),
        Some(v) => {
            let nodes: Vec<u64> = v.nodes.iter().map(|&t| d.ids[t]).collect();
            let clause = format!("{:?}", v.clause);
            Err(invalid(&clause, nodes, &format!("{}: {}", v.clause.name(), v.detail)))
        }
    }
}

fn invalid(clause: &str, nodes: Vec<u64>, detail: &str) -> Failure {
    let message = format!("validation failed: clause {clause} at nodes {nodes:?}: {detail}");
    let value = json!({ "valid": false, "clause": clause, "nodes": nodes, "detail": detail });
    Failure { code: 2, report: Some((format!("invalid {clause} {nodes:?}\n"), value)), message }
}

fn prepared(source: &Source, budget: &Budget) -> Result<(GraphFile, DecompositionFile, Limits), Failure> {
    let limits = budget.limits();
    let file = load_graph(source.graph.as_ref())?;
    let d = decomposition(source, &file, limits.k)?;
    check(&file.graph, &d, limits.k)?;
    Ok((file, d, limits))
}

fn dump(table: &GenTable) -> Vec<Value> {
    table
        .iter()
        .map(|(key, value)| json!({ "key": key, "value": value.to_string() }))
        .collect()
}

fn poly_value(p: &PolyFrac) -> Value {
    let mut v = json!({ "genpm": p.to_string() });
    if let Ok(terms) = p.as_laurent() {
        let terms: Vec<Value> = terms.iter().rev().map(|(e, c)| json!([e, c.to_string()])).collect();
        v["terms"] = Value::Array(terms);
    }
    v
}

fn run(command: &Command, text: &mut String) -> Outcome {
    match command {
        Command::Genpm { source, budget, dump_tables } => {
            let (file, d, limits) = prepared(source, budget)?;
            let g = &file.graph;
            let (value, tables) = genpm_decomposed_traced(g, &g.weight_labels(), &d.decomposition, &limits)?;
            let mut out = poly_value(&value);
            if *dump_tables {
                let mut listed = Vec::new();
                for (t, table) in &tables {
                    text.push_str(&format!("node {}\n", d.ids[*t]));
                    text.push_str(&table.dump());
                    listed.push(json!({ "node": d.ids[*t], "entries": dump(table) }));
                }
                out["tables"] = Value::Array(listed);
            }
            text.push_str(&format!("{value}\n"));
            Ok(out)
        }
        Command::Count { source, budget } => {
            let (file, d, limits) = prepared(source, budget)?;
            let count = count_perfect_matchings(&file.graph, Some(&d.decomposition), &limits)?;
            text.push_str(&format!("{count}\n"));
            Ok(json!({ "count": count.to_string() }))
        }
        Command::Exact { source, budget, target } => {
            let (file, d, limits) = prepared(source, budget)?;
            let (exists, count) = exact_matching(&file.graph, *target, Some(&d.decomposition), &limits)?;
            text.push_str(&format!("{exists} {count}\n"));
            Ok(json!({ "target": target, "exists": exists, "count": count.to_string() }))
        }
        Command::Oracle { graph, oracle_cap } => {
            let file = load_graph(graph.as_ref())?;
            let g = &file.graph;
            let value = genpm_bruteforce(g, &g.weight_labels(), *oracle_cap as usize)?;
            text.push_str(&format!("{value}\n"));
            Ok(poly_value(&value))
        }
        Command::Validate { source, k } => {
            let k = *k as usize;
            let file = load_graph(source.graph.as_ref())?;
            let d = match decomposition(source, &file, k) {
                Err(Failure { code: 2, message, .. }) => return Err(invalid("NotPlanarAfterApex", Vec::new(), &message)),
                other => other?,
            };
            check(&file.graph, &d, k)?;
            text.push_str("valid\n");
            Ok(json!({ "valid": true, "clause": null, "nodes": [], "detail": null }))
        }
        Command::Gen { family, params, seed, with_embedding, weights } => {
            let (g, r) = generate(*family, params, *seed, *with_embedding)?;
            let g = match weights {
                None => g,
                Some(range) => {
                    let (lo, hi) = range
                        .split_once(':')
                        .and_then(|(a, b)| Some((a.parse::<i64>().ok()?, b.parse::<i64>().ok()?)))
                        .filter(|(lo, hi)| lo <= hi)
                        .ok_or_else(|| Failure::new(1, format!("bad weight range {range:?}, expected LO:HI")))?;
                    gen::with_random_weights(&g, lo, hi, *seed)
                }
            };
            let doc = io::graph_to_json(&g, r.as_ref());
            text.push_str(&doc);
            text.push('\n');
            Ok(serde_json::from_str(&doc).expect("emitted JSON parses"))
        }
        Command::Fkt { graph } => {
            let file = load_graph(graph.as_ref())?;
            let g = &file.graph;
            let labels = g.weight_labels();
            let value = match &file.rotation {
                Some(r) => genpm_planar_with(g, &labels, r)?,
                None => genpm_planar(g, &labels)?,
            };
            text.push_str(&format!("{value}\n"));
            Ok(poly_value(&value))
        }
    }
}

fn generate(
    family: Family,
    params: &[usize],
    seed: u64,
    with_embedding: bool,
) -> Result<(Graph, Option<RotationSystem>), Failure> {
    let arity = match family {
        Family::K4Disk | Family::RingBlowupK4 => 0,
        Family::Complete | Family::ShallowVortexGrid | Family::SegregatedShallowVortexGrid | Family::RandomPlanar => 1,
        _ => 2,
    };
    if params.len() != arity {
        return Err(Failure::new(1, format!("family expects {arity} parameters, got {}", params.len())));
    }
    let p = |i: usize| params[i];
    let no_embedding = |g: Graph| -> Result<(Graph, Option<RotationSystem>), Failure> {
        if with_embedding {
            return Err(Failure::new(1, "this family has no canonical embedding"));
        }
        Ok((g, None))
    };
    let embedded = |(g, r): (Graph, RotationSystem)| Ok((g, with_embedding.then_some(r)));
    match family {
        Family::Grid => embedded(gen::grid_with_embedding(p(0), p(1))),
        Family::Complete => no_embedding(gen::complete(p(0))),
        Family::CompleteBipartite => no_embedding(gen::complete_bipartite(p(0), p(1))),
        Family::CylindricalGrid => {
            if with_embedding {
                embedded(gen::cylindrical_grid_with_embedding(p(0), p(1))?)
            } else {
                Ok((gen::cylindrical_grid(p(0), p(1)), None))
            }
        }
        Family::ShallowVortexGrid => no_embedding(gen::shallow_vortex_grid(p(0))),
        Family::SegregatedShallowVortexGrid => no_embedding(gen::segregated_shallow_vortex_grid(p(0))),
        Family::K4Disk => {
            let d = gen::k4_disk_drawing();
            embedded((d.graph, d.rotation))
        }
        Family::RingBlowupK4 => no_embedding(gen::ring_blowup(&gen::k4_disk_drawing())),
        Family::CylindricalGridRingBlowup => no_embedding(gen::cylindrical_grid_ring_blowup(p(0), p(1))?),
        Family::QGraph => {
            if p(0) == 0 || p(1) == 0 {
                return Err(Failure::new(1, "q-graph needs s, r >= 1"));
            }
            no_embedding(gen::q_graph(p(0), p(1)))
        }
        Family::RandomPlanar => embedded(gen::random_planar(p(0), seed)),
        Family::RandomApexPlanar => no_embedding(gen::random_apex_planar(p(0), p(1), seed).0),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    if let Some(t) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(t as usize).build_global() {
            eprintln!("error: cannot start {t} threads: {e}");
            return ExitCode::from(4);
        }
    }
    let mut text = String::new();
    match run(&cli.command, &mut text) {
        Ok(value) => {
            if cli.json {
                println!("{value}");
            } else {
                print!("{text}");
            }
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            match (&f.report, cli.json) {
                (Some((_, value)), true) => println!("{value}"),
                (Some((text, _)), false) if matches!(cli.command, Command::Validate { .. }) => print!("{text}"),
                (_, true) => println!("{}", json!({ "error": f.message, "exit": f.code })),
                (_, false) => {}
            }
            ExitCode::from(f.code)
        }
    }
}
