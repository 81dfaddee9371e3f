//! `toric`: circuits, Graver bases and universal Gröbner bases of toric
//! ideals of graphs, with an algebraic cross-check.

mod cache;
mod verify;

use std::fs;
use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use toric_graph::enumerate::{degree_stats, enumerate_circuits, enumerate_graver, enumerate_ugb, EnumConfig};
use toric_graph::families::{
    complete_graph, family_full_walk, family_graph, family_longest_circuit_walk, family_mixed_walk,
};
use toric_graph::intlinalg::circuit_index;
use toric_graph::{binomial_of_walk, block_decomposition, classify, par, Binomial, Error, ErrorClass, Graph};

const EXIT_USAGE: u8 = 1;
const EXIT_VALIDATION: u8 = 2;
const EXIT_BUDGET: u8 = 3;
const EXIT_MISMATCH: u8 = 4;

#[derive(Parser, Debug)]
#[command(
    name = "toric",
    version,
    about = "Toric ideals of graphs: circuits, Graver and universal Gröbner bases"
)]
struct Cli {
    #[command(flatten)]
    run: RunConfig,
    #[command(subcommand)]
    command: Command,
}

/// Limits and plumbing shared by every subcommand.
#[derive(Args, Debug, Clone, Serialize)]
struct RunConfig {
    /// Longest cycle considered (default: number of vertices).
    #[arg(long, global = true)]
    max_cycle_len: Option<usize>,
    /// Most blocks in a support (default: number of vertices).
    #[arg(long, global = true)]
    max_blocks: Option<usize>,
    /// Largest element degree accepted.
    #[arg(long, global = true)]
    max_degree: Option<u64>,
    /// Search nodes visited before giving up.
    #[arg(long, global = true, default_value_t = 10_000_000)]
    candidate_budget: u64,
    /// Simplex pivots per membership LP.
    #[arg(long, global = true, default_value_t = 1_000_000)]
    lp_iterations: usize,
    /// Wall-clock limit in seconds.
    #[arg(long, global = true)]
    time_budget: Option<f64>,
    /// Worker threads for enumeration (0 = all cores).
    #[arg(long, global = true, default_value_t = 0)]
    #[serde(skip)]
    threads: usize,
    /// Result cache directory; TORIC_CACHE_DIR is used when absent.
    #[arg(long, global = true)]
    #[serde(skip)]
    cache_dir: Option<PathBuf>,
    /// Seed for sampled term orders.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Write the result here instead of stdout.
    #[arg(long, global = true)]
    #[serde(skip)]
    out: Option<PathBuf>,
}

impl RunConfig {
    fn deadline(&self) -> Option<Instant> {
        self.time_budget
            .filter(|s| s.is_finite() && *s > 0.0)
            .map(|s| Instant::now() + Duration::from_secs_f64(s))
    }

    fn enum_config(&self, parallel: bool) -> EnumConfig {
        EnumConfig {
            max_cycle_len: self.max_cycle_len,
            max_blocks: self.max_blocks,
            max_degree: self.max_degree,
            max_candidates: self.candidate_budget,
            deadline: self.deadline(),
            parallel,
        }
    }

    fn validate(&self) -> Result<(), String> {
        let positive = [
            ("--max-cycle-len", self.max_cycle_len.map(|x| x as u64)),
            ("--max-blocks", self.max_blocks.map(|x| x as u64)),
            ("--max-degree", self.max_degree),
            ("--candidate-budget", Some(self.candidate_budget)),
            ("--lp-iterations", Some(self.lp_iterations as u64)),
        ];
        for (name, v) in positive {
            if v == Some(0) {
                return Err(format!("{name} must be positive"));
            }
        }
        if let Some(t) = self.time_budget {
            if !(t.is_finite() && t > 0.0) {
                return Err("--time-budget must be positive".into());
            }
        }
        Ok(())
    }
}

#[derive(Subcommand, Debug, Clone, Serialize)]
enum Command {
    /// Block decomposition, cut vertices and cut edges.
    Blocks { graph: PathBuf },
    /// All circuits.
    Circuits {
        graph: PathBuf,
        /// Also compute true degrees via the lattice index.
        #[arg(long)]
        true_degree: bool,
        /// Degree histogram CSV destination.
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// The Graver basis.
    Graver {
        graph: PathBuf,
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// The universal Gröbner basis.
    Ugb {
        graph: PathBuf,
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Circuit shape, primitivity, mixedness and membership of a binomial.
    Classify { graph: PathBuf, binomial: PathBuf },
    /// Compare the structural sets against the algebraic oracle.
    Verify {
        graph: PathBuf,
        /// Random term orders tried against each excluded element.
        #[arg(long, default_value_t = 3)]
        samples: usize,
    },
    /// The complete graph on n vertices.
    Kn { n: usize },
    /// The counterexample family graph, or one of its walk binomials.
    Family {
        s: usize,
        l: usize,
        #[arg(long, value_enum)]
        walk: Option<WalkChoice>,
    },
    /// Degree, lattice index and true degree of a circuit.
    Truedeg { graph: PathBuf, binomial: PathBuf },
    /// Time sequential against parallel Graver enumeration.
    Bench {
        graph: PathBuf,
        #[arg(long, default_value_t = 3)]
        repeat: usize,
    },
}

#[derive(ValueEnum, Debug, Clone, Copy, Serialize)]
enum WalkChoice {
    /// Outer cycles and the central cycle.
    Full,
    /// Central cycle with all but two outer cycles.
    Mixed,
    /// The longest circuit.
    Longest,
}

/// A failed run: message and exit code.
struct Failure(u8, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e.class() {
            ErrorClass::Validation => EXIT_VALIDATION,
            ErrorClass::Budget => EXIT_BUDGET,
        };
        Failure(code, e.to_string())
    }
}

fn read_input(path: &PathBuf) -> Result<String, Failure> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Failure(EXIT_VALIDATION, format!("stdin: {e}")))?;
        return Ok(s);
    }
    fs::read_to_string(path).map_err(|e| Failure(EXIT_VALIDATION, format!("{}: {e}", path.display())))
}

fn load_graph(path: &PathBuf) -> Result<Graph, Failure> {
    Ok(read_input(path)?.parse::<Graph>()?)
}

fn load_binomial(g: &Graph, path: &PathBuf) -> Result<Binomial, Failure> {
    Ok(Binomial::from_json(g, &read_input(path)?)?)
}

fn write_file(path: &PathBuf, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| Failure(EXIT_VALIDATION, format!("{}: {e}", path.display())))
}

fn pretty<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("values serialize")
}

/// Output of one subcommand: the main document, the degree histogram CSV
/// when requested, and whether it may be cached.
struct Output {
    text: String,
    csv: Option<String>,
    code: u8,
    cacheable: bool,
}

impl Output {
    fn plain(text: String) -> Self {
        Output {
            text,
            csv: None,
            code: 0,
            cacheable: true,
        }
    }
}

fn execute(cli: &Cli) -> Result<Output, Failure> {
    let cfg = &cli.run;
    let parallel = true;
    match &cli.command {
        Command::Blocks { graph } => {
            let g = load_graph(graph)?;
            Ok(Output::plain(pretty(&block_decomposition(&g))))
        }
        Command::Circuits {
            graph,
            true_degree,
            csv,
        } => {
            let g = load_graph(graph)?;
            let mut r = enumerate_circuits(&g, &cfg.enum_config(parallel))?;
            if *true_degree {
                r.compute_true_degrees(&g)?;
            }
            report_output(&g, r.to_json(), &r, csv)
        }
        Command::Graver { graph, csv } => {
            let g = load_graph(graph)?;
            let r = enumerate_graver(&g, &cfg.enum_config(parallel))?;
            report_output(&g, r.to_json(), &r, csv)
        }
        Command::Ugb { graph, csv } => {
            let g = load_graph(graph)?;
            let r = enumerate_ugb(&g, &cfg.enum_config(parallel))?;
            report_output(&g, r.to_json(), &r, csv)
        }
        Command::Classify { graph, binomial } => {
            let g = load_graph(graph)?;
            let b = load_binomial(&g, binomial)?;
            Ok(Output::plain(pretty(&classify(&g, &b))))
        }
        Command::Verify { graph, samples } => {
            let g = load_graph(graph)?;
            let v = verify::run(&g, cfg, *samples)?;
            let code = if v.ok { 0 } else { EXIT_MISMATCH };
            Ok(Output {
                text: pretty(&v),
                csv: None,
                code,
                cacheable: v.ok,
            })
        }
        Command::Kn { n } => Ok(Output::plain(complete_graph(*n)?.to_json())),
        Command::Family { s, l, walk } => {
            let g = family_graph(*s, *l)?;
            let text = match walk {
                None => g.to_json(),
                Some(w) => {
                    let seq = match w {
                        WalkChoice::Full => family_full_walk(*s, *l)?,
                        WalkChoice::Mixed => family_mixed_walk(*s, *l)?,
                        WalkChoice::Longest => family_longest_circuit_walk(*s, *l)?,
                    };
                    binomial_of_walk(&g, &seq)?.to_json()
                }
            };
            Ok(Output::plain(text))
        }
        Command::Truedeg { graph, binomial } => {
            let g = load_graph(graph)?;
            let b = load_binomial(&g, binomial)?;
            let idx = circuit_index(&g, &b)?;
            let degree = b.degree();
            Ok(Output::plain(pretty(&json!({
                "degree": degree,
                "rank": idx.rank,
                "index": idx.index.to_string(),
                "true_degree": (idx.index * degree).to_string(),
            }))))
        }
        Command::Bench { graph, repeat } => {
            let g = load_graph(graph)?;
            let repeat = (*repeat).max(1);
            let time = |parallel: bool| -> Result<(f64, usize), Failure> {
                let mut best = f64::INFINITY;
                let mut count = 0;
                for _ in 0..repeat {
                    let t = Instant::now();
                    count = enumerate_graver(&g, &cfg.enum_config(parallel))?.len();
                    best = best.min(t.elapsed().as_secs_f64() * 1e3);
                }
                Ok((best, count))
            };
            let (seq_ms, count) = time(false)?;
            let (par_ms, _) = time(true)?;
            Ok(Output {
                text: pretty(&json!({
                    "graver_count": count,
                    "repeat": repeat,
                    "sequential_ms": seq_ms,
                    "parallel_ms": par_ms,
                    "parallel_available": par::parallel_available(),
                    "threads": cfg.threads,
                })),
                csv: None,
                code: 0,
                cacheable: false,
            })
        }
    }
}

fn report_output(
    g: &Graph,
    text: String,
    r: &toric_graph::enumerate::BasisReport,
    csv: &Option<PathBuf>,
) -> Result<Output, Failure> {
    let mut out = Output::plain(text);
    if csv.is_some() {
        out.csv = Some(if r.is_empty() {
            "degree,count\n".to_string()
        } else {
            degree_stats(g, r)?.histogram_csv()
        });
    }
    Ok(out)
}

/// Canonical description of a run for the cache key: input contents by
/// hash rather than path, plus every setting that affects the output.
fn cache_material(cli: &Cli) -> Result<Option<serde_json::Value>, Failure> {
    let graph_hash = |p: &PathBuf| -> Result<String, Failure> { Ok(cache::digest(&load_graph(p)?.to_json())) };
    let binomial_hash = |gp: &PathBuf, bp: &PathBuf| -> Result<String, Failure> {
        let g = load_graph(gp)?;
        Ok(cache::digest(&load_binomial(&g, bp)?.to_json()))
    };
    let stdin = |p: &PathBuf| p.as_os_str() == "-";
    let reads_stdin = match &cli.command {
        Command::Classify { graph, binomial } | Command::Truedeg { graph, binomial } => stdin(graph) || stdin(binomial),
        Command::Blocks { graph }
        | Command::Circuits { graph, .. }
        | Command::Graver { graph, .. }
        | Command::Ugb { graph, .. }
        | Command::Verify { graph, .. }
        | Command::Bench { graph, .. } => stdin(graph),
        Command::Kn { .. } | Command::Family { .. } => false,
    };
    if reads_stdin {
        return Ok(None);
    }
    let (name, graph, args) = match &cli.command {
        Command::Blocks { graph } => ("blocks", graph_hash(graph)?, json!({})),
        Command::Circuits {
            graph,
            true_degree,
            csv,
        } => (
            "circuits",
            graph_hash(graph)?,
            json!({ "true_degree": true_degree, "csv": csv.is_some() }),
        ),
        Command::Graver { graph, csv } => ("graver", graph_hash(graph)?, json!({ "csv": csv.is_some() })),
        Command::Ugb { graph, csv } => ("ugb", graph_hash(graph)?, json!({ "csv": csv.is_some() })),
        Command::Classify { graph, binomial } => (
            "classify",
            graph_hash(graph)?,
            json!({ "binomial": binomial_hash(graph, binomial)? }),
        ),
        Command::Verify { graph, samples } => ("verify", graph_hash(graph)?, json!({ "samples": samples })),
        Command::Truedeg { graph, binomial } => (
            "truedeg",
            graph_hash(graph)?,
            json!({ "binomial": binomial_hash(graph, binomial)? }),
        ),
        Command::Kn { .. } | Command::Family { .. } | Command::Bench { .. } => return Ok(None),
    };
    Ok(Some(json!({
        "command": name,
        "graph": graph,
        "args": args,
        "config": cache::digest(&serde_json::to_string(&cli.run).expect("config serializes")),
    })))
}

fn csv_path(cli: &Cli) -> Option<&PathBuf> {
    match &cli.command {
        Command::Circuits { csv, .. } | Command::Graver { csv, .. } | Command::Ugb { csv, .. } => csv.as_ref(),
        _ => None,
    }
}

fn run(cli: Cli) -> Result<u8, Failure> {
    cli.run.validate().map_err(|m| Failure(EXIT_USAGE, m))?;
    let store = cache::Store::open(cli.run.cache_dir.clone());
    let key = match &store {
        Some(_) => cache_material(&cli)?.map(|m| cache::digest(&m.to_string())),
        None => None,
    };
    let hit = match (&store, &key) {
        (Some(s), Some(k)) => s.get(k),
        _ => None,
    };
    let output = match hit {
        Some(entry) => Output {
            text: entry.text,
            csv: entry.csv,
            code: 0,
            cacheable: false,
        },
        None => {
            let out = par::with_threads(cli.run.threads, || execute(&cli))?;
            if out.cacheable {
                if let (Some(s), Some(k)) = (&store, &key) {
                    s.put(
                        k,
                        &cache::Entry {
                            text: out.text.clone(),
                            csv: out.csv.clone(),
                        },
                    );
                }
            }
            out
        }
    };
    if let (Some(path), Some(text)) = (csv_path(&cli), &output.csv) {
        write_file(path, text)?;
    }
    match &cli.run.out {
        Some(path) => write_file(path, &with_newline(&output.text))?,
        None => print!("{}", with_newline(&output.text)),
    }
    Ok(output.code)
}

fn with_newline(s: &str) -> String {
    if s.ends_with('\n') {
        s.to_string()
    } else {
        format!("{s}\n")
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(Failure(code, msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}
