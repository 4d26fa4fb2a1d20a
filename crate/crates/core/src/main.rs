use std::fs::File;
use std::io::BufWriter;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use schnyder::cli::{cmd_bench, cmd_compute, cmd_gen, cmd_pipeline, cmd_sweep, GraphSource, PolicyName, RunConfig};
use schnyder::separator::DEFAULT_ALPHA;
use schnyder::shelling::DEFAULT_QUEUES;
use schnyder::{Error, Result};

#[derive(Parser)]
#[command(name = "schnyder", version, about = "Balanced Schnyder woods, grid drawings and cycle separators")]
struct Cli {
    /// Print one JSON object on stdout instead of a summary.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a triangulation and write it in adjacency format.
    Gen(GenArgs),
    /// Compute and validate a Schnyder wood.
    Compute(RunArgs),
    /// Compute the grid drawing; `--out` gets coordinates, `--svg` a picture.
    Draw(RunArgs),
    /// Full pipeline up to the shortest balanced cycle separator.
    Separator(RunArgs),
    /// Re-root over many seeds and summarize separators and balance.
    Sweep(RunArgs),
    /// Time the pipeline stages over repeated runs.
    Bench(RunArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Stacked,
    Icosphere,
    Globe,
    Tetrahedron,
    Octahedron,
    Icosahedron,
}

#[derive(Args)]
struct GenArgs {
    #[arg(long, value_enum)]
    kind: Kind,
    #[arg(long, default_value_t = 1000)]
    n: usize,
    #[arg(long, default_value_t = 3)]
    subdiv: u32,
    #[arg(long, default_value_t = 40)]
    a: usize,
    #[arg(long, default_value_t = 20)]
    b: usize,
    #[arg(long, default_value_t = 0)]
    rng_seed: u64,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum PolicyArg {
    Minimal,
    Maximal,
    Balanced,
}

#[derive(Args)]
struct RunArgs {
    /// Mesh file (.off, .obj, adjacency) or generator spec such as
    /// `stacked:10000`, `icosphere:5`, `globe:120x100`.
    #[arg(long)]
    input: GraphSource,
    #[arg(long, value_enum, default_value = "balanced")]
    policy: PolicyArg,
    /// Number of priority queues for the balanced policy.
    #[arg(long, default_value_t = DEFAULT_QUEUES)]
    k: usize,
    #[arg(long, default_value_t = DEFAULT_ALPHA)]
    alpha: f64,
    #[arg(long, default_value_t = 1)]
    seeds: usize,
    #[arg(long, default_value_t = 0)]
    rng_seed: u64,
    /// Apply one pass of balance-improving face reversals.
    #[arg(long)]
    post_process: bool,
    /// Evaluate sweep seeds on all cores.
    #[arg(long)]
    parallel_seeds: bool,
    /// Use a wood file written by `compute` instead of shelling.
    #[arg(long)]
    wood: Option<PathBuf>,
    #[arg(long)]
    svg: Option<PathBuf>,
    #[arg(long)]
    out: Option<PathBuf>,
}

impl RunArgs {
    fn config(self) -> RunConfig {
        let policy = match self.policy {
            PolicyArg::Minimal => PolicyName::Minimal,
            PolicyArg::Maximal => PolicyName::Maximal,
            PolicyArg::Balanced => PolicyName::Balanced,
        };
        RunConfig {
            input: self.input,
            policy,
            k: self.k,
            alpha: self.alpha,
            seeds: self.seeds,
            rng_seed: self.rng_seed,
            post_process: self.post_process,
            parallel_seeds: self.parallel_seeds,
            wood: self.wood,
            svg: self.svg,
            out: self.out,
        }
    }
}

fn to_value<T: Serialize>(x: &T) -> Result<Value> {
    Ok(serde_json::to_value(x)?)
}

fn write_json(path: &PathBuf, v: &Value) -> Result<()> {
    serde_json::to_writer_pretty(BufWriter::new(File::create(path)?), v)?;
    Ok(())
}

fn run(command: Command) -> Result<Value> {
    match command {
        Command::Gen(g) => {
            let source = match g.kind {
                Kind::Stacked => GraphSource::Stacked { n: g.n },
                Kind::Icosphere => GraphSource::Icosphere { subdiv: g.subdiv },
                Kind::Globe => GraphSource::Globe { a: g.a, b: g.b },
                Kind::Tetrahedron => GraphSource::Tetrahedron,
                Kind::Octahedron => GraphSource::Octahedron,
                Kind::Icosahedron => GraphSource::Icosahedron,
            };
            let (tri, summary) = cmd_gen(&source, g.rng_seed, g.out.as_deref())?;
            if g.out.is_none() {
                schnyder::planar_map::write_adjacency(&tri, std::io::stdout().lock())?;
                return Ok(Value::Null);
            }
            to_value(&summary)
        }
        Command::Compute(a) => to_value(&cmd_compute(&a.config())?.1),
        Command::Draw(a) => {
            let config = a.config();
            let run = cmd_pipeline(&config)?;
            if let Some(path) = &config.out {
                run.drawing.write_coords(BufWriter::new(File::create(path)?))?;
            }
            if let Some(path) = &config.svg {
                run.drawing.export_svg(path)?;
            }
            let mut v = to_value(&run.report)?;
            v["grid"] = json!(run.drawing.grid);
            Ok(v)
        }
        Command::Separator(a) => {
            let config = a.config();
            let run = cmd_pipeline(&config)?;
            let v = json!({ "report": run.report, "separator": run.separator });
            if let Some(path) = &config.out {
                write_json(path, &v)?;
            }
            Ok(v)
        }
        Command::Sweep(a) => {
            let config = a.config();
            let v = to_value(&cmd_sweep(&config)?)?;
            if let Some(path) = &config.out {
                write_json(path, &v)?;
            }
            Ok(v)
        }
        Command::Bench(a) => to_value(&cmd_bench(&a.config())?),
    }
}

fn print_summary(v: &Value, indent: usize) {
    if let Value::Object(map) = v {
        for (key, val) in map {
            match val {
                Value::Object(_) => {
                    println!("{:indent$}{key}:", "");
                    print_summary(val, indent + 2);
                }
                Value::Array(items) if items.len() > 8 => println!("{:indent$}{key}: [{} items]", "", items.len()),
                _ => println!("{:indent$}{key}: {val}", ""),
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(Value::Null) => ExitCode::SUCCESS,
        Ok(v) => {
            if cli.json {
                println!("{v}");
            } else {
                print_summary(&v, 0);
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            let kind = match &e {
                Error::NoBalancedSeparator { .. } => "no_balanced_separator",
                Error::InvalidWood(_) | Error::InvalidSeparator(_) => "validation",
                Error::Io(_) => "io",
                _ => "input",
            };
            let err = json!({ "error": e.to_string(), "kind": kind });
            if cli.json {
                println!("{err}");
            } else {
                eprintln!("error: {e}");
            }
            ExitCode::FAILURE
        }
    }
}
