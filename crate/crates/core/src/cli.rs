//! Command-line front end. Data goes to stdout, diagnostics to stderr.
//! Exit status: 0 on success, 1 when a verification or asserted report row
//! fails (or a command fails at runtime), 2 on usage errors.

use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::codec::{decode_extended, encode_extended, sample_neighborhood_uniform, ComponentNeighborhoods};
use crate::blocks::decompose_blocks;
use crate::error::{Error, Result};
use crate::experiments::{metadata_path, run_experiment, write_report, ExperimentConfig};
use crate::explosion::{explode, skeleton_tree, ExplosionNeighborhood};
use crate::graph::{parse_graph, LabeledGraph};
use crate::prufer::Codeword;
use crate::verify::{run_suite, VerifyOptions};

#[derive(Debug, Parser)]
#[command(name = "blockstable", version, about = "Block decompositions and extended Prüfer coding")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the blocks and cut vertices of a graph as JSON.
    Decompose {
        /// Edge-list file (stdin when omitted).
        #[arg(long)]
        graph: Option<PathBuf>,
    },
    /// Print the explosion descriptor and skeleton tree of a connected graph.
    Explode {
        #[arg(long)]
        graph: Option<PathBuf>,
        /// Print only the descriptor.
        #[arg(long)]
        descriptor_only: bool,
    },
    /// Print the extended codeword of a graph in a neighbourhood.
    Encode {
        #[arg(long)]
        descriptor: PathBuf,
        #[arg(long)]
        graph: Option<PathBuf>,
    },
    /// Print the graph with a given codeword.
    Decode {
        #[arg(long)]
        descriptor: PathBuf,
        /// Space-separated symbols, e.g. "2 2".
        #[arg(long, allow_hyphen_values = true)]
        word: String,
    },
    /// Print uniform samples from a neighbourhood (or, with --graph, from the
    /// product of the neighbourhoods of its components).
    Sample {
        #[arg(long, conflicts_with = "graph", required_unless_present = "graph")]
        descriptor: Option<PathBuf>,
        #[arg(long)]
        graph: Option<PathBuf>,
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        count: usize,
    },
    /// Run the exact verification suite; print one JSON report per check.
    Verify {
        #[arg(long, default_value_t = 6)]
        max_n: usize,
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Run an experiment described by a JSON config file.
    Experiment {
        #[arg(long)]
        config: PathBuf,
        /// Report path; overrides the config. Without either, the CSV goes to stdout.
        #[arg(long)]
        output: Option<PathBuf>,
        #[arg(long)]
        jobs: Option<usize>,
    },
}

fn read_file(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

fn read_graph(path: Option<&Path>, stdin: &mut dyn Read) -> Result<LabeledGraph> {
    let text = match path {
        Some(p) => read_file(p)?,
        None => {
            let mut s = String::new();
            stdin.read_to_string(&mut s)?;
            s
        }
    };
    parse_graph(&text)
}

fn read_descriptor(path: &Path) -> Result<ExplosionNeighborhood> {
    ExplosionNeighborhood::from_json(&read_file(path)?)
}

fn with_jobs<T: Send>(jobs: Option<usize>, f: impl FnOnce() -> T + Send) -> Result<T> {
    match jobs {
        None => Ok(f()),
        Some(0) => Err(Error::Config("--jobs must be at least 1".into())),
        Some(j) => rayon::ThreadPoolBuilder::new()
            .num_threads(j)
            .build()
            .map(|pool| pool.install(f))
            .map_err(|e| Error::Config(e.to_string())),
    }
}

/// What a successful command asks the process to exit with.
enum Outcome {
    Ok,
    Failed,
}

fn execute(command: Command, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> Result<Outcome> {
    match command {
        Command::Decompose { graph } => {
            let g = read_graph(graph.as_deref(), stdin)?;
            writeln!(out, "{}", decompose_blocks(&g).to_json())?;
        }
        Command::Explode { graph, descriptor_only } => {
            let g = read_graph(graph.as_deref(), stdin)?;
            let x = explode(&g)?;
            let d = x.descriptor();
            if descriptor_only {
                writeln!(out, "{}", d.to_json())?;
            } else {
                let value = serde_json::json!({
                    "descriptor": d,
                    "skeleton_tree": skeleton_tree(&x).edges(),
                });
                writeln!(out, "{}", serde_json::to_string_pretty(&value).expect("serialisable"))?;
            }
        }
        Command::Encode { descriptor, graph } => {
            let d = read_descriptor(&descriptor)?;
            let g = read_graph(graph.as_deref(), stdin)?;
            writeln!(out, "{}", encode_extended(&g, &d)?)?;
        }
        Command::Decode { descriptor, word } => {
            let d = read_descriptor(&descriptor)?;
            let x = Codeword::parse(d.n, &word)?;
            write!(out, "{}", decode_extended(&x, &d)?)?;
        }
        Command::Sample { descriptor, graph, seed, count } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            match descriptor {
                Some(path) => {
                    let d = read_descriptor(&path)?;
                    for _ in 0..count {
                        write!(out, "{}", sample_neighborhood_uniform(&d, &mut rng))?;
                    }
                }
                None => {
                    let g = read_graph(graph.as_deref(), stdin)?;
                    let product = ComponentNeighborhoods::of_graph(&g);
                    for _ in 0..count {
                        write!(out, "{}", product.sample(&mut rng))?;
                    }
                }
            }
        }
        Command::Verify { max_n, jobs } => {
            let opts = VerifyOptions {
                max_n,
                ..VerifyOptions::default()
            };
            if max_n > opts.limits.max_class_n {
                return Err(Error::OutOfRange(format!(
                    "--max-n is limited to {}",
                    opts.limits.max_class_n
                )));
            }
            let reports = with_jobs(jobs, || run_suite(&opts))??;
            let mut failed = 0;
            for r in &reports {
                writeln!(out, "{}", r.to_json())?;
                if !r.pass {
                    failed += 1;
                    writeln!(err, "FAIL {} ({})", r.check, r.parameters)?;
                }
            }
            writeln!(err, "{} checks, {} failed", reports.len(), failed)?;
            return Ok(if failed == 0 { Outcome::Ok } else { Outcome::Failed });
        }
        Command::Experiment { config, output, jobs } => {
            let mut cfg = ExperimentConfig::from_json(&read_file(&config)?)?;
            cfg.rebase(config.parent().unwrap_or(Path::new(".")));
            if output.is_some() {
                cfg.output = output;
            }
            let report = with_jobs(jobs, || run_experiment(&cfg))??;
            match &cfg.output {
                Some(path) => {
                    write_report(&report, path)?;
                    writeln!(err, "wrote {} and {}", path.display(), metadata_path(path).display())?;
                }
                None => write!(out, "{}", report.csv()?)?,
            }
            let failed: Vec<_> = report.failures().collect();
            for row in &failed {
                writeln!(err, "FAIL {} at {}: {} > {:?}", row.statistic, row.parameter, row.empirical, row.bound)?;
            }
            return Ok(if failed.is_empty() { Outcome::Ok } else { Outcome::Failed });
        }
    }
    Ok(Outcome::Ok)
}

/// Parses `args` (including the program name) and runs the command.
/// Returns the process exit status.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(stdout, "{}", e.render());
                    0
                }
                _ => {
                    let _ = write!(stderr, "{}", e.render());
                    2
                }
            };
        }
    };
    match execute(cli.command, stdin, stdout, stderr) {
        Ok(Outcome::Ok) => 0,
        Ok(Outcome::Failed) => 1,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            1
        }
    }
}
