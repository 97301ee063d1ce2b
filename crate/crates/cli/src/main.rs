use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use indpoly_cli::bench::{render_csv, run_bench, BenchConfig, BenchMode};
use indpoly_cli::commands::{cmd_compute, cmd_eval, cmd_gen, ComputeOptions, FamilyArgs, OutputFormat};
use indpoly_cli::input::{load_graph, InputFormat};
use indpoly_cli::verify::{run_verify, VerifyConfig};
use indpoly_cli::{CliError, CliResult};
use num_bigint::BigInt;

#[derive(Parser)]
#[command(name = "indpoly", version, about = "Independence polynomials of trees and forests")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the independence polynomial of a tree (or forest).
    Compute {
        /// Edge-list or JSON file; stdin when omitted or `-`.
        input: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t)]
        format: OutputFormat,
        #[arg(long, value_enum, default_value_t)]
        input_format: InputFormat,
        /// Accept disconnected input and multiply the component polynomials.
        #[arg(long)]
        forest: bool,
        /// Print traversal and arithmetic counters.
        #[arg(long)]
        stats: bool,
    },
    /// Check the engine against brute-force enumeration and its invariants.
    Verify {
        #[arg(long, default_value_t = 7)]
        exhaustive_max_n: usize,
        #[arg(long, default_value_t = 200)]
        random_count: usize,
        #[arg(long, default_value_t = 9)]
        random_min_n: usize,
        #[arg(long, default_value_t = 20)]
        random_max_n: usize,
        #[arg(long, env = "INDPOLY_SEED", default_value_t = 0)]
        seed: u64,
    },
    /// Write a tree from a named family as an edge list.
    Gen {
        #[command(flatten)]
        family: FamilyArgs,
        /// Output file; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Time the engine over a family at several sizes; CSV output.
    Bench {
        #[arg(long, value_enum)]
        family: indpoly_cli::commands::Family,
        /// Comma-separated ascending vertex counts.
        #[arg(long, value_delimiter = ',', required = true)]
        sizes: Vec<usize>,
        #[arg(long, default_value_t = 1)]
        repeats: usize,
        #[arg(long, value_enum, default_value_t)]
        mode: BenchMode,
        /// Write the CSV to this file instead of stdout.
        #[arg(long)]
        csv: Option<PathBuf>,
        #[arg(long, env = "INDPOLY_SEED", default_value_t = 0)]
        seed: u64,
    },
    /// Evaluate the independence polynomial at an integer point.
    Eval {
        input: Option<PathBuf>,
        #[arg(long, allow_hyphen_values = true)]
        at: BigInt,
        #[arg(long, value_enum, default_value_t)]
        input_format: InputFormat,
        #[arg(long)]
        forest: bool,
    },
}

fn write_output(out: Option<&PathBuf>, text: &str) -> CliResult<()> {
    match out {
        Some(path) => std::fs::write(path, text).map_err(|e| CliError::Input(format!("{}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(cli: Cli) -> CliResult<i32> {
    match cli.command {
        Command::Compute { input, format, input_format, forest, stats } => {
            let (graph, identity) = load_graph(input.as_deref(), input_format)?;
            let text = cmd_compute(graph, &identity, ComputeOptions { format, forest, stats })?;
            write_output(None, &text)?;
        }
        Command::Verify { exhaustive_max_n, random_count, random_min_n, random_max_n, seed } => {
            let cfg = VerifyConfig { exhaustive_max_n, random_count, random_min_n, random_max_n, seed };
            let report = run_verify(&cfg)?;
            print!("{}", report.render());
            if !report.passed() {
                return Ok(2);
            }
        }
        Command::Gen { family, out } => {
            let text = cmd_gen(&family.to_spec()?)?;
            write_output(out.as_ref(), &text)?;
        }
        Command::Bench { family, sizes, repeats, mode, csv, seed } => {
            let rows = run_bench(&BenchConfig { family, sizes, repeats, mode, seed })?;
            write_output(csv.as_ref(), &render_csv(&rows))?;
        }
        Command::Eval { input, at, input_format, forest } => {
            let (graph, _) = load_graph(input.as_deref(), input_format)?;
            write_output(None, &cmd_eval(graph, &at, forest)?)?;
        }
    }
    Ok(0)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("{e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
