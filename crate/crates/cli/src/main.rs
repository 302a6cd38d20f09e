//! `qdesign`: verify, build and search subspace designs and large sets.
//!
//! Exit status: 0 success, 1 verified false or search failure, 2 usage or
//! parse error, 3 resource bound exceeded, 4 inconclusive.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "qdesign", version, about = "Designs over finite fields and large sets of them")]
struct Cli {
    /// Worker threads for parallel steps (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check a design or large set from first principles.
    Verify(VerifyArgs),
    /// Build a Kramer-Mesner matrix.
    Km(KmArgs),
    /// Search for a large set with Algorithm A or B.
    Search(SearchArgs),
    /// Dualize a design or large set through orthogonal complements.
    Dual(DualArgs),
    /// Report the necessary conditions for a large set.
    Params(ParamsArgs),
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Algo {
    A,
    B,
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
pub struct Input {
    /// A built-in large set (available: ls2-3-238).
    #[arg(long)]
    builtin: Option<String>,
    /// A file holding one design section.
    #[arg(long)]
    design: Option<PathBuf>,
    /// A file holding design sections separated by `---`.
    #[arg(long = "large-set")]
    large_set: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct Output {
    /// Write the resulting file here.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[command(flatten)]
    input: Input,
    #[command(flatten)]
    output: Output,
}

#[derive(Args, Debug)]
pub struct SpaceArgs {
    #[arg(long)]
    t: u32,
    #[arg(long)]
    k: u32,
    #[arg(long)]
    n: u32,
    #[arg(long, default_value_t = 2)]
    q: u32,
}

#[derive(Args, Debug)]
pub struct KmArgs {
    #[command(flatten)]
    space: SpaceArgs,
    /// Right-hand side of the system.
    #[arg(long, default_value_t = 1)]
    lambda: u64,
    /// `singer-paper`, `trivial`, `cols:c0,c1,...` or a generator file.
    #[arg(long, default_value = "trivial")]
    group: String,
    #[command(flatten)]
    output: Output,
}

#[derive(Args, Debug)]
pub struct SearchArgs {
    #[arg(long, value_enum)]
    algo: Algo,
    #[command(flatten)]
    space: SpaceArgs,
    /// Number of designs in the large set.
    #[arg(long = "N")]
    designs: u64,
    /// Optional check: must equal lambda_max / N.
    #[arg(long)]
    lambda: Option<u64>,
    #[arg(long, default_value = "trivial")]
    group: String,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Step cap for each Algorithm A solve.
    #[arg(long)]
    budget: Option<u64>,
    /// Algorithm A: further attempts with seeds seed+1, seed+2, ...
    #[arg(long, default_value_t = 0)]
    restarts: u32,
    /// Algorithm B: cap on the number of designs enumerated.
    #[arg(long = "pool-cap")]
    pool_cap: Option<usize>,
    /// Search even if the divisibility conditions fail.
    #[arg(long)]
    force: bool,
    #[command(flatten)]
    output: Output,
}

#[derive(Args, Debug)]
pub struct DualArgs {
    #[command(flatten)]
    input: Input,
    #[command(flatten)]
    output: Output,
}

#[derive(Args, Debug)]
pub struct ParamsArgs {
    #[command(flatten)]
    space: SpaceArgs,
    #[arg(long = "N")]
    designs: u64,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("error: cannot configure {n} threads: {e}");
            return ExitCode::from(commands::EXIT_USAGE);
        }
    }
    let result = match &cli.command {
        Command::Verify(a) => commands::verify(a),
        Command::Km(a) => commands::km(a),
        Command::Search(a) => commands::search(a),
        Command::Dual(a) => commands::dual(a),
        Command::Params(a) => commands::params(a),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}
