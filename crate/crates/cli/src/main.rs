//! `closest`: command-line front end for the CSP/CSSP solvers, the tree
//! chain analysis and the cost models.
//!
//! Exit codes: 0 feasible or analysis done, 1 infeasible, 2 refused over
//! budget, 3 input error.

mod commands;
mod input;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(
    name = "closest",
    version,
    about = "Exact Closest String / Closest Substring toolkit"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve a Closest String instance (instance JSON or FASTA).
    SolveCsp(SolveCspArgs),
    /// Solve a Closest Substring instance (instance JSON or FASTA).
    SolveCssp(SolveCsspArgs),
    /// Exact analysis of the tree walk for one d.
    AnalyzeChain(AnalyzeChainArgs),
    /// Closed-form cost profiles and regime tables.
    CostModel(CostModelArgs),
    /// Simulate Grover search.
    GroverSim(GroverArgs),
    /// Generate a seeded instance.
    GenInstance(GenArgs),
    /// Run an algorithm × instance grid.
    Bench(BenchArgs),
}

#[derive(Args)]
struct InputArgs {
    /// Instance JSON or FASTA file.
    input: PathBuf,
    /// Symbols for FASTA input.
    #[arg(long, default_value = "ACGT")]
    alphabet: String,
    /// hamming, levenshtein or weighted:<cost-table.json>; overrides the file.
    #[arg(long)]
    metric: Option<String>,
    /// Distance threshold; required for FASTA, overrides the file.
    #[arg(long = "d")]
    d: Option<usize>,
    /// Drop FASTA records with foreign symbols instead of failing.
    #[arg(long)]
    skip_invalid: bool,
    /// Search limit for candidates, table cells and generator subsets.
    #[arg(long)]
    budget_nodes: Option<u128>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct SolveCspArgs {
    #[command(flatten)]
    input: InputArgs,
    #[arg(long, value_enum, default_value_t = AlgoChoice::Auto)]
    algo: AlgoChoice,
    /// Recorded in the result; the solvers themselves are deterministic.
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Args)]
struct SolveCsspArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Motif length; required for FASTA, overrides the file.
    #[arg(long = "L")]
    l: Option<usize>,
    /// marx (generator enumeration) or exhaustive (brute force over Σ^L).
    #[arg(long, value_enum, default_value_t = AlgoChoice::Auto)]
    algo: AlgoChoice,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Args)]
struct AnalyzeChainArgs {
    #[arg(long = "d")]
    d: usize,
    /// Largest chain the analysis may build.
    #[arg(long)]
    budget_nodes: Option<usize>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct CostModelArgs {
    #[arg(long, default_value_t = 4)]
    sigma: u64,
    #[arg(long, default_value_t = 100)]
    n: u64,
    #[arg(long, default_value_t = 10)]
    k: u64,
    #[arg(long = "d", default_value_t = 5)]
    d: u64,
    /// hamming or levenshtein.
    #[arg(long, default_value = "hamming")]
    metric: String,
    /// Print the regime table for d = βn instead; repeatable.
    #[arg(long)]
    beta: Vec<f64>,
    /// Print the algorithm summary table instead.
    #[arg(long)]
    summary: bool,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct GroverArgs {
    /// Search space size N.
    #[arg(long)]
    n: usize,
    /// Marked indices, comma separated.
    #[arg(long, value_delimiter = ',', default_value = "0")]
    marked: Vec<usize>,
    /// Grover iterations; defaults to ⌊π/4·√(N/m)⌋.
    #[arg(long)]
    iterations: Option<u64>,
    #[arg(long, value_enum, default_value_t = GroverModeArg::Statevector)]
    mode: GroverModeArg,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct GenArgs {
    #[arg(long, value_enum, default_value_t = GenKind::Planted)]
    kind: GenKind,
    #[arg(long, default_value_t = 4)]
    sigma: usize,
    #[arg(long, default_value_t = 10)]
    n: usize,
    #[arg(long, default_value_t = 4)]
    k: usize,
    #[arg(long = "d", default_value_t = 2)]
    d: usize,
    /// Motif length for substring instances.
    #[arg(long = "L")]
    l: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// json (instance file) or fasta.
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct BenchArgs {
    /// Instance files; when absent, a planted grid is generated.
    inputs: Vec<PathBuf>,
    /// Algorithms, comma separated.
    #[arg(long, value_delimiter = ',', default_value = "treesearch,exhaustive")]
    algo: Vec<String>,
    /// Planted instances to generate when no inputs are given.
    #[arg(long, default_value_t = 20)]
    count: usize,
    #[arg(long, default_value_t = 4)]
    sigma: usize,
    #[arg(long, default_value_t = 8)]
    n: usize,
    #[arg(long, default_value_t = 4)]
    k: usize,
    #[arg(long = "d", default_value_t = 2)]
    d: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    budget_nodes: Option<u128>,
    /// Record wall-clock times (makes output non-reproducible).
    #[arg(long)]
    timings: bool,
    #[arg(long, default_value_t = 1)]
    threads: usize,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Tsv,
    Fasta,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum AlgoChoice {
    Auto,
    Exhaustive,
    Treesearch,
    Dp,
    Marx,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GroverModeArg {
    Statevector,
    ClosedForm,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GenKind {
    /// Hamming instance around a hidden center (always feasible).
    Planted,
    /// Uniform Hamming strings.
    Random,
    /// Uniform strings of lengths 1..=n under Levenshtein.
    Levenshtein,
    /// Substring instance with a planted motif of length L.
    Motif,
}

pub(crate) const EXIT_OK: u8 = 0;
pub(crate) const EXIT_INFEASIBLE: u8 = 1;
pub(crate) const EXIT_REFUSED: u8 = 2;
pub(crate) const EXIT_INPUT: u8 = 3;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_INPUT } else { EXIT_OK });
        }
    };
    let result = match cli.command {
        Command::SolveCsp(a) => commands::solve_csp(a),
        Command::SolveCssp(a) => commands::solve_cssp(a),
        Command::AnalyzeChain(a) => commands::analyze_chain(a),
        Command::CostModel(a) => commands::cost_model(a),
        Command::GroverSim(a) => commands::grover_sim(a),
        Command::GenInstance(a) => commands::gen_instance(a),
        Command::Bench(a) => commands::bench(a),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            let refused = e
                .downcast_ref::<closest_core::Error>()
                .is_some_and(closest_core::Error::is_refusal);
            ExitCode::from(if refused { EXIT_REFUSED } else { EXIT_INPUT })
        }
    }
}
