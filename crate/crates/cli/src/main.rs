use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

mod commands;

use commands::{CliError, Output};

/// Exact root counts, subdivisions and mixed volumes for sparse polynomial
/// systems.
#[derive(Parser)]
#[command(name = "bkk", version, about)]
struct Cli {
    /// Emit JSON on stdout (and JSON errors on stderr).
    #[arg(long, global = true)]
    json: bool,

    /// Seed for every randomized step.
    #[arg(long, global = true, env = "BKK_SEED", default_value_t = 1)]
    seed: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Hermite factorization U·M = H of an integer matrix.
    Hnf { matrix: PathBuf },
    /// Binomial systems x^{a_i} = c_i.
    #[command(subcommand)]
    Binomial(BinomialCommand),
    /// Normalized and Euclidean volume of a point configuration.
    Volume { points: PathBuf },
    /// Regular (mixed) subdivision induced by a lifting.
    Subdivide(SubdivideArgs),
    /// Mixed volume of n point configurations in Z^n.
    MixedVolume(MixedVolumeArgs),
    /// Initial term system for a weight vector.
    Init {
        system: PathBuf,
        /// Comma-separated integer weights, one per variable.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
        weight: Vec<i64>,
    },
    /// Binomial relations among the monomials of a point configuration.
    ToricIdeal { points: PathBuf },
    /// Cayley configuration of several point configurations.
    Cayley {
        #[arg(required = true)]
        points: Vec<PathBuf>,
    },
    /// Bézout, multigraded, Kushnirenko, BKK and component bounds.
    Bounds { system: PathBuf },
    /// Timing harnesses.
    #[command(subcommand)]
    Bench(BenchCommand),
}

#[derive(Subcommand)]
enum BinomialCommand {
    /// Number of roots in the torus.
    Count { system: PathBuf },
    /// All roots in the torus, numerically, or the triangular system.
    Solve {
        system: PathBuf,
        /// Digits printed after the decimal point.
        #[arg(long, default_value_t = 12)]
        precision: usize,
        /// Largest accepted relative residual.
        #[arg(long, default_value_t = 1e-8)]
        tolerance: f64,
        /// Print the triangular system instead of evaluating roots.
        #[arg(long)]
        symbolic: bool,
    },
}

#[derive(Args)]
struct SubdivideArgs {
    #[arg(required = true)]
    points: Vec<PathBuf>,
    /// Lifts per configuration: comma-separated values, configurations
    /// separated by ';'. Overrides lifts stored in the files.
    #[arg(long, allow_hyphen_values = true)]
    lifts: Option<String>,
    /// Only list mixed cells.
    #[arg(long)]
    mixed: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Auto,
    Cells,
    Ie,
    Planar,
}

#[derive(Args)]
struct MixedVolumeArgs {
    #[arg(required = true)]
    points: Vec<PathBuf>,
    #[arg(long, value_enum, default_value = "auto")]
    method: MethodArg,
    /// List the certificate (mixed cells or strips) when available.
    #[arg(long)]
    certificate: bool,
}

#[derive(Subcommand)]
enum BenchCommand {
    /// Strip-method timings on random convex polygons, as CSV.
    MixedArea {
        #[arg(long, value_delimiter = ',', default_value = "10000,20000,40000,80000,100000")]
        sizes: Vec<usize>,
        /// Runs per size; the median is reported.
        #[arg(long, default_value_t = 5)]
        runs: usize,
    },
}

fn run(cli: &Cli) -> Result<Output, CliError> {
    let seed = cli.seed;
    match &cli.command {
        Command::Hnf { matrix } => commands::hnf(matrix),
        Command::Binomial(BinomialCommand::Count { system }) => commands::binomial_count(system),
        Command::Binomial(BinomialCommand::Solve { system, precision, tolerance, symbolic }) => {
            commands::binomial_solve(system, *precision, *tolerance, *symbolic)
        }
        Command::Volume { points } => commands::volume(points, seed),
        Command::Subdivide(a) => commands::subdivide(&a.points, a.lifts.as_deref(), a.mixed, seed),
        Command::MixedVolume(a) => {
            let strategy = match a.method {
                MethodArg::Auto => bkk_core::Strategy::Auto,
                MethodArg::Cells => bkk_core::Strategy::Cells,
                MethodArg::Ie => bkk_core::Strategy::InclusionExclusion,
                MethodArg::Planar => bkk_core::Strategy::Planar,
            };
            commands::mixed_volume(&a.points, strategy, a.certificate, seed)
        }
        Command::Init { system, weight } => commands::init(system, weight),
        Command::ToricIdeal { points } => commands::toric_ideal(points),
        Command::Cayley { points } => commands::cayley(points),
        Command::Bounds { system } => commands::bounds(system),
        Command::Bench(BenchCommand::MixedArea { sizes, runs }) => commands::bench_mixed_area(sizes, *runs, seed),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&out.json).expect("JSON values serialize"));
            } else {
                print!("{}", out.text);
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            if cli.json {
                let err = serde_json::json!({ "error": { "code": e.code(), "message": e.to_string() } });
                eprintln!("{err}");
            } else {
                eprintln!("error[{}]: {e}", e.code());
            }
            ExitCode::FAILURE
        }
    }
}
