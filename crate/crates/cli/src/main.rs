use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use rangemode_cli::bench::{bench, BenchConfig, CSV_HEADER};
use rangemode_cli::input::{load_array, load_queries};
use rangemode_cli::run::run_queries;
use rangemode_cli::structures::{Params, StructureKind};
use rangemode_cli::verify::{verify, RangeSource};
use rangemode_cli::CliError;

#[derive(Parser, Debug)]
#[command(name = "rangemode", version, about = "Static range mode queries")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Answer each query in a file, one `element<TAB>frequency` line each
    Query(QueryArgs),
    /// Check every applicable structure against the brute-force oracle
    Verify(VerifyArgs),
    /// Time a structure on a seeded random array and print a CSV record
    Bench(BenchArgs),
}

#[derive(Args, Debug)]
struct StructureParams {
    /// Sparse mode table exponent in [0, 0.5]
    #[arg(long)]
    epsilon: Option<f64>,
    /// Block size (grid: cell width); 0 picks the linear-space default
    #[arg(long)]
    block_size: Option<usize>,
}

impl StructureParams {
    fn params(&self) -> Params {
        Params {
            epsilon: self.epsilon,
            block_size: self.block_size,
        }
    }
}

#[derive(Args, Debug)]
struct QueryArgs {
    #[arg(long, value_enum)]
    structure: StructureKind,
    #[arg(long)]
    array: PathBuf,
    #[arg(long)]
    queries: PathBuf,
    #[command(flatten)]
    params: StructureParams,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(long)]
    array: PathBuf,
    #[arg(
        long,
        conflicts_with = "exhaustive",
        required_unless_present = "exhaustive"
    )]
    queries: Option<PathBuf>,
    /// Check every range (arrays of at most 2048 cells)
    #[arg(long)]
    exhaustive: bool,
    #[command(flatten)]
    params: StructureParams,
}

#[derive(Args, Debug)]
struct BenchArgs {
    #[arg(long, value_enum)]
    structure: StructureKind,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    k: usize,
    /// Number of random queries
    #[arg(long, default_value_t = 10_000)]
    count: usize,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Print the CSV header and record instead of a summary
    #[arg(long)]
    csv: bool,
    #[command(flatten)]
    params: StructureParams,
}

fn run(cli: Cli) -> Result<ExitCode, CliError> {
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let write_err = |e: io::Error| CliError::Io {
        path: "<stdout>".into(),
        source: e,
    };
    match cli.command {
        Command::Query(args) => {
            let array = load_array(&args.array)?;
            let queries = load_queries(&args.queries, &array.dims())?;
            let lines = run_queries(args.structure, &args.params.params(), &array, &queries)?;
            for line in lines {
                writeln!(out, "{line}").map_err(write_err)?;
            }
        }
        Command::Verify(args) => {
            let array = load_array(&args.array)?;
            let source = match &args.queries {
                Some(path) => RangeSource::Listed(load_queries(path, &array.dims())?),
                None => RangeSource::Exhaustive,
            };
            let report = verify(&array, &args.params.params(), source)?;
            writeln!(out, "{report}").map_err(write_err)?;
            if !report.passed() {
                out.flush().map_err(write_err)?;
                return Ok(ExitCode::from(1));
            }
        }
        Command::Bench(args) => {
            let record = bench(&BenchConfig {
                kind: args.structure,
                params: args.params.params(),
                n: args.n,
                k: args.k,
                queries: args.count,
                seed: args.seed,
            })?;
            if args.csv {
                writeln!(out, "{CSV_HEADER}\n{}", record.to_csv()).map_err(write_err)?;
            } else {
                writeln!(
                    out,
                    "{} n={} k={} param={} build={}ns p50={}ns max_cells_touched={} seed={}",
                    record.structure,
                    record.n,
                    record.k,
                    record.param,
                    record.build_ns,
                    record.p50_query_ns,
                    record.max_cells_touched,
                    record.seed
                )
                .map_err(write_err)?;
            }
        }
    }
    out.flush().map_err(write_err)?;
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("rangemode: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
