//! `korder`: compute and cross-check k sequences of generalized order-k
//! numbers from the command line.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage error.

mod bench;
mod commands;
mod output;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use output::Format;

#[derive(Debug, Parser)]
#[command(name = "korder", version, about = "k sequences of generalized order-k numbers")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Table of a[i][n] for 1-k <= n <= n-max.
    Seq(SeqArgs),
    /// Emit a family matrix.
    Matrix(MatrixArgs),
    /// Determinant of a family matrix.
    Det(MatrixArgs),
    /// Permanent of a family matrix.
    Perm(MatrixArgs),
    /// Closed-form estimate of a[i][n] from the characteristic roots.
    Binet(BinetArgs),
    /// Cross-check every method against the recurrence over a grid.
    Verify(VerifyArgs),
    /// Median timings per method.
    Bench(BenchArgs),
}

#[derive(Debug, Args)]
struct SeqArgs {
    #[arg(long)]
    k: usize,
    #[arg(long)]
    lambda: u64,
    /// Single sequence index; all of 1..=k when omitted.
    #[arg(long)]
    i: Option<usize>,
    #[arg(long = "n-max")]
    n_max: i64,
    #[arg(long, value_enum, default_value = "csv")]
    format: Format,
}

#[derive(Debug, Args)]
struct MatrixArgs {
    /// Q, B, H or D.
    #[arg(long)]
    family: String,
    #[arg(long)]
    k: usize,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    lambda: u64,
    /// Border index (2 <= i <= k) for the bordered variant.
    #[arg(long)]
    i: Option<usize>,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

#[derive(Debug, Args)]
struct BinetArgs {
    #[arg(long)]
    k: usize,
    #[arg(long)]
    lambda: u64,
    /// Term index n of a[i][n].
    #[arg(long)]
    n: i64,
    /// Sequence index; defaults to k.
    #[arg(long)]
    i: Option<usize>,
    #[arg(long, value_enum, default_value = "csv")]
    format: Format,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[arg(long = "k-max", default_value_t = 5)]
    k_max: usize,
    #[arg(long = "n-max", default_value_t = 20)]
    n_max: usize,
    #[arg(long, value_delimiter = ',', default_value = "1,2,3")]
    lambda: Vec<u64>,
    /// Relative tolerance for Binet values.
    #[arg(long, default_value_t = 1e-9)]
    tolerance: f64,
    /// Skip the floating-point Binet checks.
    #[arg(long = "no-binet")]
    no_binet: bool,
    #[arg(long, value_enum, default_value = "csv")]
    format: Format,
}

#[derive(Debug, Args)]
struct BenchArgs {
    #[arg(long, default_value_t = 4)]
    k: usize,
    #[arg(long, default_value_t = 2)]
    lambda: u64,
    #[arg(long = "n-list", value_delimiter = ',', required = true)]
    n_list: Vec<usize>,
    /// Comma-separated subset of: recurrence, det-Q, det-B, per-H, per-D,
    /// det-naive, per-naive, binet.
    #[arg(long, value_delimiter = ',', default_value = "recurrence,det-B")]
    methods: Vec<String>,
    #[arg(long, default_value_t = 5)]
    repeats: usize,
    #[arg(long, value_enum, default_value = "csv")]
    format: Format,
}

/// Failure categories mapped onto exit codes.
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    /// Output is still printed before exiting with status 1.
    Failed { output: String, message: String },
}

impl From<korder::Error> for CliError {
    fn from(e: korder::Error) -> Self {
        CliError::Usage(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Seq(a) => commands::seq(a.k, a.lambda, a.i, a.n_max, a.format),
        Command::Matrix(a) => commands::matrix(&a.family, a.k, a.n, a.lambda, a.i, a.format),
        Command::Det(a) => commands::evaluate(commands::Op::Det, &a.family, a.k, a.n, a.lambda, a.i, a.format),
        Command::Perm(a) => commands::evaluate(commands::Op::Perm, &a.family, a.k, a.n, a.lambda, a.i, a.format),
        Command::Binet(a) => commands::binet(a.k, a.lambda, a.i, a.n, a.format),
        Command::Verify(a) => commands::verify(
            korder::verify::VerifyConfig {
                k_max: a.k_max,
                n_max: a.n_max,
                lambdas: a.lambda,
                tolerance: a.tolerance,
                binet: !a.no_binet,
            },
            a.format,
        ),
        Command::Bench(a) => bench::run(&bench::BenchConfig {
            k: a.k,
            lambda: a.lambda,
            n_list: a.n_list,
            methods: a.methods,
            repeats: a.repeats,
            format: a.format,
        }),
    };
    match result {
        Ok(text) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(CliError::Failed { output, message }) => {
            print!("{output}");
            eprintln!("korder: {message}");
            ExitCode::from(1)
        }
        Err(CliError::Usage(msg)) => {
            eprintln!("korder: {msg}");
            ExitCode::from(2)
        }
    }
}
