use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use regdet::cli::{self, DetMethod, ErrorReport, ToCsv};
use regdet::{ComplexScalar, Error, PrecisionConfig};
use serde::Serialize;

#[derive(Parser)]
#[command(
    name = "regdet",
    version,
    about = "Regularized determinants of the Riemann operator on K-groups of number rings"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,

    /// Directly summed terms in the Euler–Maclaurin Hurwitz engine.
    #[arg(long, global = true)]
    em_shift: Option<u32>,

    /// Highest Bernoulli correction order (even, 2..=20).
    #[arg(long, global = true)]
    em_order: Option<u32>,

    /// Finite-difference step for the derivative check.
    #[arg(long, global = true)]
    fd_step: Option<f64>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Spectral,
    Closed,
    Both,
}

#[derive(Subcommand)]
enum Command {
    /// Signature (r1, r2) of the field defined by a polynomial.
    Signature { poly: String },
    /// Borel ranks and Riemann-operator eigenvalues for n = 0..=n_max.
    Ranks {
        poly: String,
        #[arg(long, default_value_t = 12)]
        n_max: u64,
    },
    /// Evaluate det(sI - R) at one point.
    Det {
        poly: String,
        /// Complex point, e.g. `1.7-0.5i`.
        #[arg(long, allow_hyphen_values = true)]
        s: String,
        #[arg(long, value_enum, default_value_t = MethodArg::Both)]
        method: MethodArg,
    },
    /// Compare spectral and closed-form determinants over a grid.
    Verify {
        poly: String,
        /// `default` or comma-separated complex points.
        #[arg(long, default_value = "default", allow_hyphen_values = true)]
        grid: String,
        #[arg(long, default_value_t = 1e-8)]
        tol: f64,
    },
    /// Lerch's regularized product √(2π)/Γ(x) with its finite-difference check.
    Lerch {
        #[arg(allow_hyphen_values = true)]
        x: String,
    },
}

// A closed pipe (`regdet ... | head`) is not an error worth panicking over.
fn write_stdout(text: &str) {
    let _ = std::io::stdout().lock().write_all(text.as_bytes());
}

fn emit<T: Serialize + ToCsv>(value: &T, format: Format) {
    match format {
        Format::Json => write_stdout(&(cli::to_json(value) + "\n")),
        Format::Csv => write_stdout(&value.to_csv()),
    }
}

fn fail(err: &Error) -> ExitCode {
    write_stdout(&(cli::to_json(&ErrorReport::from(err)) + "\n"));
    ExitCode::from(cli::exit_code(err) as u8)
}

fn precision(args: &Cli) -> Result<PrecisionConfig, Error> {
    let env = std::env::var(cli::PRECISION_ENV).ok();
    cli::resolve_precision(env.as_deref(), args.em_shift, args.em_order, args.fd_step)
}

fn run(args: &Cli) -> Result<i32, Error> {
    let cfg = precision(args)?;
    match &args.command {
        Command::Signature { poly } => emit(&cli::cmd_signature(poly)?, args.format),
        Command::Ranks { poly, n_max } => emit(&cli::cmd_ranks(poly, *n_max)?, args.format),
        Command::Det { poly, s, method } => {
            let s: ComplexScalar = cli::parse_complex(s)?;
            let method = match method {
                MethodArg::Spectral => DetMethod::Spectral,
                MethodArg::Closed => DetMethod::Closed,
                MethodArg::Both => DetMethod::Both,
            };
            emit(&cli::cmd_det(poly, s, method, &cfg)?, args.format);
        }
        Command::Verify { poly, grid, tol } => {
            let report = cli::cmd_verify(poly, grid, *tol, &cfg)?;
            emit(&report, args.format);
            return Ok(report.exit_code());
        }
        Command::Lerch { x } => emit(&cli::cmd_lerch(cli::parse_complex(x)?, &cfg)?, args.format),
    }
    Ok(cli::exit::OK)
}

fn main() -> ExitCode {
    let args = Cli::parse();
    match run(&args) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => fail(&e),
    }
}
