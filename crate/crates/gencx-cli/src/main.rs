//! `gencx`: exact checks for linear Dirac structures, generalized complex
//! structures, generalized Kähler data and invariant integrability over Lie
//! algebras. Inputs are JSON files; reports are deterministic for a fixed
//! seed and input.

mod ops;
mod report;

use clap::{Parser, Subcommand};
use ops::CliError;
use report::Report;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "gencx", version, about = "Exact generalized complex geometry workbench")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// JSON input file.
    #[arg(long, global = true)]
    input: Option<PathBuf>,

    /// Seed for the randomized suites (GENCX_SEED overrides this flag).
    #[arg(long, global = true)]
    seed: Option<u64>,

    /// Emit the report as JSON.
    #[arg(long, global = true)]
    json: bool,

    /// Print only the summary line in text mode.
    #[arg(long, global = true)]
    quiet: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Validate a Dirac structure and report its (E, ε) decomposition.
    CheckDirac,
    /// Push a Dirac structure forward along a linear map, both routes.
    Pushforward,
    /// Pull a Dirac structure back along a linear map, both routes.
    Pullback,
    /// Apply a B-field transform.
    Bfield,
    /// Compute the canonical Poisson quotient.
    PoissonQuotient,
    /// Validate a generalized complex structure.
    GcCheck,
    /// Compute the normalizing B-field for a given f-structure.
    NormalForm,
    /// Test generalized complex linearity and produce a factorization witness.
    GcLinear,
    /// Evaluate the rejected graph-invariance notion next to the main one.
    GraphInvariance,
    /// Assemble a generalized Kähler pair from bi-Hermitian data.
    GkFromBihermitian,
    /// Recover tamed symplectic data and the residual B-field from a pair.
    GkToTamed,
    /// Build the generalized Kähler pair of tamed symplectic data.
    TamedToGk,
    /// Compute the holomorphic Poisson bivectors of a tamed pair.
    HoloPoisson,
    /// Run the shipped Lie-algebra example checks (or validate user data).
    LieExample {
        /// Example name (default: so4).
        name: Option<String>,
    },
    /// Run every property suite of every module at the documented sizes.
    VerifyAll,
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::CheckDirac => "check-dirac",
            Command::Pushforward => "pushforward",
            Command::Pullback => "pullback",
            Command::Bfield => "bfield",
            Command::PoissonQuotient => "poisson-quotient",
            Command::GcCheck => "gc-check",
            Command::NormalForm => "normal-form",
            Command::GcLinear => "gc-linear",
            Command::GraphInvariance => "graph-invariance",
            Command::GkFromBihermitian => "gk-from-bihermitian",
            Command::GkToTamed => "gk-to-tamed",
            Command::TamedToGk => "tamed-to-gk",
            Command::HoloPoisson => "holo-poisson",
            Command::LieExample { .. } => "lie-example",
            Command::VerifyAll => "verify-all",
        }
    }
}

fn resolve_seed(flag: Option<u64>) -> u64 {
    if let Ok(env) = std::env::var("GENCX_SEED") {
        if let Ok(parsed) = env.parse() {
            return parsed;
        }
    }
    flag.unwrap_or(gencx_core::verify::DEFAULT_SEED)
}

fn run(cli: &Cli) -> Result<Report, CliError> {
    let seed = resolve_seed(cli.seed);
    let input_bytes = match &cli.input {
        Some(path) => Some(std::fs::read(path)?),
        None => None,
    };
    let input_value: Option<serde_json::Value> = match &input_bytes {
        Some(bytes) => Some(serde_json::from_slice(bytes)?),
        None => None,
    };
    let input = input_value.as_ref();

    let (checks, result) = match &cli.command {
        Command::CheckDirac => ops::check_dirac(input)?,
        Command::Pushforward => ops::pushforward(input)?,
        Command::Pullback => ops::pullback(input)?,
        Command::Bfield => ops::bfield(input)?,
        Command::PoissonQuotient => ops::poisson_quotient(input)?,
        Command::GcCheck => ops::gc_check(input)?,
        Command::NormalForm => ops::normal_form(input)?,
        Command::GcLinear => ops::gc_linear(input)?,
        Command::GraphInvariance => ops::graph_invariance(input)?,
        Command::GkFromBihermitian => ops::gk_from_bihermitian_cmd(input)?,
        Command::GkToTamed => ops::gk_to_tamed_cmd(input)?,
        Command::TamedToGk => ops::tamed_to_gk_cmd(input)?,
        Command::HoloPoisson => ops::holo_poisson_cmd(input)?,
        Command::LieExample { name } => ops::lie_example(input, name.as_deref())?,
        Command::VerifyAll => (ops::verify_all(seed), None),
    };
    Ok(Report::new(cli.command.name(), input_bytes.as_deref(), seed, checks, result))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(report) => {
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&report.to_json()).expect("serializable"));
            } else {
                print!("{}", report.render_text(cli.quiet));
            }
            ExitCode::from(report.exit_code() as u8)
        }
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(err.exit_code() as u8)
        }
    }
}
