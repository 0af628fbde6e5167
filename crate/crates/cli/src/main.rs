//! `cone-surgeon`: measurement graphs, cones and deformed codes from the
//! command line.
//!
//! Exit status: 0 success, 1 invalid input, 2 the operator is not a logical
//! (or is a stabilizer), 3 expansion could not be certified, 4 an audited
//! invariant failed, 5 internal error.

mod cone;
mod config;
mod deform;
mod error;
mod graph;
mod inputs;
mod scale;
mod verify;

use std::process::ExitCode;

use clap::{Parser, Subcommand};

use crate::config::RunConfig;
use crate::error::CliError;

#[derive(Parser, Debug)]
#[command(
    name = "cone-surgeon",
    version,
    about = "Logical measurement by cone surgery"
)]
struct Cli {
    #[command(flatten)]
    config: RunConfig,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build and certify the measurement graph of a logical.
    Graph(graph::GraphArgs),
    /// Build the cellulated cone of a graph and audit it.
    Cone(cone::ConeArgs),
    /// Build the deformed code measuring a logical, with a full audit.
    Deform(deform::DeformArgs),
    /// Tabulate cone sizes over random graphs.
    Scale(scale::ScaleArgs),
    /// Re-check artifacts written by the other commands.
    Verify(verify::VerifyArgs),
}

fn run(cli: &Cli) -> Result<(), CliError> {
    let cfg = &cli.config;
    if let Some(t) = cfg.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build_global()
            .map_err(|e| CliError::Usage(format!("--threads {t}: {e}")))?;
    }
    if cfg.no_augment && !matches!(cli.command, Command::Cone(_) | Command::Scale(_)) {
        eprintln!("warning: --no-augment skips expansion; distance guarantees no longer hold");
    }
    match &cli.command {
        Command::Graph(a) => graph::run(a, cfg),
        Command::Cone(a) => cone::run(a, cfg),
        Command::Deform(a) => deform::run(a, cfg),
        Command::Scale(a) => scale::run(a, cfg),
        Command::Verify(a) => verify::run(a),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
