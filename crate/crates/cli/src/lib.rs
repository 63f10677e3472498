//! Command-line front-end for `consensus-faces`.
//!
//! Exit codes: 0 analysis completed (whatever the verdict), 1 internal
//! error, 2 unreadable, malformed or invalid input or exceeded capacity,
//! 3 oracle and face graph disagree.

pub mod args;
pub mod commands;
pub mod error;
pub mod input;
pub mod report;

use std::io::Write;

pub use args::Cli;
use args::Command;
use commands::emit;
pub use error::CliError;

/// Runs one command, writing results to `out` and diagnostics to `err`.
pub fn run(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<(), CliError> {
    match cli.command {
        Command::Analyze(args) => {
            let report = commands::analyze(&args)?;
            emit(out, &commands::analysis_summary(&report, args.witness))
        }
        Command::Oracle(args) => {
            let report = commands::oracle(&args)?;
            emit(out, &commands::oracle_summary(&report, args.witness))
        }
        Command::Simulate(args) => {
            let (csv, last) = commands::simulate_trace(&args)?;
            let line = format!("final seminorm: {last}\n");
            match &args.csv {
                Some(path) => {
                    std::fs::write(path, csv).map_err(|source| CliError::Write {
                        path: path.clone(),
                        source,
                    })?;
                    emit(out, &line)
                }
                None => {
                    emit(out, &csv)?;
                    emit(err, &line)
                }
            }
        }
        Command::Census(args) => emit(out, &report::to_json(&commands::census(args.n)?)),
    }
}
