mod args;
mod commands;
mod example;
mod input;
mod verify;

use std::fs;
use std::process::ExitCode;

use clap::Parser;
use ihara_core::Error;

use args::{Cli, Command};
use input::InputError;

const VERIFICATION_FAILED: u8 = 1;
const INPUT_ERROR: u8 = 2;
const BUDGET_EXCEEDED: u8 = 3;

fn exit_code(err: &anyhow::Error) -> u8 {
    if err.downcast_ref::<InputError>().is_some() || err.downcast_ref::<std::io::Error>().is_some() {
        return INPUT_ERROR;
    }
    match err.downcast_ref::<Error>() {
        Some(Error::BudgetExceeded { .. }) => BUDGET_EXCEEDED,
        Some(
            Error::Parse(_)
            | Error::EmptyGraph
            | Error::DisconnectedGraph
            | Error::VertexOutOfRange { .. }
            | Error::GenusZero
            | Error::NotClosed
            | Error::InvalidWalk
            | Error::DimensionMismatch { .. }
            | Error::SingularLattice
            | Error::NotRegular(_)
            | Error::NotApplicable(_),
        ) => INPUT_ERROR,
        _ => VERIFICATION_FAILED,
    }
}

/// Writes to `--out` or stdout.
fn emit(out: &Option<std::path::PathBuf>, body: &str) -> anyhow::Result<()> {
    match out {
        Some(path) => fs::write(path, body)?,
        None => print!("{body}"),
    }
    Ok(())
}

fn run(cli: &Cli) -> anyhow::Result<bool> {
    let opts = &cli.opts;
    match &cli.command {
        Command::Info => emit(&opts.out, &commands::info(opts)?)?,
        Command::Sweep { what } => emit(&opts.out, &commands::sweep(opts, *what)?)?,
        Command::Counts { method, format } => {
            emit(&opts.out, &commands::counts(opts, *method, *format)?)?
        }
        Command::Verify => {
            let v = verify::run(opts)?;
            emit(&opts.out, &(serde_json::to_string_pretty(&v.report)? + "\n"))?;
            return Ok(v.passed);
        }
        Command::ExampleK4 => {
            let artifact = example::run()?;
            match &opts.out {
                Some(dir) => example::write(&artifact, dir)?,
                None => println!("{}", serde_json::to_string_pretty(&artifact.report)?),
            }
            return Ok(artifact.passed);
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(VERIFICATION_FAILED),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(exit_code(&err))
        }
    }
}
