//! The `nnrep` command line.
//!
//! Exit codes: 0 when everything verifies, 1 when a verification fails,
//! 2 for usage, schema, or construction errors.

pub mod args;
mod commands;
mod demo;

use std::process::ExitCode;

use args::{Cli, Command};

/// Outcome of a subcommand that ran to completion.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
}

pub fn run(cli: Cli) -> anyhow::Result<Status> {
    match cli.command {
        Command::Build(a) => commands::build(&a),
        Command::Verify(a) => commands::verify(&a),
        Command::Table(a) => commands::table(&a),
        Command::Demo(a) => demo::demo(&a),
    }
}

pub fn exit_code(result: anyhow::Result<Status>) -> ExitCode {
    match result {
        Ok(Status::Pass) => ExitCode::SUCCESS,
        Ok(Status::Fail) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
