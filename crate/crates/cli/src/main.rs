use std::process::ExitCode;

use clap::Parser;

fn main() -> ExitCode {
    let cli = nnrep_cli::args::Cli::parse();
    nnrep_cli::exit_code(nnrep_cli::run(cli))
}
