use std::process::ExitCode;

use clap::Parser;
use shy_cli::{finish, run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = run(&cli);
    ExitCode::from(finish(&cli, result))
}
