use std::process::ExitCode;

use clap::Parser;
use speclab::cli::{emit, run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let command_line = std::env::args().skip(1).collect::<Vec<_>>().join(" ");
    let table = match run(&cli, &command_line) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    if let Err(e) = emit(&table, cli.format, cli.out.as_deref()) {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    if table.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
