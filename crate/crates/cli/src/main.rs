use std::io::Write;
use std::panic;
use std::process::ExitCode;

use clap::Parser;
use kbar_cli::{run, status, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match panic::catch_unwind(|| run(&cli.command)) {
        Ok(outcome) => outcome,
        Err(_) => return ExitCode::from(status::INTERNAL),
    };
    let _ = std::io::stdout().write_all(outcome.stdout.as_bytes());
    let _ = std::io::stderr().write_all(outcome.stderr.as_bytes());
    ExitCode::from(outcome.status)
}
