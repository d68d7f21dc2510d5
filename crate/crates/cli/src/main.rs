mod args;
mod commands;
mod examples;
mod output;

use std::process::ExitCode;

use clap::Parser;

use args::{Cli, Command};
use output::emit;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let common = &cli.common;
    let result = match &cli.command {
        Command::Generate(a) => commands::generate(a).and_then(|o| emit("generate", a, common, o)),
        Command::Pair(a) => commands::pair(a).and_then(|o| emit("pair", a, common, o)),
        Command::Invariants(a) => commands::invariants(a).and_then(|o| emit("invariants", a, common, o)),
        Command::Geometry(a) => commands::geometry(a, common.seed).and_then(|o| emit("geometry", a, common, o)),
        Command::Bounds(a) => commands::bounds(a).and_then(|o| emit("bounds", a, common, o)),
        Command::Verify(a) => commands::verify(a, common.seed).and_then(|o| emit("verify", a, common, o)),
        Command::Examples(a) => examples::run(a).and_then(|o| emit("examples", a, common, o)),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("ropebound: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
