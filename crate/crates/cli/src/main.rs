use std::io;
use std::process::ExitCode;

use clap::Parser;
use palrich_cli::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli, io::stdout().lock()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("palrich: {e}");
            e.exit_code()
        }
    }
}
