use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use covseries_cli::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    let code = match run(&cli.command, &mut out) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            covseries_cli::EXIT_MISMATCH
        }
    };
    let _ = out.flush();
    ExitCode::from(code as u8)
}
