use clap::Parser;
use hecke_cli::{run, Cli, EXIT_USAGE, SEED_ENV};
use std::process::ExitCode;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE as u8 } else { 0 });
        }
    };
    let seed = std::env::var(SEED_ENV).ok();
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    match run(&cli, seed.as_deref(), &mut out) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_USAGE as u8)
        }
    }
}
