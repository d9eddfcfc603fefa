use std::process::ExitCode;

use clap::Parser;
use cubic_dirac::cli::{run, Cli, EXIT_INPUT};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (text, code) = run(&cli);
    if code == EXIT_INPUT {
        eprint!("{text}");
        return ExitCode::from(code as u8);
    }
    match &cli.output {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &text) {
                eprintln!("error: {}: {e}", path.display());
                return ExitCode::from(EXIT_INPUT as u8);
            }
        }
        None => print!("{text}"),
    }
    ExitCode::from(code as u8)
}
