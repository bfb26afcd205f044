use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use hypinertia::cli::Cli;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match hypinertia::run(cli) {
        Ok(outcome) => {
            let written = match &outcome.out {
                Some(path) => std::fs::write(path, &outcome.output),
                None => std::io::stdout()
                    .lock()
                    .write_all(outcome.output.as_bytes()),
            };
            if let Err(e) = written {
                eprintln!("error: {e}");
                return ExitCode::from(1);
            }
            ExitCode::from(outcome.status as u8)
        }
        Err(failure) => {
            eprintln!("{failure}");
            ExitCode::from(failure.exit_code() as u8)
        }
    }
}
