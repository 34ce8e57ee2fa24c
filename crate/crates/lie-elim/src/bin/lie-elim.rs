use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use lie_elim::cli::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((text, ok)) => {
            let mut out = std::io::stdout().lock();
            let _ = out.write_all(text.as_bytes());
            if ok {
                ExitCode::SUCCESS
            } else {
                eprintln!("lie-elim: some checks failed");
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("lie-elim: {e}");
            ExitCode::from(2)
        }
    }
}
