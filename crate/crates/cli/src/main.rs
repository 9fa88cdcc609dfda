use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use ordrep_cli::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (outcome, err) = match run(&cli) {
        Ok(o) => (o, None),
        Err((o, e)) => (o, Some(e)),
    };
    print!("{}", outcome.stdout);
    let _ = std::io::stdout().flush();
    eprint!("{}", outcome.stderr);
    match err {
        None => ExitCode::SUCCESS,
        Some(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
