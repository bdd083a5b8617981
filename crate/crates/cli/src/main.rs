mod args;
mod run;

use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;

use args::Cli;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let rendered = e.render().to_string();
            let first = rendered.lines().next().unwrap_or("usage error");
            eprintln!("{first}");
            return ExitCode::from(1);
        }
    };
    if let Err(violations) = trioct::BASIS_TABLE.validate() {
        eprintln!("error: multiplication table is invalid: {}", violations[0]);
        return ExitCode::from(1);
    }
    match run::run(cli.command) {
        Ok(run::Outcome::Success) => ExitCode::SUCCESS,
        Ok(run::Outcome::VerificationFailed) => ExitCode::from(2),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
