use std::process::ExitCode;

use clap::Parser;
use coxeter_pyramids_cli::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli.command, &cli.config) {
        Ok(out) => {
            let written = match &cli.config.output {
                Some(path) => std::fs::write(path, out).map_err(|e| format!("cannot write {}: {e}", path.display())),
                None => {
                    print!("{out}");
                    Ok(())
                }
            };
            match written {
                Ok(()) => ExitCode::SUCCESS,
                Err(e) => {
                    eprintln!("error: {e}");
                    ExitCode::FAILURE
                }
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
