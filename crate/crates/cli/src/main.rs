mod cli;
mod commands;
mod ranks;

use std::process::ExitCode;

use clap::Parser;

fn main() -> ExitCode {
    // clap exits with status 2 on usage errors
    let cli = cli::Cli::parse();
    let result = commands::render(&cli.command)
        .and_then(|text| commands::emit(commands::out_args(&cli.command), &text));
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(err.exit_code())
        }
    }
}
