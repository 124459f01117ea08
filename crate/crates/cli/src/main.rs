mod args;
mod commands;
mod config;
mod subject;

use clap::Parser;

fn main() {
    let cli = args::Cli::parse();
    if let Err(err) = commands::dispatch(cli) {
        eprintln!("error: {err:#}");
        std::process::exit(commands::exit_code(&err));
    }
}
