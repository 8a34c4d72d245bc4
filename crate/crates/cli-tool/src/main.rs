use clap::Parser;

mod commands;
mod config;
mod error;
mod manifest;
mod output;

fn main() {
    let cli = commands::Cli::parse();
    if let Err(e) = commands::run(cli) {
        eprintln!("error: {e}");
        std::process::exit(e.exit_code());
    }
}
