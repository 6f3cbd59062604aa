use std::process::ExitCode;

use clap::Parser;
use permlab_verify::cli::{main_with, Cli};

fn main() -> ExitCode {
    main_with(Cli::parse(), &mut std::io::stdout().lock())
}
