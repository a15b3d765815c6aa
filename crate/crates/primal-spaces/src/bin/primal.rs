use clap::Parser;

use primal_spaces::cli::{run, Cli};

fn main() {
    std::process::exit(run(Cli::parse()));
}
