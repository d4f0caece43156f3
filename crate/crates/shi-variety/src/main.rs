use clap::Parser;

use shi_variety::cli::{run, Cli};

fn main() {
    let cli = Cli::parse();
    let result = run(cli);
    print!("{}", result.stdout);
    std::process::exit(result.exit_code);
}
