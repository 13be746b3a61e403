use std::io::{self, BufReader};

use clap::Parser;
use graph_discord::cli::{execute, Cli};

fn main() {
    let cli = Cli::parse();
    let mut stdin = BufReader::new(io::stdin());
    let code = execute(&cli, &mut stdin, &mut io::stdout().lock(), &mut io::stderr().lock());
    std::process::exit(code);
}
