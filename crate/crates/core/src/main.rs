use clap::Parser;

use bookx::cli::{run_command, ParsedCommand};

fn main() {
    let cmd = ParsedCommand::parse();
    let code = run_command(&cmd, &mut std::io::stdout().lock(), &mut std::io::stderr().lock());
    std::process::exit(code);
}
