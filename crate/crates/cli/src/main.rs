use std::io::Write;

use clap::Parser;

fn main() {
    let cli = match arcclass_cli::Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if e.use_stderr() => {
            e.print().ok();
            std::process::exit(arcclass_cli::exit::INPUT);
        }
        Err(e) => e.exit(),
    };
    let outcome = arcclass_cli::run(cli);
    print!("{}", outcome.stdout);
    eprint!("{}", outcome.stderr);
    std::io::stdout().flush().ok();
    std::process::exit(outcome.code);
}
