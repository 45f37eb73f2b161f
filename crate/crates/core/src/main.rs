use clap::Parser;
use edgecurv::cli::{run, Cli};

fn main() {
    let cfg = Cli::parse().command.into_config();
    if let Err(e) = run(&cfg) {
        eprintln!("edgecurv: {e}");
        std::process::exit(e.exit_code());
    }
}
