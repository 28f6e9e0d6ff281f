use std::io::Write;

use clap::Parser;
use hbe_cli::{catalog_for, configure_threads, run, RunConfig, EXIT_USAGE};

fn main() {
    let cfg = RunConfig::parse();
    let prepared = configure_threads().and_then(|_| catalog_for(&cfg));
    let catalog = match prepared {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(EXIT_USAGE);
        }
    };
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    let code = run(&cfg, &catalog, &mut out);
    let _ = out.flush();
    std::process::exit(code);
}
