use std::io::Write;

use clap::Parser;

use qhom_cli::args::{Cli, THREADS_ENV};
use qhom_cli::error::exit;

fn main() {
    let echo: Vec<String> = std::env::args().skip(1).collect();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            std::process::exit(if e.use_stderr() { exit::INPUT } else { exit::OK });
        }
    };
    if let Ok(n) = std::env::var(THREADS_ENV) {
        match n.parse::<usize>() {
            Ok(n) => {
                let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
            }
            Err(_) => {
                eprintln!("error: {THREADS_ENV} must be a thread count, got {n:?}");
                std::process::exit(exit::INPUT);
            }
        }
    }
    let run = qhom_cli::execute(&cli, &echo);
    print!("{}", run.stdout);
    eprint!("{}", run.stderr);
    let _ = std::io::stdout().flush();
    std::process::exit(run.code);
}
