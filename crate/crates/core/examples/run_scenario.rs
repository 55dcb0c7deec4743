//! Runs a scenario file and prints the report. Usage:
//! `run_scenario [scenarios/fermat-d4.json]`.

use std::path::PathBuf;

use galois_points::runner::{build_report, load_scenario, render, RunOptions};

fn main() {
    let path = std::env::args()
        .nth(1)
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from(concat!(env!("CARGO_MANIFEST_DIR"), "/scenarios/fermat-d4.json")));
    let (outcome, report) = build_report(load_scenario(&path), &RunOptions::default());
    print!("{}", String::from_utf8(render(&report)).unwrap());
    eprintln!("exit status {}", outcome.exit_code());
    std::process::exit(outcome.exit_code());
}
