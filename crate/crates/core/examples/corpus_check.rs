//! Runs the shipped regression corpus, or a manifest given on the command line.

use std::path::PathBuf;

use loewy::pipeline::{default_manifest_path, AnalysisOptions, Manifest};

fn main() -> loewy::Result<()> {
    let path = std::env::args()
        .nth(1)
        .map(PathBuf::from)
        .unwrap_or_else(default_manifest_path);
    let report = Manifest::load(&path)?.check(&AnalysisOptions::default());
    print!("{}", report.to_text());
    std::process::exit(report.exit_code());
}
