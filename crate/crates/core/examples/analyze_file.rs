//! Full analysis of a matrix file, printed as a JSON report.
//!
//! ```text
//! cargo run --example analyze_file -- crates/core/examples/data/twisted_cubic.mat
//! ```

use detdeform::cli::{cmd_analyze_file, render, AnalyzeOptions};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let path = std::env::args()
        .nth(1)
        .unwrap_or_else(|| concat!(env!("CARGO_MANIFEST_DIR"), "/examples/data/twisted_cubic.mat").into());
    let text = std::fs::read_to_string(&path)?;
    let analysis = cmd_analyze_file(&text, &AnalyzeOptions::default())?;
    println!("{}", render(&analysis.report(false)));
    Ok(())
}
