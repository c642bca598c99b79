//! Cross-checks every bound on each graph of a graph6 file (the bundled
//! corpus by default) and prints the survey CSV.
//!
//! cargo run --release --example survey [file.g6]

use boxicity::cli::{survey_row, SURVEY_HEADER};
use boxicity::engine::EngineConfig;
use boxicity::graph6;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let path = std::env::args()
        .nth(1)
        .unwrap_or_else(|| concat!(env!("CARGO_MANIFEST_DIR"), "/data/corpus_le6.g6").to_string());
    let graphs = graph6::decode_lines(&std::fs::read_to_string(path)?)?;
    let cfg = EngineConfig::default();
    println!("{SURVEY_HEADER}");
    let mut failures = 0;
    for g in &graphs {
        let row = survey_row(g, 2, &cfg)?;
        failures += row.failed_check().is_some() as usize;
        println!("{row}");
    }
    eprintln!("{} graphs, {failures} failed checks", graphs.len());
    Ok(())
}
