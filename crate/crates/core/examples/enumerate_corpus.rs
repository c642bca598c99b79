//! Writes every graph on 1..=N vertices (up to isomorphism) as graph6, one per line.
//!
//! cargo run --release --example enumerate_corpus -- 6 data/corpus_le6.g6

use std::fs;

use boxicity::{corpus, graph6};

fn main() -> std::io::Result<()> {
    let mut args = std::env::args().skip(1);
    let max_n: usize = args.next().map_or(6, |a| a.parse().expect("order must be a number"));
    let graphs = corpus::graphs_up_to(max_n);
    let text: String = graphs.iter().map(|g| graph6::encode(g) + "\n").collect();
    match args.next() {
        Some(path) => {
            fs::write(&path, text)?;
            eprintln!("wrote {} graphs to {path}", graphs.len());
        }
        None => print!("{text}"),
    }
    Ok(())
}
