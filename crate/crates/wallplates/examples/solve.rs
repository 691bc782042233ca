//! Parses a puzzle file and lists its solutions.
//!
//! `cargo run --example solve -- fixtures/puzzles/fig19b.puz`

use wallplates::format::PuzzleFile;
use wallplates::puzzle::SolveOptions;

fn main() {
    let path = std::env::args()
        .nth(1)
        .unwrap_or_else(|| format!("{}/fixtures/puzzles/fig19b.puz", env!("CARGO_MANIFEST_DIR")));
    let text = std::fs::read_to_string(&path).unwrap_or_else(|e| {
        eprintln!("{path}: {e}");
        std::process::exit(2)
    });
    let puzzle = match PuzzleFile::parse(&text).map(|f| f.puzzle()) {
        Ok(Ok(p)) => p,
        Ok(Err(e)) => exit_input(e),
        Err(e) => exit_input(e),
    };
    let solutions = puzzle
        .solve(&SolveOptions {
            limit: Some(10),
            ..SolveOptions::default()
        })
        .unwrap();
    for s in &solutions {
        println!("{:?}", s.eps);
    }
    if solutions.is_empty() {
        println!("no solution");
        std::process::exit(1);
    }
}

fn exit_input(e: impl std::fmt::Display) -> ! {
    eprintln!("{e}");
    std::process::exit(2)
}
