//! Writes an SVG of a fixture board with its first solution.
//!
//! `cargo run --example render -- fig25 > fig25.svg`

use wallplates::fixtures;
use wallplates::puzzle::SolveOptions;
use wallplates::render::svg;

fn main() {
    let name = std::env::args().nth(1).unwrap_or_else(|| "fig25".into());
    let puzzle = fixtures::get(&name).unwrap().puzzle().unwrap();
    let first = puzzle
        .solve(&SolveOptions {
            limit: Some(1),
            ..SolveOptions::default()
        })
        .unwrap();
    print!(
        "{}",
        svg(&puzzle.board, first.first().map(|s| (&puzzle, s)))
    );
}
