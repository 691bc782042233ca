//! Builds a puzzle from a wallpaper assignment and checks that the labelling
//! it came from is a solution with the expected symmetry.

use wallplates::board::{Board, Tiling};
use wallplates::puzzle::synthesize_puzzle;
use wallplates::wallpaper::{relations_for, Assignment};

fn main() {
    let sig = relations_for("p6").unwrap();
    let assignment = Assignment::parse(&sig, 7, "a=(123456) d=(276435)").unwrap();
    let board = Board::from_parts(Tiling::Triangular, -3, 1, -2, 3).unwrap();
    let (puzzle, solution) = synthesize_puzzle(&board, &sig, &assignment, 1).unwrap();
    println!("plates: {}", puzzle.plates);
    println!("seed labelling: {:?}", solution.eps);
    println!(
        "|G_eps| = {}",
        puzzle.solution_group(&solution).unwrap().order()
    );
}
