//! Pins a plate on the centre face and asks for a rotation about that face
//! to act on the numbers as a given permutation.

use wallplates::fixtures;
use wallplates::perm::Perm;
use wallplates::puzzle::SolveOptions;

fn main() {
    let puzzle = fixtures::get("fig22b").unwrap().puzzle().unwrap();
    let face = puzzle.board.center_face();
    let rotation = puzzle.board.face_rotation(face).unwrap();
    let opts = SolveOptions {
        pin: Some((face, "[246]".parse().unwrap())),
        require: vec![(Perm::parse("(135)(246)", 7).unwrap(), rotation)],
        ..SolveOptions::default()
    };
    let solutions = puzzle.solve(&opts).unwrap();
    for s in &solutions {
        let g = puzzle.solution_group(s).unwrap();
        println!("|G_eps| = {:>2}  eps = {:?}", g.order(), s.eps);
    }
    println!("{} solutions with [246] on face {face}", solutions.len());
}
