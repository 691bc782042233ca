//! Solutions invariant under a six-fold rotation, found without enumerating
//! the full solution set.

use wallplates::fixtures;

fn main() {
    let puzzle = fixtures::get("fig29a").unwrap().puzzle().unwrap();
    let w = puzzle
        .board
        .rotation_at_origin(6)
        .expect("board has a six-fold rotation at the origin");
    let c = puzzle.classify_symmetric(w).unwrap();
    println!(
        "{} solutions fixed by the rotation up to relabelling, {} natural, classes {:?}, largest group {}",
        c.solutions.len(),
        c.natural.len(),
        c.class_sizes(),
        c.max_group_order()
    );
}
