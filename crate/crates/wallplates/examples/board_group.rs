//! Builds a board and lists its symmetry group with the geometric type of
//! each element.

use wallplates::board::{Board, Target, Tiling};

fn main() {
    let board = Board::from_parts(Tiling::Square, -1, 2, 2, 1).unwrap();
    let g = board.symmetry_group();
    println!(
        "{} faces, {} edges, {} vertices; {} symmetries, {} direct",
        board.faces.len(),
        board.edges.len(),
        board.vertices.len(),
        g.len(),
        board.direct_count()
    );
    for (i, s) in g.iter().enumerate() {
        println!(
            "{i:>3} det {:+} faces {}  {}",
            s.det(),
            s.face_perm(),
            board.classify_symmetry(i)
        );
    }
    let r = board.face_rotation(0).unwrap();
    println!(
        "rotation about face 0 is element {r}; it sends edge 0 to {:?}",
        board.act(r, Target::Edge(0)).unwrap()
    );
}
