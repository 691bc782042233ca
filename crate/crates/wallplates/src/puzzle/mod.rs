//! Plates, puzzles on boards, exact solving and the groups attached to
//! puzzles and their solutions.
//!
//! A solution is identified with its edge labelling `ε`. With one number per
//! edge the sites of `ε` are the edges; with two numbers per edge the sites
//! are the two ends of every edge, so a side label `(x, y)` puts `x` next to
//! the side's first corner in counterclockwise order and `y` next to its
//! second. The neighbouring plate, which runs the edge the other way, reads
//! the same pair as `(y, x)`.

mod classify;
mod plate;
mod solve;
mod synth;

use thiserror::Error;

use crate::board::{Board, BoardError};
use crate::perm::{PermError, PermGroup};

pub use classify::{Classification, EquivalenceClass, SolutionGroup};
pub(crate) use plate::split_plates;
pub use plate::{act_plate, plate_group, puzzles_equivalent, Plate, PlateSet, SignRule};
pub use solve::{Solution, SolveOptions};
pub use synth::{realize_generators, synthesize_puzzle};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PuzzleError {
    #[error("bad plate `{0}`")]
    BadPlate(String),
    #[error("plate `{plate}` uses {got} where arity {arity} is expected")]
    MixedArity {
        plate: String,
        got: usize,
        arity: usize,
    },
    #[error("number {number} exceeds degree {degree}")]
    NumberOutOfRange { number: usize, degree: usize },
    #[error("{plates} plates for {faces} faces")]
    CountMismatch { plates: usize, faces: usize },
    #[error("no face with {0} sides on this board")]
    ShapeMismatch(usize),
    #[error("face {face} cannot take a plate with {sides} sides")]
    PinShape { face: usize, sides: usize },
    #[error("number {0} is on no edge, so the symmetry's permutation is ambiguous")]
    AbsentNumber(usize),
    #[error("degree {0} is too large for exhaustive search")]
    DegreeTooLarge(usize),
    #[error("signature {0} has no realization on a {1} board")]
    Unrealizable(String, String),
    #[error("the assignment is incompatible with the board period")]
    IncompatiblePeriod,
    #[error(transparent)]
    Board(#[from] BoardError),
    #[error(transparent)]
    Perm(#[from] PermError),
}

/// A board with a plate set, plus the site layout used by `ε`.
#[derive(Clone, Debug)]
pub struct Puzzle {
    pub board: Board,
    pub plates: PlateSet,
    /// Per face, per side, the `arity` sites in reading order.
    face_sites: Vec<Vec<usize>>,
    site_count: usize,
    plate_group: PermGroup,
}

impl Puzzle {
    pub fn new(board: Board, plates: PlateSet) -> Result<Puzzle, PuzzleError> {
        let total: usize = plates.total();
        if total != board.faces.len() {
            return Err(PuzzleError::CountMismatch {
                plates: total,
                faces: board.faces.len(),
            });
        }
        for (p, _) in plates.iter() {
            if !board.faces.iter().any(|f| f.sides.len() == p.sides()) {
                return Err(PuzzleError::ShapeMismatch(p.sides()));
            }
        }
        let face_sites = face_sites(&board, plates.arity());
        let site_count = board.edges.len() * plates.arity();
        let plate_group = plate_group(&plates, board.has_reflections())?;
        Ok(Puzzle {
            board,
            plates,
            face_sites,
            site_count,
            plate_group,
        })
    }

    pub fn arity(&self) -> usize {
        self.plates.arity()
    }

    pub fn degree(&self) -> usize {
        self.plates.degree()
    }

    pub fn site_count(&self) -> usize {
        self.site_count
    }

    /// Sites of face `f`, side by side, in counterclockwise reading order.
    pub fn face_sites(&self, f: usize) -> &[usize] {
        &self.face_sites[f]
    }

    /// `G_P`, signed exactly when the board has reflections.
    pub fn plate_group(&self) -> &PermGroup {
        &self.plate_group
    }

    /// Image of every site under board symmetry `s`.
    pub fn site_map(&self, s: usize) -> Vec<usize> {
        site_map(&self.board, self.arity(), s)
    }
}

pub(crate) fn face_sites(board: &Board, arity: usize) -> Vec<Vec<usize>> {
    board
        .faces
        .iter()
        .map(|f| {
            f.sides
                .iter()
                .flat_map(|&(e, fwd)| match arity {
                    1 => vec![e],
                    _ if fwd => vec![2 * e, 2 * e + 1],
                    _ => vec![2 * e + 1, 2 * e],
                })
                .collect()
        })
        .collect()
}

pub(crate) fn site_map(board: &Board, arity: usize, s: usize) -> Vec<usize> {
    let g = &board.symmetry_group()[s];
    match arity {
        1 => g.edges.iter().map(|&e| e as usize).collect(),
        _ => (0..2 * board.edges.len())
            .map(|d| 2 * g.edges[d / 2] as usize + ((d % 2) ^ usize::from(g.edge_flips[d / 2])))
            .collect(),
    }
}
