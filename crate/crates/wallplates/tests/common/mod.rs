#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use wallplates::board::{Board, Tiling};
use wallplates::puzzle::{Plate, PlateSet, Puzzle};

/// Faces per lattice cell.
pub fn faces_per_cell(t: Tiling) -> i64 {
    match t {
        Tiling::Square => 1,
        Tiling::Triangular => 2,
        Tiling::Hextri | Tiling::Parallelogram => 3,
    }
}

/// Every period in Hermite normal form `(a,0),(b,c)` with `ac = index`.
pub fn periods(index: i64) -> Vec<[i64; 4]> {
    let mut out = Vec::new();
    for a in 1..=index {
        if index % a == 0 {
            for b in 0..a {
                out.push([a, 0, b, index / a]);
            }
        }
    }
    out
}

/// Every board with at most `max_faces` faces.
pub fn small_boards(max_faces: i64) -> Vec<Board> {
    let mut out = Vec::new();
    for t in Tiling::ALL {
        for index in 1..=max_faces / faces_per_cell(t) {
            for p in periods(index) {
                out.push(
                    Board::from_parts(t, p[0], p[1], p[2], p[3]).expect("HNF periods are valid"),
                );
            }
        }
    }
    out
}

/// Reads the plates a labelling puts on the faces.
pub fn plates_of(puzzle_sites: &[Vec<usize>], arity: usize, degree: usize, eps: &[u8]) -> PlateSet {
    let plates = puzzle_sites
        .iter()
        .map(|fs| Plate::new(arity, fs.iter().map(|&s| eps[s]).collect()).unwrap());
    PlateSet::new(degree, plates).unwrap()
}

/// Every labelling of the sites by `1..=degree` whose face readings are
/// exactly the plate multiset. No search, no pruning.
pub fn naive_solutions(p: &Puzzle) -> BTreeSet<Vec<u8>> {
    let sites = p.site_count();
    let n = p.degree() as u8;
    let layout: Vec<Vec<usize>> = (0..p.board.faces.len())
        .map(|f| p.face_sites(f).to_vec())
        .collect();
    let want: BTreeMap<Plate, usize> = p.plates.iter().map(|(pl, c)| (pl.clone(), c)).collect();
    let mut eps = vec![1u8; sites];
    let mut out = BTreeSet::new();
    loop {
        let mut got: BTreeMap<Plate, usize> = BTreeMap::new();
        for fs in &layout {
            let pl = Plate::new(p.arity(), fs.iter().map(|&s| eps[s]).collect()).unwrap();
            *got.entry(pl).or_insert(0) += 1;
        }
        if got == want {
            out.insert(eps.clone());
        }
        let mut i = 0;
        loop {
            if i == sites {
                return out;
            }
            if eps[i] < n {
                eps[i] += 1;
                break;
            }
            eps[i] = 1;
            i += 1;
        }
    }
}

/// Largest degree keeping the naive enumeration under `budget` labellings.
pub fn affordable_degree(sites: usize, budget: f64) -> usize {
    (1..=6)
        .rev()
        .find(|&n| (n as f64).powi(sites as i32) <= budget)
        .unwrap_or(1)
}

pub fn fixture_dir() -> std::path::PathBuf {
    std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures")
}
