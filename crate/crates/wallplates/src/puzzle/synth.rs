use std::collections::{HashMap, VecDeque};

use super::{face_sites, site_map, Plate, PlateSet, Puzzle, PuzzleError, Solution};
use crate::board::{Board, Mat, Pt, SCALE};
use crate::perm::{Sign, SignedPerm};
use crate::wallpaper::{Assignment, Signature};

const HEX_R60: Mat = [[0, -1], [1, 1]];
const HEX_MIRROR: Mat = [[1, 1], [0, -1]];
const SQ_R90: Mat = [[0, -1], [1, 0]];
const SQ_MIRROR: Mat = [[1, 0], [0, -1]];

fn mul(a: &Mat, b: &Mat) -> Mat {
    let mut c = [[0; 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            c[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
        }
    }
    c
}

fn power(a: &Mat, k: usize) -> Mat {
    (0..k).fold([[1, 0], [0, 1]], |acc, _| mul(a, &acc))
}

/// `p ↦ ηp + t` fixing `c`.
fn about(eta: Mat, c: Pt) -> (Mat, Pt) {
    let ec = (
        eta[0][0] * c.0 + eta[0][1] * c.1,
        eta[1][0] * c.0 + eta[1][1] * c.1,
    );
    (eta, (c.0 - ec.0, c.1 - ec.1))
}

/// Isometries realizing the free generators of a signature on a tiling's
/// grid, in lattice coordinates with translations in twelfths.
fn geometry(name: &str, hexagonal: bool) -> Option<Vec<(char, (Mat, Pt))>> {
    let half = SCALE / 2;
    let third = SCALE / 3;
    let o = (0, 0);
    let g = match (name, hexagonal) {
        ("p2", _) => vec![
            ('a', about(power(&SQ_R90, 2), o)),
            ('b', about(power(&SQ_R90, 2), (half, 0))),
            ('d', about(power(&SQ_R90, 2), (0, half))),
        ],
        ("p4", false) => vec![('a', about(SQ_R90, o)), ('c', about(SQ_R90, (half, half)))],
        ("p4mm", false) => vec![
            ('a', about(SQ_R90, o)),
            ('c', about(SQ_R90, (half, half))),
            ('x', (SQ_MIRROR, o)),
        ],
        ("p4gm", false) => vec![
            ('a', about(SQ_R90, o)),
            ('c', about(SQ_R90, (half, half))),
            ('x', (mul(&power(&SQ_R90, 3), &SQ_MIRROR), (half, half))),
        ],
        ("p3", true) => vec![
            ('a', about(power(&HEX_R60, 2), o)),
            ('b', about(power(&HEX_R60, 2), (third, third))),
        ],
        ("p3m1", true) | ("p31m", true) => {
            let x = if name == "p3m1" {
                HEX_MIRROR
            } else {
                mul(&HEX_R60, &HEX_MIRROR)
            };
            vec![
                ('a', about(power(&HEX_R60, 2), o)),
                ('b', about(power(&HEX_R60, 2), (third, third))),
                ('x', (x, o)),
            ]
        }
        ("p6", true) => vec![('a', about(HEX_R60, o)), ('d', about(HEX_R60, (SCALE, 0)))],
        ("p6mm", true) => vec![
            ('a', about(HEX_R60, o)),
            ('d', about(HEX_R60, (SCALE, 0))),
            ('x', (HEX_MIRROR, o)),
        ],
        _ => return None,
    };
    Some(g)
}

/// Board symmetries standing for the free generators of `sig`.
pub fn realize_generators(
    board: &Board,
    sig: &Signature,
) -> Result<Vec<(char, usize)>, PuzzleError> {
    let unrealizable = || PuzzleError::Unrealizable(sig.name.to_string(), board.tiling.to_string());
    let geo = geometry(sig.name, board.tiling.is_hexagonal()).ok_or_else(unrealizable)?;
    geo.into_iter()
        .map(|(c, (eta, t))| {
            board
                .symmetry_index(eta, t)
                .map(|s| (c, s))
                .ok_or_else(unrealizable)
        })
        .collect()
}

/// Labels the board from the homomorphism `ζ` that sends each geometric
/// generator to its assigned permutation, then reads the plates off the faces.
///
/// Every orbit of sites is seeded with the least number fixed by `ζ` of the
/// seed's stabiliser; the returned solution is the labelling itself.
pub fn synthesize_puzzle(
    board: &Board,
    sig: &Signature,
    assignment: &Assignment,
    arity: usize,
) -> Result<(Puzzle, Solution), PuzzleError> {
    let gens: Vec<(usize, SignedPerm)> = realize_generators(board, sig)?
        .into_iter()
        .map(|(c, s)| (s, assignment.values[&c].clone()))
        .collect();
    let n = assignment.degree;
    let group = board.symmetry_group();
    let mut zeta: HashMap<usize, SignedPerm> = HashMap::from([(0, SignedPerm::identity(n))]);
    let mut queue = VecDeque::from([0usize]);
    while let Some(w) = queue.pop_front() {
        for (g, val) in &gens {
            let next = board.compose(*g, w);
            let img = val.mul_unchecked(&zeta[&w]);
            match zeta.get(&next) {
                Some(prev) if *prev != img => return Err(PuzzleError::IncompatiblePeriod),
                Some(_) => {}
                None => {
                    let expected = if group[next].is_direct() {
                        Sign::Plus
                    } else {
                        Sign::Minus
                    };
                    if img.sign != expected {
                        return Err(PuzzleError::IncompatiblePeriod);
                    }
                    zeta.insert(next, img);
                    queue.push_back(next);
                }
            }
        }
    }
    let mut members: Vec<usize> = zeta.keys().copied().collect();
    members.sort_unstable();
    let maps: Vec<Vec<usize>> = members.iter().map(|&w| site_map(board, arity, w)).collect();
    let sites = board.edges.len() * arity;
    let mut eps = vec![0u8; sites];
    for seed in 0..sites {
        if eps[seed] != 0 {
            continue;
        }
        let fixed = (1..=n).find(|&k| {
            members
                .iter()
                .zip(&maps)
                .filter(|(_, m)| m[seed] == seed)
                .all(|(w, _)| zeta[w].perm.apply(k) == k)
        });
        let label = fixed.ok_or(PuzzleError::IncompatiblePeriod)?;
        for (w, m) in members.iter().zip(&maps) {
            eps[m[seed]] = zeta[w].perm.apply(label) as u8;
        }
    }
    let layout = face_sites(board, arity);
    let faces: Vec<Vec<u8>> = layout
        .iter()
        .map(|fs| fs.iter().map(|&s| eps[s]).collect())
        .collect();
    let plates = faces
        .iter()
        .map(|l| Plate::new(arity, l.clone()))
        .collect::<Result<Vec<_>, _>>()?;
    let set = PlateSet::new(n, plates)?;
    let placement = faces
        .iter()
        .map(|l| {
            let p = Plate::new(arity, l.clone()).expect("checked above");
            let t = set.iter().position(|(q, _)| *q == p).expect("plate in set");
            let r = (0..p.sides())
                .find(|&r| {
                    let m = r * arity;
                    p.labels()[m..].iter().chain(&p.labels()[..m]).eq(l.iter())
                })
                .expect("rotation exists");
            (t, r)
        })
        .collect();
    let puzzle = Puzzle::new(board.clone(), set)?;
    Ok((puzzle, Solution { eps, placement }))
}
