//! The worked examples, each a puzzle file bundled with the claims it must
//! satisfy. [`Fixture::check`] recomputes every claim from scratch.

use std::fmt;

use thiserror::Error;

use crate::format::{FormatError, PuzzleFile};
use crate::perm::{Perm, SignedPerm};
use crate::puzzle::{
    puzzles_equivalent, synthesize_puzzle, Classification, Plate, Puzzle, PuzzleError, SignRule,
    SolveOptions,
};
use crate::wallpaper::{relations_for, Assignment, WallpaperError};

#[derive(Debug, Error)]
pub enum FixtureError {
    #[error("unknown fixture `{0}`")]
    Unknown(String),
    #[error(transparent)]
    Format(#[from] FormatError),
    #[error(transparent)]
    Puzzle(#[from] PuzzleError),
    #[error(transparent)]
    Wallpaper(#[from] WallpaperError),
}

/// Whether the board period was printed with the example or rebuilt from
/// the face count and the pictured symmetry.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Period {
    Printed,
    Reconstructed,
}

/// Whether a claimed value is quoted from the source or computed here and
/// frozen as a regression value.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Origin {
    Quoted,
    Derived,
}

/// Which solutions the counting claims range over.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Scope {
    All,
    /// Solutions invariant under the rotation of this order about the origin,
    /// closed under the direct symmetries.
    RotationAtOrigin(usize),
}

#[derive(Clone, Copy, Debug)]
pub enum Claim {
    BoardGroup(usize),
    PlateGroup(usize),
    Solutions(usize),
    Natural(usize),
    Classes(usize),
    /// Natural solutions per class, as a multiset.
    ClassSizes(&'static [usize]),
    /// `|G_ε|` per class, as a multiset.
    ClassGroups(&'static [usize]),
    MaxGroup(usize),
    /// Solutions with `plate` on the center face whose group pairs the
    /// face's rotation with `rotation`.
    Pinned {
        plate: &'static str,
        rotation: &'static str,
        solutions: usize,
    },
    /// Two of those pinned solutions have group order `group` and are
    /// related by relabelling with `witness`.
    PinnedPair {
        plate: &'static str,
        rotation: &'static str,
        witness: &'static str,
        group: usize,
    },
    EquivalentTo {
        other: &'static str,
        witness: &'static str,
    },
    NotEquivalentTo(&'static str),
    /// The assignment labels this board with exactly this plate set, with a
    /// solution group of the given order.
    Synthesizes {
        signature: &'static str,
        assignment: &'static str,
        group: usize,
    },
    NoSynthesis {
        signature: &'static str,
        assignment: &'static str,
    },
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Claim::BoardGroup(_) => write!(f, "board group order"),
            Claim::PlateGroup(_) => write!(f, "plate group order"),
            Claim::Solutions(_) => write!(f, "solutions"),
            Claim::Natural(_) => write!(f, "natural solutions"),
            Claim::Classes(_) => write!(f, "equivalence classes"),
            Claim::ClassSizes(_) => write!(f, "class sizes"),
            Claim::ClassGroups(_) => write!(f, "class group orders"),
            Claim::MaxGroup(_) => write!(f, "largest solution group"),
            Claim::Pinned {
                plate, rotation, ..
            } => write!(f, "solutions with {plate} centred and {rotation}"),
            Claim::PinnedPair { witness, group, .. } => {
                write!(f, "pinned pair of group {group} related by {witness}")
            }
            Claim::EquivalentTo { other, witness } => {
                write!(f, "equivalent to {other} by {witness}")
            }
            Claim::NotEquivalentTo(other) => write!(f, "not equivalent to {other}"),
            Claim::Synthesizes {
                signature,
                assignment,
                ..
            } => write!(f, "{signature} {assignment} yields these plates"),
            Claim::NoSynthesis {
                signature,
                assignment,
            } => write!(f, "{signature} {assignment} labels no edge"),
        }
    }
}

impl Claim {
    fn expected(&self) -> String {
        match self {
            Claim::BoardGroup(n)
            | Claim::PlateGroup(n)
            | Claim::Solutions(n)
            | Claim::Natural(n)
            | Claim::Classes(n)
            | Claim::MaxGroup(n) => n.to_string(),
            Claim::ClassSizes(v) | Claim::ClassGroups(v) => multiset(v.to_vec()),
            Claim::Pinned { solutions, .. } => solutions.to_string(),
            Claim::Synthesizes { group, .. } => format!("same plates, group {group}"),
            Claim::PinnedPair { .. } | Claim::EquivalentTo { .. } => "yes".into(),
            Claim::NotEquivalentTo(_) => "no witness".into(),
            Claim::NoSynthesis { .. } => "no labelling".into(),
        }
    }
}

fn multiset(mut v: Vec<usize>) -> String {
    v.sort_unstable_by(|a, b| b.cmp(a));
    let parts: Vec<String> = v.iter().map(usize::to_string).collect();
    parts.join(",")
}

pub struct Fixture {
    pub name: &'static str,
    pub summary: &'static str,
    pub source: &'static str,
    pub period: Period,
    pub scope: Scope,
    /// What was changed from the printed data, if anything.
    pub note: Option<&'static str>,
    pub claims: &'static [(Claim, Origin)],
}

#[derive(Clone, Debug)]
pub struct ClaimCheck {
    pub claim: String,
    pub origin: Origin,
    pub expected: String,
    pub found: String,
    pub passed: bool,
}

impl Fixture {
    pub fn file(&self) -> Result<PuzzleFile, FormatError> {
        PuzzleFile::parse(self.source)
    }

    pub fn puzzle(&self) -> Result<Puzzle, FixtureError> {
        Ok(self.file()?.puzzle()?)
    }

    /// The classification over this fixture's scope.
    pub fn classify(&self, puzzle: &Puzzle) -> Result<Classification, PuzzleError> {
        match self.scope {
            Scope::All => puzzle.classify(),
            Scope::RotationAtOrigin(k) => {
                let w = puzzle
                    .board
                    .rotation_at_origin(k)
                    .ok_or(PuzzleError::IncompatiblePeriod)?;
                puzzle.classify_symmetric(w)
            }
        }
    }

    /// Recomputes every claim.
    pub fn check(&self) -> Result<Vec<ClaimCheck>, FixtureError> {
        let file = self.file()?;
        let board = file.board().map_err(PuzzleError::from)?;
        let mut puzzle = None;
        let mut classes = None;
        let mut out = Vec::new();
        for (claim, origin) in self.claims {
            let found = match claim {
                Claim::BoardGroup(_) => board.symmetry_group().len().to_string(),
                Claim::Synthesizes {
                    signature,
                    assignment,
                    ..
                } => {
                    let sig = relations_for(signature)?;
                    let a = Assignment::parse(&sig, file.degree, assignment)?;
                    match synthesize_puzzle(&board, &sig, &a, file.arity) {
                        Ok((p, sol)) if p.plates == file.plates => {
                            format!("same plates, group {}", p.solution_group(&sol)?.order())
                        }
                        Ok((p, _)) => format!("plates {}", p.plates),
                        Err(e) => e.to_string(),
                    }
                }
                Claim::NoSynthesis {
                    signature,
                    assignment,
                } => {
                    let sig = relations_for(signature)?;
                    let a = Assignment::parse(&sig, file.degree, assignment)?;
                    match synthesize_puzzle(&board, &sig, &a, file.arity) {
                        Ok((p, _)) => format!("plates {}", p.plates),
                        Err(_) => "no labelling".into(),
                    }
                }
                _ => {
                    let p: &Puzzle = match &puzzle {
                        Some(p) => p,
                        None => puzzle.insert(file.puzzle()?),
                    };
                    match claim {
                        Claim::PlateGroup(_) => p.plate_group().order().to_string(),
                        Claim::Pinned {
                            plate, rotation, ..
                        } => pinned(p, plate, rotation)?.len().to_string(),
                        Claim::PinnedPair {
                            plate,
                            rotation,
                            witness,
                            group,
                        } => yes_no(pinned_pair(p, plate, rotation, witness, *group)?),
                        Claim::EquivalentTo { other, witness } => {
                            let other = get(other)?.file()?.plates;
                            let w = SignedPerm::parse(witness, file.degree)
                                .map_err(PuzzleError::from)?;
                            yes_no(p.plates.act(&w) == other)
                        }
                        Claim::NotEquivalentTo(other) => {
                            let other = get(other)?.file()?.plates;
                            match puzzles_equivalent(&p.plates, &other, SignRule::Either)? {
                                None => "no witness".into(),
                                Some(w) => w.to_string(),
                            }
                        }
                        _ => {
                            let c: &Classification = match &classes {
                                Some(c) => c,
                                None => classes.insert(self.classify(p)?),
                            };
                            match claim {
                                Claim::Solutions(_) => c.solutions.len().to_string(),
                                Claim::Natural(_) => c.natural.len().to_string(),
                                Claim::Classes(_) => c.classes.len().to_string(),
                                Claim::ClassSizes(_) => multiset(c.class_sizes()),
                                Claim::ClassGroups(_) => multiset(
                                    c.classes.iter().map(|k| k.solution_group_order).collect(),
                                ),
                                Claim::MaxGroup(_) => c.max_group_order().to_string(),
                                _ => unreachable!("handled above"),
                            }
                        }
                    }
                }
            };
            let expected = claim.expected();
            out.push(ClaimCheck {
                claim: claim.to_string(),
                origin: *origin,
                passed: found == expected,
                expected,
                found,
            });
        }
        Ok(out)
    }
}

fn yes_no(b: bool) -> String {
    if b { "yes" } else { "no" }.into()
}

fn pin_options(p: &Puzzle, plate: &str, rotation: &str) -> Result<SolveOptions, PuzzleError> {
    let face = p.board.center_face();
    let plate: Plate = plate.parse()?;
    let rot = p.board.face_rotation(face).ok_or(PuzzleError::PinShape {
        face,
        sides: plate.sides(),
    })?;
    let perm = Perm::parse(rotation, p.degree())?;
    Ok(SolveOptions {
        pin: Some((face, plate)),
        require: vec![(perm, rot)],
        ..SolveOptions::default()
    })
}

fn pinned(
    p: &Puzzle,
    plate: &str,
    rotation: &str,
) -> Result<Vec<crate::puzzle::Solution>, PuzzleError> {
    p.solve(&pin_options(p, plate, rotation)?)
}

fn pinned_pair(
    p: &Puzzle,
    plate: &str,
    rotation: &str,
    witness: &str,
    group: usize,
) -> Result<bool, PuzzleError> {
    let w = Perm::parse(witness, p.degree())?;
    let mut sols = Vec::new();
    for s in pinned(p, plate, rotation)? {
        if p.solution_group(&s)?.order() == group {
            sols.push(s);
        }
    }
    let keys: Vec<Vec<u8>> = sols.iter().map(|s| p.natural_key(&s.eps)).collect();
    Ok(sols.iter().enumerate().any(|(i, s)| {
        let moved: Vec<u8> = s.eps.iter().map(|&x| w.apply(x as usize) as u8).collect();
        let img = p.natural_key(&moved);
        keys.iter().enumerate().any(|(j, k)| i != j && *k == img)
    }))
}

/// Looks a fixture up by name.
pub fn get(name: &str) -> Result<&'static Fixture, FixtureError> {
    CATALOG
        .iter()
        .find(|f| f.name == name)
        .ok_or_else(|| FixtureError::Unknown(name.to_string()))
}

pub fn catalog() -> &'static [Fixture] {
    CATALOG
}

/// The bundled assignment table of a signature.
pub fn wallpaper_table(signature: &str) -> Option<&'static str> {
    Some(match signature {
        "p2" => include_str!("../fixtures/tables/p2.tbl"),
        "pm" => include_str!("../fixtures/tables/pm.tbl"),
        "pg" => include_str!("../fixtures/tables/pg.tbl"),
        "p2mm" => include_str!("../fixtures/tables/p2mm.tbl"),
        "p2mg" => include_str!("../fixtures/tables/p2mg.tbl"),
        "p2gg" => include_str!("../fixtures/tables/p2gg.tbl"),
        "cm" => include_str!("../fixtures/tables/cm.tbl"),
        "c2mm" => include_str!("../fixtures/tables/c2mm.tbl"),
        "p4" => include_str!("../fixtures/tables/p4.tbl"),
        "p4mm" => include_str!("../fixtures/tables/p4mm.tbl"),
        "p4gm" => include_str!("../fixtures/tables/p4gm.tbl"),
        "p3" => include_str!("../fixtures/tables/p3.tbl"),
        "p3m1" => include_str!("../fixtures/tables/p3m1.tbl"),
        "p31m" => include_str!("../fixtures/tables/p31m.tbl"),
        "p6" => include_str!("../fixtures/tables/p6.tbl"),
        "p6mm" => include_str!("../fixtures/tables/p6mm.tbl"),
        _ => return None,
    })
}

macro_rules! puz {
    ($name:literal) => {
        include_str!(concat!("../fixtures/puzzles/", $name, ".puz"))
    };
}

use Claim::*;
use Origin::{Derived, Quoted};

const FIG22_PIN: &str = "[246]";
const FIG22_ROT: &str = "(135)(246)";

static CATALOG: &[Fixture] = &[
    Fixture {
        name: "fig19a",
        summary: "square board of five faces with its p4 plates",
        source: puz!("fig19a"),
        period: Period::Printed,
        scope: Scope::All,
        note: None,
        claims: &[
            (BoardGroup(20), Quoted),
            (Synthesizes { signature: "p4", assignment: "a=(1234) c=(1325)", group: 20 }, Quoted),
        ],
    },
    Fixture {
        name: "fig19b",
        summary: "maximal solution on the five-square board",
        source: puz!("fig19b"),
        period: Period::Printed,
        scope: Scope::All,
        note: None,
        claims: &[
            (Natural(1), Quoted),
            (MaxGroup(20), Quoted),
            (PlateGroup(20), Derived),
            (Solutions(20), Derived),
        ],
    },
    Fixture {
        name: "fig19c",
        summary: "ten squares on the rotation centres of the grid",
        source: puz!("fig19c"),
        period: Period::Reconstructed,
        scope: Scope::All,
        note: None,
        claims: &[
            (BoardGroup(40), Quoted),
            (MaxGroup(20), Quoted),
            (Natural(1), Derived),
            (Solutions(40), Derived),
        ],
    },
    Fixture {
        name: "fig20a",
        summary: "eight-square board symmetric by reflection, no plates",
        source: puz!("fig20a"),
        period: Period::Printed,
        scope: Scope::All,
        note: Some("generator c read as (1625)(3748); the printed (1265)(3748) contradicts the printed b, u, v and y"),
        claims: &[
            (BoardGroup(64), Quoted),
            (NoSynthesis { signature: "p4mm", assignment: "a=(1234)(67) c=(1625)(3748) x=(13)(67)" }, Derived),
        ],
    },
    Fixture {
        name: "fig20b",
        summary: "sixteen squares, the first puzzle compatible with the rotations",
        source: puz!("fig20b"),
        period: Period::Reconstructed,
        scope: Scope::All,
        note: Some("printed plate [1542] replaced by [2584]; as printed the numbers 1 and 8 occur an odd number of times"),
        claims: &[
            (BoardGroup(128), Quoted),
            (MaxGroup(64), Quoted),
            (PlateGroup(256), Derived),
            (Solutions(11520), Derived),
            (Natural(180), Derived),
            (Classes(10), Derived),
            (NotEquivalentTo("fig20c"), Derived),
        ],
    },
    Fixture {
        name: "fig20c",
        summary: "sixteen squares, the second puzzle",
        source: puz!("fig20c"),
        period: Period::Reconstructed,
        scope: Scope::All,
        note: Some("printed plate [1275] replaced by [3684]; as printed the numbers 3 and 8 occur an odd number of times"),
        claims: &[
            (BoardGroup(128), Quoted),
            (MaxGroup(32), Quoted),
            (EquivalentTo { other: "fig20d", witness: "(13)(67)-" }, Quoted),
            (PlateGroup(64), Derived),
            (Solutions(6912), Derived),
            (Natural(108), Derived),
            (Classes(14), Derived),
        ],
    },
    Fixture {
        name: "fig20d",
        summary: "sixteen squares, the third puzzle",
        source: puz!("fig20d"),
        period: Period::Reconstructed,
        scope: Scope::All,
        note: Some("plates not printed; obtained from the corrected fig20c by (13)(67)-"),
        claims: &[
            (EquivalentTo { other: "fig20c", witness: "(13)(67)-" }, Quoted),
            (MaxGroup(32), Derived),
            (Natural(108), Derived),
        ],
    },
    Fixture {
        name: "fig21",
        summary: "eighteen triangles, five numbers, solutions with a six-fold rotation",
        source: puz!("fig21"),
        period: Period::Reconstructed,
        scope: Scope::RotationAtOrigin(6),
        note: None,
        claims: &[
            (PlateGroup(24), Quoted),
            (Classes(7), Quoted),
            (ClassSizes(&[4, 4, 4, 4, 4, 4, 4]), Quoted),
            (ClassGroups(&[6, 6, 6, 6, 6, 6, 6]), Quoted),
            (Natural(28), Derived),
            (Solutions(1512), Derived),
        ],
    },
    Fixture {
        name: "fig22a",
        summary: "fourteen triangles with the p6 plates",
        source: puz!("fig22"),
        period: Period::Printed,
        scope: Scope::All,
        note: None,
        claims: &[
            (BoardGroup(42), Quoted),
            (Synthesizes { signature: "p6", assignment: "a=(123456) d=(276435)", group: 42 }, Quoted),
        ],
    },
    Fixture {
        name: "fig22b",
        summary: "the maximal natural solution",
        source: puz!("fig22"),
        period: Period::Printed,
        scope: Scope::All,
        note: None,
        claims: &[
            (MaxGroup(42), Quoted),
            (PlateGroup(42), Derived),
            (Solutions(714), Derived),
            (Natural(17), Derived),
            (ClassSizes(&[14, 2, 1]), Derived),
            (ClassGroups(&[42, 21, 3]), Derived),
        ],
    },
    Fixture {
        name: "fig22c",
        summary: "pinned search, first of the pair with group 21",
        source: puz!("fig22"),
        period: Period::Printed,
        scope: Scope::All,
        note: None,
        claims: &[
            (Pinned { plate: FIG22_PIN, rotation: FIG22_ROT, solutions: 5 }, Quoted),
            (PinnedPair { plate: FIG22_PIN, rotation: FIG22_ROT, witness: "(123456)", group: 21 }, Quoted),
        ],
    },
    Fixture {
        name: "fig22d",
        summary: "pinned search, second of the pair with group 21",
        source: puz!("fig22"),
        period: Period::Printed,
        scope: Scope::All,
        note: None,
        claims: &[(PinnedPair { plate: FIG22_PIN, rotation: FIG22_ROT, witness: "(123456)", group: 21 }, Quoted)],
    },
    Fixture {
        name: "fig22e",
        summary: "pinned search, first of the pair with group 3",
        source: puz!("fig22"),
        period: Period::Printed,
        scope: Scope::All,
        note: None,
        claims: &[(PinnedPair { plate: FIG22_PIN, rotation: FIG22_ROT, witness: "(14)(25)(36)", group: 3 }, Quoted)],
    },
    Fixture {
        name: "fig22f",
        summary: "pinned search, second of the pair with group 3",
        source: puz!("fig22"),
        period: Period::Printed,
        scope: Scope::All,
        note: None,
        claims: &[(PinnedPair { plate: FIG22_PIN, rotation: FIG22_ROT, witness: "(14)(25)(36)", group: 3 }, Quoted)],
    },
    Fixture {
        name: "fig23",
        summary: "eight triangles, three classes",
        source: puz!("fig23"),
        period: Period::Reconstructed,
        scope: Scope::All,
        note: None,
        claims: &[
            (ClassSizes(&[6, 6, 2]), Quoted),
            (BoardGroup(48), Derived),
            (PlateGroup(48), Derived),
            (Natural(14), Derived),
            (MaxGroup(24), Derived),
        ],
    },
    Fixture {
        name: "fig24a",
        summary: "twelve rhombi, p6 plates in pairs",
        source: puz!("fig24a"),
        period: Period::Reconstructed,
        scope: Scope::All,
        note: None,
        claims: &[
            (BoardGroup(48), Derived),
            (PlateGroup(48), Derived),
            (Solutions(384), Derived),
            (Natural(18), Derived),
            (ClassSizes(&[6, 6, 4, 2]), Derived),
            (MaxGroup(24), Derived),
        ],
    },
    Fixture {
        name: "fig24b",
        summary: "twelve rhombi, p6mm plates",
        source: puz!("fig24b"),
        period: Period::Reconstructed,
        scope: Scope::All,
        note: None,
        claims: &[
            (PlateGroup(96), Derived),
            (Natural(2), Derived),
            (Classes(1), Derived),
            (MaxGroup(48), Derived),
        ],
    },
    Fixture {
        name: "fig25",
        summary: "four hexagons and eight triangles",
        source: puz!("fig25"),
        period: Period::Reconstructed,
        scope: Scope::All,
        note: None,
        claims: &[
            (PlateGroup(48), Quoted),
            (Classes(8), Quoted),
            (Natural(32), Quoted),
            (ClassGroups(&[48, 24, 16, 16, 16, 8, 8, 6]), Quoted),
            (MaxGroup(48), Quoted),
            (Solutions(768), Derived),
        ],
    },
    Fixture {
        name: "fig26",
        summary: "eight triangles with two numbers per side",
        source: puz!("fig26"),
        period: Period::Reconstructed,
        scope: Scope::All,
        note: None,
        claims: &[
            (MaxGroup(48), Quoted),
            (
                Synthesizes { signature: "p6mm", assignment: "a=(123456) d=(156423) x=(26)(35)", group: 48 },
                Derived,
            ),
            (PlateGroup(48), Derived),
            (Natural(102), Derived),
            (Classes(12), Derived),
        ],
    },
    Fixture {
        name: "fig27a",
        summary: "nine rhombi, mixed plates",
        source: puz!("fig27a"),
        period: Period::Reconstructed,
        scope: Scope::All,
        note: None,
        claims: &[(MaxGroup(36), Derived), (Natural(22), Derived), (Classes(6), Derived)],
    },
    Fixture {
        name: "fig27b",
        summary: "nine rhombi, palindromic plates",
        source: puz!("fig27b"),
        period: Period::Reconstructed,
        scope: Scope::All,
        note: None,
        claims: &[(MaxGroup(36), Derived), (Natural(4), Derived), (Classes(1), Derived)],
    },
    Fixture {
        name: "fig28a",
        summary: "three hexagons and six triangles",
        source: puz!("fig28a"),
        period: Period::Reconstructed,
        scope: Scope::All,
        note: None,
        claims: &[(MaxGroup(36), Derived), (Natural(1), Derived)],
    },
    Fixture {
        name: "fig28b",
        summary: "three hexagons and six constant triangles",
        source: puz!("fig28b"),
        period: Period::Reconstructed,
        scope: Scope::All,
        note: None,
        claims: &[
            (
                Synthesizes { signature: "p6mm", assignment: "a=(123456) d=(163254) x=(14)(23)(56)", group: 36 },
                Derived,
            ),
            (MaxGroup(36), Derived),
            (Natural(1), Derived),
        ],
    },
    Fixture {
        name: "fig29a",
        summary: "twenty-four triangles, solutions with a six-fold rotation",
        source: puz!("fig29a"),
        period: Period::Reconstructed,
        scope: Scope::RotationAtOrigin(6),
        note: None,
        claims: &[
            (BoardGroup(144), Derived),
            (Solutions(576), Derived),
            (Natural(8), Derived),
            (ClassSizes(&[6, 2]), Derived),
            (MaxGroup(18), Derived),
        ],
    },
    Fixture {
        name: "fig29b",
        summary: "twenty-four triangles with constant plates, six-fold solutions",
        source: puz!("fig29b"),
        period: Period::Reconstructed,
        scope: Scope::RotationAtOrigin(6),
        note: None,
        claims: &[
            (BoardGroup(144), Derived),
            (Solutions(1152), Derived),
            (Natural(16), Derived),
            (ClassSizes(&[6, 6, 2, 2]), Derived),
            (MaxGroup(18), Derived),
        ],
    },
];

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_fixture_parses_and_builds() {
        for f in catalog() {
            let file = f.file().unwrap_or_else(|e| panic!("{}: {e}", f.name));
            file.board().unwrap_or_else(|e| panic!("{}: {e}", f.name));
            assert_eq!(
                PuzzleFile::parse(&file.to_string()).unwrap(),
                file,
                "{}",
                f.name
            );
        }
    }
}
