//! The plain-text puzzle file.
//!
//! ```text
//! wallplates-puzzle 1
//! # comments start with a hash
//! board triangular -3 1 -2 3
//! symbols 7 1
//! plates
//! [127]
//! [153] x3
//! ```

use std::fmt;

use thiserror::Error;

use crate::board::{Board, BoardError, Tiling};
use crate::lattice::SublatticeSpec;
use crate::puzzle::{Plate, PlateSet, Puzzle, PuzzleError};

pub const FORMAT_VERSION: u32 = 1;
const MAGIC: &str = "wallplates-puzzle";

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FormatError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("missing `{0}` block")]
    Missing(&'static str),
}

fn syntax(line: usize, message: impl Into<String>) -> FormatError {
    FormatError::Syntax {
        line,
        message: message.into(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PuzzleFile {
    pub version: u32,
    pub tiling: Tiling,
    pub period: SublatticeSpec,
    pub degree: usize,
    pub arity: usize,
    pub plates: PlateSet,
}

impl PuzzleFile {
    pub fn parse(text: &str) -> Result<PuzzleFile, FormatError> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
            .filter(|(_, l)| !l.is_empty());
        let (ln, header) = lines.next().ok_or(FormatError::Missing(MAGIC))?;
        let version = match header.split_whitespace().collect::<Vec<_>>()[..] {
            [MAGIC, v] => v.parse::<u32>().map_err(|_| syntax(ln, "bad version"))?,
            _ => return Err(syntax(ln, format!("expected `{MAGIC} <version>`"))),
        };
        if version != FORMAT_VERSION {
            return Err(syntax(ln, format!("unsupported version {version}")));
        }
        let mut board = None;
        let mut symbols = None;
        let mut plates: Option<Vec<Plate>> = None;
        for (ln, line) in lines {
            let words: Vec<&str> = line.split_whitespace().collect();
            match (words[0], &mut plates) {
                ("board", None) => {
                    let [_, tiling, p1, q1, p2, q2] = words[..] else {
                        return Err(syntax(ln, "expected `board <tiling> p1 q1 p2 q2`"));
                    };
                    let tiling: Tiling = tiling
                        .parse()
                        .map_err(|e: BoardError| syntax(ln, e.to_string()))?;
                    let ints = [p1, q1, p2, q2]
                        .iter()
                        .map(|w| {
                            w.parse::<i64>()
                                .map_err(|_| syntax(ln, format!("bad integer `{w}`")))
                        })
                        .collect::<Result<Vec<_>, _>>()?;
                    let period = SublatticeSpec::new(ints[0], ints[1], ints[2], ints[3])
                        .map_err(|e| syntax(ln, e.to_string()))?;
                    board = Some((tiling, period));
                }
                ("symbols", None) => {
                    let [_, n, arity] = words[..] else {
                        return Err(syntax(ln, "expected `symbols <degree> <arity>`"));
                    };
                    let n: usize = n.parse().map_err(|_| syntax(ln, "bad degree"))?;
                    let arity: usize = arity.parse().map_err(|_| syntax(ln, "bad arity"))?;
                    if !(1..=2).contains(&arity) || n == 0 || n > u8::MAX as usize {
                        return Err(syntax(ln, "degree must be positive and arity 1 or 2"));
                    }
                    symbols = Some((n, arity));
                }
                ("plates", None) if words.len() == 1 => plates = Some(Vec::new()),
                (_, Some(list)) => {
                    let got =
                        crate::puzzle::split_plates(line).map_err(|e| syntax(ln, e.to_string()))?;
                    list.extend(got);
                }
                _ => return Err(syntax(ln, format!("unexpected `{}`", words[0]))),
            }
        }
        let (tiling, period) = board.ok_or(FormatError::Missing("board"))?;
        let (degree, arity) = symbols.ok_or(FormatError::Missing("symbols"))?;
        let plates = plates.ok_or(FormatError::Missing("plates"))?;
        if let Some(p) = plates.iter().find(|p| p.arity() != arity) {
            return Err(syntax(0, format!("plate {p} does not have arity {arity}")));
        }
        let plates = if plates.is_empty() {
            PlateSet::empty(degree, arity)
        } else {
            PlateSet::new(degree, plates).map_err(|e| syntax(0, e.to_string()))?
        };
        Ok(PuzzleFile {
            version,
            tiling,
            period,
            degree,
            arity,
            plates,
        })
    }

    pub fn board(&self) -> Result<Board, BoardError> {
        Board::build(self.tiling, self.period)
    }

    pub fn puzzle(&self) -> Result<Puzzle, PuzzleError> {
        Puzzle::new(self.board()?, self.plates.clone())
    }
}

impl fmt::Display for PuzzleFile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = &self.period;
        writeln!(f, "{MAGIC} {}", self.version)?;
        writeln!(
            f,
            "board {} {} {} {} {}",
            self.tiling, s.p1, s.q1, s.p2, s.q2
        )?;
        writeln!(f, "symbols {} {}", self.degree, self.arity)?;
        writeln!(f, "plates")?;
        for (p, c) in self.plates.iter() {
            if c == 1 {
                writeln!(f, "{p}")?;
            } else {
                writeln!(f, "{p} x{c}")?;
            }
        }
        Ok(())
    }
}
