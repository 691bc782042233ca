use std::collections::{BTreeMap, HashSet};
use std::fmt;
use std::str::FromStr;

use super::PuzzleError;
use crate::perm::{Perm, PermGroup, Sign, SignedPerm};

/// A polygonal plate: its side labels read counterclockwise, flattened, in
/// the least rotation.
///
/// Arity 1 stores one number per side; arity 2 stores the pair `(x, y)` of
/// every side, `x` at the side's first corner.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Plate {
    arity: usize,
    labels: Vec<u8>,
}

impl Plate {
    /// `labels` holds `arity` numbers per side, starting anywhere on the rim.
    pub fn new(arity: usize, labels: Vec<u8>) -> Result<Plate, PuzzleError> {
        if !(1..=2).contains(&arity) || labels.is_empty() || !labels.len().is_multiple_of(arity) {
            return Err(PuzzleError::BadPlate(format!("{labels:?}")));
        }
        if labels.contains(&0) {
            return Err(PuzzleError::BadPlate(format!("{labels:?}")));
        }
        Ok(Plate::canonical(arity, labels))
    }

    fn canonical(arity: usize, labels: Vec<u8>) -> Plate {
        let best = rotations(arity, &labels).min().expect("nonempty plate");
        Plate {
            arity,
            labels: best,
        }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn sides(&self) -> usize {
        self.labels.len() / self.arity
    }

    pub fn labels(&self) -> &[u8] {
        &self.labels
    }

    /// Distinct flat label sequences over all side rotations, paired with a
    /// rotation realising each: reading from side `r` on.
    pub fn distinct_rotations(&self) -> Vec<(usize, Vec<u8>)> {
        let mut seen = HashSet::new();
        let k = self.sides();
        (0..k)
            .map(|r| (r, rotate(self.arity, &self.labels, r)))
            .filter(|(_, l)| seen.insert(l.clone()))
            .collect()
    }

    pub fn max_number(&self) -> usize {
        self.labels.iter().copied().max().unwrap_or(0) as usize
    }
}

fn rotate(arity: usize, labels: &[u8], r: usize) -> Vec<u8> {
    let m = r * arity;
    labels[m..].iter().chain(&labels[..m]).copied().collect()
}

fn rotations(arity: usize, labels: &[u8]) -> impl Iterator<Item = Vec<u8>> + '_ {
    (0..labels.len() / arity).map(move |r| rotate(arity, labels, r))
}

impl fmt::Display for Plate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let wide = self.labels.iter().any(|&x| x > 9);
        let sides: Vec<String> = self
            .labels
            .chunks(self.arity)
            .map(|c| {
                let parts: Vec<String> = c.iter().map(|x| x.to_string()).collect();
                parts.join(if wide { ":" } else { "" })
            })
            .collect();
        let sep = match (self.arity, wide) {
            (1, false) => "",
            (1, true) => " ",
            _ => ",",
        };
        write!(f, "[{}]", sides.join(sep))
    }
}

impl fmt::Debug for Plate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Accepts `[1234]`, `[1 10 3]`, `[14,36,25]` and `[1:10,3:4]`.
///
/// Commas mark two numbers per side; spaces separate multi-digit single numbers.
impl FromStr for Plate {
    type Err = PuzzleError;

    fn from_str(s: &str) -> Result<Plate, PuzzleError> {
        let bad = || PuzzleError::BadPlate(s.to_string());
        let body = s
            .trim()
            .strip_prefix('[')
            .and_then(|b| b.strip_suffix(']'))
            .ok_or_else(bad)?;
        let number = |t: &str| t.parse::<u8>().ok().filter(|&x| x > 0).ok_or_else(bad);
        let digits = |t: &str| -> Result<Vec<u8>, PuzzleError> {
            t.chars()
                .map(|c| {
                    c.to_digit(10)
                        .filter(|&d| d > 0)
                        .map(|d| d as u8)
                        .ok_or_else(bad)
                })
                .collect()
        };
        let (arity, labels) = if body.contains(',') {
            let mut labels = Vec::new();
            for side in body.split(',') {
                let side = side.trim();
                let pair = if side.contains(':') {
                    side.split(':')
                        .map(|t| number(t.trim()))
                        .collect::<Result<Vec<_>, _>>()?
                } else {
                    digits(side)?
                };
                if pair.len() != 2 {
                    return Err(PuzzleError::MixedArity {
                        plate: s.to_string(),
                        got: pair.len(),
                        arity: 2,
                    });
                }
                labels.extend(pair);
            }
            (2, labels)
        } else if body.trim().contains(char::is_whitespace) {
            (
                1,
                body.split_whitespace()
                    .map(number)
                    .collect::<Result<Vec<_>, _>>()?,
            )
        } else {
            (1, digits(body.trim())?)
        };
        if labels.len() < arity * 2 {
            return Err(bad());
        }
        Plate::new(arity, labels)
    }
}

/// A multiset of plates over the numbers `1..=degree`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PlateSet {
    degree: usize,
    arity: usize,
    plates: BTreeMap<Plate, usize>,
}

impl PlateSet {
    pub fn new(
        degree: usize,
        plates: impl IntoIterator<Item = Plate>,
    ) -> Result<PlateSet, PuzzleError> {
        Self::with_counts(degree, plates.into_iter().map(|p| (p, 1)))
    }

    pub fn with_counts(
        degree: usize,
        plates: impl IntoIterator<Item = (Plate, usize)>,
    ) -> Result<PlateSet, PuzzleError> {
        let mut map = BTreeMap::new();
        let mut arity = None;
        for (p, c) in plates {
            if *arity.get_or_insert(p.arity) != p.arity {
                return Err(PuzzleError::MixedArity {
                    plate: p.to_string(),
                    got: p.arity,
                    arity: arity.unwrap(),
                });
            }
            if p.max_number() > degree {
                return Err(PuzzleError::NumberOutOfRange {
                    number: p.max_number(),
                    degree,
                });
            }
            if c > 0 {
                *map.entry(p).or_insert(0) += c;
            }
        }
        let arity = arity.ok_or_else(|| PuzzleError::BadPlate("empty plate set".into()))?;
        Ok(PlateSet {
            degree,
            arity,
            plates: map,
        })
    }

    /// A set with no plates, as for a board whose numbering is still open.
    pub fn empty(degree: usize, arity: usize) -> PlateSet {
        PlateSet {
            degree,
            arity,
            plates: BTreeMap::new(),
        }
    }

    /// Parses whitespace-separated plates, taking the degree from the largest number.
    pub fn parse(text: &str) -> Result<PlateSet, PuzzleError> {
        let plates = split_plates(text)?;
        let degree = plates.iter().map(Plate::max_number).max().unwrap_or(0);
        Self::new(degree, plates)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn total(&self) -> usize {
        self.plates.values().sum()
    }

    /// Distinct plates with multiplicities, in canonical order.
    pub fn iter(&self) -> impl Iterator<Item = (&Plate, usize)> {
        self.plates.iter().map(|(p, &c)| (p, c))
    }

    pub fn distinct(&self) -> usize {
        self.plates.len()
    }

    pub fn count(&self, p: &Plate) -> usize {
        self.plates.get(p).copied().unwrap_or(0)
    }

    /// `sP`.
    pub fn act(&self, s: &SignedPerm) -> PlateSet {
        let mut plates = BTreeMap::new();
        for (p, &c) in &self.plates {
            *plates.entry(act_plate(s, p)).or_insert(0) += c;
        }
        PlateSet {
            degree: self.degree,
            arity: self.arity,
            plates,
        }
    }

    /// How often each number occurs over all plates, indexed from 0.
    fn occurrences(&self) -> Vec<usize> {
        let mut occ = vec![0; self.degree];
        for (p, c) in self.iter() {
            for &x in p.labels() {
                occ[x as usize - 1] += c;
            }
        }
        occ
    }
}

impl fmt::Display for PlateSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .iter()
            .map(|(p, c)| {
                if c == 1 {
                    p.to_string()
                } else {
                    format!("{p}x{c}")
                }
            })
            .collect();
        f.write_str(&parts.join(" "))
    }
}

impl fmt::Debug for PlateSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Splits text like `[123] [14,36]x2` into plates, honouring `xK` repeats.
pub(crate) fn split_plates(text: &str) -> Result<Vec<Plate>, PuzzleError> {
    let mut out = Vec::new();
    let mut rest = text.trim();
    while !rest.is_empty() {
        let end = rest
            .find(']')
            .ok_or_else(|| PuzzleError::BadPlate(rest.to_string()))?;
        let plate: Plate = rest[..=end].parse()?;
        rest = rest[end + 1..].trim_start();
        let mut count = 1;
        if let Some(r) = rest.strip_prefix('x') {
            let digits = r.chars().take_while(char::is_ascii_digit).count();
            count = r[..digits]
                .parse()
                .map_err(|_| PuzzleError::BadPlate(format!("{plate}x")))?;
            rest = r[digits..].trim_start();
        }
        out.extend(std::iter::repeat_n(plate, count));
    }
    Ok(out)
}

/// `sπ`: relabel through `s.perm`; a minus sign mirrors the plate, reversing
/// the side order and, within each side, the pair.
pub fn act_plate(s: &SignedPerm, p: &Plate) -> Plate {
    let mut labels: Vec<u8> = p
        .labels
        .iter()
        .map(|&x| s.perm.apply(x as usize) as u8)
        .collect();
    if s.sign == Sign::Minus {
        labels.reverse();
    }
    Plate::canonical(p.arity, labels)
}

const MAX_SEARCH_DEGREE: usize = 10;

/// Permutations preserving the occurrence count of every number.
fn candidates(set: &PlateSet) -> Result<impl Iterator<Item = Perm>, PuzzleError> {
    if set.degree > MAX_SEARCH_DEGREE {
        return Err(PuzzleError::DegreeTooLarge(set.degree));
    }
    let occ = set.occurrences();
    Ok(Perm::all(set.degree)
        .into_iter()
        .filter(move |p| (1..=occ.len()).all(|k| occ[p.apply(k) - 1] == occ[k - 1])))
}

fn signs(with_minus: bool) -> &'static [Sign] {
    if with_minus {
        &[Sign::Plus, Sign::Minus]
    } else {
        &[Sign::Plus]
    }
}

/// `G_P = {s : sP = P}` by exhaustive search over `S_n`, or over `S_n^±`
/// when `signed`.
pub fn plate_group(set: &PlateSet, signed: bool) -> Result<PermGroup, PuzzleError> {
    let mut elements = HashSet::new();
    for perm in candidates(set)? {
        for &sign in signs(signed) {
            let s = SignedPerm::new(sign, perm.clone());
            if set.act(&s) == *set {
                elements.insert(s);
            }
        }
    }
    let mut sorted: Vec<SignedPerm> = elements.iter().cloned().collect();
    sorted.sort();
    let mut gens: Vec<SignedPerm> = Vec::new();
    let mut span = PermGroup::generate(set.degree, &[])?;
    for s in sorted {
        if !span.contains(&s) {
            gens.push(s);
            span = PermGroup::generate(set.degree, &gens)?;
        }
    }
    debug_assert_eq!(span.order(), elements.len());
    Ok(span)
}

/// Which signs a relabelling between two puzzles may carry.
///
/// On one board without reflections only `+` makes sense; between a board
/// and its mirror image only `−` does.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SignRule {
    PlusOnly,
    MinusOnly,
    Either,
}

/// The least `s` with `s·first = second`, if any.
pub fn puzzles_equivalent(
    first: &PlateSet,
    second: &PlateSet,
    rule: SignRule,
) -> Result<Option<SignedPerm>, PuzzleError> {
    if first.degree != second.degree
        || first.arity != second.arity
        || first.total() != second.total()
    {
        return Ok(None);
    }
    let target = second.occurrences();
    let src = first.occurrences();
    let allowed: &[Sign] = match rule {
        SignRule::PlusOnly => &[Sign::Plus],
        SignRule::MinusOnly => &[Sign::Minus],
        SignRule::Either => &[Sign::Plus, Sign::Minus],
    };
    if first.degree > MAX_SEARCH_DEGREE {
        return Err(PuzzleError::DegreeTooLarge(first.degree));
    }
    for perm in Perm::all(first.degree) {
        if (1..=src.len()).any(|k| target[perm.apply(k) - 1] != src[k - 1]) {
            continue;
        }
        for &sign in allowed {
            let s = SignedPerm::new(sign, perm.clone());
            if first.act(&s) == *second {
                return Ok(Some(s));
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display_round_trip() {
        for text in ["[1234]", "[14,36,25]", "[1 10 3]", "[1:10,3:4,2:2]"] {
            let p: Plate = text.parse().unwrap();
            let again: Plate = p.to_string().parse().unwrap();
            assert_eq!(p, again);
        }
        let p: Plate = "[3412]".parse().unwrap();
        assert_eq!(p.to_string(), "[1234]");
        let q: Plate = "[25,14,36]".parse().unwrap();
        assert_eq!(q.to_string(), "[14,36,25]");
        assert!("[1,2]".parse::<Plate>().is_err());
        assert!("[10]".parse::<Plate>().is_err());
    }

    #[test]
    fn mirror_swaps_pairs() {
        let p: Plate = "[12,34,56]".parse().unwrap();
        let m = act_plate(&SignedPerm::minus(Perm::identity(6)), &p);
        assert_eq!(m.to_string(), "[21,65,43]");
    }

    #[test]
    fn repeat_suffix() {
        let s = PlateSet::parse("[123]x2 [132]").unwrap();
        assert_eq!(s.total(), 3);
        assert_eq!(s.to_string(), "[123]x2 [132]");
    }

    #[test]
    fn group_of_fig19() {
        let s = PlateSet::parse("[1234] [1325] [1453] [1542] [2435]").unwrap();
        let g = plate_group(&s, false).unwrap();
        assert_eq!(g.order(), 20);
    }
}
