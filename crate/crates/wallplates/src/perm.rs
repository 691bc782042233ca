//! Permutations of `{1..n}`, signed permutations and finitely generated groups.
//!
//! Products follow the functional convention: `a.compose(&b)` applies `b`
//! first, so `(a ∘ b)(k) = a(b(k))`. Points are 1-indexed at the API surface.

use std::collections::{HashSet, VecDeque};
use std::fmt;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PermError {
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("point {point} repeated in `{text}`")]
    RepeatedPoint { point: usize, text: String },
    #[error("point {point} exceeds degree {degree}")]
    PointOutOfRange { point: usize, degree: usize },
    #[error("malformed cycle notation `{0}`")]
    Malformed(String),
    #[error("image list is not a bijection of 1..={0}")]
    NotBijection(usize),
    #[error("expected an unsigned permutation, got `{0}`")]
    UnexpectedSign(String),
    #[error("group closure exceeded {0} elements")]
    CapExceeded(usize),
    #[error("empty generator list without a degree")]
    NoGenerators,
}

/// A bijection of `{1..n}`; stored 0-indexed.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    img: Vec<u32>,
}

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm {
            img: (0..n as u32).collect(),
        }
    }

    /// Builds from 1-indexed images: `images[k-1] = σ(k)`.
    pub fn from_images(images: &[usize]) -> Result<Self, PermError> {
        let n = images.len();
        let mut seen = vec![false; n];
        let mut img = Vec::with_capacity(n);
        for &v in images {
            if v == 0 || v > n || seen[v - 1] {
                return Err(PermError::NotBijection(n));
            }
            seen[v - 1] = true;
            img.push((v - 1) as u32);
        }
        Ok(Perm { img })
    }

    /// Builds from 0-indexed images without validation beyond a debug check.
    pub(crate) fn from_zero_based(img: Vec<u32>) -> Self {
        debug_assert!({
            let mut s = img.clone();
            s.sort_unstable();
            s.iter().enumerate().all(|(i, &v)| v as usize == i)
        });
        Perm { img }
    }

    pub fn degree(&self) -> usize {
        self.img.len()
    }

    /// Image of the 1-indexed point `k`.
    pub fn apply(&self, k: usize) -> usize {
        self.img[k - 1] as usize + 1
    }

    /// 0-indexed image table.
    pub fn as_slice(&self) -> &[u32] {
        &self.img
    }

    /// 1-indexed image list.
    pub fn images(&self) -> Vec<usize> {
        self.img.iter().map(|&v| v as usize + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.img.iter().enumerate().all(|(i, &v)| v as usize == i)
    }

    pub fn compose(&self, b: &Perm) -> Result<Perm, PermError> {
        if self.degree() != b.degree() {
            return Err(PermError::DegreeMismatch(self.degree(), b.degree()));
        }
        Ok(self.mul_unchecked(b))
    }

    pub(crate) fn mul_unchecked(&self, b: &Perm) -> Perm {
        Perm {
            img: b.img.iter().map(|&j| self.img[j as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0u32; self.degree()];
        for (i, &v) in self.img.iter().enumerate() {
            inv[v as usize] = i as u32;
        }
        Perm { img: inv }
    }

    /// `a ∘ b ∘ a⁻¹`, i.e. `b` with every point renamed through `a`.
    pub fn conjugate(a: &Perm, b: &Perm) -> Result<Perm, PermError> {
        if a.degree() != b.degree() {
            return Err(PermError::DegreeMismatch(a.degree(), b.degree()));
        }
        let mut img = vec![0u32; a.degree()];
        for (i, &v) in b.img.iter().enumerate() {
            img[a.img[i] as usize] = a.img[v as usize];
        }
        Ok(Perm { img })
    }

    pub fn pow(&self, e: i64) -> Perm {
        let base = if e < 0 { self.inverse() } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = Perm::identity(self.degree());
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_unchecked(&sq);
            }
            sq = sq.mul_unchecked(&sq);
            e >>= 1;
        }
        acc
    }

    /// Disjoint cycles of length ≥ 2, each starting at its least point, 1-indexed.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut cyc = Vec::new();
            let mut k = start;
            while !seen[k] {
                seen[k] = true;
                cyc.push(k + 1);
                k = self.img[k] as usize;
            }
            if cyc.len() > 1 {
                out.push(cyc);
            }
        }
        out
    }

    /// Sorted cycle lengths, fixed points included.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            let mut len = 0;
            let mut k = start;
            while !seen[k] {
                seen[k] = true;
                len += 1;
                k = self.img[k] as usize;
            }
            if len > 0 {
                out.push(len);
            }
        }
        out.sort_unstable();
        out
    }

    pub fn order(&self) -> u64 {
        self.cycle_type()
            .into_iter()
            .fold(1u64, |acc, l| lcm(acc, l as u64))
    }

    /// Parses unsigned cycle notation; see [`SignedPerm::parse`].
    pub fn parse(text: &str, degree: usize) -> Result<Perm, PermError> {
        let s = SignedPerm::parse(text, degree)?;
        if s.sign != Sign::Plus {
            return Err(PermError::UnexpectedSign(text.to_string()));
        }
        Ok(s.perm)
    }

    /// All permutations of degree `n` in lexicographic image order.
    pub fn all(n: usize) -> Vec<Perm> {
        let mut out = Vec::new();
        let mut cur: Vec<u32> = (0..n as u32).collect();
        loop {
            out.push(Perm { img: cur.clone() });
            // next lexicographic permutation
            let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) else {
                break;
            };
            let j = (i..n).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
            cur.swap(i - 1, j);
            cur[i..].reverse();
        }
        out
    }
}

pub(crate) fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub(crate) fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("i");
        }
        let sep = if self.degree() > 9 { "," } else { "" };
        for c in cycles {
            let body: Vec<String> = c.iter().map(|p| p.to_string()).collect();
            write!(f, "({})", body.join(sep))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn from_i32(v: i32) -> Sign {
        if v < 0 {
            Sign::Minus
        } else {
            Sign::Plus
        }
    }

    pub fn value(self) -> i32 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

impl std::ops::Mul for Sign {
    type Output = Sign;
    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

/// An element `(δ, a)` of `{−1, 1} × S_n`.
///
/// Ordering is sign-major (`+` first), then lexicographic on images.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedPerm {
    pub sign: Sign,
    pub perm: Perm,
}

impl SignedPerm {
    pub fn new(sign: Sign, perm: Perm) -> Self {
        SignedPerm { sign, perm }
    }

    pub fn plus(perm: Perm) -> Self {
        SignedPerm {
            sign: Sign::Plus,
            perm,
        }
    }

    pub fn minus(perm: Perm) -> Self {
        SignedPerm {
            sign: Sign::Minus,
            perm,
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::plus(Perm::identity(n))
    }

    pub fn degree(&self) -> usize {
        self.perm.degree()
    }

    pub fn is_identity(&self) -> bool {
        self.sign == Sign::Plus && self.perm.is_identity()
    }

    pub fn compose(&self, b: &SignedPerm) -> Result<SignedPerm, PermError> {
        Ok(SignedPerm {
            sign: self.sign * b.sign,
            perm: self.perm.compose(&b.perm)?,
        })
    }

    pub(crate) fn mul_unchecked(&self, b: &SignedPerm) -> SignedPerm {
        SignedPerm {
            sign: self.sign * b.sign,
            perm: self.perm.mul_unchecked(&b.perm),
        }
    }

    pub fn inverse(&self) -> SignedPerm {
        SignedPerm {
            sign: self.sign,
            perm: self.perm.inverse(),
        }
    }

    pub fn pow(&self, e: i64) -> SignedPerm {
        let sign = if e.rem_euclid(2) == 1 {
            self.sign
        } else {
            Sign::Plus
        };
        SignedPerm {
            sign,
            perm: self.perm.pow(e),
        }
    }

    pub fn order(&self) -> u64 {
        let o = self.perm.order();
        if self.sign == Sign::Minus && o % 2 == 1 {
            2 * o
        } else {
            o
        }
    }

    /// Parses cycle notation such as `(12)(34)`, `(1,10)(2,3)`, `i`, `()` or `(13)(67)-`.
    ///
    /// Whitespace is ignored. Inside a cycle, points are single digits unless
    /// commas are present, in which case commas separate multi-digit points.
    /// A trailing `-` sets the sign to −1. Unmentioned points are fixed.
    pub fn parse(text: &str, degree: usize) -> Result<SignedPerm, PermError> {
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let (body, sign) = match compact.strip_suffix('-') {
            Some(b) => (b, Sign::Minus),
            None => (compact.as_str(), Sign::Plus),
        };
        let malformed = || PermError::Malformed(text.to_string());
        let mut img: Vec<u32> = (0..degree as u32).collect();
        if body.is_empty() || body == "i" {
            return Ok(SignedPerm {
                sign,
                perm: Perm { img },
            });
        }
        let mut used = vec![false; degree];
        let mut rest = body;
        while !rest.is_empty() {
            let inner_end = rest.find(')').ok_or_else(malformed)?;
            if !rest.starts_with('(') {
                return Err(malformed());
            }
            let inner = &rest[1..inner_end];
            if inner.contains('(') {
                return Err(malformed());
            }
            rest = &rest[inner_end + 1..];
            let pts: Vec<usize> = if inner.contains(',') {
                inner
                    .split(',')
                    .map(|t| t.parse::<usize>().map_err(|_| malformed()))
                    .collect::<Result<_, _>>()?
            } else {
                inner
                    .chars()
                    .map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(malformed))
                    .collect::<Result<_, _>>()?
            };
            for &p in &pts {
                if p == 0 || p > degree {
                    return Err(PermError::PointOutOfRange { point: p, degree });
                }
                if used[p - 1] {
                    return Err(PermError::RepeatedPoint {
                        point: p,
                        text: text.to_string(),
                    });
                }
                used[p - 1] = true;
            }
            for (j, &p) in pts.iter().enumerate() {
                img[p - 1] = (pts[(j + 1) % pts.len()] - 1) as u32;
            }
        }
        Ok(SignedPerm {
            sign,
            perm: Perm { img },
        })
    }
}

impl fmt::Display for SignedPerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.perm)?;
        if self.sign == Sign::Minus {
            f.write_str("-")?;
        }
        Ok(())
    }
}

impl fmt::Debug for SignedPerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Parses signed cycle notation; see [`SignedPerm::parse`].
pub fn parse_cycles(text: &str, degree: usize) -> Result<SignedPerm, PermError> {
    SignedPerm::parse(text, degree)
}

pub const DEFAULT_CAP: usize = 1_000_000;

/// A finite group of signed permutations, stored as a sorted element list.
#[derive(Clone, Debug)]
pub struct PermGroup {
    degree: usize,
    signed: bool,
    generators: Vec<SignedPerm>,
    elements: Vec<SignedPerm>,
    lookup: HashSet<SignedPerm>,
}

impl PermGroup {
    /// Closure of `gens` with the default element cap.
    pub fn generate(degree: usize, gens: &[SignedPerm]) -> Result<PermGroup, PermError> {
        Self::generate_with_cap(degree, gens, DEFAULT_CAP)
    }

    pub fn generate_unsigned(degree: usize, gens: &[Perm]) -> Result<PermGroup, PermError> {
        let g: Vec<SignedPerm> = gens.iter().cloned().map(SignedPerm::plus).collect();
        Self::generate(degree, &g)
    }

    pub fn generate_with_cap(
        degree: usize,
        gens: &[SignedPerm],
        cap: usize,
    ) -> Result<PermGroup, PermError> {
        for g in gens {
            if g.degree() != degree {
                return Err(PermError::DegreeMismatch(degree, g.degree()));
            }
        }
        let id = SignedPerm::identity(degree);
        let mut lookup = HashSet::from([id.clone()]);
        let mut queue = VecDeque::from([id]);
        while let Some(x) = queue.pop_front() {
            for g in gens {
                let y = g.mul_unchecked(&x);
                if !lookup.contains(&y) {
                    if lookup.len() >= cap {
                        return Err(PermError::CapExceeded(cap));
                    }
                    lookup.insert(y.clone());
                    queue.push_back(y);
                }
            }
        }
        Ok(Self::from_set(degree, gens.to_vec(), lookup))
    }

    /// Wraps a set already known to be a group.
    pub(crate) fn from_set(
        degree: usize,
        generators: Vec<SignedPerm>,
        lookup: HashSet<SignedPerm>,
    ) -> PermGroup {
        let mut elements: Vec<SignedPerm> = lookup.iter().cloned().collect();
        elements.sort();
        let signed = elements.iter().any(|e| e.sign == Sign::Minus);
        PermGroup {
            degree,
            signed,
            generators,
            elements,
            lookup,
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// True iff some element has sign −1.
    pub fn is_signed(&self) -> bool {
        self.signed
    }

    pub fn generators(&self) -> &[SignedPerm] {
        &self.generators
    }

    pub fn elements(&self) -> &[SignedPerm] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, s: &SignedPerm) -> bool {
        self.lookup.contains(s)
    }

    /// `o(G)`: the largest element order.
    pub fn max_element_order(&self) -> u64 {
        self.elements.iter().map(|e| e.order()).max().unwrap_or(1)
    }

    /// Orbits of the underlying permutations on `{1..n}`.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        orbits(self.degree, self.generators.iter().map(|g| &g.perm))
    }

    pub fn is_transitive(&self) -> bool {
        self.orbits().len() <= 1
    }
}

/// Orbits of the group generated by `gens` on `{1..n}`, 1-indexed and sorted.
pub fn orbits<'a>(n: usize, gens: impl Iterator<Item = &'a Perm> + Clone) -> Vec<Vec<usize>> {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        let mut y = x;
        while p[y] != r {
            let nx = p[y];
            p[y] = r;
            y = nx;
        }
        r
    }
    for g in gens {
        for (i, &v) in g.img.iter().enumerate() {
            let (a, b) = (find(&mut parent, i), find(&mut parent, v as usize));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    let mut out: Vec<Vec<usize>> = Vec::new();
    let mut slot = vec![usize::MAX; n];
    for i in 0..n {
        let r = find(&mut parent, i);
        if slot[r] == usize::MAX {
            slot[r] = out.len();
            out.push(Vec::new());
        }
        out[slot[r]].push(i + 1);
    }
    out
}

/// True iff the permutations act transitively on `{1..n}`.
pub fn is_transitive<'a>(n: usize, gens: impl Iterator<Item = &'a Perm> + Clone) -> bool {
    orbits(n, gens).len() <= 1
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str, n: usize) -> Perm {
        Perm::parse(s, n).unwrap()
    }

    #[test]
    fn composition_applies_right_factor_first() {
        let c = p("(123456)", 6).compose(&p("(163254)", 6)).unwrap();
        assert_eq!(c, p("(264)", 6));
        let b = p("(1325)", 5).compose(&p("(1234)", 5)).unwrap();
        assert_eq!(b, p("(15)(34)", 5));
        let a = p("(1234)", 4);
        let u = p("(12)(34)", 4).compose(&a.inverse()).unwrap();
        assert_eq!(u, p("(13)", 4));
    }

    #[test]
    fn conjugation_renames_points() {
        let a = p("(1234)", 4);
        assert_eq!(Perm::conjugate(&a, &p("(13)", 4)).unwrap(), p("(24)", 4));
        assert_eq!(
            Perm::conjugate(&a, &p("(12)(34)", 4)).unwrap(),
            p("(14)(23)", 4)
        );
    }

    #[test]
    fn inverse_and_order() {
        assert_eq!(p("(1234)", 4).inverse(), p("(1432)", 4));
        assert_eq!(p("(12)(345)", 5).order(), 6);
        assert_eq!(Perm::identity(3).order(), 1);
        assert_eq!(p("(123456)", 6).order(), 6);
    }

    #[test]
    fn parse_and_format() {
        let s = parse_cycles("(13)(67)-", 8).unwrap();
        assert_eq!(s.sign, Sign::Minus);
        assert_eq!(s.to_string(), "(13)(67)-");
        assert!(parse_cycles("()", 5).unwrap().is_identity());
        assert!(parse_cycles(" i ", 5).unwrap().is_identity());
        assert_eq!(
            parse_cycles("(1,10)(2,3)", 10).unwrap().to_string(),
            "(1,10)(2,3)"
        );
        assert!(matches!(
            parse_cycles("(121)", 3),
            Err(PermError::RepeatedPoint { .. })
        ));
        assert!(matches!(
            parse_cycles("(14)", 3),
            Err(PermError::PointOutOfRange { .. })
        ));
        assert!(matches!(
            parse_cycles("(12", 3),
            Err(PermError::Malformed(_))
        ));
        assert!(matches!(
            parse_cycles("12)", 3),
            Err(PermError::Malformed(_))
        ));
    }

    #[test]
    fn degree_mismatch_is_an_error() {
        assert!(p("(12)", 2).compose(&p("(12)", 3)).is_err());
    }

    #[test]
    fn small_groups() {
        let g = PermGroup::generate_unsigned(2, &[p("(12)", 2)]).unwrap();
        assert_eq!(g.order(), 2);
        let g = PermGroup::generate_unsigned(5, &[p("(14235)", 5), p("(13452)", 5)]).unwrap();
        assert_eq!(g.order(), 5);
        let s4 = PermGroup::generate_unsigned(4, &[p("(1234)", 4), p("(12)", 4)]).unwrap();
        assert_eq!(s4.order(), 24);
        assert_eq!(s4.elements()[0], SignedPerm::identity(4));
        assert!(matches!(
            PermGroup::generate_with_cap(4, &[SignedPerm::plus(p("(1234)", 4))], 3),
            Err(PermError::CapExceeded(3))
        ));
    }

    #[test]
    fn all_enumerates_symmetric_group() {
        let all = Perm::all(4);
        assert_eq!(all.len(), 24);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
    }
}
