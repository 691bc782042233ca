//! Wallpaper groups with permutations: each signature is a relation system
//! over named generators, and an assignment maps generators to signed
//! permutations so that every relation holds.
//!
//! Rotation and translation symbols (`a b c d u v`) carry sign +1; mirror and
//! glide symbols (`x y z w`) carry sign −1.

use std::collections::{BTreeMap, HashSet};
use std::fmt;

use thiserror::Error;

use crate::perm::{is_transitive, Perm, PermError, Sign, SignedPerm};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WallpaperError {
    #[error("unknown signature `{0}`")]
    UnknownSignature(String),
    #[error("degree {n} exceeds the bound {bound} of {name}")]
    DegreeOutOfRange {
        name: &'static str,
        n: usize,
        bound: usize,
    },
    #[error("missing value for generator `{0}`")]
    MissingGenerator(char),
    #[error("bad word `{0}`")]
    BadWord(String),
    #[error("table line {line}: {msg}")]
    Table { line: usize, msg: String },
    #[error(transparent)]
    Perm(#[from] PermError),
}

/// A product of symbol powers, evaluated left to right as a composition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Word(Vec<(char, i64)>);

impl Word {
    /// Parses `ca^-2`, `uvav^-1u^-1`; the empty string is the identity.
    pub fn parse(s: &str) -> Result<Word, WallpaperError> {
        let bad = || WallpaperError::BadWord(s.to_string());
        let chars: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
        let mut out = Vec::new();
        let mut i = 0;
        while i < chars.len() {
            let c = chars[i];
            if !c.is_ascii_lowercase() || c == 'i' {
                return Err(bad());
            }
            i += 1;
            let mut e = 1;
            if i < chars.len() && chars[i] == '^' {
                i += 1;
                let start = i;
                if i < chars.len() && chars[i] == '-' {
                    i += 1;
                }
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let t: String = chars[start..i].iter().collect();
                e = t.parse().map_err(|_| bad())?;
            }
            out.push((c, e));
        }
        Ok(Word(out))
    }

    pub fn symbols(&self) -> impl Iterator<Item = char> + '_ {
        self.0.iter().map(|&(c, _)| c)
    }

    pub fn eval(&self, env: &Env, n: usize) -> Option<SignedPerm> {
        let mut acc = SignedPerm::identity(n);
        for &(c, e) in &self.0 {
            acc = acc.mul_unchecked(&env.get(c)?.pow(e));
        }
        Some(acc)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("i");
        }
        for &(c, e) in &self.0 {
            if e == 1 {
                write!(f, "{c}")?;
            } else {
                write!(f, "{c}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Symbol table indexed by lowercase letter.
#[derive(Clone, Debug, Default)]
pub struct Env {
    slots: [Option<SignedPerm>; 26],
}

impl Env {
    pub fn get(&self, c: char) -> Option<&SignedPerm> {
        self.slots[(c as u8 - b'a') as usize].as_ref()
    }

    pub fn set(&mut self, c: char, v: SignedPerm) {
        self.slots[(c as u8 - b'a') as usize] = Some(v);
    }

    fn clear(&mut self, c: char) {
        self.slots[(c as u8 - b'a') as usize] = None;
    }
}

/// Expected orientation of a generator symbol.
pub fn symbol_sign(c: char) -> Sign {
    if matches!(c, 'x' | 'y' | 'z' | 'w') {
        Sign::Minus
    } else {
        Sign::Plus
    }
}

/// Orbit-representative conventions applied before canonicalization.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Normalization {
    None,
    /// `o(c) ≤ o(a)`.
    OrderCAtMostA,
    /// `o(a) ≤ o(b)` and `o(a) ≤ o(c)`.
    OrderAAtMostBC,
}

#[derive(Clone, Debug)]
pub struct Signature {
    pub name: &'static str,
    pub free: Vec<char>,
    pub derived: Vec<(char, Word)>,
    /// Each pair `(l, r)` asserts `l = r`.
    pub relations: Vec<(Word, Word)>,
    /// `o(Ω*)`, the bound on the degree.
    pub bound: usize,
    pub normalization: Normalization,
    /// Generator substitutions that relabel the roles of equivalent centres or axes.
    pub role_maps: Vec<Vec<(char, Word)>>,
}

pub const SIGNATURES: [&str; 16] = [
    "p2", "pm", "pg", "p2mm", "p2mg", "p2gg", "cm", "c2mm", "p4", "p4mm", "p4gm", "p3", "p3m1",
    "p31m", "p6", "p6mm",
];

struct Raw {
    free: &'static str,
    derived: &'static [(char, &'static str)],
    relations: &'static [&'static str],
    bound: usize,
    normalization: Normalization,
    roles: &'static [&'static [(char, &'static str)]],
}

const P4_DERIVED: &[(char, &str)] = &[('b', "ca"), ('d', "ac"), ('u', "ca^-1"), ('v', "c^-1a")];
const P3_DERIVED: &[(char, &str)] = &[('c', "ba^2b"), ('u', "ba^2"), ('v', "b^2a")];

fn raw(name: &str) -> Option<Raw> {
    use Normalization::*;
    let r = match name {
        "p2" => Raw {
            free: "abd",
            derived: &[('c', "dba"), ('u', "ba"), ('v', "da")],
            relations: &["a^2=", "b^2=", "d^2=", "c^2="],
            bound: 2,
            normalization: None,
            roles: &[
                &[('a', "b"), ('b', "dba"), ('d', "a")],
                &[('a', "a"), ('b', "d"), ('d', "b")],
            ],
        },
        "pm" => Raw {
            free: "xy",
            derived: &[('u', "xy"), ('v', "")],
            relations: &["x^2=", "y^2="],
            bound: 2,
            normalization: None,
            roles: &[&[('x', "y"), ('y', "x")]],
        },
        "pg" => Raw {
            free: "xy",
            derived: &[('u', "xy"), ('v', "xx")],
            relations: &["xx=yy"],
            bound: 2,
            normalization: None,
            roles: &[&[('x', "y"), ('y', "x")]],
        },
        "p2mm" => Raw {
            free: "abdx",
            derived: &[
                ('c', "dba"),
                ('u', "ba"),
                ('v', "da"),
                ('y', "ux"),
                ('z', "ax"),
                ('w', "dx"),
            ],
            relations: &[
                "a^2=", "b^2=", "d^2=", "c^2=", "x^2=", "y^2=", "z^2=", "w^2=", "xz=zx", "zy=yz",
                "yw=wy", "wx=xw",
            ],
            bound: 2,
            normalization: None,
            roles: &[
                &[('a', "yz"), ('b', "wzyz"), ('d', "xz"), ('x', "z")],
                &[('a', "zy"), ('b', "xyzy"), ('d', "wy"), ('x', "y")],
            ],
        },
        "p2mg" => Raw {
            free: "abx",
            derived: &[
                ('d', "a"),
                ('c', "b"),
                ('u', "ba"),
                ('v', "a^-1d"),
                ('y', "x"),
                ('z', "ax"),
                ('w', "bx"),
            ],
            relations: &["a^2=", "b^2=", "x^2="],
            bound: 2,
            normalization: None,
            roles: &[&[('a', "b"), ('b', "a"), ('x', "x")]],
        },
        "p2gg" => Raw {
            free: "ax",
            derived: &[
                ('b', "a"),
                ('c', "a"),
                ('d', "a"),
                ('u', "a^-1b"),
                ('v', "a^-1d"),
                ('y', "x"),
                ('z', "ax"),
                ('w', "ax"),
            ],
            relations: &["a^2=", "x^2="],
            bound: 2,
            normalization: None,
            roles: &[&[('a', "a"), ('x', "ax")]],
        },
        "cm" => Raw {
            free: "xy",
            derived: &[('u', "xy"), ('v', "xy")],
            relations: &["x^2=", "xyyx=yy"],
            bound: 2,
            normalization: None,
            roles: &[],
        },
        "c2mm" => Raw {
            free: "abx",
            derived: &[
                ('d', "b"),
                ('c', "a"),
                ('u', "ba"),
                ('v', "ba"),
                ('y', "ax"),
            ],
            relations: &["a^2=", "b^2=", "x^2=", "y^2="],
            bound: 2,
            normalization: None,
            roles: &[&[('a', "a"), ('b', "b"), ('x', "ax")]],
        },
        "p4" => Raw {
            free: "ac",
            derived: P4_DERIVED,
            relations: &["a^4=", "c^4=", "b^2="],
            bound: 4,
            normalization: OrderCAtMostA,
            roles: &[],
        },
        "p4mm" => Raw {
            free: "acx",
            derived: &[
                ('b', "ca"),
                ('d', "ac"),
                ('u', "ca^-1"),
                ('v', "c^-1a"),
                ('y', "a^-1x"),
            ],
            relations: &["a^4=", "c^4=", "b^2=", "x^2=", "xax=a^-1", "xcx=v^-1c^-1v"],
            bound: 4,
            normalization: OrderCAtMostA,
            roles: &[],
        },
        "p4gm" => Raw {
            free: "acx",
            derived: &[
                ('b', "ca"),
                ('d', "ac"),
                ('u', "ca^-1"),
                ('v', "c^-1a"),
                ('y', "cxc^-1"),
            ],
            relations: &["a^4=", "c^4=", "b^2=", "x^2=", "xax=c^-1"],
            bound: 4,
            normalization: OrderCAtMostA,
            roles: &[],
        },
        "p3" => Raw {
            free: "ab",
            derived: P3_DERIVED,
            relations: &["a^3=", "b^3=", "c^3="],
            bound: 3,
            normalization: OrderAAtMostBC,
            roles: &[],
        },
        "p3m1" => Raw {
            free: "abx",
            derived: P3_DERIVED,
            relations: &["a^3=", "b^3=", "c^3=", "x^2=", "xax=a^-1", "xbx=v^-1c^-1v"],
            bound: 3,
            normalization: OrderAAtMostBC,
            roles: &[],
        },
        "p31m" => Raw {
            free: "abx",
            derived: P3_DERIVED,
            relations: &["a^3=", "b^3=", "c^3=", "x^2=", "xax=a^-1", "xbx=b^-1"],
            bound: 3,
            normalization: OrderAAtMostBC,
            roles: &[],
        },
        "p6" => Raw {
            free: "ad",
            derived: &[('c', "ad"), ('b', "ca"), ('u', "ca^-2"), ('v', "c^-1a^2")],
            relations: &["a^6=", "d^6=", "c^3=", "b^2=", "ada=dad"],
            bound: 6,
            normalization: None,
            roles: &[],
        },
        "p6mm" => Raw {
            free: "adx",
            derived: &[
                ('c', "ad"),
                ('b', "ca"),
                ('u', "ca^-2"),
                ('v', "c^-1a^2"),
                ('y', "xa^-1"),
            ],
            relations: &[
                "a^6=", "d^6=", "c^3=", "b^2=", "ada=dad", "x^2=", "xax=a^-1", "xdx=d^-1",
            ],
            bound: 6,
            normalization: None,
            roles: &[],
        },
        _ => return Option::None,
    };
    Some(r)
}

/// The relation system of a named signature.
pub fn relations_for(name: &str) -> Result<Signature, WallpaperError> {
    let idx = SIGNATURES
        .iter()
        .position(|&s| s == name)
        .ok_or_else(|| WallpaperError::UnknownSignature(name.to_string()))?;
    let r = raw(name).expect("listed signature");
    let w = |s: &str| Word::parse(s).expect("static word");
    Ok(Signature {
        name: SIGNATURES[idx],
        free: r.free.chars().collect(),
        derived: r.derived.iter().map(|&(c, s)| (c, w(s))).collect(),
        relations: r
            .relations
            .iter()
            .map(|s| {
                let (l, rt) = s.split_once('=').expect("static relation");
                (w(l), w(rt))
            })
            .collect(),
        bound: r.bound,
        normalization: r.normalization,
        role_maps: r
            .roles
            .iter()
            .map(|m| m.iter().map(|&(c, s)| (c, w(s))).collect())
            .collect(),
    })
}

impl Signature {
    /// Evaluates all derived symbols on top of the free values in `env`.
    pub fn complete(&self, env: &mut Env, n: usize) -> Option<()> {
        for (c, w) in &self.derived {
            let v = w.eval(env, n)?;
            env.set(*c, v);
        }
        Some(())
    }

    pub fn symbols(&self) -> Vec<char> {
        self.free
            .iter()
            .copied()
            .chain(self.derived.iter().map(|d| d.0))
            .collect()
    }

    /// Free symbols each symbol depends on, as a bit mask over `free`.
    fn dependency_masks(&self) -> BTreeMap<char, u32> {
        let mut dep = BTreeMap::new();
        for (i, &c) in self.free.iter().enumerate() {
            dep.insert(c, 1u32 << i);
        }
        for (c, w) in &self.derived {
            let m = w.symbols().fold(0, |m, s| m | dep[&s]);
            dep.insert(*c, m);
        }
        dep
    }

    fn normalized(&self, env: &Env) -> bool {
        let o = |c| env.get(c).map(|v: &SignedPerm| v.order()).unwrap_or(1);
        match self.normalization {
            Normalization::None => true,
            Normalization::OrderCAtMostA => o('c') <= o('a'),
            Normalization::OrderAAtMostBC => o('a') <= o('b') && o('a') <= o('c'),
        }
    }
}

/// Values of the free generators of a signature on `{1..n}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Assignment {
    pub signature: &'static str,
    pub degree: usize,
    pub values: BTreeMap<char, SignedPerm>,
}

impl Assignment {
    /// Builds from unsigned values; signs follow the symbol names.
    pub fn new(
        sig: &Signature,
        degree: usize,
        values: &[(char, Perm)],
    ) -> Result<Self, WallpaperError> {
        let map: BTreeMap<char, SignedPerm> = values
            .iter()
            .map(|(c, p)| (*c, SignedPerm::new(symbol_sign(*c), p.clone())))
            .collect();
        for c in &sig.free {
            if !map.contains_key(c) {
                return Err(WallpaperError::MissingGenerator(*c));
            }
        }
        Ok(Assignment {
            signature: sig.name,
            degree,
            values: map,
        })
    }

    /// Parses `a=(123) d=(142)` style text.
    pub fn parse(sig: &Signature, degree: usize, text: &str) -> Result<Self, WallpaperError> {
        let mut vals = Vec::new();
        for tok in text.split_whitespace() {
            let (c, v) = tok
                .split_once('=')
                .ok_or_else(|| WallpaperError::BadWord(tok.to_string()))?;
            let c = c
                .chars()
                .next()
                .ok_or_else(|| WallpaperError::BadWord(tok.to_string()))?;
            vals.push((c, Perm::parse(v, degree)?));
        }
        Self::new(sig, degree, &vals)
    }

    /// Free and derived values.
    pub fn env(&self, sig: &Signature) -> Env {
        let mut env = Env::default();
        for (c, v) in &self.values {
            env.set(*c, v.clone());
        }
        sig.complete(&mut env, self.degree)
            .expect("free symbols present");
        env
    }

    fn key(&self, sig: &Signature) -> Vec<u32> {
        sig.free
            .iter()
            .flat_map(|c| self.values[c].perm.as_slice().iter().copied())
            .collect()
    }

    pub fn display(&self, sig: &Signature) -> String {
        let env = self.env(sig);
        sig.symbols()
            .iter()
            .map(|&c| format!("{c}={}", env.get(c).unwrap().perm))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub label: String,
    pub ok: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VerifyReport {
    pub checks: Vec<Check>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.ok)
    }

    pub fn failures(&self) -> Vec<&Check> {
        self.checks.iter().filter(|c| !c.ok).collect()
    }

    fn push(&mut self, label: String, ok: bool) {
        self.checks.push(Check { label, ok });
    }
}

/// Checks relations, orientation signs, connectivity, the degree bound and
/// any declared values of derived symbols.
pub fn verify_assignment(
    sig: &Signature,
    a: &Assignment,
    declared: &BTreeMap<char, Perm>,
) -> VerifyReport {
    let mut rep = VerifyReport::default();
    let n = a.degree;
    let env = a.env(sig);
    for (l, r) in &sig.relations {
        let ok = l.eval(&env, n) == r.eval(&env, n);
        rep.push(format!("{l} = {r}"), ok);
    }
    for c in sig.symbols() {
        let v = env.get(c).unwrap();
        rep.push(format!("sign of {c}"), v.sign == symbol_sign(c));
    }
    for (c, p) in declared {
        let ok = env.get(*c).map(|v| &v.perm == p).unwrap_or(false);
        rep.push(format!("{c} = {p}"), ok);
    }
    let perms: Vec<&Perm> = sig
        .free
        .iter()
        .map(|c| &env.get(*c).unwrap().perm)
        .collect();
    rep.push("connected".into(), is_transitive(n, perms.iter().copied()));
    rep.push(format!("n <= {}", sig.bound), n <= sig.bound);
    rep
}

/// All assignments of degree `1..=max_degree`, one canonical representative
/// per class, sorted by degree then canonical key.
///
/// Two assignments are in one class when they differ by a simultaneous
/// relabelling of `{1..n}` or by a role map of the signature. The
/// signature's normalization filter is applied before classing.
pub fn enumerate_assignments(
    sig: &Signature,
    max_degree: usize,
) -> Result<Vec<Assignment>, WallpaperError> {
    if max_degree > sig.bound {
        return Err(WallpaperError::DegreeOutOfRange {
            name: sig.name,
            n: max_degree,
            bound: sig.bound,
        });
    }
    let mut out = Vec::new();
    for n in 1..=max_degree {
        let mut seen = HashSet::new();
        for a in valid_assignments(sig, n) {
            let env = a.env(sig);
            if !sig.normalized(&env) {
                continue;
            }
            let c = canonical(sig, &a);
            if seen.insert(c.key(sig)) {
                out.push(c);
            }
        }
    }
    out.sort_by_cached_key(|x| (x.degree, x.key(sig)));
    Ok(out)
}

/// Every connected assignment of degree `n`, without any reduction.
pub fn valid_assignments(sig: &Signature, n: usize) -> Vec<Assignment> {
    let deps = sig.dependency_masks();
    let rel_masks: Vec<u32> = sig
        .relations
        .iter()
        .map(|(l, r)| l.symbols().chain(r.symbols()).fold(0, |m, s| m | deps[&s]))
        .collect();
    let all = Perm::all(n);
    // candidates per free symbol, filtered by relations on that symbol alone
    let cands: Vec<Vec<SignedPerm>> = sig
        .free
        .iter()
        .enumerate()
        .map(|(i, &c)| {
            all.iter()
                .map(|p| SignedPerm::new(symbol_sign(c), p.clone()))
                .filter(|v| {
                    let mut env = Env::default();
                    env.set(c, v.clone());
                    sig.relations
                        .iter()
                        .zip(&rel_masks)
                        .all(|((l, r), &m)| m != 1 << i || l.eval(&env, n) == r.eval(&env, n))
                })
                .collect()
        })
        .collect();
    let mut out = Vec::new();
    let mut env = Env::default();
    search(sig, n, 0, &cands, &deps, &rel_masks, &mut env, &mut out);
    out
}

#[allow(clippy::too_many_arguments)]
fn search(
    sig: &Signature,
    n: usize,
    k: usize,
    cands: &[Vec<SignedPerm>],
    deps: &BTreeMap<char, u32>,
    rel_masks: &[u32],
    env: &mut Env,
    out: &mut Vec<Assignment>,
) {
    if k == sig.free.len() {
        let perms: Vec<&Perm> = sig
            .free
            .iter()
            .map(|c| &env.get(*c).unwrap().perm)
            .collect();
        if is_transitive(n, perms.iter().copied()) {
            let values = sig
                .free
                .iter()
                .map(|&c| (c, env.get(c).unwrap().clone()))
                .collect();
            out.push(Assignment {
                signature: sig.name,
                degree: n,
                values,
            });
        }
        return;
    }
    let have = (1u32 << (k + 1)) - 1;
    let sym = sig.free[k];
    for v in &cands[k] {
        env.set(sym, v.clone());
        for (c, w) in &sig.derived {
            if deps[c] & !have == 0 {
                let val = w.eval(env, n).expect("dependencies assigned");
                env.set(*c, val);
            }
        }
        let ok = sig.relations.iter().zip(rel_masks).all(|((l, r), &m)| {
            m & !have != 0 || m & (1 << k) == 0 || l.eval(env, n) == r.eval(env, n)
        });
        if ok {
            search(sig, n, k + 1, cands, deps, rel_masks, env, out);
        }
        for (c, _) in &sig.derived {
            if deps[c] & !have == 0 {
                env.clear(*c);
            }
        }
    }
    env.clear(sym);
}

/// The least element of the class of `a` under relabelling and role maps.
pub fn canonical(sig: &Signature, a: &Assignment) -> Assignment {
    let n = a.degree;
    // closure under role maps
    let mut orbit = vec![a.clone()];
    let mut keys = HashSet::from([a.key(sig)]);
    let mut i = 0;
    while i < orbit.len() {
        let env = orbit[i].env(sig);
        for m in &sig.role_maps {
            let values: BTreeMap<char, SignedPerm> = m
                .iter()
                .map(|(c, w)| (*c, w.eval(&env, n).expect("role word")))
                .collect();
            let b = Assignment {
                signature: sig.name,
                degree: n,
                values,
            };
            if keys.insert(b.key(sig)) {
                orbit.push(b);
            }
        }
        i += 1;
    }
    let mut best: Option<(Vec<u32>, Assignment)> = None;
    for g in Perm::all(n) {
        for b in &orbit {
            let values: BTreeMap<char, SignedPerm> = b
                .values
                .iter()
                .map(|(c, v)| {
                    (
                        *c,
                        SignedPerm::new(v.sign, Perm::conjugate(&g, &v.perm).unwrap()),
                    )
                })
                .collect();
            let c = Assignment {
                signature: sig.name,
                degree: n,
                values,
            };
            let k = c.key(sig);
            if best.as_ref().is_none_or(|(bk, _)| k < *bk) {
                best = Some((k, c));
            }
        }
    }
    best.expect("nonempty").1
}

/// A mirror joining a disconnected rotation part into a connected assignment.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReflectionWitness {
    pub x: SignedPerm,
    /// Orbits of the rotation part alone.
    pub components: Vec<Vec<usize>>,
}

/// Finds the least mirror value `x` that completes `rotation` (values of the
/// rotation generators of `sig`) to a connected assignment.
///
/// Returns `None` when no such `x` exists.
pub fn reflection_connection(
    sig: &Signature,
    degree: usize,
    rotation: &[(char, Perm)],
) -> Option<ReflectionWitness> {
    let rot: Vec<&Perm> = rotation.iter().map(|(_, p)| p).collect();
    let components = crate::perm::orbits(degree, rot.iter().copied());
    for x in Perm::all(degree) {
        let mut vals = rotation.to_vec();
        vals.push(('x', x.clone()));
        let Ok(a) = Assignment::new(sig, degree, &vals) else {
            return None;
        };
        if verify_assignment(sig, &a, &BTreeMap::new()).passed() {
            return Some(ReflectionWitness {
                x: SignedPerm::minus(x),
                components,
            });
        }
    }
    None
}

/// One row of a printed table: degree, free values and declared derived values.
#[derive(Clone, Debug)]
pub struct TableRow {
    pub line: usize,
    pub assignment: Assignment,
    pub declared: BTreeMap<char, Perm>,
}

/// Parses a table: a header of column symbols (`x,y` for a shared column)
/// followed by one row per line in cycle notation. The degree of a row is
/// its largest point, or 1. Lines starting with `#` are ignored.
pub fn parse_table(sig: &Signature, text: &str) -> Result<Vec<TableRow>, WallpaperError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (_, header) = lines.next().ok_or(WallpaperError::Table {
        line: 1,
        msg: "empty table".into(),
    })?;
    let columns: Vec<Vec<char>> = header
        .split_whitespace()
        .map(|h| h.split(',').filter_map(|s| s.chars().next()).collect())
        .collect();
    let mut rows = Vec::new();
    for (line, l) in lines {
        let cells: Vec<&str> = l.split_whitespace().collect();
        if cells.len() != columns.len() {
            return Err(WallpaperError::Table {
                line,
                msg: format!("expected {} cells", columns.len()),
            });
        }
        let n = l.chars().filter_map(|c| c.to_digit(10)).max().unwrap_or(1) as usize;
        let mut free = Vec::new();
        let mut declared = BTreeMap::new();
        for (syms, cell) in columns.iter().zip(&cells) {
            let p = Perm::parse(cell, n).map_err(|e| WallpaperError::Table {
                line,
                msg: e.to_string(),
            })?;
            for &c in syms {
                if sig.free.contains(&c) {
                    free.push((c, p.clone()));
                } else {
                    declared.insert(c, p.clone());
                }
            }
        }
        let assignment = Assignment::new(sig, n, &free)?;
        rows.push(TableRow {
            line,
            assignment,
            declared,
        });
    }
    Ok(rows)
}
