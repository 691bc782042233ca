use super::{Plate, Puzzle, PuzzleError};
use crate::perm::Perm;

/// A complete placement, stored as the edge labelling `ε` over sites.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Solution {
    pub eps: Vec<u8>,
    /// Per face: index of the plate in the set's canonical order, and the
    /// plate side that lands on the face's side 0.
    pub placement: Vec<(usize, usize)>,
}

#[derive(Clone, Debug, Default)]
pub struct SolveOptions {
    /// Force a plate onto a face, read from the face's side 0 in the plate's
    /// canonical order.
    pub pin: Option<(usize, Plate)>,
    /// Keep only solutions with `a∘ε = ε∘ω` for every listed `(a, ω)`.
    pub require: Vec<(Perm, usize)>,
    /// Keep only solutions with `a∘ε = ε∘ω` for some `a`, for every listed `ω`.
    pub symmetric_under: Vec<usize>,
    /// Stop after this many solutions.
    pub limit: Option<usize>,
}

struct Kind {
    sides: usize,
    /// `(r, flat labels read from side r)` for each distinct rotation.
    rotations: Vec<(usize, Vec<u8>)>,
}

/// A required pair `(a, ω)`; `a` may be only partly known, 0 meaning unbound.
struct Link {
    img: Vec<u8>,
    pre: Vec<u8>,
    fwd: Vec<usize>,
    back: Vec<usize>,
}

enum Undo {
    Site(usize),
    Bind(usize, u8, u8),
}

struct Search<'a> {
    puzzle: &'a Puzzle,
    kinds: Vec<Kind>,
    remaining: Vec<usize>,
    eps: Vec<u8>,
    placement: Vec<Option<(usize, usize)>>,
    require: Vec<Link>,
    limit: usize,
    out: Vec<Solution>,
}

impl Puzzle {
    /// Every solution, in search order; each labelling occurs once.
    pub fn solve(&self, opts: &SolveOptions) -> Result<Vec<Solution>, PuzzleError> {
        let kinds: Vec<Kind> = self
            .plates
            .iter()
            .map(|(p, _)| Kind {
                sides: p.sides(),
                rotations: p.distinct_rotations(),
            })
            .collect();
        let n = self.degree();
        let link = |a: Option<&Perm>, w: usize| {
            let fwd = self.site_map(w);
            let mut back = vec![0; fwd.len()];
            for (s, &t) in fwd.iter().enumerate() {
                back[t] = s;
            }
            let mut img = vec![0u8; n + 1];
            let mut pre = vec![0u8; n + 1];
            if let Some(a) = a {
                for k in 1..=n {
                    img[k] = a.apply(k) as u8;
                    pre[a.apply(k)] = k as u8;
                }
            }
            Link {
                img,
                pre,
                fwd,
                back,
            }
        };
        let mut require = Vec::new();
        for (a, w) in &opts.require {
            if a.degree() != n {
                return Err(crate::perm::PermError::DegreeMismatch(n, a.degree()).into());
            }
            require.push(link(Some(a), *w));
        }
        for &w in &opts.symmetric_under {
            require.push(link(None, w));
        }
        let mut search = Search {
            puzzle: self,
            kinds,
            remaining: self.plates.iter().map(|(_, c)| c).collect(),
            eps: vec![0; self.site_count()],
            placement: vec![None; self.board.faces.len()],
            require,
            limit: opts.limit.unwrap_or(usize::MAX),
            out: Vec::new(),
        };
        match &opts.pin {
            None => search.run(),
            Some((face, plate)) => {
                let t = self
                    .plates
                    .iter()
                    .position(|(p, _)| p == plate)
                    .ok_or_else(|| PuzzleError::BadPlate(plate.to_string()))?;
                let f = self.board.faces.get(*face).ok_or(PuzzleError::PinShape {
                    face: *face,
                    sides: plate.sides(),
                })?;
                if f.sides.len() != plate.sides() {
                    return Err(PuzzleError::PinShape {
                        face: *face,
                        sides: plate.sides(),
                    });
                }
                if let Some(undo) = search.place(*face, t, 0) {
                    search.run();
                    search.unplace(*face, t, undo);
                }
            }
        }
        Ok(search.out)
    }
}

impl Search<'_> {
    fn fits_loosely(&self, f: usize, labels: &[u8]) -> bool {
        self.puzzle
            .face_sites(f)
            .iter()
            .zip(labels)
            .all(|(&s, &x)| self.eps[s] == 0 || self.eps[s] == x)
    }

    /// Writes plate `t` in its `ri`-th rotation onto face `f` together with
    /// everything the required pairs force; returns the undo log, or `None`
    /// after rolling back a conflict.
    fn place(&mut self, f: usize, t: usize, ri: usize) -> Option<Vec<Undo>> {
        let sites = self.puzzle.face_sites(f);
        let (r, labels) = &self.kinds[t].rotations[ri];
        let r = *r;
        let mut log = Vec::new();
        let mut pending: Vec<(usize, u8)> =
            sites.iter().copied().zip(labels.iter().copied()).collect();
        if self.propagate(&mut pending, &mut log) {
            self.remaining[t] -= 1;
            self.placement[f] = Some((t, r));
            Some(log)
        } else {
            self.rollback(log);
            None
        }
    }

    fn propagate(&mut self, pending: &mut Vec<(usize, u8)>, log: &mut Vec<Undo>) -> bool {
        while let Some((s, x)) = pending.pop() {
            if self.eps[s] == x {
                continue;
            }
            if self.eps[s] != 0 {
                return false;
            }
            self.eps[s] = x;
            log.push(Undo::Site(s));
            for i in 0..self.require.len() {
                let link = &self.require[i];
                let (t, p) = (link.fwd[s], link.back[s]);
                let mut binds = Vec::new();
                match (link.img[x as usize], self.eps[t]) {
                    (0, 0) => {}
                    (0, y) => binds.push((x, y)),
                    (y, _) => pending.push((t, y)),
                }
                let z = self.eps[p];
                if z != 0 {
                    match link.img[z as usize] {
                        0 => binds.push((z, x)),
                        y if y != x => return false,
                        _ => {}
                    }
                }
                for (x, y) in binds {
                    if !self.bind(i, x, y, pending, log) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Records `a(x) = y` for link `i` and queues what it forces.
    fn bind(
        &mut self,
        i: usize,
        x: u8,
        y: u8,
        pending: &mut Vec<(usize, u8)>,
        log: &mut Vec<Undo>,
    ) -> bool {
        let link = &mut self.require[i];
        if link.img[x as usize] != 0 {
            return link.img[x as usize] == y;
        }
        if link.pre[y as usize] != 0 {
            return false;
        }
        link.img[x as usize] = y;
        link.pre[y as usize] = x;
        log.push(Undo::Bind(i, x, y));
        for (s, &l) in self.eps.iter().enumerate() {
            if l == x {
                pending.push((link.fwd[s], y));
            } else if l == y {
                pending.push((link.back[s], x));
            }
        }
        true
    }

    fn rollback(&mut self, log: Vec<Undo>) {
        for u in log.into_iter().rev() {
            match u {
                Undo::Site(s) => self.eps[s] = 0,
                Undo::Bind(i, x, y) => {
                    self.require[i].img[x as usize] = 0;
                    self.require[i].pre[y as usize] = 0;
                }
            }
        }
    }

    fn unplace(&mut self, f: usize, t: usize, log: Vec<Undo>) {
        self.rollback(log);
        self.remaining[t] += 1;
        self.placement[f] = None;
    }

    fn options(&self, f: usize) -> impl Iterator<Item = (usize, usize)> + '_ {
        let k = self.puzzle.board.faces[f].sides.len();
        self.kinds
            .iter()
            .enumerate()
            .filter(move |(t, kind)| kind.sides == k && self.remaining[*t] > 0)
            .flat_map(move |(t, kind)| {
                kind.rotations
                    .iter()
                    .enumerate()
                    .filter(move |(_, (_, l))| self.fits_loosely(f, l))
                    .map(move |(ri, _)| (t, ri))
            })
    }

    fn run(&mut self) {
        if self.out.len() >= self.limit {
            return;
        }
        let mut best: Option<(usize, usize)> = None;
        for f in (0..self.placement.len()).filter(|&f| self.placement[f].is_none()) {
            let n = self
                .options(f)
                .take(best.map_or(usize::MAX, |b| b.0))
                .count();
            if best.is_none_or(|b| n < b.0) {
                best = Some((n, f));
                if n == 0 {
                    return;
                }
            }
        }
        let Some((_, f)) = best else {
            self.out.push(Solution {
                eps: self.eps.clone(),
                placement: self
                    .placement
                    .iter()
                    .map(|p| p.expect("all faces placed"))
                    .collect(),
            });
            return;
        };
        let opts: Vec<(usize, usize)> = self.options(f).collect();
        for (t, ri) in opts {
            if let Some(undo) = self.place(f, t, ri) {
                self.run();
                self.unplace(f, t, undo);
                if self.out.len() >= self.limit {
                    return;
                }
            }
        }
    }
}
