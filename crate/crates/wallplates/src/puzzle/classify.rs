use std::collections::{HashMap, HashSet};

use super::{Plate, Puzzle, PuzzleError, Solution, SolveOptions};
use crate::perm::{Perm, Sign, SignedPerm};

/// `G_ε`: pairs `(a, ω)` with `a∘ε = ε∘ω`, the sign of `a` being `det ω`.
#[derive(Clone, Debug)]
pub struct SolutionGroup {
    pub elements: Vec<(SignedPerm, usize)>,
}

impl SolutionGroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// The permutation paired with board symmetry `w`, if `w` belongs.
    pub fn perm_for(&self, w: usize) -> Option<&SignedPerm> {
        self.elements.iter().find(|(_, x)| *x == w).map(|(a, _)| a)
    }
}

/// One `G_P`-orbit of natural solutions.
#[derive(Clone, Debug)]
pub struct EquivalenceClass {
    /// Indices into [`Classification::natural`].
    pub members: Vec<usize>,
    /// `|G_Pε|`, the stabiliser of a member.
    pub stabilizer_order: usize,
    /// `|G_ε|` of a member.
    pub solution_group_order: usize,
}

#[derive(Clone, Debug)]
pub struct Classification {
    pub solutions: Vec<Solution>,
    /// One representative per natural solution, the least labelling of its `Ω⁺`-orbit.
    pub natural: Vec<Solution>,
    pub classes: Vec<EquivalenceClass>,
    pub plate_group_order: usize,
}

impl Classification {
    /// Largest `|G_ε|` over all solutions.
    pub fn max_group_order(&self) -> usize {
        self.classes
            .iter()
            .map(|c| c.solution_group_order)
            .max()
            .unwrap_or(0)
    }

    /// Class sizes, largest first.
    pub fn class_sizes(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.classes.iter().map(|c| c.members.len()).collect();
        v.sort_unstable_by(|a, b| b.cmp(a));
        v
    }
}

impl Puzzle {
    /// `ε∘ω` as a labelling.
    pub fn relabel_by_symmetry(&self, eps: &[u8], w: usize) -> Vec<u8> {
        self.site_map(w).into_iter().map(|s| eps[s]).collect()
    }

    fn site_maps(&self, direct_only: bool) -> Vec<Vec<usize>> {
        let n = if direct_only {
            self.board.direct_count()
        } else {
            self.board.symmetry_group().len()
        };
        (0..n).map(|w| self.site_map(w)).collect()
    }

    pub fn solution_group(&self, sol: &Solution) -> Result<SolutionGroup, PuzzleError> {
        let maps = self.site_maps(false);
        self.solution_group_with(&sol.eps, &maps)
    }

    fn solution_group_with(
        &self,
        eps: &[u8],
        maps: &[Vec<usize>],
    ) -> Result<SolutionGroup, PuzzleError> {
        let n = self.degree();
        let mut present = vec![false; n + 1];
        for &x in eps {
            present[x as usize] = true;
        }
        if let Some(k) = (1..=n).find(|&k| !present[k]) {
            return Err(PuzzleError::AbsentNumber(k));
        }
        let group = self.board.symmetry_group();
        let mut elements = Vec::new();
        'sym: for (w, fwd) in maps.iter().enumerate() {
            let mut img = vec![0usize; n + 1];
            for (s, &t) in fwd.iter().enumerate() {
                let (x, y) = (eps[s] as usize, eps[t] as usize);
                if img[x] == 0 {
                    img[x] = y;
                } else if img[x] != y {
                    continue 'sym;
                }
            }
            let Ok(a) = Perm::from_images(&img[1..]) else {
                continue;
            };
            let sign = if group[w].is_direct() {
                Sign::Plus
            } else {
                Sign::Minus
            };
            elements.push((SignedPerm::new(sign, a), w));
        }
        Ok(SolutionGroup { elements })
    }

    /// Rebuilds the placement behind a labelling, if it is a solution.
    pub fn solution_from_eps(&self, eps: Vec<u8>) -> Option<Solution> {
        let mut remaining: Vec<usize> = self.plates.iter().map(|(_, c)| c).collect();
        let mut placement = Vec::with_capacity(self.board.faces.len());
        for f in 0..self.board.faces.len() {
            let labels: Vec<u8> = self.face_sites(f).iter().map(|&s| eps[s]).collect();
            let plate = Plate::new(self.arity(), labels.clone()).ok()?;
            let t = self.plates.iter().position(|(p, _)| *p == plate)?;
            if remaining[t] == 0 {
                return None;
            }
            remaining[t] -= 1;
            let r = plate
                .distinct_rotations()
                .into_iter()
                .find(|(_, l)| *l == labels)?
                .0;
            placement.push((t, r));
        }
        Some(Solution { eps, placement })
    }

    /// Order of board symmetry `w`.
    pub fn symmetry_order(&self, w: usize) -> usize {
        let mut x = w;
        let mut k = 1;
        while x != 0 {
            x = self.board.compose(w, x);
            k += 1;
        }
        k
    }

    /// Solutions whose group pairs some `a` with `w`.
    pub fn solutions_fixed_by(
        &self,
        w: usize,
        opts: &SolveOptions,
    ) -> Result<Vec<Solution>, PuzzleError> {
        let mut o = opts.clone();
        o.symmetric_under.push(w);
        self.solve(&o)
    }

    /// Closes a solution list under `ε ↦ ε∘ω` for direct `ω`, keeping order.
    pub fn direct_closure(&self, solutions: Vec<Solution>) -> Vec<Solution> {
        let maps = self.site_maps(true);
        let mut seen: HashSet<Vec<u8>> = solutions.iter().map(|s| s.eps.clone()).collect();
        let mut out = solutions.clone();
        for s in &solutions {
            for fwd in &maps {
                let eps: Vec<u8> = fwd.iter().map(|&t| s.eps[t]).collect();
                if seen.insert(eps.clone()) {
                    out.push(
                        self.solution_from_eps(eps)
                            .expect("symmetric image of a solution"),
                    );
                }
            }
        }
        out
    }

    /// Classifies only the solutions invariant under `w` up to relabelling,
    /// closed under the direct symmetries.
    pub fn classify_symmetric(&self, w: usize) -> Result<Classification, PuzzleError> {
        self.classify_solutions(self.solutions_fixed_by(w, &SolveOptions::default())?)
    }

    /// The least `ε∘ω` over direct `ω`, naming the natural solution of `ε`.
    pub fn natural_key(&self, eps: &[u8]) -> Vec<u8> {
        natural_key_with(eps, &self.site_maps(true))
    }

    /// Enumerates all solutions, groups them into natural solutions and those
    /// into equivalence classes under `G_P`.
    pub fn classify(&self) -> Result<Classification, PuzzleError> {
        let solutions = self.solve(&SolveOptions::default())?;
        self.classify_solutions(solutions)
    }

    /// Classifies a solution list, first closing it under the direct symmetries.
    pub fn classify_solutions(
        &self,
        solutions: Vec<Solution>,
    ) -> Result<Classification, PuzzleError> {
        let solutions = self.direct_closure(solutions);
        let all_maps = self.site_maps(false);
        let direct = &all_maps[..self.board.direct_count()];
        let by_eps: HashMap<&[u8], usize> = solutions
            .iter()
            .enumerate()
            .map(|(i, s)| (s.eps.as_slice(), i))
            .collect();
        let mut natural_index: HashMap<Vec<u8>, usize> = HashMap::new();
        let mut natural = Vec::new();
        for s in &solutions {
            let key = natural_key_with(&s.eps, direct);
            if let std::collections::hash_map::Entry::Vacant(slot) = natural_index.entry(key) {
                let rep = by_eps
                    .get(slot.key().as_slice())
                    .expect("orbit of a solution consists of solutions");
                natural.push(solutions[*rep].clone());
                slot.insert(natural.len() - 1);
            }
        }
        let reflection = (self.board.direct_count() < all_maps.len())
            .then(|| &all_maps[self.board.direct_count()]);
        let mut parent: Vec<usize> = (0..natural.len()).collect();
        let mut stab = vec![0usize; natural.len()];
        for (i, nat) in natural.iter().enumerate() {
            for s in self.plate_group().elements() {
                let base: Vec<u8> = match s.sign {
                    Sign::Plus => nat.eps.clone(),
                    Sign::Minus => reflection
                        .expect("signed plate group only on boards with reflections")
                        .iter()
                        .map(|&t| nat.eps[t])
                        .collect(),
                };
                let moved: Vec<u8> = base
                    .iter()
                    .map(|&x| s.perm.apply(x as usize) as u8)
                    .collect();
                let j = natural_index[&natural_key_with(&moved, direct)];
                if j == i {
                    stab[i] += 1;
                }
                union(&mut parent, i, j);
            }
        }
        let mut classes: Vec<EquivalenceClass> = Vec::new();
        let mut class_of: HashMap<usize, usize> = HashMap::new();
        for i in 0..natural.len() {
            let root = find(&mut parent, i);
            match class_of.get(&root) {
                Some(&c) => classes[c].members.push(i),
                None => {
                    class_of.insert(root, classes.len());
                    let g = self.solution_group_with(&natural[i].eps, &all_maps)?;
                    classes.push(EquivalenceClass {
                        members: vec![i],
                        stabilizer_order: stab[i],
                        solution_group_order: g.order(),
                    });
                }
            }
        }
        Ok(Classification {
            solutions,
            natural,
            classes,
            plate_group_order: self.plate_group().order(),
        })
    }
}

fn natural_key_with(eps: &[u8], direct: &[Vec<usize>]) -> Vec<u8> {
    direct
        .iter()
        .map(|fwd| fwd.iter().map(|&t| eps[t]).collect::<Vec<u8>>())
        .min()
        .expect("identity is direct")
}

fn find(parent: &mut [usize], mut i: usize) -> usize {
    while parent[i] != i {
        parent[i] = parent[parent[i]];
        i = parent[i];
    }
    i
}

fn union(parent: &mut [usize], a: usize, b: usize) {
    let (ra, rb) = (find(parent, a), find(parent, b));
    if ra != rb {
        parent[ra.max(rb)] = ra.min(rb);
    }
}
