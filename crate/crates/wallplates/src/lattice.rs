//! Translation sublattices of `ℤ²`, the permutations the two basis
//! translations induce on the cosets, and equilateral-grid norms.

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

use crate::perm::{gcd, Perm};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LatticeError {
    #[error("degenerate period ({p1},{q1}),({p2},{q2}): determinant is zero")]
    Degenerate { p1: i64, q1: i64, p2: i64, q2: i64 },
}

/// Period vectors `(p1,q1)` and `(p2,q2)` in the `(u,v)` basis.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SublatticeSpec {
    pub p1: i64,
    pub q1: i64,
    pub p2: i64,
    pub q2: i64,
}

/// `(μ_q, n/μ_q, μ_p, n/μ_p)`: cycle count and cycle length of `ζ(u)`, then of `ζ(v)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CycleCounts {
    pub mu_q: u64,
    pub u_cycle_len: u64,
    pub mu_p: u64,
    pub v_cycle_len: u64,
}

impl SublatticeSpec {
    pub fn new(p1: i64, q1: i64, p2: i64, q2: i64) -> Result<Self, LatticeError> {
        let s = SublatticeSpec { p1, q1, p2, q2 };
        if s.det() == 0 {
            return Err(LatticeError::Degenerate { p1, q1, p2, q2 });
        }
        Ok(s)
    }

    pub fn det(&self) -> i64 {
        self.p1 * self.q2 - self.p2 * self.q1
    }

    pub fn index(&self) -> u64 {
        self.det().unsigned_abs()
    }

    pub fn cycle_counts(&self) -> CycleCounts {
        let n = self.index();
        let mu_q = gcd(self.q1.unsigned_abs(), self.q2.unsigned_abs());
        let mu_p = gcd(self.p1.unsigned_abs(), self.p2.unsigned_abs());
        CycleCounts {
            mu_q,
            u_cycle_len: n / mu_q,
            mu_p,
            v_cycle_len: n / mu_p,
        }
    }

    /// Coordinates of `(p,q)` in the period basis, as exact fractions `num/det`.
    fn coeffs(&self, p: i64, q: i64) -> (i64, i64) {
        (self.q2 * p - self.p2 * q, -self.q1 * p + self.p1 * q)
    }

    /// True iff `(p,q)` is a period.
    pub fn contains(&self, p: i64, q: i64) -> bool {
        let d = self.det();
        let (a, b) = self.coeffs(p, q);
        a % d == 0 && b % d == 0
    }

    /// Coset representative of `(p,q)` inside the half-open fundamental parallelogram.
    pub fn reduce(&self, p: i64, q: i64) -> (i64, i64) {
        let (a, b) = self.coeffs(p, q);
        let (fa, fb) = (floor_div(a, self.det()), floor_div(b, self.det()));
        (
            p - fa * self.p1 - fb * self.p2,
            q - fa * self.q1 - fb * self.q2,
        )
    }

    /// The `n` coset representatives in lexicographic order.
    pub fn coset_reps(&self) -> Vec<(i64, i64)> {
        let corners = [
            (0, 0),
            (self.p1, self.q1),
            (self.p2, self.q2),
            (self.p1 + self.p2, self.q1 + self.q2),
        ];
        let (xmin, xmax) = (
            corners.iter().map(|c| c.0).min().unwrap(),
            corners.iter().map(|c| c.0).max().unwrap(),
        );
        let (ymin, ymax) = (
            corners.iter().map(|c| c.1).min().unwrap(),
            corners.iter().map(|c| c.1).max().unwrap(),
        );
        let mut reps = Vec::new();
        for x in xmin..=xmax {
            for y in ymin..=ymax {
                if self.reduce(x, y) == (x, y) {
                    reps.push((x, y));
                }
            }
        }
        debug_assert_eq!(reps.len() as u64, self.index());
        reps
    }

    pub fn build_labeling(&self) -> TranslationLabeling {
        TranslationLabeling::new(*self)
    }
}

impl fmt::Display for SublatticeSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{}),({},{})", self.p1, self.q1, self.p2, self.q2)
    }
}

pub(crate) fn floor_div(a: i64, d: i64) -> i64 {
    if d < 0 {
        (-a).div_euclid(-d)
    } else {
        a.div_euclid(d)
    }
}

pub fn sublattice_index(spec: &SublatticeSpec) -> u64 {
    spec.index()
}

pub fn cycle_counts(spec: &SublatticeSpec) -> CycleCounts {
    spec.cycle_counts()
}

/// The map `ζ̃(p,q) = ζ(pu+qv)(1)` together with `ζ(u)` and `ζ(v)`.
///
/// Label 1 sits at the origin; the other cosets are labelled in
/// lexicographic order of their representatives.
#[derive(Clone, Debug)]
pub struct TranslationLabeling {
    pub spec: SublatticeSpec,
    degree: usize,
    reps: Vec<(i64, i64)>,
    labels: HashMap<(i64, i64), usize>,
    pub zu: Perm,
    pub zv: Perm,
}

impl TranslationLabeling {
    fn new(spec: SublatticeSpec) -> Self {
        let mut reps = spec.coset_reps();
        let origin = reps
            .iter()
            .position(|&r| r == (0, 0))
            .expect("origin is reduced");
        let o = reps.remove(origin);
        reps.insert(0, o);
        let labels: HashMap<_, _> = reps.iter().enumerate().map(|(i, &r)| (r, i + 1)).collect();
        let shift = |dp: i64, dq: i64| {
            let img: Vec<usize> = reps
                .iter()
                .map(|&(p, q)| labels[&spec.reduce(p + dp, q + dq)])
                .collect();
            Perm::from_images(&img).expect("translation permutes cosets")
        };
        let (zu, zv) = (shift(1, 0), shift(0, 1));
        TranslationLabeling {
            spec,
            degree: reps.len(),
            reps,
            labels,
            zu,
            zv,
        }
    }

    /// Widens the symbol range to `degree` with extra fixed symbols.
    pub fn with_degree(mut self, degree: usize) -> Self {
        if degree > self.degree {
            let widen = |p: &Perm| {
                let mut img = p.images();
                img.extend(self.degree + 1..=degree);
                Perm::from_images(&img).unwrap()
            };
            self.zu = widen(&self.zu);
            self.zv = widen(&self.zv);
            self.degree = degree;
        }
        self
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn reps(&self) -> &[(i64, i64)] {
        &self.reps
    }

    /// `ζ̃(p,q)`.
    pub fn label(&self, p: i64, q: i64) -> usize {
        self.labels[&self.spec.reduce(p, q)]
    }

    /// `ζ(pu+qv) = ζ(u)^p ζ(v)^q`.
    pub fn translation(&self, p: i64, q: i64) -> Perm {
        self.zu.pow(p).mul_unchecked(&self.zv.pow(q))
    }

    /// True iff `ζ̃` is onto `{1..n}`.
    pub fn is_connected(&self) -> bool {
        let mut hit = vec![false; self.degree];
        for &(p, q) in &self.reps {
            hit[self.label(p, q) - 1] = true;
        }
        hit.into_iter().all(|h| h)
    }
}

pub fn is_connected(labeling: &TranslationLabeling) -> bool {
    labeling.is_connected()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GridKind {
    /// `g = π/3`, `f₁ = f₂`.
    Triangular,
    /// `g = π/2`, `f₁ = f₂`.
    Square,
    /// `f₁ = −f₂`.
    Rhombic,
}

impl GridKind {
    /// The angle `g` between `u` and `v`, fixed for the equal-angle kinds.
    pub fn angle(self) -> Option<f64> {
        match self {
            GridKind::Triangular => Some(std::f64::consts::FRAC_PI_3),
            GridKind::Square => Some(std::f64::consts::FRAC_PI_2),
            GridKind::Rhombic => None,
        }
    }
}

/// `2 cos g` restricted to values keeping the norm integral.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TwiceCos {
    MinusOne,
    Zero,
    One,
}

impl TwiceCos {
    fn value(self) -> i64 {
        match self {
            TwiceCos::MinusOne => -1,
            TwiceCos::Zero => 0,
            TwiceCos::One => 1,
        }
    }
}

/// A norm value together with the forced second period vector.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GridNorm {
    pub n: i64,
    pub p2: i64,
    pub q2: i64,
}

impl GridNorm {
    pub fn spec(&self, p1: i64, q1: i64) -> SublatticeSpec {
        SublatticeSpec {
            p1,
            q1,
            p2: self.p2,
            q2: self.q2,
        }
    }
}

/// `n = p² + q² + 2pq cos g`, `q₂ = −p`, `p₂ = q + 2p cos g`.
pub fn equal_angle_norm(twice_cos: TwiceCos, p: i64, q: i64) -> GridNorm {
    let c = twice_cos.value();
    GridNorm {
        n: p * p + q * q + c * p * q,
        p2: q + c * p,
        q2: -p,
    }
}

pub fn grid_norm(kind: GridKind, p: i64, q: i64) -> GridNorm {
    match kind {
        GridKind::Triangular => equal_angle_norm(TwiceCos::One, p, q),
        GridKind::Square => equal_angle_norm(TwiceCos::Zero, p, q),
        GridKind::Rhombic => GridNorm {
            n: (p * p - q * q).abs(),
            p2: q,
            q2: p,
        },
    }
}

/// Rows `q = 0..=max`, columns `p = 0..=max`.
pub fn norm_table(kind: GridKind, max: i64) -> Vec<Vec<i64>> {
    (0..=max)
        .map(|q| (0..=max).map(|p| grid_norm(kind, p, q).n).collect())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn index_and_cycles() {
        assert_eq!(SublatticeSpec::new(-3, 1, 1, 3).unwrap().index(), 10);
        assert_eq!(SublatticeSpec::new(-2, 3, 5, 2).unwrap().index(), 19);
        let c = SublatticeSpec::new(-2, 2, 2, 2).unwrap().cycle_counts();
        assert_eq!((c.mu_q, c.u_cycle_len, c.mu_p, c.v_cycle_len), (2, 4, 2, 4));
        assert!(SublatticeSpec::new(1, 2, 2, 4).is_err());
    }

    #[test]
    fn reduce_is_idempotent_for_negative_det() {
        let s = SublatticeSpec::new(1, 3, 3, -1).unwrap();
        assert!(s.det() < 0);
        for x in -7..7 {
            for y in -7..7 {
                let r = s.reduce(x, y);
                assert_eq!(s.reduce(r.0, r.1), r);
                assert!(s.contains(x - r.0, y - r.1));
            }
        }
        assert_eq!(s.coset_reps().len(), 10);
    }

    #[test]
    fn labeling_cycles() {
        let l = SublatticeSpec::new(-2, 2, 2, 2).unwrap().build_labeling();
        assert_eq!(l.zu.cycle_type(), vec![4, 4]);
        assert_eq!(l.label(0, 0), 1);
        assert!(l.is_connected());
        assert!(!l.clone().with_degree(9).is_connected());
        let unit = SublatticeSpec::new(1, 0, 0, 1).unwrap().build_labeling();
        assert!(unit.zu.is_identity() && unit.zv.is_identity() && unit.degree() == 1);
    }

    #[test]
    fn norms() {
        assert_eq!(grid_norm(GridKind::Triangular, 2, 1).n, 7);
        assert_eq!(grid_norm(GridKind::Square, 3, 2).n, 13);
        let r = grid_norm(GridKind::Rhombic, -3, 1);
        assert_eq!((r.n, r.p2, r.q2), (8, 1, -3));
        assert_eq!(r.spec(-3, 1).index(), 8);
    }
}
