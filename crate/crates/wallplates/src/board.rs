//! Toroidal boards: a plane tiling modulo a period sublattice, as an indexed
//! face/edge/vertex complex together with its finite symmetry group.
//!
//! Geometry is exact. Points are integer pairs in twelfths of the lattice
//! basis `(u, v)`. Square tilings use `u = (1,0)`, `v = (0,1)`; the other
//! tilings use the hexagonal basis `u = (1,0)`, `v = (1/2, √3/2)`. The origin
//! is a centre of maximal rotation order in every tiling, so the point group
//! about the origin together with the lattice generates the whole tiling group.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::lattice::{floor_div, LatticeError, SublatticeSpec};
use crate::perm::Perm;

/// Sub-unit resolution of board coordinates.
pub const SCALE: i64 = 12;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BoardError {
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error("unknown tiling `{0}`")]
    UnknownTiling(String),
    #[error("{kind} index {index} out of range")]
    ForeignTarget { kind: &'static str, index: usize },
}

/// A point in twelfths of the lattice basis.
pub type Pt = (i64, i64);

/// A 2×2 integer matrix acting on lattice coordinates, row-major.
pub type Mat = [[i64; 2]; 2];

const IDENTITY: Mat = [[1, 0], [0, 1]];

fn mat_mul(a: &Mat, b: &Mat) -> Mat {
    let mut m = [[0; 2]; 2];
    for (i, row) in m.iter_mut().enumerate() {
        for (j, cell) in row.iter_mut().enumerate() {
            *cell = a[i][0] * b[0][j] + a[i][1] * b[1][j];
        }
    }
    m
}

fn mat_vec(a: &Mat, p: Pt) -> Pt {
    (a[0][0] * p.0 + a[0][1] * p.1, a[1][0] * p.0 + a[1][1] * p.1)
}

fn det(a: &Mat) -> i64 {
    a[0][0] * a[1][1] - a[0][1] * a[1][0]
}

/// Smallest `k ≥ 1` with `ηᵏ = 1`.
fn rotation_order(eta: &Mat) -> usize {
    let mut m = *eta;
    let mut k = 1;
    while m != [[1, 0], [0, 1]] {
        m = mat_mul(eta, &m);
        k += 1;
    }
    k
}

fn add(p: Pt, q: Pt) -> Pt {
    (p.0 + q.0, p.1 + q.1)
}

fn sub(p: Pt, q: Pt) -> Pt {
    (p.0 - q.0, p.1 - q.1)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Tiling {
    Square,
    Triangular,
    /// Regular hexagons and triangles (trihexagonal).
    Hextri,
    /// 60° rhombi, each the union of two equilateral triangles (rhombille).
    Parallelogram,
}

impl Tiling {
    pub const ALL: [Tiling; 4] = [
        Tiling::Square,
        Tiling::Triangular,
        Tiling::Hextri,
        Tiling::Parallelogram,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Tiling::Square => "square",
            Tiling::Triangular => "triangular",
            Tiling::Hextri => "hextri",
            Tiling::Parallelogram => "parallelogram",
        }
    }

    pub fn is_hexagonal(self) -> bool {
        self != Tiling::Square
    }

    /// Order of the rotation about the origin.
    pub fn rotation_order(self) -> u32 {
        if self.is_hexagonal() {
            6
        } else {
            4
        }
    }

    /// Point group about the origin: rotations `r^k`, then mirrors `m r^k`.
    pub fn point_group(self) -> Vec<Mat> {
        let (r, m): (Mat, Mat) = if self.is_hexagonal() {
            ([[0, -1], [1, 1]], [[1, 1], [0, -1]])
        } else {
            ([[0, -1], [1, 0]], [[1, 0], [0, -1]])
        };
        let mut rots = vec![IDENTITY];
        for k in 1..self.rotation_order() as usize {
            rots.push(mat_mul(&r, &rots[k - 1]));
        }
        let mirrors: Vec<Mat> = rots.iter().map(|x| mat_mul(&m, x)).collect();
        rots.into_iter().chain(mirrors).collect()
    }

    /// Face prototypes of one lattice cell, corners counterclockwise.
    fn prototypes(self) -> Vec<Vec<Pt>> {
        let h = SCALE / 2;
        let t = SCALE / 3;
        let s = SCALE;
        match self {
            Tiling::Square => vec![vec![(0, 0), (s, 0), (s, s), (0, s)]],
            Tiling::Triangular => vec![vec![(0, 0), (s, 0), (0, s)], vec![(s, 0), (s, s), (0, s)]],
            Tiling::Hextri => vec![
                vec![(h, 0), (0, h), (-h, h), (-h, 0), (0, -h), (h, -h)],
                vec![(h, 0), (h, h), (0, h)],
                vec![(s, h), (h, s), (h, h)],
            ],
            Tiling::Parallelogram => vec![
                vec![(0, 0), (2 * t, -t), (s, 0), (t, t)],
                vec![(0, 0), (t, t), (0, s), (-t, 2 * t)],
                vec![(s, 0), (2 * t, 2 * t), (0, s), (t, t)],
            ],
        }
    }

    /// Cartesian position of a board point.
    pub fn to_cartesian(self, p: Pt) -> (f64, f64) {
        let (x, y) = (p.0 as f64 / SCALE as f64, p.1 as f64 / SCALE as f64);
        if self.is_hexagonal() {
            (x + y / 2.0, y * 3f64.sqrt() / 2.0)
        } else {
            (x, y)
        }
    }
}

impl FromStr for Tiling {
    type Err = BoardError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Tiling::ALL
            .into_iter()
            .find(|t| t.name() == s)
            .ok_or_else(|| BoardError::UnknownTiling(s.to_string()))
    }
}

impl fmt::Display for Tiling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug)]
pub struct Face {
    /// Corners counterclockwise, unreduced, near the fundamental cell.
    pub corners: Vec<Pt>,
    pub centroid: Pt,
    pub vertices: Vec<usize>,
    /// Side `j` runs from corner `j` to corner `j+1`: its edge and whether it
    /// runs along the edge's reference direction.
    pub sides: Vec<(usize, bool)>,
}

#[derive(Clone, Debug)]
pub struct Edge {
    /// Reference segment; its midpoint is the reduced midpoint.
    pub a: Pt,
    pub b: Pt,
    pub ends: [usize; 2],
    /// The two `(face, side)` incidences.
    pub incidences: [(usize, usize); 2],
}

/// An isometry `p ↦ ηp + t` of the torus with its induced bijections.
#[derive(Clone, Debug)]
pub struct BoardSymmetry {
    pub eta: Mat,
    /// Translation in twelfths, reduced modulo the period.
    pub t: Pt,
    pub faces: Vec<u32>,
    pub edges: Vec<u32>,
    /// True where the edge's reference direction is reversed.
    pub edge_flips: Vec<bool>,
    pub vertices: Vec<u32>,
}

impl BoardSymmetry {
    pub fn det(&self) -> i64 {
        det(&self.eta)
    }

    pub fn is_direct(&self) -> bool {
        self.det() == 1
    }

    pub fn face_perm(&self) -> Perm {
        Perm::from_zero_based(self.faces.clone())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Target {
    Face(usize),
    Edge(usize),
    Vertex(usize),
}

#[derive(Clone, Debug)]
pub struct Board {
    pub tiling: Tiling,
    pub period: SublatticeSpec,
    pub faces: Vec<Face>,
    pub edges: Vec<Edge>,
    pub vertices: Vec<Pt>,
    face_index: HashMap<Pt, usize>,
    edge_index: HashMap<Pt, usize>,
    vertex_index: HashMap<Pt, usize>,
    group: Vec<BoardSymmetry>,
    group_index: HashMap<(Mat, Pt), usize>,
}

impl Board {
    pub fn build(tiling: Tiling, period: SublatticeSpec) -> Result<Board, BoardError> {
        let period = SublatticeSpec::new(period.p1, period.q1, period.p2, period.q2)?;
        let mut b = Board {
            tiling,
            period,
            faces: Vec::new(),
            edges: Vec::new(),
            vertices: Vec::new(),
            face_index: HashMap::new(),
            edge_index: HashMap::new(),
            vertex_index: HashMap::new(),
            group: Vec::new(),
            group_index: HashMap::new(),
        };
        let protos = tiling.prototypes();
        for (cp, cq) in period.coset_reps() {
            let shift = (cp * SCALE, cq * SCALE);
            for proto in &protos {
                let corners: Vec<Pt> = proto.iter().map(|&c| add(c, shift)).collect();
                b.add_face(corners);
            }
        }
        b.group = b.compute_group();
        b.group_index = b
            .group
            .iter()
            .enumerate()
            .map(|(i, s)| ((s.eta, s.t), i))
            .collect();
        Ok(b)
    }

    pub fn from_parts(
        tiling: Tiling,
        p1: i64,
        q1: i64,
        p2: i64,
        q2: i64,
    ) -> Result<Board, BoardError> {
        Board::build(tiling, SublatticeSpec::new(p1, q1, p2, q2)?)
    }

    fn add_face(&mut self, corners: Vec<Pt>) {
        let k = corners.len() as i64;
        let sum = corners.iter().fold((0, 0), |acc, &c| add(acc, c));
        debug_assert!(sum.0 % k == 0 && sum.1 % k == 0);
        let centroid = self.reduce((sum.0 / k, sum.1 / k));
        let f = self.faces.len();
        self.face_index.insert(centroid, f);
        let vertices: Vec<usize> = corners.iter().map(|&c| self.vertex_id(c)).collect();
        let mut sides = Vec::with_capacity(corners.len());
        for j in 0..corners.len() {
            let (s, t) = (corners[j], corners[(j + 1) % corners.len()]);
            let mid2 = add(s, t);
            debug_assert!(mid2.0 % 2 == 0 && mid2.1 % 2 == 0);
            let mid = self.reduce((mid2.0 / 2, mid2.1 / 2));
            let shift = sub(mid, (mid2.0 / 2, mid2.1 / 2));
            let (s, t) = (add(s, shift), add(t, shift));
            match self.edge_index.get(&mid) {
                Some(&e) => {
                    let forward = self.edges[e].a == s;
                    debug_assert!(forward || self.edges[e].a == t);
                    self.edges[e].incidences[1] = (f, j);
                    sides.push((e, forward));
                }
                None => {
                    let e = self.edges.len();
                    self.edge_index.insert(mid, e);
                    let ends = [
                        self.vertex_index[&self.reduce(s)],
                        self.vertex_index[&self.reduce(t)],
                    ];
                    self.edges.push(Edge {
                        a: s,
                        b: t,
                        ends,
                        incidences: [(f, j), (usize::MAX, 0)],
                    });
                    sides.push((e, true));
                }
            }
        }
        self.faces.push(Face {
            corners,
            centroid,
            vertices,
            sides,
        });
    }

    fn vertex_id(&mut self, p: Pt) -> usize {
        let key = self.reduce(p);
        if let Some(&v) = self.vertex_index.get(&key) {
            return v;
        }
        self.vertices.push(key);
        self.vertex_index.insert(key, self.vertices.len() - 1);
        self.vertices.len() - 1
    }

    /// Representative of `p` modulo the period, in twelfths.
    pub fn reduce(&self, p: Pt) -> Pt {
        let s = &self.period;
        let d = s.det() * SCALE;
        let a = s.q2 * p.0 - s.p2 * p.1;
        let b = -s.q1 * p.0 + s.p1 * p.1;
        let (fa, fb) = (floor_div(a, d), floor_div(b, d));
        (
            p.0 - SCALE * (fa * s.p1 + fb * s.p2),
            p.1 - SCALE * (fa * s.q1 + fb * s.q2),
        )
    }

    fn period_preserved(&self, eta: &Mat) -> bool {
        let s = &self.period;
        [(s.p1, s.q1), (s.p2, s.q2)].into_iter().all(|w| {
            let (x, y) = mat_vec(eta, w);
            s.contains(x, y)
        })
    }

    /// Image of a point under `p ↦ ηp + t`, reduced.
    pub fn map_point(&self, eta: &Mat, t: Pt, p: Pt) -> Pt {
        self.reduce(add(mat_vec(eta, p), t))
    }

    fn compute_group(&self) -> Vec<BoardSymmetry> {
        let mut out = Vec::new();
        for eta in self.tiling.point_group() {
            if !self.period_preserved(&eta) {
                continue;
            }
            for (tp, tq) in self.period.coset_reps() {
                if let Some(s) = self.induce(eta, (tp * SCALE, tq * SCALE)) {
                    out.push(s);
                }
            }
        }
        out.sort_by_key(|s| (s.det() < 0, !(s.eta == IDENTITY && s.t == (0, 0))));
        out
    }

    /// The induced bijections of `p ↦ ηp + t`, if it preserves the complex.
    fn induce(&self, eta: Mat, t: Pt) -> Option<BoardSymmetry> {
        let t = self.reduce(t);
        let faces = self
            .faces
            .iter()
            .map(|f| {
                self.face_index
                    .get(&self.map_point(&eta, t, f.centroid))
                    .map(|&i| i as u32)
            })
            .collect::<Option<Vec<_>>>()?;
        let vertices = self
            .vertices
            .iter()
            .map(|&v| {
                self.vertex_index
                    .get(&self.map_point(&eta, t, v))
                    .map(|&i| i as u32)
            })
            .collect::<Option<Vec<_>>>()?;
        let mut edges = Vec::with_capacity(self.edges.len());
        let mut edge_flips = Vec::with_capacity(self.edges.len());
        for e in &self.edges {
            let (ia, ib) = (add(mat_vec(&eta, e.a), t), add(mat_vec(&eta, e.b), t));
            let mid2 = add(ia, ib);
            let mid = self.reduce((mid2.0 / 2, mid2.1 / 2));
            let &j = self.edge_index.get(&mid)?;
            let shift = sub(mid, (mid2.0 / 2, mid2.1 / 2));
            edges.push(j as u32);
            edge_flips.push(add(ia, shift) != self.edges[j].a);
        }
        Some(BoardSymmetry {
            eta,
            t,
            faces,
            edges,
            edge_flips,
            vertices,
        })
    }

    /// The board group; direct symmetries first, identity at index 0.
    pub fn symmetry_group(&self) -> &[BoardSymmetry] {
        &self.group
    }

    pub fn direct_count(&self) -> usize {
        self.group.iter().filter(|s| s.is_direct()).count()
    }

    pub fn has_reflections(&self) -> bool {
        self.group.iter().any(|s| !s.is_direct())
    }

    /// Index of `s₁ ∘ s₂`.
    pub fn compose(&self, s1: usize, s2: usize) -> usize {
        let (a, b) = (&self.group[s1], &self.group[s2]);
        let eta = mat_mul(&a.eta, &b.eta);
        let t = self.map_point(&a.eta, a.t, b.t);
        self.group_index[&(eta, t)]
    }

    pub fn inverse(&self, s: usize) -> usize {
        (0..self.group.len())
            .find(|&x| self.compose(s, x) == 0)
            .expect("group inverse")
    }

    pub fn act(&self, s: usize, target: Target) -> Result<Target, BoardError> {
        let g = &self.group[s];
        let check = |kind, index, len| {
            if index < len {
                Ok(())
            } else {
                Err(BoardError::ForeignTarget { kind, index })
            }
        };
        Ok(match target {
            Target::Face(i) => {
                check("face", i, self.faces.len())?;
                Target::Face(g.faces[i] as usize)
            }
            Target::Edge(i) => {
                check("edge", i, self.edges.len())?;
                Target::Edge(g.edges[i] as usize)
            }
            Target::Vertex(i) => {
                check("vertex", i, self.vertices.len())?;
                Target::Vertex(g.vertices[i] as usize)
            }
        })
    }

    /// The direct symmetry fixing face `f` that advances its sides by the
    /// least positive step: the counterclockwise generator of its stabiliser.
    pub fn face_rotation(&self, f: usize) -> Option<usize> {
        let k = self.faces[f].sides.len();
        let e0 = self.faces[f].sides[0].0;
        (0..self.group.len())
            .filter(|&s| self.group[s].is_direct() && self.group[s].faces[f] as usize == f)
            .filter_map(|s| {
                let img = self.group[s].edges[e0] as usize;
                let step = (1..k).find(|&j| self.faces[f].sides[j].0 == img)?;
                Some((step, s))
            })
            .min()
            .map(|(_, s)| s)
    }

    pub fn symmetry_index(&self, eta: Mat, t: Pt) -> Option<usize> {
        self.group_index.get(&(eta, self.reduce(t))).copied()
    }

    pub fn classify_symmetry(&self, s: usize) -> SymmetryKind {
        classify(&self.period, &self.group[s])
    }

    /// The face whose centroid lies nearest the middle of the fundamental
    /// parallelogram, ties going to the lower index.
    pub fn center_face(&self) -> usize {
        let [_, _, far, _] = self.fundamental_domain();
        let mid = self.tiling.to_cartesian((far.0 / 2, far.1 / 2));
        let dist = |f: &Face| {
            let c = self.tiling.to_cartesian(f.centroid);
            (c.0 - mid.0).powi(2) + (c.1 - mid.1).powi(2)
        };
        (0..self.faces.len())
            .min_by(|&a, &b| {
                dist(&self.faces[a])
                    .total_cmp(&dist(&self.faces[b]))
                    .then(a.cmp(&b))
            })
            .expect("boards have faces")
    }

    /// A direct symmetry fixing the origin with the given order, if any.
    pub fn rotation_at_origin(&self, order: usize) -> Option<usize> {
        (0..self.group.len()).find(|&s| {
            let g = &self.group[s];
            g.is_direct() && g.t == (0, 0) && rotation_order(&g.eta) == order
        })
    }

    /// Fundamental parallelogram corners in twelfths.
    pub fn fundamental_domain(&self) -> [Pt; 4] {
        let s = &self.period;
        [
            (0, 0),
            (s.p1 * SCALE, s.q1 * SCALE),
            ((s.p1 + s.p2) * SCALE, (s.q1 + s.q2) * SCALE),
            (s.p2 * SCALE, s.q2 * SCALE),
        ]
    }
}

/// An exact point or vector in lattice coordinates, `(x/den, y/den)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RatPt {
    pub x: i64,
    pub y: i64,
    pub den: i64,
}

impl RatPt {
    pub fn new(x: i64, y: i64, den: i64) -> RatPt {
        let g = crate::perm::gcd(
            crate::perm::gcd(x.unsigned_abs(), y.unsigned_abs()),
            den.unsigned_abs(),
        ) as i64;
        let s = if den < 0 { -1 } else { 1 };
        RatPt {
            x: s * x / g,
            y: s * y / g,
            den: s * den / g,
        }
    }

    fn from_twelfths(p: Pt) -> RatPt {
        RatPt::new(p.0, p.1, SCALE)
    }
}

impl fmt::Display for RatPt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = |v: i64| {
            if self.den == 1 {
                v.to_string()
            } else {
                format!("{v}/{}", self.den)
            }
        };
        write!(f, "({}, {})", c(self.x), c(self.y))
    }
}

/// Geometric type of a board symmetry, in lattice coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SymmetryKind {
    Identity,
    Translation {
        vector: RatPt,
    },
    Rotation {
        order: u32,
        center: RatPt,
    },
    /// Mirror through `point` along the integer direction `axis`.
    Reflection {
        point: RatPt,
        axis: Pt,
    },
    /// Glide along `axis` through `point`, translating by `glide`.
    Glide {
        point: RatPt,
        axis: Pt,
        glide: RatPt,
    },
}

impl fmt::Display for SymmetryKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SymmetryKind::Identity => write!(f, "identity"),
            SymmetryKind::Translation { vector } => write!(f, "translation by {vector}"),
            SymmetryKind::Rotation { order, center } => {
                write!(f, "rotation of order {order} about {center}")
            }
            SymmetryKind::Reflection { point, axis } => {
                write!(
                    f,
                    "reflection in the line through {point} along ({}, {})",
                    axis.0, axis.1
                )
            }
            SymmetryKind::Glide { point, axis, glide } => {
                write!(
                    f,
                    "glide by {glide} along the line through {point} along ({}, {})",
                    axis.0, axis.1
                )
            }
        }
    }
}

fn ext_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    if b == 0 {
        (a.abs(), a.signum(), 0)
    } else {
        let (g, x, y) = ext_gcd(b, a.rem_euclid(b));
        (g, y, x - a.div_euclid(b) * y)
    }
}

fn classify(period: &SublatticeSpec, s: &BoardSymmetry) -> SymmetryKind {
    let eta = s.eta;
    if det(&eta) == 1 {
        if eta == IDENTITY {
            return if s.t == (0, 0) {
                SymmetryKind::Identity
            } else {
                SymmetryKind::Translation {
                    vector: RatPt::from_twelfths(s.t),
                }
            };
        }
        // centre γ = (I − η)⁻¹ t
        let m = [[1 - eta[0][0], -eta[0][1]], [-eta[1][0], 1 - eta[1][1]]];
        let d = det(&m);
        let adj = [[m[1][1], -m[0][1]], [-m[1][0], m[0][0]]];
        let c = mat_vec(&adj, s.t);
        let mut order = 1;
        let mut p = eta;
        while p != IDENTITY {
            p = mat_mul(&p, &eta);
            order += 1;
        }
        return SymmetryKind::Rotation {
            order,
            center: RatPt::new(c.0, c.1, d * SCALE),
        };
    }
    // (I+η)p = proj(p)·axis; a lift t' = t + ℓ is a pure mirror iff proj(t') = 0
    let col0 = (1 + eta[0][0], eta[1][0]);
    let col1 = (eta[0][1], 1 + eta[1][1]);
    let v = if col0 != (0, 0) { col0 } else { col1 };
    let g = crate::perm::gcd(v.0.unsigned_abs(), v.1.unsigned_abs()) as i64;
    let axis = (v.0 / g, v.1 / g);
    let proj = |p: Pt| -> i64 {
        let q = add(p, mat_vec(&eta, p));
        if axis.0 != 0 {
            q.0 / axis.0
        } else {
            q.1 / axis.1
        }
    };
    let w1 = (period.p1 * SCALE, period.q1 * SCALE);
    let w2 = (period.p2 * SCALE, period.q2 * SCALE);
    let (step, x1, x2) = ext_gcd(proj(w1), proj(w2));
    let k = proj(s.t);
    let r = k.rem_euclid(step);
    let k_min = if 2 * r > step { r - step } else { r };
    let m = (k_min - k) / step;
    let lift = add(
        s.t,
        add(
            (m * x1 * w1.0, m * x1 * w1.1),
            (m * x2 * w2.0, m * x2 * w2.1),
        ),
    );
    debug_assert_eq!(proj(lift), k_min);
    // glide vector (I+η)t'/2; axis point (t' − glide)/2
    let glide = RatPt::new(k_min * axis.0, k_min * axis.1, 2 * SCALE);
    let point = RatPt::new(
        2 * lift.0 - k_min * axis.0,
        2 * lift.1 - k_min * axis.1,
        4 * SCALE,
    );
    if k_min == 0 {
        SymmetryKind::Reflection { point, axis }
    } else {
        SymmetryKind::Glide { point, axis, glide }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn board(t: Tiling, p: [i64; 4]) -> Board {
        Board::from_parts(t, p[0], p[1], p[2], p[3]).unwrap()
    }

    #[test]
    fn fixture_board_sizes_and_groups() {
        let cases = [
            (Tiling::Square, [-1, 2, 2, 1], (5, 10, 5), 20, 20),
            (Tiling::Square, [1, 3, 3, -1], (10, 20, 10), 40, 40),
            (Tiling::Square, [-2, 2, 2, 2], (8, 16, 8), 64, 32),
            (Tiling::Square, [4, 0, 0, 4], (16, 32, 16), 128, 64),
            (Tiling::Triangular, [-3, 1, -2, 3], (14, 21, 7), 42, 42),
            (Tiling::Triangular, [2, 0, 2, -2], (8, 12, 4), 48, 24),
            (Tiling::Hextri, [2, 0, 2, -2], (12, 24, 12), 48, 24),
            (Tiling::Parallelogram, [2, 0, 2, -2], (12, 24, 12), 48, 24),
            (Tiling::Square, [1, 0, 0, 1], (1, 2, 1), 8, 4),
        ];
        for (t, p, (f, e, v), order, direct) in cases {
            let b = board(t, p);
            assert_eq!(
                (b.faces.len(), b.edges.len(), b.vertices.len()),
                (f, e, v),
                "{t} {p:?}"
            );
            assert_eq!(b.symmetry_group().len(), order, "{t} {p:?}");
            assert_eq!(b.direct_count(), direct, "{t} {p:?}");
        }
    }

    #[test]
    fn identity_first_and_classified() {
        let b = board(Tiling::Square, [-1, 2, 2, 1]);
        assert_eq!(b.classify_symmetry(0), SymmetryKind::Identity);
        let quarter = b.symmetry_index([[0, -1], [1, 0]], (0, 0)).unwrap();
        assert_eq!(
            b.classify_symmetry(quarter),
            SymmetryKind::Rotation {
                order: 4,
                center: RatPt::new(0, 0, 1)
            }
        );
        let u = b.symmetry_index(IDENTITY, (SCALE, 0)).unwrap();
        assert!(matches!(
            b.classify_symmetry(u),
            SymmetryKind::Translation { .. }
        ));
    }

    #[test]
    fn glide_and_mirror_detection() {
        let b = board(Tiling::Square, [2, 0, 0, 2]);
        let m = [[1, 0], [0, -1]];
        let mirror = b.symmetry_index(m, (0, 0)).unwrap();
        assert!(matches!(
            b.classify_symmetry(mirror),
            SymmetryKind::Reflection { .. }
        ));
        let glide = b.symmetry_index(m, (SCALE, 0)).unwrap();
        assert!(matches!(
            b.classify_symmetry(glide),
            SymmetryKind::Glide { .. }
        ));
        let shifted = b.symmetry_index(m, (0, SCALE)).unwrap();
        assert!(matches!(
            b.classify_symmetry(shifted),
            SymmetryKind::Reflection { .. }
        ));
    }

    #[test]
    fn face_rotation_turns_one_side() {
        let b = board(Tiling::Triangular, [-3, 1, -2, 3]);
        for f in 0..b.faces.len() {
            let r = b.face_rotation(f).unwrap();
            assert_eq!(b.group[r].faces[f] as usize, f);
            let (e0, e1) = (b.faces[f].sides[0].0, b.faces[f].sides[1].0);
            assert_eq!(b.group[r].edges[e0] as usize, e1);
        }
    }

    #[test]
    fn foreign_target_rejected() {
        let b = board(Tiling::Square, [1, 0, 0, 1]);
        assert_eq!(b.act(0, Target::Face(0)).unwrap(), Target::Face(0));
        assert!(b.act(0, Target::Face(1)).is_err());
    }
}
