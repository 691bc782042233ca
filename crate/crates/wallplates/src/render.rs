//! SVG drawings of boards and solutions.
//!
//! One `<polygon>` per face, the fundamental parallelogram as a thick yellow
//! `<path>`, and the numbers of a solution as `<text>` just inside each side.
//! Coordinates are printed with three decimals so output is byte-stable.

use std::fmt::Write;

use crate::board::{Board, Pt};
use crate::puzzle::{Puzzle, Solution};

const UNIT: f64 = 80.0;
const MARGIN: f64 = 20.0;
/// How far a number sits from its side towards the face centroid.
const INSET: f64 = 0.22;

struct Frame {
    min_x: f64,
    max_y: f64,
}

impl Frame {
    fn map(&self, p: (f64, f64)) -> (f64, f64) {
        (
            (p.0 - self.min_x) * UNIT + MARGIN,
            (self.max_y - p.1) * UNIT + MARGIN,
        )
    }
}

fn lerp(a: (f64, f64), b: (f64, f64), t: f64) -> (f64, f64) {
    (a.0 + (b.0 - a.0) * t, a.1 + (b.1 - a.1) * t)
}

/// Draws `board`, with the numbers of `solution` when given.
pub fn svg(board: &Board, solution: Option<(&Puzzle, &Solution)>) -> String {
    let cart = |p: Pt| board.tiling.to_cartesian(p);
    let domain: Vec<(f64, f64)> = board
        .fundamental_domain()
        .iter()
        .map(|&p| cart(p))
        .collect();
    // Each face is shifted by a period so its centroid lies in the parallelogram.
    let corners: Vec<Vec<(f64, f64)>> = board
        .faces
        .iter()
        .map(|f| {
            let home = board.reduce(f.centroid);
            let shift = (home.0 - f.centroid.0, home.1 - f.centroid.1);
            f.corners
                .iter()
                .map(|&p| cart((p.0 + shift.0, p.1 + shift.1)))
                .collect()
        })
        .collect();
    let all = corners.iter().flatten().chain(&domain);
    let (mut min_x, mut max_x, mut min_y, mut max_y) = (f64::MAX, f64::MIN, f64::MAX, f64::MIN);
    for &(x, y) in all {
        min_x = min_x.min(x);
        max_x = max_x.max(x);
        min_y = min_y.min(y);
        max_y = max_y.max(y);
    }
    let frame = Frame { min_x, max_y };
    let width = (max_x - min_x) * UNIT + 2.0 * MARGIN;
    let height = (max_y - min_y) * UNIT + 2.0 * MARGIN;

    let mut out = String::new();
    let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width:.3}" height="{height:.3}" viewBox="0 0 {width:.3} {height:.3}">"#
    );
    let _ = writeln!(
        out,
        r##"<rect width="100%" height="100%" fill="#ffffff"/>"##
    );
    let _ = writeln!(
        out,
        r##"<g fill="#e8eef7" stroke="#1f2a44" stroke-width="1.500">"##
    );
    for (i, face) in corners.iter().enumerate() {
        let pts: Vec<String> = face
            .iter()
            .map(|&p| {
                let (x, y) = frame.map(p);
                format!("{x:.3},{y:.3}")
            })
            .collect();
        let _ = writeln!(
            out,
            r#"<polygon data-face="{i}" points="{}"/>"#,
            pts.join(" ")
        );
    }
    let _ = writeln!(out, "</g>");

    let d: Vec<String> = domain
        .iter()
        .enumerate()
        .map(|(i, &p)| {
            let (x, y) = frame.map(p);
            format!("{}{x:.3},{y:.3}", if i == 0 { "M" } else { "L" })
        })
        .collect();
    let _ = writeln!(
        out,
        r##"<path class="domain" d="{} Z" fill="none" stroke="#f2c200" stroke-width="5.000" stroke-linejoin="round"/>"##,
        d.join(" ")
    );

    if let Some((puzzle, sol)) = solution {
        let arity = puzzle.arity();
        let _ = writeln!(
            out,
            r##"<g font-family="sans-serif" font-size="{:.3}" text-anchor="middle" dominant-baseline="central" fill="#111111">"##,
            UNIT * 0.2
        );
        for (f, face) in corners.iter().enumerate() {
            let k = face.len();
            let centre = face.iter().fold((0.0, 0.0), |acc, p| {
                (acc.0 + p.0 / k as f64, acc.1 + p.1 / k as f64)
            });
            let sites = puzzle.face_sites(f);
            for j in 0..k {
                let (a, b) = (face[j], face[(j + 1) % k]);
                for m in 0..arity {
                    let along = lerp(a, b, (m + 1) as f64 / (arity + 1) as f64);
                    let (x, y) = frame.map(lerp(along, centre, INSET));
                    let _ = writeln!(
                        out,
                        r#"<text x="{x:.3}" y="{y:.3}">{}</text>"#,
                        sol.eps[sites[j * arity + m]]
                    );
                }
            }
        }
        let _ = writeln!(out, "</g>");
    }
    let _ = writeln!(out, "</svg>");
    out
}
