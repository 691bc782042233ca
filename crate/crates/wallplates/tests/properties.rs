mod common;

use proptest::prelude::*;
use wallplates::board::{Board, Target, Tiling};
use wallplates::format::PuzzleFile;
use wallplates::lattice::SublatticeSpec;
use wallplates::perm::{Perm, Sign, SignedPerm};
use wallplates::puzzle::{act_plate, Plate, PlateSet, Puzzle, SolveOptions};

fn perm(n: usize) -> impl Strategy<Value = Perm> {
    Just((1..=n).collect::<Vec<usize>>())
        .prop_shuffle()
        .prop_map(|v| Perm::from_images(&v).unwrap())
}

fn signed(n: usize) -> impl Strategy<Value = SignedPerm> {
    (perm(n), any::<bool>())
        .prop_map(|(p, m)| SignedPerm::new(if m { Sign::Minus } else { Sign::Plus }, p))
}

fn tiling() -> impl Strategy<Value = Tiling> {
    prop::sample::select(Tiling::ALL.to_vec())
}

/// A board of index at most 4 in any tiling.
fn board() -> impl Strategy<Value = Board> {
    (tiling(), 1i64..=4)
        .prop_flat_map(|(t, index)| (Just(t), prop::sample::select(common::periods(index))))
        .prop_map(|(t, p)| Board::from_parts(t, p[0], p[1], p[2], p[3]).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn composition_is_associative(a in perm(7), b in perm(7), c in perm(7)) {
        let left = a.compose(&b).unwrap().compose(&c).unwrap();
        let right = a.compose(&b.compose(&c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn inverse_and_identity(a in perm(8)) {
        prop_assert!(a.compose(&a.inverse()).unwrap().is_identity());
        prop_assert_eq!(a.compose(&Perm::identity(8)).unwrap(), a.clone());
        prop_assert_eq!(a.pow(a.order() as i64), Perm::identity(8));
    }

    #[test]
    fn compose_applies_right_factor_first(a in perm(6), b in perm(6), k in 1usize..=6) {
        prop_assert_eq!(a.compose(&b).unwrap().apply(k), a.apply(b.apply(k)));
    }

    #[test]
    fn signs_multiply(a in signed(5), b in signed(5)) {
        let c = a.compose(&b).unwrap();
        prop_assert_eq!(c.sign, a.sign * b.sign);
        prop_assert!(a.compose(&a.inverse()).unwrap().is_identity());
    }

    #[test]
    fn cycle_notation_round_trips(a in signed(9)) {
        prop_assert_eq!(SignedPerm::parse(&a.to_string(), 9).unwrap(), a);
    }

    #[test]
    fn reduce_picks_the_coset_rep(p1 in -4i64..=4, q1 in -4i64..=4, p2 in -4i64..=4, q2 in -4i64..=4, x in -20i64..=20, y in -20i64..=20) {
        prop_assume!(p1 * q2 - p2 * q1 != 0);
        let s = SublatticeSpec::new(p1, q1, p2, q2).unwrap();
        let reps = s.coset_reps();
        prop_assert_eq!(reps.len() as u64, s.index());
        let r = s.reduce(x, y);
        prop_assert!(reps.contains(&r));
        prop_assert!(s.contains(x - r.0, y - r.1));
        let c = s.cycle_counts();
        prop_assert_eq!(c.mu_q * c.u_cycle_len, s.index());
        prop_assert_eq!(c.mu_p * c.v_cycle_len, s.index());
    }

    #[test]
    fn board_group_axioms(b in board(), i in any::<prop::sample::Index>(), j in any::<prop::sample::Index>()) {
        let g = b.symmetry_group().len();
        let (x, y) = (i.index(g), j.index(g));
        prop_assert_eq!(b.compose(0, x), x);
        prop_assert_eq!(b.compose(x, 0), x);
        prop_assert_eq!(b.compose(x, b.inverse(x)), 0);
        let xy = b.compose(x, y);
        for f in 0..b.faces.len() {
            let inner = b.act(y, Target::Face(f)).unwrap();
            prop_assert_eq!(b.act(xy, Target::Face(f)).unwrap(), b.act(x, inner).unwrap());
        }
        for e in 0..b.edges.len() {
            let inner = b.act(y, Target::Edge(e)).unwrap();
            prop_assert_eq!(b.act(xy, Target::Edge(e)).unwrap(), b.act(x, inner).unwrap());
        }
        prop_assert_eq!(b.symmetry_group()[..b.direct_count()].iter().all(|s| s.is_direct()), true);
    }

    #[test]
    fn boards_are_tori(b in board()) {
        let chi = b.vertices.len() as i64 - b.edges.len() as i64 + b.faces.len() as i64;
        prop_assert_eq!(chi, 0);
        let order = b.symmetry_group().len();
        let index = b.period.index() as usize;
        prop_assert_eq!(order % index, 0);
    }

    #[test]
    fn plate_action_is_a_group_action(s1 in signed(6), s2 in signed(6), labels in prop::collection::vec(1u8..=6, 3..=6)) {
        let p = Plate::new(1, labels).unwrap();
        let both = act_plate(&s1.compose(&s2).unwrap(), &p);
        prop_assert_eq!(both, act_plate(&s1, &act_plate(&s2, &p)));
    }

    #[test]
    fn solver_matches_the_naive_oracle(b in board(), arity in 1usize..=2, seed in any::<u64>()) {
        prop_assume!(b.faces.len() <= 8);
        let sites = b.edges.len() * arity;
        prop_assume!(sites <= 18);
        let n = common::affordable_degree(sites, 300_000.0).max(1);
        let layout: Vec<Vec<usize>> = {
            // A throwaway puzzle supplies the site layout for this arity.
            let probe: Vec<Plate> = b.faces.iter().map(|f| Plate::new(arity, vec![1; f.sides.len() * arity]).unwrap()).collect();
            let p = Puzzle::new(b.clone(), PlateSet::new(1, probe).unwrap()).unwrap();
            (0..b.faces.len()).map(|f| p.face_sites(f).to_vec()).collect()
        };
        let mut state = seed | 1;
        let eps: Vec<u8> = (0..sites).map(|_| {
            state ^= state << 13; state ^= state >> 7; state ^= state << 17;
            (state % n as u64) as u8 + 1
        }).collect();
        let plates = common::plates_of(&layout, arity, n, &eps);
        let p = Puzzle::new(b, plates).unwrap();
        let fast: std::collections::BTreeSet<Vec<u8>> = p.solve(&SolveOptions::default()).unwrap().into_iter().map(|s| s.eps).collect();
        prop_assert!(fast.contains(&eps));
        prop_assert_eq!(fast, common::naive_solutions(&p));
    }

    #[test]
    fn puzzle_files_round_trip(t in tiling(), labels in prop::collection::vec(1u8..=9, 4..=40), copies in 1usize..=3) {
        let plates: Vec<Plate> = labels.chunks(4).filter(|c| c.len() == 4).map(|c| Plate::new(2, c.to_vec()).unwrap()).collect();
        prop_assume!(!plates.is_empty());
        let set = PlateSet::with_counts(9, plates.into_iter().map(|p| (p, copies))).unwrap();
        let file = PuzzleFile {
            version: 1,
            tiling: t,
            period: SublatticeSpec::new(2, 0, 1, 3).unwrap(),
            degree: 9,
            arity: 2,
            plates: set,
        };
        prop_assert_eq!(PuzzleFile::parse(&file.to_string()).unwrap(), file);
    }
}

#[test]
fn solution_groups_hold_edge_by_edge() {
    for f in wallplates::fixtures::catalog() {
        if f.file().unwrap().plates.total() == 0 || f.name.starts_with("fig29") || f.name == "fig21"
        {
            continue;
        }
        let p = f.puzzle().unwrap();
        for s in p
            .solve(&SolveOptions {
                limit: Some(5),
                ..SolveOptions::default()
            })
            .unwrap()
        {
            for (a, w) in p.solution_group(&s).unwrap().elements {
                let moved: Vec<u8> = s
                    .eps
                    .iter()
                    .map(|&x| a.perm.apply(x as usize) as u8)
                    .collect();
                assert_eq!(moved, p.relabel_by_symmetry(&s.eps, w), "{}", f.name);
                assert_eq!(
                    a.sign == Sign::Plus,
                    p.board.symmetry_group()[w].is_direct()
                );
            }
        }
    }
}

#[test]
fn synthesized_solutions_carry_the_rotations() {
    use wallplates::puzzle::synthesize_puzzle;
    use wallplates::wallpaper::{relations_for, Assignment};
    let cases = [
        (Tiling::Square, [-1, 2, 2, 1], "p4", 5, "a=(1234) c=(1325)"),
        (
            Tiling::Triangular,
            [-3, 1, -2, 3],
            "p6",
            7,
            "a=(123456) d=(276435)",
        ),
    ];
    for (t, per, sig, n, text) in cases {
        let b = Board::from_parts(t, per[0], per[1], per[2], per[3]).unwrap();
        let s = relations_for(sig).unwrap();
        let a = Assignment::parse(&s, n, text).unwrap();
        let (p, sol) = synthesize_puzzle(&b, &s, &a, 1).unwrap();
        let found = p.solve(&SolveOptions::default()).unwrap();
        assert!(found.iter().any(|x| x.eps == sol.eps));
        let g = p.solution_group(&sol).unwrap();
        for (c, val) in &a.values {
            assert!(g.elements.iter().any(|(x, _)| x == val), "{sig} {c}");
        }
    }
}

#[test]
fn symmetric_search_equals_filtering() {
    for name in ["fig22b", "fig23", "fig25", "fig26", "fig27a"] {
        let p = wallplates::fixtures::get(name).unwrap().puzzle().unwrap();
        let all = p.solve(&SolveOptions::default()).unwrap();
        for w in 0..p.board.symmetry_group().len() {
            let mut fast: Vec<Vec<u8>> = p
                .solutions_fixed_by(w, &SolveOptions::default())
                .unwrap()
                .into_iter()
                .map(|s| s.eps)
                .collect();
            let mut slow: Vec<Vec<u8>> = all
                .iter()
                .filter(|s| p.solution_group(s).unwrap().perm_for(w).is_some())
                .map(|s| s.eps.clone())
                .collect();
            fast.sort();
            slow.sort();
            assert_eq!(fast, slow, "{name} symmetry {w}");
        }
    }
}
