//! Sublattice index, translation cycle counts and the norm tables.
//!
//! `cargo run --example lattice -- -3 1 1 3`

use wallplates::lattice::{norm_table, GridKind, SublatticeSpec};

fn main() {
    let args: Vec<i64> = std::env::args()
        .skip(1)
        .filter_map(|a| a.parse().ok())
        .collect();
    let [p1, q1, p2, q2] = args[..] else {
        eprintln!("usage: lattice P1 Q1 P2 Q2");
        std::process::exit(2);
    };
    let spec = SublatticeSpec::new(p1, q1, p2, q2).unwrap_or_else(|e| {
        eprintln!("{e}");
        std::process::exit(2)
    });
    let c = spec.cycle_counts();
    println!(
        "index {}: u has {} cycles of length {}, v has {} of length {}",
        spec.index(),
        c.mu_q,
        c.u_cycle_len,
        c.mu_p,
        c.v_cycle_len
    );
    println!("coset representatives: {:?}", spec.coset_reps());
    let labels = spec.build_labeling();
    println!(
        "u = {}  v = {}",
        labels.translation(1, 0),
        labels.translation(0, 1)
    );

    for kind in [GridKind::Triangular, GridKind::Square] {
        println!("\n{kind:?} norms, rows q = 0..4");
        for row in norm_table(kind, 4) {
            println!(
                "{}",
                row.iter().map(|n| format!("{n:>3}")).collect::<String>()
            );
        }
    }
}
