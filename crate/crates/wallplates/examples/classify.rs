//! Natural solutions, equivalence classes and solution groups of a fixture.
//!
//! `cargo run --release --example classify -- fig25`

use wallplates::fixtures;

fn main() {
    let name = std::env::args().nth(1).unwrap_or_else(|| "fig25".into());
    let fixture = fixtures::get(&name).unwrap_or_else(|e| {
        eprintln!("{e}");
        std::process::exit(2)
    });
    let puzzle = fixture.puzzle().unwrap();
    let c = fixture.classify(&puzzle).unwrap();
    println!(
        "|G_P| = {}, {} solutions, {} natural",
        c.plate_group_order,
        c.solutions.len(),
        c.natural.len()
    );
    for (i, k) in c.classes.iter().enumerate() {
        println!(
            "class {i}: {} members, stabiliser {}, |G_eps| {}",
            k.members.len(),
            k.stabilizer_order,
            k.solution_group_order
        );
    }
    // Orbit counting: the class sizes add up to the natural solutions.
    let total: usize = c
        .classes
        .iter()
        .map(|k| c.plate_group_order / k.stabilizer_order)
        .sum();
    assert_eq!(total, c.natural.len());
}
