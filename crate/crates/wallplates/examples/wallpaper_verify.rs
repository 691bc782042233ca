//! Checks every relation of a signature against one assignment, then a whole
//! bundled table.

use std::collections::BTreeMap;

use wallplates::fixtures::wallpaper_table;
use wallplates::wallpaper::{parse_table, relations_for, verify_assignment, Assignment};

fn main() {
    let sig = relations_for("p6").unwrap();
    let a = Assignment::parse(&sig, 6, "a=(123456) d=(156423)").unwrap();
    let report = verify_assignment(&sig, &a, &BTreeMap::new());
    println!(
        "{}: {}",
        a.display(&sig),
        if report.passed() {
            "all relations hold"
        } else {
            "fails"
        }
    );
    for c in report.failures() {
        println!("  {}", c.label);
    }

    let rows = parse_table(&sig, wallpaper_table("p6").unwrap()).unwrap();
    let bad = rows
        .iter()
        .filter(|r| !verify_assignment(&sig, &r.assignment, &r.declared).passed())
        .count();
    println!("bundled p6 table: {} rows, {bad} failing", rows.len());
}
