use std::collections::BTreeMap;

use wallplates::wallpaper::{
    canonical, enumerate_assignments, parse_table, relations_for, verify_assignment, SIGNATURES,
};

fn table(name: &str) -> String {
    std::fs::read_to_string(format!(
        "{}/fixtures/tables/{name}.tbl",
        env!("CARGO_MANIFEST_DIR")
    ))
    .unwrap()
}

#[test]
fn every_table_row_verifies() {
    for name in SIGNATURES {
        let sig = relations_for(name).unwrap();
        for row in parse_table(&sig, &table(name)).unwrap() {
            let rep = verify_assignment(&sig, &row.assignment, &row.declared);
            assert!(
                rep.passed(),
                "{name} line {}: {:?}",
                row.line,
                rep.failures()
            );
        }
    }
}

#[test]
fn enumeration_contains_every_table_row() {
    for name in SIGNATURES {
        let sig = relations_for(name).unwrap();
        let found = enumerate_assignments(&sig, sig.bound).unwrap();
        let rows = parse_table(&sig, &table(name)).unwrap();
        let mut classes = BTreeMap::new();
        for row in &rows {
            let c = canonical(&sig, &row.assignment);
            assert!(found.contains(&c), "{name} line {} missing", row.line);
            classes.entry(c.values.clone()).or_insert(row.line);
        }
        println!(
            "{name}: enumerated {}, table rows {}, distinct {}",
            found.len(),
            rows.len(),
            classes.len()
        );
    }
}
