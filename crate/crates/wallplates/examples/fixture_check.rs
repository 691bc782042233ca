//! Replays the recorded claims of every bundled fixture.
//!
//! `cargo run --release --example fixture_check`

use wallplates::fixtures;

fn main() {
    let mut failed = 0;
    for f in fixtures::catalog() {
        for c in f.check().unwrap() {
            println!(
                "{} {:<8} {:?} {}: expected {}, found {}",
                if c.passed { "PASS" } else { "FAIL" },
                f.name,
                c.origin,
                c.claim,
                c.expected,
                c.found
            );
            failed += usize::from(!c.passed);
        }
    }
    std::process::exit(i32::from(failed > 0));
}
