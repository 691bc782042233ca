//! Every assignment of a wallpaper signature up to the degree bound, one per
//! relabelling class.
//!
//! `cargo run --example wallpaper_enumerate -- p4`

use wallplates::wallpaper::{enumerate_assignments, relations_for};

fn main() {
    let name = std::env::args().nth(1).unwrap_or_else(|| "p4".into());
    let sig = relations_for(&name).unwrap_or_else(|e| {
        eprintln!("{e}");
        std::process::exit(2)
    });
    let rows = enumerate_assignments(&sig, sig.bound).unwrap();
    for a in &rows {
        println!("n={} {}", a.degree, a.display(&sig));
    }
    println!(
        "{} classes for {name}, degrees up to {}",
        rows.len(),
        sig.bound
    );
}
