//! Searches for a signed relabelling carrying one plate set onto another.

use wallplates::fixtures;
use wallplates::puzzle::{puzzles_equivalent, SignRule};

fn main() {
    let plates = |n: &str| fixtures::get(n).unwrap().file().unwrap().plates;
    let (b, c, d) = (plates("fig20b"), plates("fig20c"), plates("fig20d"));
    match puzzles_equivalent(&c, &d, SignRule::Either).unwrap() {
        Some(w) => println!("fig20c to fig20d by {w}"),
        None => println!("fig20c and fig20d are not equivalent"),
    }
    match puzzles_equivalent(&b, &c, SignRule::Either).unwrap() {
        Some(w) => println!("fig20b to fig20c by {w}"),
        None => println!("fig20b and fig20c are not equivalent"),
    }
}
