//! Bounded breadth-first search for short chains, next to the long chains
//! synthesis produces.

use rigproof::{bfs_search, synthesize, NatPoly};

fn main() {
    let np = |s: &str| s.parse::<NatPoly>().unwrap();
    for (p, q1, q2) in [
        ("1 + x^2", "1 + x^2", "x"),
        ("1 + x^2", "x^7", "x"),
        ("1 + x + x^2", "x^5", "x"),
        ("1 + x^2", "x^6", "1"),
    ] {
        let (p, q1, q2) = (np(p), np(q1), np(q2));
        let long = match synthesize(&p, &q1, &q2) {
            Ok(c) => format!("{} steps", c.len()),
            Err(e) => format!("refused ({e})"),
        };
        match bfs_search(&p, &q1, &q2, 18, 8, 64) {
            Some(c) => println!(
                "{q1} ~ {q2} (p = {p}): search {} steps, synthesis {long}",
                c.len()
            ),
            None => println!("{q1} ~ {q2} (p = {p}): nothing within 18 steps, synthesis {long}"),
        }
    }
}
