//! Which implications x = p1 ⇒ q1 = q2 hold, in rings and in rigs.

use rigproof::hypotheses::full_report;
use rigproof::{check_complex_route, IntPoly, NatPoly};

fn main() {
    let np = |s: &str| s.parse::<NatPoly>().unwrap();
    for (p, q1, q2) in [
        ("1 + x^2", "x^7", "x"),
        ("1 + x^2", "x^6", "1"),
        ("1 + x^2", "x^2", "x"),
        ("1 + x + x^3", "x^7", "x"),
    ] {
        let (report, verdict) = full_report(&np(p), &np(q1), &np(q2));
        let failures = report.failures();
        println!(
            "x = {p} => {q1} = {q2}: ring {}, failed hypotheses {:?}",
            if verdict.holds { "holds" } else { "fails" },
            failures
        );
        if let Some(r) = verdict.cofactor {
            println!("    q1 - q2 = ({r}) * (p - x)");
        }
    }

    // true at every complex root, false over the integers
    let ip = |s: &str| s.parse::<IntPoly>().unwrap();
    for (p2, q1, q2) in [
        ("2 + x + 2x^2", "x", "1 + x + x^2"),
        ("1 + 3x + x^2", "x", "1 + 2x"),
    ] {
        let (r, v) = check_complex_route(&ip("x"), &ip(p2), &ip(q1), &ip(q2)).unwrap();
        println!(
            "x = {p2} => {q1} = {q2}: primitive {:?}, squarefree {:?}, roots {:?}, ring {}",
            r.primitive, r.squarefree, r.roots_condition, v.holds
        );
    }
}
