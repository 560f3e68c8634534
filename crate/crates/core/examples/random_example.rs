//! A less symmetric generator: x = 3 + 2x³ + 4x⁵ and a pair of degree-8
//! polynomials that it identifies.

use rigproof::hypotheses::full_report;
use rigproof::{synthesize, NatPoly};

fn main() {
    let np = |s: &str| s.parse::<NatPoly>().unwrap();
    let p = np("3 + 2x^3 + 4x^5");
    let q1 = np("6x + 10x^2 + x^3 + 3x^4 + 2x^5 + 7x^6 + 12x^7");
    let q2 = np("3 + 2x + 2x^2 + 9x^3 + 5x^6 + 4x^8");

    let (report, verdict) = full_report(&p, &q1, &q2);
    println!("hypotheses ok: {}", report.main_theorem_ok());
    println!(
        "q1 - q2 = ({}) * (p - x)",
        verdict.cofactor.as_ref().unwrap()
    );

    let start = std::time::Instant::now();
    let cert = synthesize(&p, &q1, &q2).unwrap();
    println!(
        "certificate: {} steps, {:?}, built and checked in {:.2?}",
        cert.len(),
        cert.verify(),
        start.elapsed()
    );
}
