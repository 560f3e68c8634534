//! Each hypothesis of the synthesis theorem matters: drop one and some rig
//! satisfies the relation but not the conclusion.

use rigproof::models::{high_set, ThreeElement};
use rigproof::{find_counterexample, synthesize, Model, NatPoly};

fn main() {
    let np = |s: &str| s.parse::<NatPoly>().unwrap();
    for (p2, q1, q2, model) in [
        ("x + x^2", "x^2", "x^3", Model::Codegrees),
        ("1 + x", "x", "x^2", Model::Degrees),
        ("1 + x^2", "x^6", "1", Model::Cardinals),
    ] {
        let x = NatPoly::x();
        let found = find_counterexample(&x, &np(p2), &np(q1), &np(q2), model, 32);
        let refusal = synthesize(&np(p2), &np(q1), &np(q2)).unwrap_err();
        println!(
            "x = {p2} does not give {q1} = {q2}: fails at {} in {model}; synthesis says: {refusal}",
            found.map_or("nothing".into(), |a| a.to_string())
        );
    }
    let seven = find_counterexample(
        &NatPoly::x(),
        &np("1 + x^2"),
        &np("x^7"),
        &NatPoly::x(),
        Model::Cardinals,
        32,
    );
    println!("x = 1 + x^2 => x^7 = x in cardinals: counterexample {seven:?}");
    println!(
        "high elements of the three-element rig: {:?}",
        high_set(&ThreeElement)
    );
}
