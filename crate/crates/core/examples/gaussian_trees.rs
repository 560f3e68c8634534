//! Trees with nodes of arity 0, 1 and 2: T ≅ 1 + T + T².
//!
//! Several identities follow, among them T⁵ ≅ T and (1 + T)⁹ ≅ 16(1 + T).

use rigproof::trees::random_value;
use rigproof::{apply_bijection, synthesize, NatPoly, Run};

fn main() {
    let p: NatPoly = "1 + x + x^2".parse().unwrap();
    for (q1, q2) in [
        ("x^5", "x"),
        ("x^4", "2 + x^2"),
        ("x + x^3", "1 + x^2"),
        ("(1+x)^9", "16(1+x)"),
    ] {
        let (a, b): (NatPoly, NatPoly) = (q1.parse().unwrap(), q2.parse().unwrap());
        let cert = synthesize(&p, &a, &b).expect("identity holds");
        assert!(cert.verify().is_valid());
        let v = random_value(&a, &p, 20, 7).unwrap();
        let w = apply_bijection(&cert, &v, Run::Forward).unwrap();
        assert_eq!(apply_bijection(&cert, &w, Run::Backward).unwrap(), v);
        println!(
            "{a} ~ {b}: {} steps, {v} ({} nodes) -> {} nodes",
            cert.len(),
            v.size(),
            w.size()
        );
    }
}
