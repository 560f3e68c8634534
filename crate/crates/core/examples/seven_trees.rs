//! Binary trees satisfy T ≅ 1 + T², and from that alone T⁷ ≅ T.
//!
//! Synthesizes the certificate, checks it, and pushes a 7-tuple of trees
//! through the bijection and back. Then searches for a short chain.

use rigproof::trees::{parse_value, random_value};
use rigproof::{apply_bijection, bfs_search, synthesize, NatPoly, Run};

fn main() {
    let p: NatPoly = "1 + x^2".parse().unwrap();
    let x7: NatPoly = "x^7".parse().unwrap();
    let x = NatPoly::x();

    let cert = synthesize(&p, &x7, &x).expect("hypotheses hold");
    assert!(cert.verify().is_valid());
    println!("synthesized x^7 ~ x over p = {p}: {} steps", cert.len());

    // slot 0 of p is the leaf, slot 1 the binary node
    let seven = parse_value("0(0, 1(0,0), 0, 0, 1(1(0,0),0), 0, 0)", &x7, &p).unwrap();
    let one = apply_bijection(&cert, &seven, Run::Forward).unwrap();
    println!("forward  {seven}\n      ->  {one}");
    let back = apply_bijection(&cert, &one, Run::Backward).unwrap();
    assert_eq!(back, seven);

    let mut ok = 0;
    for seed in 0..200 {
        let v = random_value(&x7, &p, 50, seed).unwrap();
        let w = apply_bijection(&cert, &v, Run::Forward).unwrap();
        ok += usize::from(apply_bijection(&cert, &w, Run::Backward).unwrap() == v);
    }
    println!("roundtrips: {ok}/200");

    let short = bfs_search(&p, &x7, &x, 18, 8, 64).expect("within bounds");
    println!(
        "shortest chain within degree 8, mass 64: {} steps",
        short.len()
    );
    for t in short.replay().unwrap() {
        println!("  {t}");
    }
}
