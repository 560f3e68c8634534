mod common;

use std::collections::HashSet;

use proptest::prelude::*;
use rigproof::chain::apply_step;
use rigproof::hypotheses::check_ring_implication;
use rigproof::models::{codegree_of, degree_of, CodegreeElem, DegreeElem, ThreeElem, ThreeElement};
use rigproof::rig::Rig;
use rigproof::trees::{apply_step_value, enumerate_values, random_value};
use rigproof::{
    bfs_search, synthesize, Bijection, Certificate, Direction, LinkStep, NatPoly, RigElement, Run,
};

use common::{congruent_terms, np};

fn poly(coeffs: &[u8]) -> NatPoly {
    NatPoly::from_dense(
        coeffs
            .iter()
            .map(|&c| u32::from(c).into())
            .collect::<Vec<_>>(),
    )
}

fn xk(k: u32) -> NatPoly {
    NatPoly::monomial(1u32.into(), k)
}

/// Every link step applicable to `q`, keeping degrees at most `cap`.
fn moves(q: &NatPoly, p: &NatPoly, cap: u32) -> Vec<LinkStep> {
    let mut out = Vec::new();
    for k in 0..=q.degree().unwrap_or(0) {
        if let Some(f) = q.checked_sub(&xk(k + 1)) {
            if k + p.degree().unwrap() <= cap {
                out.push(LinkStep::expand(k, f));
            }
        }
        if let Some(f) = q.checked_sub(&p.shift(k)) {
            out.push(LinkStep::contract(k, f));
        }
    }
    out
}

/// A random walk of link steps, as a certificate.
fn walk(p: &NatPoly, start: &NatPoly, choices: &[u8]) -> Certificate {
    let mut cert = Certificate::identity(p, start);
    for &c in choices {
        let options = moves(&cert.end, p, 8);
        if options.is_empty() {
            break;
        }
        let step = options[c as usize % options.len()].clone();
        cert.end = apply_step(&cert.end, p, &step).unwrap();
        cert.steps.push(step);
    }
    cert
}

fn generator() -> impl Strategy<Value = NatPoly> {
    (1u8..3, prop::collection::vec(0u8..3, 1..3), 1u8..3).prop_map(|(c0, mid, top)| {
        let mut cs = vec![c0];
        cs.extend(mid);
        cs.push(top);
        poly(&cs)
    })
}

fn nonconstant() -> impl Strategy<Value = NatPoly> {
    (prop::collection::vec(0u8..3, 1..3), 1u8..3).prop_map(|(low, top)| {
        let mut cs = low;
        cs.push(top);
        poly(&cs)
    })
}

fn small_poly() -> impl Strategy<Value = NatPoly> {
    prop::collection::vec(0u8..4, 0..5).prop_map(|cs| poly(&cs))
}

fn seven_trees() -> (NatPoly, Certificate) {
    let p = np("1+x^2");
    let cert = synthesize(&p, &np("x^7"), &NatPoly::x()).unwrap();
    (p, cert)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn transforms_preserve_validity(
        p in generator(),
        start in nonconstant(),
        choices in prop::collection::vec(any::<u8>(), 0..12),
        g in small_poly(),
        j in 0u32..4,
    ) {
        let cert = walk(&p, &start, &choices);
        prop_assert!(cert.verify().is_valid());
        for t in [cert.shift(&g), cert.mul_monomial(j), cert.mul_poly(&g), cert.reverse()] {
            prop_assert!(t.verify().is_valid(), "{:?}", t.verify());
        }
        let there_and_back = cert.concat(&cert.reverse()).unwrap();
        prop_assert!(there_and_back.verify().is_valid());
        prop_assert_eq!(&there_and_back.end, &start);
        prop_assert_eq!(&cert.mul_poly(&g).start, &(&start * &g));
    }

    #[test]
    fn json_roundtrip(
        p in generator(),
        start in nonconstant(),
        choices in prop::collection::vec(any::<u8>(), 0..12),
    ) {
        let cert = walk(&p, &start, &choices);
        prop_assert_eq!(Certificate::from_json(&cert.to_json()).unwrap(), cert);
    }

    #[test]
    fn broken_step_is_located(
        p in generator(),
        start in nonconstant(),
        choices in prop::collection::vec(any::<u8>(), 1..12),
        at in any::<prop::sample::Index>(),
    ) {
        let mut cert = walk(&p, &start, &choices);
        prop_assume!(!cert.is_empty());
        let i = at.index(cert.len());
        let s = &mut cert.steps[i];
        s.dir = match s.dir {
            Direction::Expand => Direction::Contract,
            Direction::Contract => Direction::Expand,
        };
        // the flipped step's source differs from term i because p ≠ x
        prop_assert_eq!(cert.verify().failed_at(), Some(i));
    }

    #[test]
    fn three_element_classify_is_a_homomorphism(a in small_poly(), b in small_poly()) {
        let r = ThreeElement;
        let (ca, cb) = (ThreeElem::classify(&a), ThreeElem::classify(&b));
        prop_assert_eq!(ThreeElem::classify(&(&a + &b)), r.add(&ca, &cb));
        prop_assert_eq!(ThreeElem::classify(&(&a * &b)), r.mul(&ca, &cb));
    }

    #[test]
    fn degree_and_codegree_are_evaluation(q in small_poly()) {
        prop_assert_eq!(
            RigElement::Degree(DegreeElem::Fin(1)).eval(&q),
            RigElement::Degree(degree_of(&q))
        );
        prop_assert_eq!(
            RigElement::Codegree(CodegreeElem::Fin(1)).eval(&q),
            RigElement::Codegree(codegree_of(&q))
        );
    }

    #[test]
    fn synthesized_certificates_verify(
        p in generator(),
        base in nonconstant(),
        r in nonconstant(),
        swap in any::<bool>(),
    ) {
        // base + r·p ~ base + r·x holds in the ring by construction
        let (mut q1, mut q2) = (&base + &(&r * &p), &base + &(&r * &NatPoly::x()));
        if swap {
            std::mem::swap(&mut q1, &mut q2);
        }
        let cert = synthesize(&p, &q1, &q2).unwrap();
        prop_assert!(cert.verify().is_valid());
        prop_assert_eq!((&cert.start, &cert.end), (&q1, &q2));
        prop_assert_eq!(congruent_terms(&cert), Ok(()));
    }

    #[test]
    fn search_agrees_with_the_ring(p in generator(), q1 in nonconstant(), q2 in nonconstant()) {
        let found = bfs_search(&p, &q1, &q2, 6, 5, 12);
        let ring = check_ring_implication(&NatPoly::x().to_int(), &p.to_int(), &q1.to_int(), &q2.to_int())
            .unwrap();
        if let Some(cert) = found {
            prop_assert!(ring.holds);
            prop_assert!(cert.verify().is_valid());
            prop_assert_eq!((&cert.start, &cert.end), (&q1, &q2));
        }
        if ring.holds {
            prop_assert!(synthesize(&p, &q1, &q2).unwrap().verify().is_valid());
        } else {
            prop_assert!(synthesize(&p, &q1, &q2).is_err());
        }
    }

    #[test]
    fn trees_roundtrip(seed in any::<u64>(), size in 1usize..40, forward in any::<bool>()) {
        let (p, cert) = seven_trees();
        let bij = Bijection::new(&cert).unwrap();
        let (over, there, back) = if forward {
            (&cert.start, Run::Forward, Run::Backward)
        } else {
            (&cert.end, Run::Backward, Run::Forward)
        };
        let v = random_value(over, &p, size, seed).unwrap();
        let w = bij.run(v.clone(), there).unwrap();
        prop_assert!(w.validate(&p).is_ok());
        prop_assert_eq!(bij.run(w, back).unwrap(), v);
    }

    #[test]
    fn steps_touch_one_node(
        p in generator(),
        start in nonconstant(),
        choices in prop::collection::vec(any::<u8>(), 1..10),
        seed in any::<u64>(),
    ) {
        let cert = walk(&p, &start, &choices);
        let terms = cert.replay().unwrap();
        for (step, q) in cert.steps.iter().zip(&terms) {
            let v = random_value(q, &p, 30, seed).unwrap();
            let w = apply_step_value(step, &p, &v).unwrap();
            if w.tuple == v.tuple {
                // a spectator: only the slot moves
                continue;
            }
            // the active copy: the first k trees stay, one root is packed or unpacked
            let k = step.k as usize;
            prop_assert_eq!(&w.tuple[..k], &v.tuple[..k]);
            let expected = match step.dir {
                Direction::Expand => v.size() - 1,
                Direction::Contract => v.size() + 1,
            };
            prop_assert_eq!(w.size(), expected);
        }
    }
}

#[test]
fn seven_trees_is_injective_on_small_values() {
    let (p, cert) = seven_trees();
    let bij = Bijection::new(&cert).unwrap();
    for (over, run) in [(&cert.start, Run::Forward), (&cert.end, Run::Backward)] {
        let values = enumerate_values(over, &p, 11);
        assert!(!values.is_empty());
        let images: HashSet<_> = values
            .iter()
            .map(|v| bij.run(v.clone(), run).unwrap())
            .collect();
        assert_eq!(images.len(), values.len());
    }
}
