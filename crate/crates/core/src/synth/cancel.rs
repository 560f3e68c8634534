//! Cancellation of a common summand between high elements.
//!
//! The high elements form an abelian group under `+`. Its unit `ẑ` and the
//! inverses come from highness witnesses, and cancelling `b` from
//! `a1 + b ~ a2 + b` is a five-segment walk through that group.

use super::witness::{highness_oracle, LeWitness};
use super::SynthError;
use crate::chain::Certificate;
use crate::poly::NatPoly;

/// A unit `z` for the group of high elements, anchored at `base`:
/// `cert` proves `base + z ~ base`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnitData {
    pub base: NatPoly,
    pub z: NatPoly,
    pub cert: Certificate,
}

/// From `2·a1 ≤ a1` with cofactor `d`, take `z = a1 + d`.
pub fn unit_element(p: &NatPoly, a1: &NatPoly) -> Result<UnitData, SynthError> {
    let twice = a1 + a1;
    let w = highness_oracle(p, a1, &twice)?;
    Ok(UnitData {
        base: a1.clone(),
        z: a1 + &w.c,
        cert: w.cert,
    })
}

/// `b + z ~ b` for non-constant `b`.
pub fn unit_absorb(p: &NatPoly, u: &UnitData, b: &NatPoly) -> Result<Certificate, SynthError> {
    if *b == u.base {
        return Ok(u.cert.clone());
    }
    // E: base + b + d′ ~ b
    let e = highness_oracle(p, b, &(&u.base + b))?;
    Ok(Certificate::concat_all(&[
        e.cert.shift(&u.z).reverse(),
        u.cert.shift(&(b + &e.c)),
        e.cert,
    ])
    .expect("segments chain by construction"))
}

/// `h ≤ z`, i.e. an `h′` with `h + h′ ~ z`.
pub fn inverse_witness(p: &NatPoly, u: &UnitData, h: &NatPoly) -> Result<LeWitness, SynthError> {
    highness_oracle(p, &u.z, h)
}

/// Turns `K: a1 + b ~ a2 + b` into `a1 ~ a2`.
///
/// With `h = b + a1` (non-constant even when `b` is not), `u` anchored at
/// `a1` and `I: h + h′ ~ z` the result is
/// `a1 ~ a1 + z ~ a1 + h + h′ ~ a2 + h + h′ ~ a2 + z ~ a2`.
pub fn cancel_high(
    p: &NatPoly,
    k: &Certificate,
    a1: &NatPoly,
    a2: &NatPoly,
) -> Result<Certificate, SynthError> {
    for a in [a1, a2] {
        if a.is_constant() {
            return Err(SynthError::ConstantElement(a.to_string()));
        }
    }
    if k.p != *p {
        return Err(SynthError::InvalidCertificate {
            index: 0,
            reason: "certificate uses a different generator".into(),
        });
    }
    if let crate::chain::Verification::Invalid { index, reason } = k.verify() {
        return Err(SynthError::InvalidCertificate { index, reason });
    }
    let b = k
        .start
        .checked_sub(a1)
        .ok_or(SynthError::NotACommonSummand)?;
    if k.end.checked_sub(a2).as_ref() != Some(&b) {
        return Err(SynthError::NotACommonSummand);
    }
    let h = &b + a1;
    let k_prime = k.shift(a1);
    let u = unit_element(p, a1)?;
    let inv = inverse_witness(p, &u, &h)?;
    let parts = [
        u.cert.reverse(),
        inv.cert.shift(a1).reverse(),
        k_prime.shift(&inv.c),
        inv.cert.shift(a2),
        unit_absorb(p, &u, a2)?,
    ];
    Ok(Certificate::concat_all(&parts).expect("segments chain by construction"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::synth::common_summand;

    fn np(s: &str) -> NatPoly {
        s.parse().unwrap()
    }

    #[test]
    fn units() {
        for (p, a1) in [("1 + x^2", "x"), ("1 + x + x^2", "x"), ("1 + x^2", "x^7")] {
            let (p, a1) = (np(p), np(a1));
            let u = unit_element(&p, &a1).unwrap();
            assert_eq!(u.cert.start, &u.base + &u.z);
            assert_eq!(u.cert.end, a1);
            assert!(!u.z.is_constant());
            assert!(u.cert.verify().is_valid());
        }
    }

    #[test]
    fn absorb() {
        let p = np("1 + x^2");
        let u = unit_element(&p, &np("x")).unwrap();
        assert_eq!(unit_absorb(&p, &u, &np("x")).unwrap(), u.cert);
        for b in ["x^2", "1 + x", "3 + x^5"] {
            let b = np(b);
            let c = unit_absorb(&p, &u, &b).unwrap();
            assert_eq!(c.start, &b + &u.z);
            assert_eq!(c.end, b);
            assert!(c.verify().is_valid());
        }
        assert!(unit_absorb(&p, &u, &np("2")).is_err());
    }

    #[test]
    fn inverses() {
        let p = np("1 + x^2");
        let u = unit_element(&p, &np("x")).unwrap();
        for h in [u.z.clone(), np("x + x^3"), np("x^2")] {
            let w = inverse_witness(&p, &u, &h).unwrap();
            assert_eq!(w.b, h);
            assert_eq!(w.a, u.z);
            assert!(w.is_valid());
        }
    }

    #[test]
    fn cancellation() {
        let p = np("1 + x^2");
        let k = Certificate::generator(&p);
        let c = cancel_high(&p, &k, &np("x"), &p).unwrap();
        assert_eq!((c.start.clone(), c.end.clone()), (np("x"), p.clone()));
        assert!(c.verify().is_valid());

        for (p, q1, r) in [
            ("1 + x^2", "x^7", "x^5 + x^4 - x^2 - x"),
            ("1 + x + x^2", "x^5", "x^3 - x"),
        ] {
            let (p, q1) = (np(p), np(q1));
            let (_, k) = common_summand(&p, &q1, &np("x"), &r.parse().unwrap()).unwrap();
            let c = cancel_high(&p, &k, &q1, &np("x")).unwrap();
            assert_eq!(c.start, q1);
            assert_eq!(c.end, np("x"));
            assert!(c.verify().is_valid());
        }
    }

    #[test]
    fn cancellation_errors() {
        let p = np("1 + x^2");
        let k = Certificate::generator(&p);
        assert!(matches!(
            cancel_high(&p, &k, &np("1"), &p),
            Err(SynthError::ConstantElement(_))
        ));
        assert_eq!(
            cancel_high(&p, &k, &np("x^2"), &p),
            Err(SynthError::NotACommonSummand)
        );
        let mut bad = k.clone();
        bad.steps[0].k = 1;
        assert!(matches!(
            cancel_high(&p, &bad, &np("x"), &p),
            Err(SynthError::InvalidCertificate { index: 0, .. })
        ));
    }
}
